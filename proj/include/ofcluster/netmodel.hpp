#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ofcluster::netmodel {

// Controller identity. The rank doubles as the node's cluster id and is
// unique within a configuration.
struct ControllerId {
    int rank = 0;

    auto operator<=>(const ControllerId&) const = default;
};

// Switch identity. Index ell binds switch s_ell to its pool address P_ell
// and static address S_ell.
struct SwitchId {
    int index = 0;

    auto operator<=>(const SwitchId&) const = default;
};

enum class NetworkTag { A, B };

// Statically assigned address: C_i for controllers on network A, S_i for
// switches on network B. Addresses are opaque identity tokens; dotted-quad
// formatting is a display concern only.
struct StaticAddress {
    NetworkTag network = NetworkTag::A;
    std::string value;

    auto operator<=>(const StaticAddress&) const = default;
};

// Pool address P_ell on network B: the fixed address switch s_ell dials.
// Ownership moves between controllers by aliasing.
struct PoolAddress {
    int index = 0;

    auto operator<=>(const PoolAddress&) const = default;

    std::string display() const { return "P" + std::to_string(index); }
};

// Vertex of the physical graph G: a controller or a switch.
struct Vertex {
    enum class Kind { Controller, Switch } kind = Kind::Controller;
    int id = 0;

    auto operator<=>(const Vertex&) const = default;

    static Vertex controller(int rank) { return {Kind::Controller, rank}; }
    static Vertex of_switch(int index) { return {Kind::Switch, index}; }
};

// Undirected graph G = (V, E) over controllers and switches.
class NetworkGraph {
public:
    void add_vertex(Vertex v) { vertices_.insert(v); }
    void add_edge(Vertex a, Vertex b);

    bool has_vertex(Vertex v) const { return vertices_.count(v) > 0; }
    bool has_edge(Vertex a, Vertex b) const;
    const std::set<Vertex>& vertices() const { return vertices_; }
    const std::set<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    // True when a path from a to b exists.
    bool connected(Vertex a, Vertex b) const;

    // Fully connected LAN over the given members; the default topology when
    // a scenario supplies no explicit graph.
    static NetworkGraph full_lan(const std::vector<int>& controller_ranks,
                                 const std::vector<int>& switch_indices);

private:
    std::set<Vertex> vertices_;
    std::set<std::pair<Vertex, Vertex>> edges_;  // normalized a < b
};

// IP network N = (V_N, E_N) plus its static address assignments. Every edge
// must have a supporting path in G and address sets must be pairwise
// disjoint.
struct IpNetworkSpec {
    NetworkTag name = NetworkTag::A;
    std::set<Vertex> members;
    std::set<std::pair<Vertex, Vertex>> edges;
    std::map<Vertex, std::set<StaticAddress>> static_assignments;

    // Empty string when valid, else a diagnostic.
    std::string validate(const NetworkGraph& g) const;
};

// The mapping M: which controller manages which switch. Stored as
// role-tagged pairs; each switch may appear at most once.
class ControllerSwitchMapping {
public:
    ControllerSwitchMapping() = default;

    // Silently overwrites a previous assignment for the same switch.
    void assign(SwitchId s, ControllerId c) { by_switch_[s] = c; }
    void unassign(SwitchId s) { by_switch_.erase(s); }

    std::optional<ControllerId> controller_of(SwitchId s) const {
        auto it = by_switch_.find(s);
        if (it == by_switch_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<SwitchId, ControllerId>& pairs() const { return by_switch_; }
    std::size_t size() const { return by_switch_.size(); }
    bool empty() const { return by_switch_.empty(); }

    std::vector<SwitchId> switches_of(ControllerId c) const;

    bool operator==(const ControllerSwitchMapping&) const = default;

private:
    std::map<SwitchId, ControllerId> by_switch_;
};

enum class MappingValidity { Complete, Partial, Invalid };

struct MappingVerdict {
    MappingValidity validity = MappingValidity::Complete;
    std::string reason;  // set when Invalid

    bool complete() const { return validity == MappingValidity::Complete; }
    bool invalid() const { return validity == MappingValidity::Invalid; }
};

// Checks M against known controllers and switches: Invalid when a pair
// references an unknown vertex (doubly mapped switches cannot be
// represented and are rejected at construction sites instead), Complete
// when every switch is mapped exactly once, else Partial.
MappingVerdict validate_mapping(const ControllerSwitchMapping& m,
                                const std::set<ControllerId>& controllers,
                                const std::set<SwitchId>& switches);

// Same verdict computed from raw pairs, which can express double mappings.
MappingVerdict validate_mapping_pairs(
    const std::vector<std::pair<ControllerId, SwitchId>>& pairs,
    const std::set<ControllerId>& controllers,
    const std::set<SwitchId>& switches);

// One switch reassignment: from its current controller (nullopt when the
// switch was unassigned) to its next one.
struct MigrationOrder {
    SwitchId sw;
    std::optional<ControllerId> from;
    ControllerId to;

    bool operator==(const MigrationOrder&) const = default;
};

// Orders for every switch whose controller differs between m_old and m_new,
// ascending switch index. Throws std::invalid_argument unless m_new is
// complete over `switches`.
std::vector<MigrationOrder> diff_mappings(const ControllerSwitchMapping& m_old,
                                          const ControllerSwitchMapping& m_new,
                                          const std::set<SwitchId>& switches);

// Convenience form: the universe is the union of both mappings' switches.
std::vector<MigrationOrder> diff_mappings(const ControllerSwitchMapping& m_old,
                                          const ControllerSwitchMapping& m_new);

// Ownership of pool addresses: realizes IP_B{c_k} for every controller.
// Structurally disjoint (one owner slot per address).
class AliasTable {
public:
    void add_address(PoolAddress p) { owner_.emplace(p, std::nullopt); }
    bool has_address(PoolAddress p) const { return owner_.count(p) > 0; }

    std::optional<ControllerId> owner_of(PoolAddress p) const;
    void set_owner(PoolAddress p, std::optional<ControllerId> c);

    // The paper's IP_B{c}: every pool address c currently owns.
    std::set<PoolAddress> alias_set(ControllerId c) const;

    // True when every pool address has an owner drawn from `live`.
    bool exhaustive(const std::set<ControllerId>& live) const;

    const std::map<PoolAddress, std::optional<ControllerId>>& entries() const {
        return owner_;
    }

private:
    std::map<PoolAddress, std::optional<ControllerId>> owner_;
};

}  // namespace ofcluster::netmodel
