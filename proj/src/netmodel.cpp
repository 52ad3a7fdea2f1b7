#include "ofcluster/netmodel.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ofcluster::netmodel {

namespace {

std::pair<Vertex, Vertex> norm(Vertex a, Vertex b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::string vertex_name(Vertex v) {
    return (v.kind == Vertex::Kind::Controller ? "c" : "s") +
           std::to_string(v.id);
}

}  // namespace

void NetworkGraph::add_edge(Vertex a, Vertex b) {
    if (!has_vertex(a) || !has_vertex(b)) {
        throw std::invalid_argument("edge references unknown vertex");
    }
    if (a == b) return;
    edges_.insert(norm(a, b));
}

bool NetworkGraph::has_edge(Vertex a, Vertex b) const {
    return edges_.count(norm(a, b)) > 0;
}

bool NetworkGraph::connected(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    if (a == b) return true;
    std::set<Vertex> seen{a};
    std::deque<Vertex> frontier{a};
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop_front();
        for (const auto& [x, y] : edges_) {
            Vertex other;
            if (x == v) other = y;
            else if (y == v) other = x;
            else continue;
            if (other == b) return true;
            if (seen.insert(other).second) frontier.push_back(other);
        }
    }
    return false;
}

NetworkGraph NetworkGraph::full_lan(const std::vector<int>& controller_ranks,
                                    const std::vector<int>& switch_indices) {
    NetworkGraph g;
    for (int r : controller_ranks) g.add_vertex(Vertex::controller(r));
    for (int i : switch_indices) g.add_vertex(Vertex::of_switch(i));
    for (int r : controller_ranks) {
        for (int r2 : controller_ranks) {
            if (r < r2)
                g.add_edge(Vertex::controller(r), Vertex::controller(r2));
        }
        for (int i : switch_indices) {
            g.add_edge(Vertex::controller(r), Vertex::of_switch(i));
        }
    }
    return g;
}

std::string IpNetworkSpec::validate(const NetworkGraph& g) const {
    for (const auto& v : members) {
        if (!g.has_vertex(v)) {
            return "network member " + vertex_name(v) + " not in graph";
        }
    }
    for (const auto& [a, b] : edges) {
        if (!members.count(a) || !members.count(b)) {
            return "network edge (" + vertex_name(a) + "," + vertex_name(b) +
                   ") references a non-member";
        }
        if (!g.connected(a, b)) {
            return "network edge (" + vertex_name(a) + "," + vertex_name(b) +
                   ") has no supporting path in the physical graph";
        }
    }
    std::set<StaticAddress> seen;
    for (const auto& [v, addrs] : static_assignments) {
        if (!members.count(v)) {
            return "address assignment for non-member " + vertex_name(v);
        }
        for (const auto& a : addrs) {
            if (!seen.insert(a).second) {
                return "static address " + a.value + " assigned twice";
            }
        }
    }
    return {};
}

std::vector<SwitchId> ControllerSwitchMapping::switches_of(
    ControllerId c) const {
    std::vector<SwitchId> out;
    for (const auto& [s, owner] : by_switch_) {
        if (owner == c) out.push_back(s);
    }
    return out;
}

MappingVerdict validate_mapping(const ControllerSwitchMapping& m,
                                const std::set<ControllerId>& controllers,
                                const std::set<SwitchId>& switches) {
    std::vector<std::pair<ControllerId, SwitchId>> pairs;
    pairs.reserve(m.size());
    for (const auto& [s, c] : m.pairs()) pairs.emplace_back(c, s);
    return validate_mapping_pairs(pairs, controllers, switches);
}

MappingVerdict validate_mapping_pairs(
    const std::vector<std::pair<ControllerId, SwitchId>>& pairs,
    const std::set<ControllerId>& controllers,
    const std::set<SwitchId>& switches) {
    std::map<SwitchId, int> count;
    for (const auto& [c, s] : pairs) {
        if (!controllers.count(c)) {
            return {MappingValidity::Invalid,
                    "pair references unknown controller c" +
                        std::to_string(c.rank)};
        }
        if (!switches.count(s)) {
            return {MappingValidity::Invalid,
                    "pair references unknown switch s" +
                        std::to_string(s.index)};
        }
        if (++count[s] > 1) {
            return {MappingValidity::Invalid,
                    "switch s" + std::to_string(s.index) +
                        " mapped to more than one controller"};
        }
    }
    if (count.size() == switches.size()) return {MappingValidity::Complete, ""};
    return {MappingValidity::Partial, ""};
}

std::vector<MigrationOrder> diff_mappings(const ControllerSwitchMapping& m_old,
                                          const ControllerSwitchMapping& m_new,
                                          const std::set<SwitchId>& switches) {
    for (const auto& s : switches) {
        if (!m_new.controller_of(s)) {
            throw std::invalid_argument(
                "new mapping is not complete: switch s" +
                std::to_string(s.index) + " unassigned");
        }
    }
    std::vector<MigrationOrder> orders;
    for (const auto& [s, to] : m_new.pairs()) {
        if (!switches.count(s)) continue;
        const auto from = m_old.controller_of(s);
        if (from != to) {
            orders.push_back({s, from, to});
        }
    }
    // std::map iteration is already ascending by switch index.
    return orders;
}

std::vector<MigrationOrder> diff_mappings(const ControllerSwitchMapping& m_old,
                                          const ControllerSwitchMapping& m_new) {
    std::set<SwitchId> universe;
    for (const auto& [s, c] : m_old.pairs()) universe.insert(s);
    for (const auto& [s, c] : m_new.pairs()) universe.insert(s);
    return diff_mappings(m_old, m_new, universe);
}

std::optional<ControllerId> AliasTable::owner_of(PoolAddress p) const {
    auto it = owner_.find(p);
    if (it == owner_.end()) return std::nullopt;
    return it->second;
}

void AliasTable::set_owner(PoolAddress p, std::optional<ControllerId> c) {
    auto it = owner_.find(p);
    if (it == owner_.end()) {
        throw std::invalid_argument("unknown pool address " + p.display());
    }
    it->second = c;
}

std::set<PoolAddress> AliasTable::alias_set(ControllerId c) const {
    std::set<PoolAddress> out;
    for (const auto& [p, owner] : owner_) {
        if (owner == c) out.insert(p);
    }
    return out;
}

bool AliasTable::exhaustive(const std::set<ControllerId>& live) const {
    for (const auto& [p, owner] : owner_) {
        if (!owner.has_value() || !live.count(*owner)) return false;
    }
    return true;
}

}  // namespace ofcluster::netmodel
