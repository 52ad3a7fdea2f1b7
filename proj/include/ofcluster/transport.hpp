#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ofcluster/messages.hpp"
#include "ofcluster/sim.hpp"

namespace ofcluster {

struct LinkLatency {
    SimTime min_us = 0;
    SimTime max_us = 0;

    SimTime sample(Rng& rng) const {
        if (min_us >= max_us) return min_us;
        return rng.uniform(min_us, max_us);
    }
};

// Pluggable delivery seam: deliver(packet at simulated time).
class Transport {
public:
    virtual ~Transport() = default;
    virtual void send(Packet pkt, SimTime extra_delay = 0) = 0;
};

// Deterministic simulated network. Two latency domains: the
// controller-to-controller network (a) and the controller-to-switch network
// (b), which run on separate links. Injected partitions split the
// controller network only; per-channel delivery is FIFO.
class SimNetwork : public Transport {
public:
    using PacketHandler = std::function<void(const Packet&)>;

    SimNetwork(Scheduler& sched, LinkLatency net_a, LinkLatency net_b,
               SimTime probe_latency)
        : sched_(sched),
          net_a_(net_a),
          net_b_(net_b),
          probe_latency_(probe_latency) {}

    void attach(NodeAddr addr, PacketHandler handler) {
        handlers_[addr] = std::move(handler);
    }

    void set_crashed(NodeAddr addr, bool crashed) {
        if (crashed) crashed_.insert(addr);
        else crashed_.erase(addr);
    }
    bool crashed(NodeAddr addr) const { return crashed_.count(addr) > 0; }

    // Components of controller ranks; ranks absent from every component
    // form an implicit extra component.
    void set_partition(std::vector<std::set<int>> components) {
        components_ = std::move(components);
    }
    void clear_partition() { components_.clear(); }
    bool partition_active() const { return !components_.empty(); }
    bool blocked(int rank_a, int rank_b) const;

    void send(Packet pkt, SimTime extra_delay = 0) override;

    // Out-of-band liveness check against ground truth (a fencing-style
    // health probe, independent of the packet network).
    void probe(NodeAddr target, std::function<void(bool alive)> cb);

    std::uint64_t partition_drops() const { return partition_drops_; }
    std::uint64_t dead_drops() const { return dead_drops_; }

private:
    Scheduler& sched_;
    LinkLatency net_a_;
    LinkLatency net_b_;
    SimTime probe_latency_;
    std::map<NodeAddr, PacketHandler> handlers_;
    std::set<NodeAddr> crashed_;
    std::vector<std::set<int>> components_;
    std::map<std::pair<NodeAddr, NodeAddr>, SimTime> fifo_clamp_;
    std::uint64_t partition_drops_ = 0;
    std::uint64_t dead_drops_ = 0;
};

}  // namespace ofcluster
