#include "ofcluster/transport.hpp"

namespace ofcluster {

bool SimNetwork::blocked(int rank_a, int rank_b) const {
    if (components_.empty() || rank_a == rank_b) return false;
    auto component_of = [&](int rank) -> int {
        for (std::size_t i = 0; i < components_.size(); ++i) {
            if (components_[i].count(rank)) return static_cast<int>(i);
        }
        return -1;  // implicit residual component
    };
    return component_of(rank_a) != component_of(rank_b);
}

void SimNetwork::send(Packet pkt, SimTime extra_delay) {
    if (crashed_.count(pkt.src)) return;
    const bool controller_link =
        pkt.src.kind == NodeAddr::Kind::Controller &&
        pkt.dst.kind == NodeAddr::Kind::Controller;
    if (controller_link && blocked(pkt.src.id, pkt.dst.id)) {
        ++partition_drops_;
        return;
    }
    const LinkLatency& lat = controller_link ? net_a_ : net_b_;
    SimTime delivery = sched_.now() + lat.sample(sched_.rng()) + extra_delay;
    auto key = std::make_pair(pkt.src, pkt.dst);
    auto it = fifo_clamp_.find(key);
    if (it != fifo_clamp_.end() && delivery < it->second) {
        delivery = it->second;
    }
    fifo_clamp_[key] = delivery;
    sched_.schedule_at(delivery, [this, pkt = std::move(pkt)]() {
        if (crashed_.count(pkt.dst)) {
            ++dead_drops_;
            return;
        }
        const bool ctl = pkt.src.kind == NodeAddr::Kind::Controller &&
                         pkt.dst.kind == NodeAddr::Kind::Controller;
        if (ctl && blocked(pkt.src.id, pkt.dst.id)) {
            ++partition_drops_;
            return;
        }
        auto h = handlers_.find(pkt.dst);
        if (h != handlers_.end()) h->second(pkt);
    });
}

void SimNetwork::probe(NodeAddr target, std::function<void(bool)> cb) {
    sched_.schedule_after(probe_latency_, [this, target, cb = std::move(cb)]() {
        cb(!crashed_.count(target));
    });
}

}  // namespace ofcluster
