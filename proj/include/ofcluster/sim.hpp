#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "ofcluster/rng.hpp"
#include "ofcluster/simtime.hpp"

namespace ofcluster {

// Single-threaded discrete-event scheduler. Events at equal timestamps run
// in scheduling order (monotonic sequence number), so a run is a pure
// function of its inputs. Handlers for crashed nodes are expected to check
// liveness themselves; there is no cancellation.
class Scheduler {
public:
    using Handler = std::function<void()>;

    explicit Scheduler(std::uint64_t seed) : rng_(seed) {}

    SimTime now() const { return now_; }
    Rng& rng() { return rng_; }

    // Schedules `fn` at absolute time `at` (clamped to now).
    void schedule_at(SimTime at, Handler fn) {
        if (at < now_) at = now_;
        queue_.push(Entry{at, next_id_++, std::move(fn)});
    }

    void schedule_after(SimTime delay, Handler fn) {
        schedule_at(now_ + delay, std::move(fn));
    }

    bool empty() const { return queue_.empty(); }

    // Runs events until the queue drains or `until` is passed. Events with
    // timestamp == until still run.
    void run_until(SimTime until) {
        while (!queue_.empty()) {
            const Entry& top = queue_.top();
            if (top.at > until) break;
            Entry e{top.at, top.id, std::move(const_cast<Entry&>(top).fn)};
            queue_.pop();
            now_ = e.at;
            e.fn();
        }
        if (now_ < until) now_ = until;
    }

    std::uint64_t events_dispatched() const { return next_id_ - 1; }

private:
    struct Entry {
        SimTime at;
        std::uint64_t id;
        mutable Handler fn;
        bool operator>(const Entry& o) const {
            if (at != o.at) return at > o.at;
            return id > o.id;
        }
    };

    SimTime now_ = 0;
    std::uint64_t next_id_ = 1;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue_;
    Rng rng_;
};

}  // namespace ofcluster
