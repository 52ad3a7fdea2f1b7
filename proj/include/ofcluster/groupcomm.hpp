#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ofcluster/messages.hpp"
#include "ofcluster/netmodel.hpp"
#include "ofcluster/sim.hpp"
#include "ofcluster/trace.hpp"
#include "ofcluster/transport.hpp"

namespace ofcluster::groupcomm {

struct FailureDetectorConfig {
    SimTime heartbeat_period = from_ms_int(10);
    SimTime suspect_timeout = from_ms_int(40);
    SimTime discovery_timeout = from_ms_int(9000);

    std::string validate() const {
        if (heartbeat_period <= 0) return "heartbeat-period must be positive";
        if (suspect_timeout <= heartbeat_period)
            return "suspect-timeout must exceed heartbeat-period";
        if (discovery_timeout <= 0) return "discovery-timeout must be positive";
        return {};
    }
};

// Sequential semantics of the replicated master register. Kept as a plain
// value type so protocol tests can drive the exact apply rules without a
// network.
struct MasterRegister {
    std::optional<int> value;

    struct CasOutcome {
        bool success = false;
        std::optional<int> before;
    };

    std::optional<int> get() const { return value; }

    CasOutcome compare_and_swap(std::optional<int> expected,
                                std::optional<int> desired) {
        CasOutcome out{false, value};
        if (value == expected) {
            value = desired;
            out.success = true;
        }
        return out;
    }
};

// Replica of the mapping store. Versions are (epoch, sequence) pairs from
// the total-order stream.
struct StoreReplica {
    netmodel::ControllerSwitchMapping mapping;
    ViewId epoch;
    std::int64_t seq = 0;
};

struct GroupCallbacks {
    // View installed locally. `reason` is one of: preformed, bootstrap,
    // join, change, merge.
    std::function<void(const MembershipView&, const std::string& reason)>
        on_view = nullptr;
    // A store version was applied locally.
    std::function<void(const StoreReplica&)> on_store = nullptr;
    // The master register changed locally.
    std::function<void(std::optional<int>)> on_master = nullptr;
    // Application broadcast delivered (total order).
    std::function<void(int origin, const std::string& tag,
                       const std::vector<std::uint8_t>&)>
        on_app = nullptr;
    // Incoming RPC; reply may be produced asynchronously.
    std::function<void(int from, const RpcCall&,
                       std::function<void(RpcResult)>)>
        on_rpc = nullptr;
    // Heartbeat gossip from a peer: its self-reported load and the observed
    // request rates of switches it serves.
    std::function<void(int peer, double load,
                       const std::map<int, double>& rates)>
        on_peer_stats = nullptr;
    std::function<double()> load_provider = nullptr;
    std::function<std::map<int, double>()> rates_provider = nullptr;
};

// One controller's group-communication engine: discovery and join,
// heartbeat failure detection, coordinator-led view changes with a flush
// round (all-or-none completion of the previous epoch), sequencer-based
// total-order broadcast, and the replicated master register and mapping
// store as state machines riding that stream.
class GroupNode {
public:
    GroupNode(int rank, std::vector<int> universe, Scheduler& sched,
              SimNetwork& net, TraceSink& trace,
              FailureDetectorConfig fd_cfg, SimTime rpc_timeout,
              GroupCallbacks callbacks);

    int rank() const { return rank_; }
    bool alive() const { return alive_; }
    bool is_member() const { return member_; }
    const MembershipView& view() const { return view_; }
    std::optional<int> master() const { return register_.value; }
    const StoreReplica& store() const { return store_; }

    // Begins discovery at the current simulated time.
    void start();

    // Installs state directly, for scenarios that begin mid-life.
    void preform(const MembershipView& view, const StateSnapshot& snapshot);

    // Fail-stop crash: the node stops responding permanently.
    void crash();

    // ---- totally ordered operations ----
    using CellGetCb = std::function<void(std::optional<int>, bool ok)>;
    using CellCasCb = std::function<void(bool success, bool ok)>;
    using StoreCb = std::function<void(std::int64_t version, bool ok)>;

    void cell_get(CellGetCb cb);
    void cell_cas(std::optional<int> expected, std::optional<int> desired,
                  CellCasCb cb);
    // Rejects invalid mappings locally (never propagated).
    bool store_update(const netmodel::ControllerSwitchMapping& m, StoreCb cb);
    void broadcast(const std::string& tag, std::vector<std::uint8_t> payload);

    // ---- point-to-point rpc ----
    using RpcCb = std::function<void(const RpcResult&, bool timed_out)>;
    void rpc(int to, RpcCall call, RpcCb cb);

    std::uint64_t stale_drops() const { return stale_drops_; }
    std::uint64_t not_in_view_drops() const { return not_in_view_drops_; }

    void handle_packet(const Packet& pkt);

private:
    struct PendingOp {
        TotalOrderOp op;
        CellGetCb get_cb;
        CellCasCb cas_cb;
        StoreCb store_cb;
    };
    struct PendingRpc {
        RpcCb cb;
    };
    struct Proposal {
        ViewId vid;
        std::vector<int> members;
        std::string reason;
        std::set<int> awaiting;  // flush targets yet to ack
        std::map<ViewId, std::map<std::int64_t, SequencedOp>> completion;
        SimTime started = 0;
    };

    std::string node_name() const { return "c" + std::to_string(rank_); }
    void emit(const std::string& event, nlohmann::json fields);

    // timers
    void tick();
    void arm_suspect_check(int peer);
    void evaluate_formation();

    // membership
    int coordinator_elect() const;
    bool i_am_initiator() const;
    void note_seen_seq(std::int64_t seq);
    void suspect(int peer, const std::string& cause);
    void maybe_propose();
    void begin_proposal(std::vector<int> members, const std::string& reason);
    void finish_proposal();
    void install_view(const MembershipView& v, const StateSnapshot& snap,
                      const std::string& reason);
    void apply_completion(const std::vector<SequencedOp>& ops);
    StateSnapshot snapshot() const;

    // stream
    void submit_op(TotalOrderOp op, PendingOp pending);
    void sequence_op(const OpId& id, const TotalOrderOp& op);
    void deliver(const SequencedOp& sop);
    void apply_op(const SequencedOp& sop);
    void drain_buffer();
    void resend_pending();

    // message handlers
    void on_discover(const Packet& p, const MsgDiscover& m);
    void on_discover_ack(const Packet& p, const MsgDiscoverAck& m);
    void on_join_req(const Packet& p);
    void on_heartbeat(const Packet& p, const MsgHeartbeat& m);
    void on_suspect_msg(const Packet& p, const MsgSuspect& m);
    void on_flush_req(const Packet& p, const MsgFlushReq& m);
    void on_flush_ack(const Packet& p, const MsgFlushAck& m);
    void on_view_install(const Packet& p, const MsgViewInstall& m);
    void on_to_request(const Packet& p, const MsgToRequest& m);
    void on_to_deliver(const Packet& p, const MsgToDeliver& m);
    void on_merge_req(const Packet& p, const MsgMergeReq& m);
    void on_merge_ack(const Packet& p, const MsgMergeAck& m);
    void on_rpc_req(const Packet& p, const MsgRpcReq& m);
    void on_rpc_rep(const Packet& p, const MsgRpcRep& m);

    void send_to(int rank, Message msg);

    const int rank_;
    const std::vector<int> universe_;
    Scheduler& sched_;
    SimNetwork& net_;
    TraceSink& trace_;
    const FailureDetectorConfig fd_;
    const SimTime rpc_timeout_;
    GroupCallbacks cb_;

    bool alive_ = false;
    bool member_ = false;
    bool started_ = false;
    SimTime start_time_ = 0;

    // discovery state
    SimTime last_member_seen_ = kNoTime;
    int known_coordinator_ = -1;
    std::map<int, SimTime> starter_seen_;

    // membership state
    MembershipView view_;
    std::int64_t max_seen_seq_ = 0;
    std::set<int> suspects_;
    std::set<int> pending_joiners_;
    std::map<int, SimTime> last_heard_;
    std::optional<Proposal> proposal_;
    SimTime merge_hold_until_ = 0;
    std::set<int> merge_requested_;  // peer coordinators already contacted

    // stream state (current epoch)
    std::int64_t next_seq_ = 0;       // sequencer only
    std::int64_t delivered_seq_ = 0;  // contiguous prefix applied
    std::vector<SequencedOp> epoch_log_;
    std::map<std::int64_t, SequencedOp> reorder_buffer_;

    // replicated state
    MasterRegister register_;
    StoreReplica store_;

    // client-side op state
    std::uint64_t op_counter_ = 0;
    std::map<OpId, PendingOp> pending_ops_;

    // rpc state
    std::uint64_t rpc_counter_ = 0;
    std::map<std::uint64_t, PendingRpc> pending_rpcs_;

    std::uint64_t stale_drops_ = 0;
    std::uint64_t not_in_view_drops_ = 0;
};

}  // namespace ofcluster::groupcomm
