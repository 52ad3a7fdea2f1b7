#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ofcluster/netmodel.hpp"
#include "ofcluster/simtime.hpp"

namespace ofcluster {

struct NodeAddr {
    enum class Kind { Controller, Switch } kind = Kind::Controller;
    int id = 0;

    auto operator<=>(const NodeAddr&) const = default;

    static NodeAddr controller(int rank) { return {Kind::Controller, rank}; }
    static NodeAddr of_switch(int index) { return {Kind::Switch, index}; }

    std::string display() const {
        return (kind == Kind::Controller ? "c" : "s") + std::to_string(id);
    }
};

// View identity: (sequence, creator rank). Sequences grow monotonically at
// each node; distinct partitions produce distinct creators, so identities
// never collide across components.
struct ViewId {
    std::int64_t seq = 0;
    int creator = 0;

    auto operator<=>(const ViewId&) const = default;

    std::string display() const {
        return std::to_string(seq) + "@c" + std::to_string(creator);
    }
};

struct MembershipView {
    ViewId vid;
    std::vector<int> members;  // ranks, ascending

    bool contains(int rank) const {
        for (int m : members)
            if (m == rank) return true;
        return false;
    }
    int coordinator() const { return members.empty() ? -1 : members.front(); }
};

// ---- totally ordered operations (ride the sequencer stream) ----

struct OpId {
    int origin = 0;
    std::uint64_t counter = 0;

    auto operator<=>(const OpId&) const = default;
};

struct CellGetOp {};
struct CellCasOp {
    std::optional<int> expected;  // master rank, nullopt = unset
    std::optional<int> desired;
};
struct StoreUpdateOp {
    netmodel::ControllerSwitchMapping mapping;
};
struct AppBroadcastOp {
    std::string tag;
    std::vector<std::uint8_t> payload;
};

using TotalOrderOp =
    std::variant<CellGetOp, CellCasOp, StoreUpdateOp, AppBroadcastOp>;

struct SequencedOp {
    std::int64_t seq = 0;
    OpId id;
    TotalOrderOp op;
};

// ---- remote procedure calls (point to point) ----

struct SwitchTransferCall {
    netmodel::SwitchId sw;
    std::optional<netmodel::ControllerId> c_old;
    netmodel::ControllerId c_new;
    std::uint64_t cycle = 0;
};

using RpcCall = std::variant<SwitchTransferCall>;

enum class RpcStatus { Ok, NoOp, Conflict, DownstreamTimeout };

struct RpcResult {
    RpcStatus status = RpcStatus::Ok;
};

// ---- wire messages ----

struct MsgDiscover {
    bool is_member = false;  // sender already belongs to a view
};
struct MsgDiscoverAck {
    bool is_member = false;
    int coordinator = -1;  // valid when is_member
};
struct MsgJoinReq {};
struct MsgHeartbeat {
    ViewId vid;
    int coordinator = -1;
    double load = 0.0;
    std::map<int, double> switch_rates;  // switch index -> observed rate
};
struct MsgSuspect {
    int suspected = -1;
};
struct MsgFlushReq {
    ViewId proposed;
};
struct MsgFlushAck {
    ViewId proposed;
    ViewId epoch;                     // the epoch this state belongs to
    std::vector<SequencedOp> known;   // delivered + buffered ops of epoch
};
struct StateSnapshot {
    netmodel::ControllerSwitchMapping mapping;
    ViewId store_epoch;
    std::int64_t store_seq = 0;
    std::optional<int> master;
};
struct MsgViewInstall {
    MembershipView view;
    // per previous epoch: the canonical completion set, ascending seq
    std::vector<std::pair<ViewId, std::vector<SequencedOp>>> completion;
    StateSnapshot snapshot;
};
struct MsgToRequest {
    ViewId vid;
    OpId id;
    TotalOrderOp op;
};
struct MsgToDeliver {
    ViewId vid;
    SequencedOp sop;
};
struct MsgMergeReq {
    ViewId vid;
};
struct MsgMergeAck {
    enum class Status { Ok, Busy, NotCoordinator } status = Status::Ok;
    MembershipView view;
};
struct MsgRpcReq {
    std::uint64_t rpc_id = 0;
    RpcCall call;
};
struct MsgRpcRep {
    std::uint64_t rpc_id = 0;
    RpcResult result;
};

// ---- switch plane (network B) ----

struct MsgArpWhoHas {
    netmodel::PoolAddress target;
};
struct MsgArpReply {
    netmodel::PoolAddress target;
    int owner = -1;
};
struct MsgArpAnnounce {
    netmodel::PoolAddress target;
    int owner = -1;
};
struct MsgConnectReq {
    netmodel::PoolAddress target;
};
struct MsgConnectAck {
    netmodel::PoolAddress target;
    bool accepted = false;
};
struct MsgFlowRequest {
    std::int64_t seq = 0;
};
struct MsgFlowResponse {
    std::int64_t seq = 0;
};
struct MsgFlowNak {
    std::int64_t seq = 0;  // not the owner anymore; client must re-resolve
};

using Message =
    std::variant<MsgDiscover, MsgDiscoverAck, MsgJoinReq, MsgHeartbeat,
                 MsgSuspect, MsgFlushReq, MsgFlushAck, MsgViewInstall,
                 MsgToRequest, MsgToDeliver, MsgMergeReq, MsgMergeAck,
                 MsgRpcReq, MsgRpcRep, MsgArpWhoHas, MsgArpReply,
                 MsgArpAnnounce, MsgConnectReq, MsgConnectAck, MsgFlowRequest,
                 MsgFlowResponse, MsgFlowNak>;

struct Packet {
    NodeAddr src;
    NodeAddr dst;
    Message payload;
};

// Controller-to-controller envelope as seen by the group layer. The
// simulation carries typed messages; the byte payload form exists for
// application-level broadcasts.
struct Envelope {
    int from = 0;
    std::optional<int> to;  // nullopt = broadcast
    std::string kind;
    std::vector<std::uint8_t> payload;
    SimTime send_time = 0;
};

}  // namespace ofcluster
