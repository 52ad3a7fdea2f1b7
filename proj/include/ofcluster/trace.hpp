#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ofcluster/simtime.hpp"

namespace ofcluster {

// One timestamped record. `fields` holds the event-specific payload; `node`
// is "c<rank>" for controllers, "s<index>" for switches, "sim" for
// environment events emitted by the scenario runner itself.
struct TraceRecord {
    SimTime t = 0;
    std::string node;
    std::string event;
    nlohmann::json fields = nlohmann::json::object();

    nlohmann::json to_json() const;
    static TraceRecord from_json(const nlohmann::json& j);
};

struct ScenarioTrace {
    std::vector<TraceRecord> records;

    // JSON-lines, one record per line, stable key order.
    std::string serialize() const;
    static ScenarioTrace parse(const std::string& text);
    static ScenarioTrace load_file(const std::string& path);
    void save_file(const std::string& path) const;
};

// Append-only sink used by the simulation while running.
class TraceSink {
public:
    explicit TraceSink(ScenarioTrace& out) : out_(out) {}

    void emit(SimTime t, std::string node, std::string event,
              nlohmann::json fields = nlohmann::json::object()) {
        out_.records.push_back(
            {t, std::move(node), std::move(event), std::move(fields)});
    }

    const ScenarioTrace& trace() const { return out_; }

private:
    ScenarioTrace& out_;
};

}  // namespace ofcluster
