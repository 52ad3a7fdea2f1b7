#include "ofcluster/trace.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ofcluster {

std::string format_ms(SimTime t) {
    const bool neg = t < 0;
    const std::int64_t a = neg ? -t : t;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%lld.%03lld", neg ? "-" : "",
                  static_cast<long long>(a / 1000),
                  static_cast<long long>(a % 1000));
    return buf;
}

nlohmann::json TraceRecord::to_json() const {
    // Ordered object: t_us first, then node/event, then payload keys.
    nlohmann::json j;
    j["t_us"] = t;
    j["node"] = node;
    j["event"] = event;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
        j[it.key()] = it.value();
    }
    return j;
}

TraceRecord TraceRecord::from_json(const nlohmann::json& j) {
    TraceRecord r;
    r.t = j.at("t_us").get<SimTime>();
    r.node = j.at("node").get<std::string>();
    r.event = j.at("event").get<std::string>();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "t_us" || it.key() == "node" || it.key() == "event")
            continue;
        r.fields[it.key()] = it.value();
    }
    return r;
}

std::string ScenarioTrace::serialize() const {
    std::string out;
    for (const auto& r : records) {
        out += r.to_json().dump();
        out += '\n';
    }
    return out;
}

ScenarioTrace ScenarioTrace::parse(const std::string& text) {
    ScenarioTrace t;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error("trace line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
        t.records.push_back(TraceRecord::from_json(j));
    }
    return t;
}

ScenarioTrace ScenarioTrace::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void ScenarioTrace::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    out << serialize();
}

}  // namespace ofcluster
