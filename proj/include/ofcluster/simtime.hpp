#pragma once

#include <cstdint>
#include <string>

namespace ofcluster {

// Simulated time in integer microseconds. Scenario files and metrics speak
// milliseconds; the microsecond grid keeps event ordering and trace output
// exact.
using SimTime = std::int64_t;

constexpr SimTime kNoTime = -1;

constexpr SimTime from_ms(double ms) {
    return static_cast<SimTime>(ms * 1000.0 + (ms >= 0 ? 0.5 : -0.5));
}

constexpr SimTime from_ms_int(std::int64_t ms) { return ms * 1000; }

constexpr double to_ms(SimTime t) { return static_cast<double>(t) / 1000.0; }

// Fixed "123.456" millisecond rendering, three decimals, no float round trip.
std::string format_ms(SimTime t);

}  // namespace ofcluster
