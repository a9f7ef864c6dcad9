#pragma once

#include <cstdint>

namespace semitrace {

/// Enumeration caps. Every exhaustive routine checks its work size against
/// these before starting and throws instead of running away.
struct Limits {
    std::int64_t max_group_elements = 1'000'000;  // power tuples walked by enumerate_elements
    std::int64_t max_box = 10'000'000;            // lattice points in an enumeration box
    std::int64_t max_weights = 100'000;           // characters swept by analyze
    std::int64_t max_sweep_candidates = 2'000'000; // raw presentations generated by sweep
};

}  // namespace semitrace
