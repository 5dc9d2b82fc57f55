#pragma once

#include <cstdint>

namespace tricert {

// work counters for the linear-time checks; all optional
struct Counters {
    std::uint64_t dfs_steps = 0;
    std::uint64_t decompose_steps = 0;
    std::uint64_t classify_steps = 0;
    std::uint64_t segmin_steps = 0;
    std::uint64_t process_steps = 0;
    std::uint64_t verifier_touches = 0;
    std::uint64_t segments_by_overlap = 0;
    std::uint64_t segments_by_real_trigger = 0;
    std::uint64_t fallback_witnesses = 0;
};

}  // namespace tricert
