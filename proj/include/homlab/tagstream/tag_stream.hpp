#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homlab/support/errors.hpp"

namespace homlab::tagstream {

/// One detection: channel id plus absolute time in integer picoseconds.
/// A 64-bit unsigned picosecond timestamp spans more than 100 days.
struct TagRecord {
    std::uint8_t channel = 0;
    std::uint64_t time_ps = 0;

    friend bool operator==(const TagRecord&, const TagRecord&) = default;
};

enum class StreamOrigin : std::uint8_t { simulated, imported };

/// Sorted timestamps of one channel plus capture metadata.
struct TagStream {
    std::uint8_t channel = 0;
    std::uint64_t duration_ps = 0;
    StreamOrigin origin = StreamOrigin::simulated;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> times_ps;

    std::size_t size() const { return times_ps.size(); }
    bool is_sorted() const;

    /// Throws PreconditionError unless strictly non-decreasing and the
    /// duration covers the last timestamp.
    void validate() const;
};

inline bool TagStream::is_sorted() const {
    for (std::size_t i = 1; i < times_ps.size(); ++i) {
        if (times_ps[i] < times_ps[i - 1]) return false;
    }
    return true;
}

inline void TagStream::validate() const {
    if (!is_sorted()) throw PreconditionError("tag stream is not time-sorted");
    if (!times_ps.empty() && duration_ps < times_ps.back()) {
        throw PreconditionError("tag stream duration is shorter than its last timestamp");
    }
}

}  // namespace homlab::tagstream
