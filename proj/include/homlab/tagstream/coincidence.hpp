#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homlab/tagstream/histogram.hpp"
#include "homlab/tagstream/tag_stream.hpp"

namespace homlab::tagstream {

/// All pairs with |time_b - time_a - offset| <= window/2 (inclusive), ordered
/// by time_a. Single forward two-pointer sweep, amortized O(1) per element
/// plus O(1) per emitted pair.
std::vector<std::pair<std::uint64_t, std::uint64_t>> coincidences(
    const TagStream& a, const TagStream& b, std::int64_t window_ps, std::int64_t offset_ps = 0);

/// Bin time_b - time_a of explicit pairs; out-of-range differences are
/// recorded as underflow/overflow, not dropped.
Histogram histogram(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                    std::int64_t bin_width_ps, std::int64_t lo_ps, std::int64_t hi_ps);

/// Fused coincidence + binning kernel: bins every difference inside the
/// histogram range without materializing the pair list. Serial reference
/// implementation (single pass).
Histogram difference_histogram(const TagStream& a, const TagStream& b,
                               std::int64_t bin_width_ps, std::int64_t lo_ps,
                               std::int64_t hi_ps);

/// Chunk-parallel version of difference_histogram. Stream a is split into
/// contiguous ranges, each thread bins into a private histogram and the
/// integer bins are summed, so the result is bin-exact equal to the serial
/// single-pass kernel.
Histogram difference_histogram_parallel(const TagStream& a, const TagStream& b,
                                        std::int64_t bin_width_ps, std::int64_t lo_ps,
                                        std::int64_t hi_ps);

}  // namespace homlab::tagstream
