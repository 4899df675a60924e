#pragma once

#include <cstdint>
#include <vector>

namespace homlab::tagstream {

/// Binned coincidence counts over signed time differences.
///
/// Bin k covers [lo + k*bw, lo + (k+1)*bw). The requested range is extended
/// upward to an integer number of bins; differences outside [lo, hi) land in
/// underflow/overflow (a difference exactly at hi overflows).
struct Histogram {
    std::int64_t lo_ps = 0;
    std::int64_t bin_width_ps = 1;
    std::vector<std::uint64_t> counts;
    std::uint64_t underflow = 0;
    std::uint64_t overflow = 0;
    std::uint64_t total_entries = 0;   // in-range + out-of-range
    double accidental_floor_per_bin = 0.0;  // normalization metadata, 0 if unset

    std::int64_t hi_ps() const {
        return lo_ps + bin_width_ps * static_cast<std::int64_t>(counts.size());
    }
    std::size_t bin_count() const { return counts.size(); }
    double bin_center_ps(std::size_t k) const {
        return static_cast<double>(lo_ps) + (static_cast<double>(k) + 0.5) * bin_width_ps;
    }

    /// Histogram with ceil((hi-lo)/bw) zeroed bins.
    static Histogram make(std::int64_t lo_ps, std::int64_t hi_ps, std::int64_t bin_width_ps);

    void add(std::int64_t difference_ps);

    /// Merge bin-compatible histograms; throws PreconditionError on layout mismatch.
    void merge(const Histogram& other);
};

}  // namespace homlab::tagstream
