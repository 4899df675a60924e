#include "homlab/tagstream/histogram.hpp"

#include "homlab/support/errors.hpp"

namespace homlab::tagstream {

Histogram Histogram::make(std::int64_t lo_ps, std::int64_t hi_ps, std::int64_t bin_width_ps) {
    if (bin_width_ps <= 0) throw PreconditionError("histogram bin width must be > 0");
    if (hi_ps <= lo_ps) throw PreconditionError("histogram range must be non-empty");
    const std::int64_t span = hi_ps - lo_ps;
    const std::int64_t nbins = (span + bin_width_ps - 1) / bin_width_ps;
    Histogram h;
    h.lo_ps = lo_ps;
    h.bin_width_ps = bin_width_ps;
    h.counts.assign(static_cast<std::size_t>(nbins), 0);
    return h;
}

void Histogram::add(std::int64_t difference_ps) {
    ++total_entries;
    if (difference_ps < lo_ps) {
        ++underflow;
        return;
    }
    const std::int64_t k = (difference_ps - lo_ps) / bin_width_ps;
    if (k >= static_cast<std::int64_t>(counts.size())) {
        ++overflow;
        return;
    }
    ++counts[static_cast<std::size_t>(k)];
}

void Histogram::merge(const Histogram& other) {
    if (other.lo_ps != lo_ps || other.bin_width_ps != bin_width_ps ||
        other.counts.size() != counts.size()) {
        throw PreconditionError("histogram merge: incompatible bin layout");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    underflow += other.underflow;
    overflow += other.overflow;
    total_entries += other.total_entries;
}

}  // namespace homlab::tagstream
