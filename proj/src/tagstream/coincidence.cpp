#include "homlab/tagstream/coincidence.hpp"

#include <algorithm>

#include "homlab/support/threads.hpp"

namespace homlab::tagstream {

namespace {

inline std::int64_t as_signed(std::uint64_t t) { return static_cast<std::int64_t>(t); }

// First index in b with time_b - time_a >= lo (signed difference bound).
std::size_t lower_index(const std::vector<std::uint64_t>& b, std::int64_t bound) {
    return static_cast<std::size_t>(
        std::lower_bound(b.begin(), b.end(), bound,
                         [](std::uint64_t t, std::int64_t v) { return as_signed(t) < v; }) -
        b.begin());
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> coincidences(const TagStream& a,
                                                                  const TagStream& b,
                                                                  std::int64_t window_ps,
                                                                  std::int64_t offset_ps) {
    if (window_ps <= 0) throw PreconditionError("coincidences: window must be > 0");
    a.validate();
    b.validate();

    const std::int64_t half = window_ps / 2;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::size_t lo = 0;
    for (std::uint64_t ta : a.times_ps) {
        const std::int64_t lo_bound = as_signed(ta) + offset_ps - half;
        const std::int64_t hi_bound = as_signed(ta) + offset_ps + half;
        while (lo < b.size() && as_signed(b.times_ps[lo]) < lo_bound) ++lo;
        for (std::size_t j = lo; j < b.size() && as_signed(b.times_ps[j]) <= hi_bound; ++j) {
            out.emplace_back(ta, b.times_ps[j]);
        }
    }
    return out;
}

Histogram histogram(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                    std::int64_t bin_width_ps, std::int64_t lo_ps, std::int64_t hi_ps) {
    Histogram h = Histogram::make(lo_ps, hi_ps, bin_width_ps);
    for (const auto& [ta, tb] : pairs) h.add(as_signed(tb) - as_signed(ta));
    return h;
}

Histogram difference_histogram(const TagStream& a, const TagStream& b,
                               std::int64_t bin_width_ps, std::int64_t lo_ps,
                               std::int64_t hi_ps) {
    a.validate();
    b.validate();
    Histogram h = Histogram::make(lo_ps, hi_ps, bin_width_ps);
    const std::int64_t hi = h.hi_ps();

    std::size_t lo = 0;
    for (std::uint64_t ta : a.times_ps) {
        const std::int64_t lo_bound = as_signed(ta) + lo_ps;
        const std::int64_t hi_bound = as_signed(ta) + hi;  // exclusive
        while (lo < b.size() && as_signed(b.times_ps[lo]) < lo_bound) ++lo;
        for (std::size_t j = lo; j < b.size() && as_signed(b.times_ps[j]) < hi_bound; ++j) {
            const std::int64_t d = as_signed(b.times_ps[j]) - as_signed(ta);
            ++h.counts[static_cast<std::size_t>((d - lo_ps) / bin_width_ps)];
            ++h.total_entries;
        }
    }
    return h;
}

Histogram difference_histogram_parallel(const TagStream& a, const TagStream& b,
                                        std::int64_t bin_width_ps, std::int64_t lo_ps,
                                        std::int64_t hi_ps) {
    a.validate();
    b.validate();
    Histogram proto = Histogram::make(lo_ps, hi_ps, bin_width_ps);
    const std::int64_t hi = proto.hi_ps();
    const int nthreads = max_threads();

    std::vector<Histogram> partial(nthreads, proto);
    #pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        const int nt = omp_get_num_threads();
        Histogram& h = partial[tid];
        const std::size_t begin = a.size() * tid / nt;
        const std::size_t end = a.size() * (tid + 1) / nt;
        std::size_t lo =
            begin < a.size() ? lower_index(b.times_ps, as_signed(a.times_ps[begin]) + lo_ps) : 0;
        for (std::size_t i = begin; i < end; ++i) {
            const std::int64_t ta = as_signed(a.times_ps[i]);
            while (lo < b.size() && as_signed(b.times_ps[lo]) < ta + lo_ps) ++lo;
            for (std::size_t j = lo; j < b.size() && as_signed(b.times_ps[j]) < ta + hi; ++j) {
                const std::int64_t d = as_signed(b.times_ps[j]) - ta;
                ++h.counts[static_cast<std::size_t>((d - lo_ps) / bin_width_ps)];
                ++h.total_entries;
            }
        }
    }

    Histogram out = std::move(partial[0]);
    for (int t = 1; t < nthreads; ++t) out.merge(partial[t]);
    return out;
}

}  // namespace homlab::tagstream
