#include "homlab/tagstream/nfold.hpp"

#include <deque>
#include <queue>

namespace homlab::tagstream {

std::vector<NfoldEvent> nfold(const std::vector<const TagStream*>& streams,
                              std::int64_t window_ps) {
    if (streams.size() < 2) throw PreconditionError("nfold: need at least 2 streams");
    if (window_ps <= 0) throw PreconditionError("nfold: window must be > 0");
    for (const TagStream* s : streams) s->validate();

    const std::size_t k = streams.size();
    std::vector<std::deque<std::uint64_t>> pending(k);
    std::vector<std::size_t> next(k, 0);

    // k-way merge by (time, channel index)
    using Head = std::pair<std::uint64_t, std::size_t>;
    auto cmp = [](const Head& a, const Head& b) { return a > b; };
    std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heads(cmp);
    for (std::size_t c = 0; c < k; ++c) {
        if (!streams[c]->times_ps.empty()) heads.emplace(streams[c]->times_ps[0], c);
    }

    std::vector<NfoldEvent> events;
    while (!heads.empty()) {
        auto [t, c] = heads.top();
        heads.pop();
        if (++next[c] < streams[c]->times_ps.size()) {
            heads.emplace(streams[c]->times_ps[next[c]], c);
        }

        pending[c].push_back(t);

        // evict tags that can no longer share a window with t or anything later
        bool complete = true;
        for (std::size_t i = 0; i < k; ++i) {
            auto& q = pending[i];
            while (!q.empty() && t > q.front() + static_cast<std::uint64_t>(window_ps)) {
                q.pop_front();
            }
            if (q.empty()) complete = false;
        }
        if (!complete) continue;

        NfoldEvent ev;
        ev.times_ps.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            ev.times_ps[i] = pending[i].front();
            pending[i].pop_front();
        }
        events.push_back(std::move(ev));
    }
    return events;
}

std::vector<NfoldEvent> nfold(const std::vector<TagStream>& streams, std::int64_t window_ps) {
    std::vector<const TagStream*> ptrs;
    ptrs.reserve(streams.size());
    for (const TagStream& s : streams) ptrs.push_back(&s);
    return nfold(ptrs, window_ps);
}

}  // namespace homlab::tagstream
