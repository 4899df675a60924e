#include "homlab/tagstream/merge.hpp"

#include <queue>
#include <tuple>

namespace homlab::tagstream {

std::vector<TagRecord> merge_sorted(const std::vector<const TagStream*>& streams) {
    std::size_t total = 0;
    for (const TagStream* s : streams) {
        s->validate();
        total += s->size();
    }

    using Head = std::tuple<std::uint64_t, std::uint8_t, std::size_t>;  // time, channel, stream idx
    auto cmp = [](const Head& a, const Head& b) { return a > b; };
    std::priority_queue<Head, std::vector<Head>, decltype(cmp)> heads(cmp);
    std::vector<std::size_t> next(streams.size(), 0);
    for (std::size_t i = 0; i < streams.size(); ++i) {
        if (!streams[i]->times_ps.empty()) {
            heads.emplace(streams[i]->times_ps[0], streams[i]->channel, i);
        }
    }

    std::vector<TagRecord> out;
    out.reserve(total);
    while (!heads.empty()) {
        auto [t, ch, i] = heads.top();
        heads.pop();
        out.push_back({ch, t});
        if (++next[i] < streams[i]->times_ps.size()) {
            heads.emplace(streams[i]->times_ps[next[i]], streams[i]->channel, i);
        }
    }
    return out;
}

std::vector<TagRecord> merge_sorted(const std::vector<TagStream>& streams) {
    std::vector<const TagStream*> ptrs;
    ptrs.reserve(streams.size());
    for (const TagStream& s : streams) ptrs.push_back(&s);
    return merge_sorted(ptrs);
}

}  // namespace homlab::tagstream
