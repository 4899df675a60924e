#pragma once

#include <cstdint>
#include <vector>

#include "homlab/tagstream/tag_stream.hpp"

namespace homlab::tagstream {

/// One n-fold coincidence: a timestamp per input channel, in input order.
struct NfoldEvent {
    std::vector<std::uint64_t> times_ps;
};

/// Maximal groups holding exactly one tag per channel with max - min <= window.
///
/// Greedy grouping rule (the time tagger's grouping is not otherwise pinned):
/// tags are scanned in global (time, channel) order; the first tag whose
/// arrival leaves every channel with an unconsumed tag inside the trailing
/// window completes a group, and the group takes the earliest unconsumed tag
/// of each channel. Group members are consumed; tags that fall out of the
/// trailing window without being grouped are discarded.
std::vector<NfoldEvent> nfold(const std::vector<const TagStream*>& streams,
                              std::int64_t window_ps);

std::vector<NfoldEvent> nfold(const std::vector<TagStream>& streams, std::int64_t window_ps);

}  // namespace homlab::tagstream
