#pragma once

#include <vector>

#include "homlab/tagstream/tag_stream.hpp"

namespace homlab::tagstream {

/// Globally time-ordered multi-channel sequence; ties broken by ascending
/// channel id.
std::vector<TagRecord> merge_sorted(const std::vector<const TagStream*>& streams);

std::vector<TagRecord> merge_sorted(const std::vector<TagStream>& streams);

}  // namespace homlab::tagstream
