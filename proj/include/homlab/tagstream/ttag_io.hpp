#pragma once

#include <filesystem>

#include "homlab/tagstream/tag_stream.hpp"

namespace homlab::tagstream {

/// TTAG1 binary layout (little-endian), one channel per file:
///
///   offset  size  field
///        0     6  magic "TTAG1\0"
///        6     2  format version, u16 = 1
///        8     1  channel id, u8
///        9     1  flags, u8 (bit 0: sorted)
///       10     6  reserved, zero
///       16     8  record count, u64
///       24     8  capture duration, u64 picoseconds
///       32   8*n  records: consecutive u64 picosecond timestamps
///
/// An empty stream is exactly the 32-byte header.
inline constexpr std::size_t kTtagHeaderSize = 32;
inline constexpr std::uint16_t kTtagVersion = 1;

/// Writes atomically (temp file + rename). Requires a sorted stream.
void write_tags(const TagStream& stream, const std::filesystem::path& destination);

/// Reads and validates a TTAG1 file. Bad magic, truncated records, or
/// descending times under the sorted flag raise FormatError with the byte
/// offset of the first violation.
TagStream read_tags(const std::filesystem::path& source);

}  // namespace homlab::tagstream
