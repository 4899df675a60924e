#include "homlab/tagstream/ttag_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

namespace homlab::tagstream {

namespace {

constexpr std::array<char, 6> kMagic = {'T', 'T', 'A', 'G', '1', '\0'};
constexpr std::uint8_t kFlagSorted = 0x01;

void put_u16(char* p, std::uint16_t v) {
    p[0] = static_cast<char>(v & 0xff);
    p[1] = static_cast<char>(v >> 8);
}

void put_u64(char* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = static_cast<char>((v >> (8 * i)) & 0xff);
}

std::uint16_t get_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

}  // namespace

void write_tags(const TagStream& stream, const std::filesystem::path& destination) {
    stream.validate();

    char header[kTtagHeaderSize] = {};
    std::memcpy(header, kMagic.data(), kMagic.size());
    put_u16(header + 6, kTtagVersion);
    header[8] = static_cast<char>(stream.channel);
    header[9] = static_cast<char>(kFlagSorted);
    put_u64(header + 16, stream.times_ps.size());
    put_u64(header + 24, stream.duration_ps);

    const std::filesystem::path tmp = destination.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(header, sizeof(header));

        std::vector<char> buf;
        buf.resize(8 * 65536);
        std::size_t i = 0;
        while (i < stream.times_ps.size()) {
            const std::size_t n = std::min<std::size_t>(65536, stream.times_ps.size() - i);
            for (std::size_t j = 0; j < n; ++j) put_u64(buf.data() + 8 * j, stream.times_ps[i + j]);
            out.write(buf.data(), static_cast<std::streamsize>(8 * n));
            i += n;
        }
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, destination);
}

TagStream read_tags(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + source.string());

    unsigned char header[kTtagHeaderSize];
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    if (static_cast<std::size_t>(in.gcount()) != sizeof(header)) {
        throw FormatError("truncated TTAG1 header", static_cast<std::uint64_t>(in.gcount()));
    }
    if (std::memcmp(header, kMagic.data(), kMagic.size()) != 0) {
        throw FormatError("bad TTAG1 magic", 0);
    }
    const std::uint16_t version = get_u16(header + 6);
    if (version != kTtagVersion) {
        throw FormatError("unsupported TTAG1 version " + std::to_string(version), 6);
    }

    TagStream s;
    s.channel = header[8];
    const bool sorted_flag = (header[9] & kFlagSorted) != 0;
    const std::uint64_t count = get_u64(header + 16);
    s.duration_ps = get_u64(header + 24);
    s.origin = StreamOrigin::imported;

    s.times_ps.resize(count);
    std::vector<unsigned char> buf(8 * 65536);
    std::uint64_t done = 0;
    std::uint64_t prev = 0;
    while (done < count) {
        const std::uint64_t n = std::min<std::uint64_t>(65536, count - done);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(8 * n));
        if (static_cast<std::uint64_t>(in.gcount()) != 8 * n) {
            throw FormatError("truncated TTAG1 record",
                              kTtagHeaderSize + 8 * done + static_cast<std::uint64_t>(in.gcount()));
        }
        for (std::uint64_t j = 0; j < n; ++j) {
            const std::uint64_t t = get_u64(buf.data() + 8 * j);
            const std::uint64_t idx = done + j;
            if (sorted_flag && idx > 0 && t < prev) {
                throw FormatError("descending timestamp in stream flagged sorted",
                                  kTtagHeaderSize + 8 * idx);
            }
            prev = t;
            s.times_ps[idx] = t;
        }
        done += n;
    }
    in.peek();
    if (!in.eof()) {
        throw FormatError("trailing data after last record", kTtagHeaderSize + 8 * count);
    }
    return s;
}

}  // namespace homlab::tagstream
