#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ilwc/codec.hpp"

namespace ilwc {

inline constexpr std::array<std::uint8_t, 4> kContainerMagic{0x49, 0x4C, 0x57, 0x43};  // "ILWC"
inline constexpr std::uint8_t kContainerVersion = 0x01;
inline constexpr std::size_t kContainerHeaderSize = 16;

/// Framed on-disk format carrying packed codewords.
///
/// Layout, byte exact: magic "ILWC", version 0x01, segment_n (2|4|8),
/// two reserved zero bytes, original byte count as unsigned 64-bit
/// little-endian, then the payload with the final byte zero-padded.
struct EncodedContainer {
    std::uint8_t segment_n = 4;
    std::uint64_t original_length = 0;
    std::vector<std::uint8_t> payload;

    /// Payload bit length before final-byte padding:
    /// original_length * (8/n) * (n+1).
    std::uint64_t payload_bits() const;

    /// Throws FormatError on any invariant violation (segment width, payload
    /// size, nonzero pad bits, lengths that cannot be represented).
    void validate() const;

    std::vector<std::uint8_t> to_bytes() const;
    static EncodedContainer from_bytes(std::span<const std::uint8_t> raw);
};

/// Split every input byte into 8/n segments (most significant first), encode
/// each, and pack the codewords most-significant-bit-first.
EncodedContainer encode_stream(std::span<const std::uint8_t> input, const SegmentConfig& cfg);

enum class DecodeMode { Strict, Lenient };

/// One invalid-weight codeword observed while decoding.
struct DecodeErrorRecord {
    std::uint64_t codeword_index;
    std::uint32_t raw_bits;
    int weight;

    bool operator==(const DecodeErrorRecord&) const = default;
};

struct DecodeResult {
    std::vector<std::uint8_t> data;
    std::vector<DecodeErrorRecord> errors;
};

/// Strict mode throws IntegrityError at the first invalid-weight codeword.
/// Lenient mode applies the flag-bit rule regardless of weight, records every
/// invalid codeword, and always returns original_length bytes.
/// Containers that fail validate() raise FormatError in both modes.
DecodeResult decode_stream(const EncodedContainer& container, DecodeMode mode);

// File round trips. Throw IoError / FormatError.
void write_container(const std::filesystem::path& path, const EncodedContainer& container);
EncodedContainer read_container(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace ilwc
