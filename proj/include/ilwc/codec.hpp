#pragma once

#include <cstdint>
#include <optional>

namespace ilwc {

/// One perfect inverted limited-weight coding configuration: n-bit source
/// segments map to k = n+1 bit codewords whose weight is always strictly
/// greater than m = n/2. The parameter triple is perfect in the sense that
/// sum_{i=0..m} C(k,i) == 2^n, so a single appended flag bit is enough.
struct SegmentConfig {
    int n;  ///< source segment width in bits, even
    int k;  ///< codeword width, n + 1
    int m;  ///< weight bound, n / 2

    /// Throws std::invalid_argument unless width is even and in [2, 32].
    explicit SegmentConfig(int width);

    /// Widths usable for byte-stream coding; segments never straddle bytes.
    static bool stream_width(int width) { return width == 2 || width == 4 || width == 8; }

    int segments_per_byte() const { return 8 / n; }       // stream widths only
    int coded_bits_per_byte() const { return segments_per_byte() * k; }
};

/// A k-bit codeword with its weight. The flag bit sits at the most
/// significant position; a codeword is valid iff weight > m.
struct Codeword {
    std::uint64_t bits;
    int weight;

    bool valid(const SegmentConfig& cfg) const { return weight > cfg.m; }
    bool operator==(const Codeword&) const = default;
};

/// Number of '1' bits in a word.
int codeword_weight(std::uint64_t word);

/// Encode one n-bit segment. A '0' flag is appended at the MSB; if the
/// resulting word has weight <= m it is complemented, so the output weight
/// always exceeds m. Throws std::domain_error when data >= 2^n.
Codeword encode_segment(std::uint64_t data, const SegmentConfig& cfg);

/// Decode one k-bit codeword. Returns nullopt when the weight law is
/// violated (weight <= m), which signals a detected storage error.
/// Otherwise: flag bit 0 -> low n bits, flag bit 1 -> low n bits of ~cw.
/// Throws std::domain_error when cw >= 2^k.
std::optional<std::uint64_t> decode_segment(std::uint64_t cw, const SegmentConfig& cfg);

struct PerfectCheck {
    int k;
    int m;
    bool holds;  ///< sum_{i=0..m} C(k,i) == 2^n, exact arithmetic
};

/// Check the one-extra-bit perfectness identity for an even width n in
/// [2, 32]. Throws std::invalid_argument otherwise.
PerfectCheck verify_perfect_parameters(int n);

/// General feasibility of an (n, k, m) limited-weight code:
/// sum_{i=0..m} C(k,i) >= 2^n in exact integer arithmetic.
/// Requires 1 <= n <= 64, 1 <= m <= k <= 64.
bool lwc_feasible(int n, int k, int m);

/// All codewords for one input byte (8/n segments, most significant segment
/// first), packed most-significant-bit-first. Stream widths only.
struct ByteCode {
    std::uint32_t bits;
    int width;     ///< (8/n) * (n+1)
    int ones;      ///< total weight across the byte's codewords
};
ByteCode encode_byte(std::uint8_t byte, const SegmentConfig& cfg);

}  // namespace ilwc
