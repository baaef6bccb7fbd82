#include "ilwc/codec.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace ilwc {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t mask_bits(int width) {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

// Core of Algorithm-style segment encoding, kept noexcept so the byte
// lookup tables below can be built at compile time.
constexpr std::uint64_t encode_value(std::uint64_t data, int n) noexcept {
    const int k = n + 1;
    const int m = n / 2;
    std::uint64_t cw = data;  // appended flag '0' is the (already zero) MSB
    if (std::popcount(cw) <= m)
        cw = ~cw & mask_bits(k);
    return cw;
}

template <int N>
consteval std::array<std::uint16_t, 256> make_byte_lut() {
    std::array<std::uint16_t, 256> lut{};
    constexpr int segs = 8 / N;
    constexpr int k = N + 1;
    for (unsigned b = 0; b < 256; ++b) {
        std::uint32_t bits = 0;
        for (int s = 0; s < segs; ++s) {
            const std::uint64_t seg = (b >> (8 - N * (s + 1))) & mask_bits(N);
            bits = (bits << k) | static_cast<std::uint32_t>(encode_value(seg, N));
        }
        lut[b] = static_cast<std::uint16_t>(bits);
    }
    return lut;
}

constexpr auto kByteLut2 = make_byte_lut<2>();
constexpr auto kByteLut4 = make_byte_lut<4>();
constexpr auto kByteLut8 = make_byte_lut<8>();

// Exact binomial coefficient; fits easily in 128 bits for k <= 64.
u128 binomial(int k, int i) {
    if (i < 0 || i > k)
        return 0;
    if (i > k - i)
        i = k - i;
    u128 c = 1;
    for (int j = 1; j <= i; ++j) {
        c = c * static_cast<u128>(k - j + 1);
        c /= static_cast<u128>(j);
    }
    return c;
}

u128 binomial_prefix_sum(int k, int m) {
    u128 sum = 0;
    for (int i = 0; i <= m; ++i)
        sum += binomial(k, i);
    return sum;
}

}  // namespace

SegmentConfig::SegmentConfig(int width) : n(width), k(width + 1), m(width / 2) {
    if (width < 2 || width > 32 || width % 2 != 0)
        throw std::invalid_argument("segment width must be even and within [2, 32]");
}

int codeword_weight(std::uint64_t word) {
    return std::popcount(word);
}

Codeword encode_segment(std::uint64_t data, const SegmentConfig& cfg) {
    if (data > mask_bits(cfg.n))
        throw std::domain_error("segment value does not fit in " + std::to_string(cfg.n) + " bits");
    const std::uint64_t bits = encode_value(data, cfg.n);
    return Codeword{bits, std::popcount(bits)};
}

std::optional<std::uint64_t> decode_segment(std::uint64_t cw, const SegmentConfig& cfg) {
    if (cw > mask_bits(cfg.k))
        throw std::domain_error("codeword value does not fit in " + std::to_string(cfg.k) + " bits");
    if (std::popcount(cw) <= cfg.m)
        return std::nullopt;
    const bool flag = (cw >> cfg.n) & 1;
    const std::uint64_t word = flag ? ~cw : cw;
    return word & mask_bits(cfg.n);
}

PerfectCheck verify_perfect_parameters(int n) {
    if (n < 2 || n > 32 || n % 2 != 0)
        throw std::invalid_argument("width must be even and within [2, 32]");
    const int k = n + 1;
    const int m = n / 2;
    const u128 sum = binomial_prefix_sum(k, m);
    const u128 target = u128{1} << n;
    return PerfectCheck{k, m, sum == target};
}

bool lwc_feasible(int n, int k, int m) {
    if (n < 1 || n > 64 || k < 1 || k > 64 || m < 1 || m > k)
        throw std::invalid_argument("lwc_feasible requires 1 <= n <= 64 and 1 <= m <= k <= 64");
    return binomial_prefix_sum(k, m) >= (u128{1} << n);
}

ByteCode encode_byte(std::uint8_t byte, const SegmentConfig& cfg) {
    std::uint32_t bits;
    switch (cfg.n) {
    case 2: bits = kByteLut2[byte]; break;
    case 4: bits = kByteLut4[byte]; break;
    case 8: bits = kByteLut8[byte]; break;
    default:
        throw std::invalid_argument("stream coding supports segment widths 2, 4 and 8 only");
    }
    return ByteCode{bits, cfg.coded_bits_per_byte(), std::popcount(bits)};
}

}  // namespace ilwc
