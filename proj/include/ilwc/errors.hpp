#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ilwc {

/// Base class for all library-specific failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed container bytes: bad magic/version/segment size, length
/// mismatch, nonzero padding.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Weight-law violation detected while decoding in strict mode.
class IntegrityError : public Error {
public:
    IntegrityError(std::uint64_t index, std::uint32_t raw_bits, int weight)
        : Error("invalid codeword weight at index " + std::to_string(index)),
          codeword_index(index),
          raw_bits(raw_bits),
          weight(weight) {}

    std::uint64_t codeword_index;
    std::uint32_t raw_bits;
    int weight;
};

/// File system / stream failures.
class IoError : public Error {
public:
    using Error::Error;
};

/// Parameter file problems: unknown keys, unparseable values, invariant
/// violations, missing mandatory coefficients.
class ParamError : public Error {
public:
    using Error::Error;
};

}  // namespace ilwc
