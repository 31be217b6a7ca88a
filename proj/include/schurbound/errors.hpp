#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schurbound {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A positive part increases left-to-right in a would-be partition.
class NotWeaklyDecreasing : public Error {
public:
    using Error::Error;
};

/// Dominance (and covers) are defined only between partitions of the same integer.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// The two partitions are not comparable in the dominance order.
class NotComparable : public Error {
public:
    using Error::Error;
};

/// The pair does not satisfy the cover characterization.
class NotACover : public Error {
public:
    using Error::Error;
};

/// A partition has a part larger than the rank bound r.
class RankExceeded : public Error {
public:
    using Error::Error;
};

/// Mixed-rank polynomial arithmetic.
class RankMismatch : public Error {
public:
    using Error::Error;
};

/// An operation requires r >= n and got a smaller rank.
class RankTooSmall : public Error {
public:
    using Error::Error;
};

/// Schur expansion requested for a polynomial with terms of different degrees.
class NotHomogeneous : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range. Never wraps silently.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its configured limit; carries the count found so far.
class LimitExceeded : public Error {
public:
    LimitExceeded(const std::string& what, std::uint64_t found)
        : Error(what), found_(found) {}
    std::uint64_t found() const noexcept { return found_; }

private:
    std::uint64_t found_;
};

/// Coefficient type. All arithmetic on it goes through the checked helpers below.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer addition overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer subtraction overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer multiplication overflow");
    return r;
}

/// 2^e as a checked 64-bit integer.
inline Int checked_pow2(int e) {
    if (e < 0 || e > 62)
        throw ArithmeticOverflow("2^" + std::to_string(e) + " out of range");
    return Int{1} << e;
}

}  // namespace schurbound
