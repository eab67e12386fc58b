#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kcrank {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Series inversion needs a constant coefficient of +1 or -1.
struct NonUnitConstantError : Error {
    using Error::Error;
};

/// Exact integer division hit a non-divisible coefficient.
struct NotDivisibleError : Error {
    int index;
    NotDivisibleError(int idx, const std::string& msg) : Error(msg), index(idx) {}
};

/// J_{s,t} requires 1 <= s < t.
struct BadModuliError : Error {
    using Error::Error;
};

/// Coefficient request beyond the truncation order of a series or table.
struct OrderExceededError : Error {
    using Error::Error;
};

/// A statistic was asked of the empty partition.
struct EmptyPartitionError : Error {
    using Error::Error;
};

/// The k-crank needs at least two components.
struct NeedsTwoComponentsError : Error {
    using Error::Error;
};

/// An enumeration guard tripped.
struct BudgetExceededError : Error {
    using Error::Error;
};

/// DSL parse failure; offset is the byte position in the input.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(std::size_t off, const std::string& msg)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

/// A cache file failed header or shape validation.
struct CacheFormatError : Error {
    using Error::Error;
};

}  // namespace kcrank
