#pragma once

#include <stdexcept>
#include <string>

namespace hsd {

// Base class for every precondition / domain failure raised by the library.
// The message always names the violated precondition.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct BasePointMismatch : Error {
    explicit BasePointMismatch(const std::string& msg) : Error(msg) {}
};

// Complex power/log requested outside the right half-plane of the principal branch.
struct BranchViolation : Error {
    explicit BranchViolation(const std::string& msg) : Error(msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& msg) : Error(msg) {}
};

struct NotSensePreserving : Error {
    explicit NotSensePreserving(const std::string& msg) : Error(msg) {}
};

struct NotLocallyUnivalent : Error {
    explicit NotLocallyUnivalent(const std::string& msg) : Error(msg) {}
};

struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

// An operation produced NaN/Inf that would otherwise escape silently.
struct NonFiniteValue : Error {
    explicit NonFiniteValue(const std::string& msg) : Error(msg) {}
};

}  // namespace hsd
