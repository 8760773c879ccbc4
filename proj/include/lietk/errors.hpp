#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lietk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A commuting family has an operator with an irrational or non-semisimple action.
class NotSplit : public Error {
public:
    using Error::Error;
};

class NotCommuting : public Error {
public:
    NotCommuting(std::size_t first, std::size_t second)
        : Error("operators " + std::to_string(first) + " and " + std::to_string(second) +
                " do not commute"),
          first_(first), second_(second)
    {
    }
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class NotToral : public Error {
public:
    using Error::Error;
};

class NotNilpotent : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class UnsupportedFamily : public Error {
public:
    using Error::Error;
};

/// An input fails a documented precondition (empty root set, non-symmetric subset, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A structural property that the theory guarantees did not hold. Raising this
/// means the input (or the implementation) falsified a proven statement.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace lietk
