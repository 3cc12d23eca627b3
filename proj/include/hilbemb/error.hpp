#ifndef HILBEMB_ERROR_HPP
#define HILBEMB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hilbemb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text or JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A brute-force search exceeded its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal identity that must hold failed. Always a bug.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace hilbemb

#endif
