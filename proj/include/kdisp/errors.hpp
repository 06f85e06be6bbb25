#ifndef KDISP_ERRORS_HPP
#define KDISP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdisp {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RejectReason { NotConvex, Collinear, Duplicate, TooFew, NonFinite };

const char* to_string(RejectReason reason);

/// The point list cannot be used as a strictly convex polygon.
/// `index()` names the first offending vertex of the input list.
class RejectedInput : public Error {
public:
    RejectedInput(RejectReason reason, std::size_t index);

    RejectReason reason() const { return reason_; }
    std::size_t index() const { return index_; }

private:
    RejectReason reason_;
    std::size_t index_;
};

class InvalidK : public Error {
public:
    InvalidK(std::size_t k, std::size_t lo, std::size_t hi);
};

/// Exhaustive enumeration would exceed the configured subset limit.
class TooLarge : public Error {
public:
    using Error::Error;
};

class DegeneratePair : public Error {
public:
    explicit DegeneratePair(std::size_t index);
};

} // namespace kdisp

#endif
