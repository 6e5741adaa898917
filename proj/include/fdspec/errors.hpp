#pragma once

#include <stdexcept>
#include <string>

namespace fdspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family parameter (n, m, order, count, ...) is outside its domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A moment system has no unique solution (repeated nodes).
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// A weight offset does not fit into the requested DFT length.
class EmbeddingOverflow : public Error {
public:
    using Error::Error;
};

/// A reference curve was evaluated outside the interval where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A stencil reaches past the ends of a sampled signal.
class BoundaryError : public Error {
public:
    explicit BoundaryError(const std::string& what, long missing_index)
        : Error(what), missing_index_(missing_index) {}

    long missing_index() const noexcept { return missing_index_; }

private:
    long missing_index_;
};

/// Malformed serialized input (stencil JSON, fraction strings, function specs).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace fdspec
