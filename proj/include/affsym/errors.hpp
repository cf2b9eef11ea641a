#ifndef AFFSYM_ERRORS_HPP
#define AFFSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affsym {

/// Operand shapes do not agree (e.g. a 2n-vector handed to an n' != n element).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value violates the structural precondition of an operation: a matrix that
/// is not in the image of the odd symplectic embedding, a non-skew form, etc.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The input is well formed but falls outside what the classifier handles.
class OutOfScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_dim(bool ok, const std::string& what) {
    if (!ok) throw DimensionError(what);
}

}  // namespace detail
}  // namespace affsym

#endif  // AFFSYM_ERRORS_HPP
