#ifndef SYLVINV_ERRORS_HPP
#define SYLVINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sylvinv {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (degree bounds, malformed data).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A leading coefficient that must be nonzero is zero.
class DegenerateInput : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// A dense factorization hit a pivot below the singularity threshold.
class SingularMatrix : public Error {
   public:
    using Error::Error;
};

/// The Sylvester matrix is (numerically) singular: a and b share a zero.
class SingularSylvester : public Error {
   public:
    using Error::Error;
};

class RootFindingFailed : public Error {
   public:
    using Error::Error;
};

}  // namespace sylvinv

#endif
