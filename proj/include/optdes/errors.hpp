#ifndef OPTDES_ERRORS_HPP
#define OPTDES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace optdes {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionOutOfRange : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct GridTooSmall : Error {
  using Error::Error;
};

struct GridTooLarge : Error {
  using Error::Error;
};

// The information matrix is not numerically positive definite: the
// regressors do not span R^p on the support of the density.
struct SingularInformation : Error {
  using Error::Error;
};

struct KLUndefined : Error {
  using Error::Error;
};

struct DegenerateRing : Error {
  using Error::Error;
};

struct UnknownPreset : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace optdes

#endif  // OPTDES_ERRORS_HPP
