#pragma once

#include <stdexcept>
#include <string>

namespace lpplab {

// Every failure raised by the library derives from Error so callers (and the
// CLI) can catch a single type and still tell the categories apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LPPLAB_ERROR(Name)                 \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

LPPLAB_ERROR(ParameterError)
LPPLAB_ERROR(ArgumentError)
LPPLAB_ERROR(WindowError)
LPPLAB_ERROR(CoverageError)
LPPLAB_ERROR(OrderingError)
LPPLAB_ERROR(UnsupportedModelError)
LPPLAB_ERROR(CharacteristicDirectionError)
LPPLAB_ERROR(SampleSizeError)
LPPLAB_ERROR(IoError)
LPPLAB_ERROR(ConfigError)

#undef LPPLAB_ERROR

}  // namespace lpplab
