#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nigpart {

using VertexId = std::int32_t;
using NetId = std::int32_t;
using PartId = std::int32_t;
using Weight = std::int64_t;

inline constexpr PartId kUnassigned = -1;

// Root of every error thrown by the library. The CLI maps subclasses to
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NIGPART_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  }

NIGPART_DEFINE_ERROR(InvalidPin);
NIGPART_DEFINE_ERROR(InvalidWeight);
NIGPART_DEFINE_ERROR(IncompletePartition);
NIGPART_DEFINE_ERROR(FormatError);
NIGPART_DEFINE_ERROR(CliqueBlowup);
NIGPART_DEFINE_ERROR(ModelMismatch);
NIGPART_DEFINE_ERROR(InvalidSeparator);
NIGPART_DEFINE_ERROR(ConsistencyError);
NIGPART_DEFINE_ERROR(TooLarge);
NIGPART_DEFINE_ERROR(ConfigError);

#undef NIGPART_DEFINE_ERROR

}  // namespace nigpart
