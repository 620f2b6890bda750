// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace looplab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LOOPLAB_DEFINE_ERROR(Name)                              \
  struct Name : Error {                                         \
    explicit Name(const std::string& what)                      \
        : Error(std::string(#Name) + ": " + what) {}            \
  }

LOOPLAB_DEFINE_ERROR(DivisionByZero);
LOOPLAB_DEFINE_ERROR(SizeParityMismatch);
LOOPLAB_DEFINE_ERROR(OffsetOverflow);
LOOPLAB_DEFINE_ERROR(SingularEvaluation);
LOOPLAB_DEFINE_ERROR(DegeneratePoint);
LOOPLAB_DEFINE_ERROR(BaseComponentZero);
LOOPLAB_DEFINE_ERROR(GridEvaluationFailure);
LOOPLAB_DEFINE_ERROR(CacheCorruption);
LOOPLAB_DEFINE_ERROR(TracingInconsistency);
LOOPLAB_DEFINE_ERROR(AsymmetricConfig);
LOOPLAB_DEFINE_ERROR(ConfigError);

#undef LOOPLAB_DEFINE_ERROR

}  // namespace looplab
