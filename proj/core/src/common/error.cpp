//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "molguide/common/error.hpp"

namespace molguide {

std::string_view error_class_name(ErrorClass cls) noexcept {
  switch (cls) {
  case ErrorClass::kUsage:
    return "usage";
  case ErrorClass::kData:
    return "data";
  case ErrorClass::kNumeric:
    return "numeric";
  }
  return "unknown";
}

} // namespace molguide
