//
// Project molguide - Copyright 2026 The molguide Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLGUIDE_COMMON_ERROR_HPP_
#define MOLGUIDE_COMMON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace molguide {

// Broad failure classes; the command-line tool maps them onto exit codes.
enum class ErrorClass {
  kUsage = 1,
  kData = 2,
  kNumeric = 3,
};

std::string_view error_class_name(ErrorClass cls) noexcept;

class Error: public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string &what)
      : std::runtime_error(what), class_(cls) { }

  ErrorClass error_class() const noexcept { return class_; }

private:
  ErrorClass class_;
};

class UsageError: public Error {
public:
  explicit UsageError(const std::string &what)
      : Error(ErrorClass::kUsage, what) { }
};

class DataError: public Error {
public:
  explicit DataError(const std::string &what)
      : Error(ErrorClass::kData, what) { }
};

class NumericError: public Error {
public:
  explicit NumericError(const std::string &what)
      : Error(ErrorClass::kNumeric, what) { }
};

} // namespace molguide

#endif // MOLGUIDE_COMMON_ERROR_HPP_
