/*
 * Copyright 2026 The relcalc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RELCALC_ERROR_HPP
#define RELCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace relcalc {

/// Classification of every failure the library reports. The C API and the
/// CLI exit codes are derived from this.
enum class ErrorCode {
  invalid_argument,  // unknown name, malformed request
  parse,             // relation text could not be read
  domain,            // mathematically undefined request (n = 0, n < k, ...)
  shape,             // operands of incompatible dimensions
  cap,               // enumeration size cap refused
  budget,            // verification work budget exhausted
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relcalc

#endif  // RELCALC_ERROR_HPP
