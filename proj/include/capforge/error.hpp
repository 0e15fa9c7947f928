// capforge/error.hpp

// Copyright 2026 Capforge Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPFORGE_ERROR_HPP_
#define CAPFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace capforge {

// Exit-code buckets used by the CLI: usage errors exit 1, data errors
// (bad files, mismatched ids, malformed input) exit 2, numeric failures
// exit 3.
enum class ErrorKind { kUsage = 1, kData = 2, kNumeric = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        kind_(kind),
        code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  // Stable machine-checkable identifier, e.g. "MalformedWav".
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void ThrowData(const std::string& code,
                                   const std::string& message) {
  throw Error(ErrorKind::kData, code, message);
}

[[noreturn]] inline void ThrowUsage(const std::string& code,
                                    const std::string& message) {
  throw Error(ErrorKind::kUsage, code, message);
}

[[noreturn]] inline void ThrowNumeric(const std::string& code,
                                      const std::string& message) {
  throw Error(ErrorKind::kNumeric, code, message);
}

}  // namespace capforge

#endif  // CAPFORGE_ERROR_HPP_
