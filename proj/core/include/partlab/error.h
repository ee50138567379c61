// Copyright 2026 The Partlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARTLAB_ERROR_H_
#define PARTLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace partlab {

// Categories of failure raised by the library. The CLI maps all of them to
// a usage-class exit status; tests match on the kind.
enum class ErrorKind {
  kParse,         // malformed set-spec text or set file
  kInvalidSpec,   // structurally invalid part set (empty, unsorted, ...)
  kDomain,        // argument outside the mathematical domain
  kGuard,         // computation guard exceeded (brute-force size, ...)
  kOutOfRange,    // index beyond a table limit
  kUnsupported,   // operation not defined for this spec variant
  kPrecondition,  // caller violated a documented precondition
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace partlab

#endif  // PARTLAB_ERROR_H_
