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

#include "partlab/error.h"

namespace partlab {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kInvalidSpec:
      return "invalid set";
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kGuard:
      return "guard exceeded";
    case ErrorKind::kOutOfRange:
      return "out of range";
    case ErrorKind::kUnsupported:
      return "unsupported";
    case ErrorKind::kPrecondition:
      return "precondition violated";
  }
  return "error";
}

}  // namespace partlab
