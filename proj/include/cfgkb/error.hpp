// Copyright 2026 The cfgkb Authors
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

#ifndef CFGKB_ERROR_HPP_
#define CFGKB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace cfgkb {

enum class ErrorKind {
  kSyntax,
  kType,
  kDomain,       // incomparable structures, unknown terms or elements
  kConflict,     // conflicting assignment
  kRange,        // integer value outside the declared range
  kUnsupported,  // construct the grounder cannot encode
  kInconsistent, // no model extends the structure
  kConsistent,   // explanation requested for a satisfiable state
  kLimit,        // exponential search refused by a size limit
  kTimeout,
  kUsage,
  kInternal,
};

const char* ErrorKindName(ErrorKind kind);

struct SourceLoc {
  int line = 0;
  int column = 0;
};

struct Diagnostic {
  SourceLoc loc;
  std::string message;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Error(ErrorKind kind, std::vector<Diagnostic> diagnostics);

  ErrorKind kind() const { return kind_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  ErrorKind kind_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace cfgkb

#endif  // CFGKB_ERROR_HPP_
