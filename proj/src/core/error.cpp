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

#include "cfgkb/error.hpp"

#include <sstream>

namespace cfgkb {
namespace {

std::string JoinDiagnostics(const std::vector<Diagnostic>& diags) {
  std::ostringstream out;
  for (std::size_t i = 0; i < diags.size(); ++i) {
    if (i > 0) out << "\n";
    out << diags[i].loc.line << ":" << diags[i].loc.column << ": " << diags[i].message;
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::vector<Diagnostic> diagnostics)
    : std::runtime_error(JoinDiagnostics(diagnostics)),
      kind_(kind),
      diagnostics_(std::move(diagnostics)) {}

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "syntax";
    case ErrorKind::kType: return "type";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kConflict: return "conflict";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kInconsistent: return "inconsistent";
    case ErrorKind::kConsistent: return "consistent";
    case ErrorKind::kLimit: return "limit";
    case ErrorKind::kTimeout: return "timeout";
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace cfgkb
