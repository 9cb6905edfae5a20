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

#ifndef CFGKB_TESTS_SUPPORT_CLASSICAL_HPP_
#define CFGKB_TESTS_SUPPORT_CLASSICAL_HPP_

#include "cfgkb/ast.hpp"
#include "cfgkb/structure.hpp"

namespace cfgkb::testing {

// Two-valued satisfaction on a total structure, written directly from the
// definitions. Throws Error on range or domain violations.
bool ClassicalHolds(const PartialStructure& total, const Formula& f);

}  // namespace cfgkb::testing

#endif  // CFGKB_TESTS_SUPPORT_CLASSICAL_HPP_
