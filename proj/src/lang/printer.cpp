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

#include <sstream>

#include "cfgkb/lang.hpp"

namespace cfgkb {

std::string SerializeStructure(const PartialStructure& s) {
  const Domains& d = s.domains();
  const Vocabulary& voc = s.vocabulary();
  std::ostringstream out;
  out << "structure {\n";
  for (TypeId t = 0; t < voc.num_types(); ++t) {
    const TypeDecl& decl = voc.type(t);
    if (decl.range || d.of(t).empty()) continue;
    out << "  " << decl.name << " = {";
    for (std::size_t i = 0; i < d.of(t).size(); ++i) {
      out << (i ? "; " : "") << d.of(t)[i].ToString();
    }
    out << "}\n";
  }
  for (SymbolId sym = 0; sym < voc.num_symbols(); ++sym) {
    const SymbolDecl& decl = voc.symbol(sym);
    std::vector<std::string> entries;
    auto render = [&](Tuple tuple, Truth truth) {
      std::string text;
      if (tuple.size() == 1) {
        text = tuple[0].ToString();
      } else {
        text = TupleToString(tuple);
      }
      entries.push_back(text + (truth == Truth::kTrue ? "->T" : "->F"));
    };
    const std::vector<Element>& results = d.ResultDomain(sym);
    for (std::size_t tuple = 0; tuple < d.NumTuples(sym); ++tuple) {
      Tuple args = d.TupleAt(sym, tuple);
      if (!decl.is_function()) {
        Truth t = s.ValueTruth(sym, tuple, 1);
        if (t != Truth::kUnknown) render(args, t);
        continue;
      }
      std::optional<std::size_t> true_value;
      for (std::size_t v = 0; v < results.size(); ++v) {
        if (s.ValueTruth(sym, tuple, v) == Truth::kTrue) true_value = v;
      }
      for (std::size_t v = 0; v < results.size(); ++v) {
        Truth t = s.ValueTruth(sym, tuple, v);
        if (t == Truth::kUnknown || (true_value && *true_value != v)) continue;
        Tuple with_value = args;
        with_value.push_back(results[v]);
        render(with_value, t);
      }
    }
    if (entries.empty()) continue;
    out << "  " << decl.name << " = {";
    for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "; " : "") << entries[i];
    out << "}\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cfgkb
