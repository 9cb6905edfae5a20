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

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "cfgkb/lang.hpp"
#include "lexer.hpp"

namespace cfgkb {
namespace {

using lang::Tok;
using lang::Token;

// Structure block contents before the vocabulary is consulted.
struct RawElem {
  bool integer = false;
  std::int64_t value = 0;
  std::string name;
  SourceLoc loc;

  Element ToElement() const {
    return integer ? Element::Integer(value) : Element::Constant(name);
  }
};

struct RawEntry {
  std::vector<RawElem> tuple;
  std::optional<RawElem> target;  // after '->'
  SourceLoc loc;
};

struct RawItem {
  std::string name;
  SourceLoc loc;
  bool braced = false;
  RawElem bare;  // `Sym = value`
  std::vector<RawEntry> entries;
};

[[noreturn]] void Fail(SourceLoc loc, const std::string& msg) {
  throw Error(ErrorKind::kSyntax, {{loc, msg}});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lang::Tokenize(text)) {}

  Problem ParseProblem() {
    auto voc = std::make_shared<Vocabulary>();
    Theory theory;
    std::optional<std::vector<RawItem>> items;
    SourceLoc structure_loc;
    bool seen_voc = false;
    bool seen_theory = false;
    while (Peek().kind != Tok::kEnd) {
      Token kw = Expect(Tok::kIdent, "block keyword");
      if (kw.text == "vocabulary") {
        if (seen_voc || seen_theory || items) Fail(kw.loc, "vocabulary block must come first");
        seen_voc = true;
        SkipBlockName();
        ParseVocabulary(*voc);
      } else if (kw.text == "theory") {
        if (seen_theory) Fail(kw.loc, "duplicate theory block");
        seen_theory = true;
        SkipBlockName();
        theory = ParseTheory();
      } else if (kw.text == "structure") {
        if (items) Fail(kw.loc, "duplicate structure block");
        structure_loc = kw.loc;
        SkipBlockName();
        Expect(Tok::kLBrace, "'{'");
        items = ParseItems();
        Expect(Tok::kRBrace, "'}'");
      } else {
        Fail(kw.loc, "expected 'vocabulary', 'theory' or 'structure', found '" + kw.text + "'");
      }
    }
    std::shared_ptr<const Vocabulary> cvoc = voc;
    PartialStructure s = BuildStructure(cvoc, items ? *items : std::vector<RawItem>{},
                                        structure_loc);
    return Problem{cvoc, std::move(theory), std::move(s)};
  }

  PartialStructure ParseStructureOnly(std::shared_ptr<const Vocabulary> voc) {
    SourceLoc loc = Peek().loc;
    bool keyword = Peek().kind == Tok::kIdent && Peek().text == "structure";
    if (keyword) {
      Advance();
      SkipBlockName();
    }
    bool braced = keyword || Peek().kind == Tok::kLBrace;
    if (braced) Expect(Tok::kLBrace, "'{'");
    std::vector<RawItem> items = ParseItems();
    if (braced) Expect(Tok::kRBrace, "'}'");
    Expect(Tok::kEnd, "end of input");
    return BuildStructure(std::move(voc), items, loc);
  }

  FormulaPtr ParseStandaloneFormula() {
    FormulaPtr f = ParseEquiv();
    Accept(Tok::kDot);
    Expect(Tok::kEnd, "end of input");
    return f;
  }

  TermPtr ParseStandaloneTerm() {
    TermPtr t = ParseAdditive();
    Expect(Tok::kEnd, "end of input");
    return t;
  }

  SetExpression ParseSet() {
    Expect(Tok::kLBrace, "'{'");
    SetExpression e;
    e.vars = ParseBinders(Tok::kBar);
    Expect(Tok::kBar, "'|'");
    e.cond = ParseEquiv();
    Expect(Tok::kRBrace, "'}'");
    Expect(Tok::kEnd, "end of input");
    return e;
  }

  // IDENT ['(' elem, ... ')']
  std::pair<std::string, std::vector<RawElem>> ParsePath() {
    Token name = Expect(Tok::kIdent, "symbol name");
    std::vector<RawElem> args;
    if (Accept(Tok::kLParen)) {
      if (!Accept(Tok::kRParen)) {
        do {
          args.push_back(ParseElem());
        } while (Accept(Tok::kComma));
        Expect(Tok::kRParen, "')'");
      }
    }
    Expect(Tok::kEnd, "end of input");
    return {name.text, args};
  }

  RawElem ParseSingleElem() {
    RawElem e = ParseElem();
    Expect(Tok::kEnd, "end of input");
    return e;
  }

 private:
  const Token& Peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& Advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    Advance();
    return true;
  }
  Token Expect(Tok kind, const std::string& what) {
    if (Peek().kind != kind) {
      std::string found = Peek().kind == Tok::kEnd ? "end of input" : "'" + Peek().text + "'";
      Fail(Peek().loc, "expected " + what + ", found " + found);
    }
    return Advance();
  }
  bool PeekIdent(std::string_view text, std::size_t k = 0) const {
    return Peek(k).kind == Tok::kIdent && Peek(k).text == text;
  }

  void SkipBlockName() {
    if (Peek().kind == Tok::kIdent && Peek(1).kind == Tok::kLBrace) Advance();
  }

  std::int64_t ParseSignedInt() {
    bool neg = Accept(Tok::kMinus);
    Token t = Expect(Tok::kInt, "integer");
    return neg ? -t.value : t.value;
  }

  // ---- vocabulary -------------------------------------------------------

  TypeId ResolveType(const Vocabulary& voc, const Token& t) {
    auto id = voc.FindType(t.text);
    if (!id) Fail(t.loc, "unknown type '" + t.text + "'");
    return *id;
  }

  void ParseVocabulary(Vocabulary& voc) {
    Expect(Tok::kLBrace, "'{'");
    while (!Accept(Tok::kRBrace)) {
      if (PeekIdent("type")) {
        Advance();
        Token name = Expect(Tok::kIdent, "type name");
        if (Accept(Tok::kLBracket)) {
          std::int64_t lo = ParseSignedInt();
          Expect(Tok::kDotDot, "'..'");
          std::int64_t hi = ParseSignedInt();
          Expect(Tok::kRBracket, "']'");
          voc.AddIntType(name.text, IntRange{lo, hi}, name.loc);
        } else if (name.text == "int") {
          Fail(name.loc, "the built-in int type takes a range: int[lo..hi]");
        } else {
          voc.AddType(name.text, name.loc);
        }
      } else {
        Token name = Expect(Tok::kIdent, "symbol declaration");
        std::vector<TypeId> args;
        if (Accept(Tok::kLParen)) {
          if (!Accept(Tok::kRParen)) {
            do {
              args.push_back(ResolveType(voc, Expect(Tok::kIdent, "type name")));
            } while (Accept(Tok::kComma));
            Expect(Tok::kRParen, "')'");
          }
        }
        if (Accept(Tok::kColon)) {
          TypeId result = ResolveType(voc, Expect(Tok::kIdent, "result type"));
          voc.AddFunction(name.text, std::move(args), result, name.loc);
        } else {
          voc.AddPredicate(name.text, std::move(args), name.loc);
        }
      }
      if (!Accept(Tok::kDot) && !Accept(Tok::kSemi) && Peek().kind != Tok::kRBrace) {
        Fail(Peek().loc, "expected '.' or ';' after declaration");
      }
    }
  }

  // ---- theory -----------------------------------------------------------

  Theory ParseTheory() {
    Expect(Tok::kLBrace, "'{'");
    Theory theory;
    std::set<std::string> labels;
    while (!Accept(Tok::kRBrace)) {
      Sentence s;
      s.loc = Peek().loc;
      if (Peek().kind == Tok::kIdent && Peek(1).kind == Tok::kColon) {
        s.label = Advance().text;
        Advance();
      } else {
        s.label = "s" + std::to_string(theory.sentences.size() + 1);
      }
      if (!labels.insert(s.label).second) Fail(s.loc, "duplicate sentence label '" + s.label + "'");
      s.formula = ParseEquiv();
      Expect(Tok::kDot, "'.' at end of sentence");
      theory.sentences.push_back(std::move(s));
    }
    return theory;
  }

  FormulaPtr ParseEquiv() {
    FormulaPtr lhs = ParseImplies();
    while (Peek().kind == Tok::kEquiv) {
      SourceLoc loc = Advance().loc;
      lhs = ast::Equiv(lhs, ParseImplies(), loc);
    }
    return lhs;
  }

  FormulaPtr ParseImplies() {
    FormulaPtr lhs = ParseOr();
    if (Peek().kind == Tok::kImplies) {
      SourceLoc loc = Advance().loc;
      return ast::Implies(lhs, ParseImplies(), loc);
    }
    return lhs;
  }

  FormulaPtr ParseOr() {
    std::vector<FormulaPtr> parts{ParseAnd()};
    SourceLoc loc = parts[0]->loc;
    while (Accept(Tok::kBar)) parts.push_back(ParseAnd());
    return parts.size() == 1 ? parts[0] : ast::Or(std::move(parts), loc);
  }

  FormulaPtr ParseAnd() {
    std::vector<FormulaPtr> parts{ParseUnary()};
    SourceLoc loc = parts[0]->loc;
    while (Accept(Tok::kAmp)) parts.push_back(ParseUnary());
    return parts.size() == 1 ? parts[0] : ast::And(std::move(parts), loc);
  }

  FormulaPtr ParseUnary() {
    const Token& t = Peek();
    if (t.kind == Tok::kTilde) {
      SourceLoc loc = Advance().loc;
      return ast::Not(ParseUnary(), loc);
    }
    if (t.kind == Tok::kBang || t.kind == Tok::kQuestion) {
      bool forall = t.kind == Tok::kBang;
      SourceLoc loc = Advance().loc;
      std::vector<VarDecl> vars = ParseBinders(Tok::kColon);
      if (vars.empty()) Fail(loc, "quantifier without variables");
      Expect(Tok::kColon, "':' after quantified variables");
      FormulaPtr body = ParseEquiv();
      return forall ? ast::Forall(std::move(vars), body, loc)
                    : ast::Exists(std::move(vars), body, loc);
    }
    return ParsePrimary();
  }

  std::vector<VarDecl> ParseBinders(Tok stop) {
    std::vector<VarDecl> vars;
    while (Peek().kind == Tok::kIdent) {
      VarDecl v;
      Token name = Advance();
      v.name = name.text;
      v.loc = name.loc;
      if (Accept(Tok::kLBracket)) {
        v.type_name = Expect(Tok::kIdent, "type name").text;
        Expect(Tok::kRBracket, "']'");
      }
      vars.push_back(std::move(v));
      Accept(Tok::kComma);
      if (Peek().kind == stop) break;
    }
    return vars;
  }

  FormulaPtr ParsePrimary() {
    const Token& t = Peek();
    if (PeekIdent("true") && Peek(1).kind != Tok::kLParen) {
      return ast::True(Advance().loc);
    }
    if (PeekIdent("false") && Peek(1).kind != Tok::kLParen) {
      return ast::False(Advance().loc);
    }
    if (t.kind == Tok::kLParen) {
      std::size_t save = pos_;
      try {
        return ParseComparisonOrAtom();
      } catch (const Error&) {
        pos_ = save;
      }
      Advance();
      FormulaPtr f = ParseEquiv();
      Expect(Tok::kRParen, "')'");
      return f;
    }
    return ParseComparisonOrAtom();
  }

  static std::optional<CompareOp> ComparisonOf(Tok kind) {
    switch (kind) {
      case Tok::kEq: return CompareOp::kEq;
      case Tok::kNe: return CompareOp::kNe;
      case Tok::kLt: return CompareOp::kLt;
      case Tok::kLe: return CompareOp::kLe;
      case Tok::kGt: return CompareOp::kGt;
      case Tok::kGe: return CompareOp::kGe;
      default: return std::nullopt;
    }
  }

  FormulaPtr ParseComparisonOrAtom() {
    SourceLoc loc = Peek().loc;
    TermPtr lhs = ParseAdditive();
    if (auto op = ComparisonOf(Peek().kind)) {
      Advance();
      TermPtr rhs = ParseAdditive();
      return ast::Compare(*op, lhs, rhs, loc);
    }
    if (lhs->kind == TermKind::kName) return ast::Atom(lhs->name, {}, lhs->loc);
    if (lhs->kind == TermKind::kApply) return ast::Atom(lhs->name, lhs->args, lhs->loc);
    Fail(loc, "expected a formula");
  }

  TermPtr ParseAdditive() {
    TermPtr lhs = ParseMultiplicative();
    while (Peek().kind == Tok::kPlus || Peek().kind == Tok::kMinus) {
      Token op = Advance();
      TermPtr rhs = ParseMultiplicative();
      lhs = ast::Arith(op.kind == Tok::kPlus ? ArithOp::kAdd : ArithOp::kSub, lhs, rhs, op.loc);
    }
    return lhs;
  }

  TermPtr ParseMultiplicative() {
    TermPtr lhs = ParseUnaryTerm();
    while (Peek().kind == Tok::kStar) {
      SourceLoc loc = Advance().loc;
      lhs = ast::Arith(ArithOp::kMul, lhs, ParseUnaryTerm(), loc);
    }
    return lhs;
  }

  TermPtr ParseUnaryTerm() {
    if (Peek().kind == Tok::kMinus) {
      SourceLoc loc = Advance().loc;
      if (Peek().kind == Tok::kInt) {
        return ast::Constant(Element::Integer(-Advance().value), kIntType, loc);
      }
      return ast::Arith(ArithOp::kSub, ast::Constant(Element::Integer(0), kIntType, loc),
                        ParseUnaryTerm(), loc);
    }
    return ParsePrimaryTerm();
  }

  static std::optional<AggOp> AggregateOf(const std::string& name) {
    if (name == "sum") return AggOp::kSum;
    if (name == "card") return AggOp::kCard;
    if (name == "min") return AggOp::kMin;
    if (name == "max") return AggOp::kMax;
    if (name == "prod") return AggOp::kProd;
    return std::nullopt;
  }

  TermPtr ParsePrimaryTerm() {
    const Token& t = Peek();
    if (t.kind == Tok::kInt) {
      Token lit = Advance();
      return ast::Constant(Element::Integer(lit.value), kIntType, lit.loc);
    }
    if (t.kind == Tok::kLParen) {
      Advance();
      TermPtr inner = ParseAdditive();
      Expect(Tok::kRParen, "')'");
      return inner;
    }
    if (t.kind == Tok::kHash && Peek(1).kind == Tok::kLBrace) {
      SourceLoc loc = Advance().loc;
      return ParseAggregateBody(AggOp::kCard, loc);
    }
    Token name = Expect(Tok::kIdent, "term");
    if (auto agg = AggregateOf(name.text); agg && Peek().kind == Tok::kLBrace) {
      return ParseAggregateBody(*agg, name.loc);
    }
    if (Accept(Tok::kLParen)) {
      std::vector<TermPtr> args;
      if (!Accept(Tok::kRParen)) {
        do {
          args.push_back(ParseAdditive());
        } while (Accept(Tok::kComma));
        Expect(Tok::kRParen, "')'");
      }
      return ast::Apply(name.text, std::move(args), name.loc);
    }
    return ast::Name(name.text, name.loc);
  }

  TermPtr ParseAggregateBody(AggOp op, SourceLoc loc) {
    Expect(Tok::kLBrace, "'{'");
    std::vector<VarDecl> binders;
    TermPtr weight;
    if (op == AggOp::kCard) {
      bool paren = Accept(Tok::kLParen);
      binders = ParseBinders(paren ? Tok::kRParen : Tok::kBar);
      if (paren) Expect(Tok::kRParen, "')'");
    } else {
      Expect(Tok::kLParen, "'(' opening the aggregate tuple");
      while (true) {
        if (Peek().kind == Tok::kIdent &&
            (Peek(1).kind == Tok::kLBracket || Peek(1).kind == Tok::kComma)) {
          VarDecl v;
          Token name = Advance();
          v.name = name.text;
          v.loc = name.loc;
          if (Accept(Tok::kLBracket)) {
            v.type_name = Expect(Tok::kIdent, "type name").text;
            Expect(Tok::kRBracket, "']'");
          }
          binders.push_back(std::move(v));
          Expect(Tok::kComma, "',' before the aggregate weight");
          continue;
        }
        weight = ParseAdditive();
        Expect(Tok::kRParen, "')'");
        break;
      }
    }
    if (binders.empty()) Fail(loc, "aggregate without variables");
    Expect(Tok::kBar, "'|'");
    FormulaPtr cond = ParseEquiv();
    Expect(Tok::kRBrace, "'}'");
    return ast::Aggregate(op, std::move(binders), weight, cond, loc);
  }

  // ---- structure --------------------------------------------------------

  RawElem ParseElem() {
    RawElem e;
    e.loc = Peek().loc;
    if (Peek().kind == Tok::kInt || Peek().kind == Tok::kMinus) {
      e.integer = true;
      e.value = ParseSignedInt();
      return e;
    }
    e.name = Expect(Tok::kIdent, "domain element").text;
    return e;
  }

  std::vector<RawElem> ParseTuple() {
    std::vector<RawElem> out;
    if (Accept(Tok::kLParen)) {
      if (!Accept(Tok::kRParen)) {
        do {
          out.push_back(ParseElem());
        } while (Accept(Tok::kComma));
        Expect(Tok::kRParen, "')'");
      }
      return out;
    }
    out.push_back(ParseElem());
    return out;
  }

  std::vector<RawItem> ParseItems() {
    std::vector<RawItem> items;
    while (Peek().kind == Tok::kIdent) {
      RawItem item;
      Token name = Advance();
      item.name = name.text;
      item.loc = name.loc;
      Expect(Tok::kEq, "'='");
      if (Accept(Tok::kLBrace)) {
        item.braced = true;
        while (Peek().kind != Tok::kRBrace) {
          RawEntry entry;
          entry.loc = Peek().loc;
          entry.tuple = ParseTuple();
          if (Accept(Tok::kDotDot)) {
            // Integer range shorthand inside a domain: {lo..hi}
            RawElem hi = ParseElem();
            if (entry.tuple.size() != 1 || !entry.tuple[0].integer || !hi.integer) {
              Fail(entry.loc, "range bounds must be integers");
            }
            for (std::int64_t v = entry.tuple[0].value; v <= hi.value; ++v) {
              RawEntry e;
              e.loc = entry.loc;
              e.tuple.push_back(RawElem{true, v, {}, entry.loc});
              item.entries.push_back(std::move(e));
            }
          } else {
            if (Accept(Tok::kArrow)) entry.target = ParseElem();
            item.entries.push_back(std::move(entry));
          }
          if (!Accept(Tok::kSemi) && !Accept(Tok::kComma)) break;
        }
        Expect(Tok::kRBrace, "'}'");
      } else {
        item.bare = ParseElem();
      }
      Accept(Tok::kSemi);
      items.push_back(std::move(item));
    }
    return items;
  }

  static bool IsMarker(const std::optional<RawElem>& e) {
    return e && !e->integer && (e->name == "T" || e->name == "F");
  }

  PartialStructure BuildStructure(std::shared_ptr<const Vocabulary> voc,
                                  const std::vector<RawItem>& items, SourceLoc loc) {
    std::vector<std::vector<Element>> per_type(voc->num_types());
    std::set<std::string> seen;
    for (const RawItem& item : items) {
      if (!seen.insert(item.name).second) Fail(item.loc, "'" + item.name + "' interpreted twice");
      auto type = voc->FindType(item.name);
      if (!type) continue;
      if (!item.braced) Fail(item.loc, "type domain must be a braced list");
      const TypeDecl& decl = voc->type(*type);
      if (decl.integer && decl.range) {
        Fail(item.loc, "domain of '" + item.name + "' is fixed by its declared range");
      }
      for (const RawEntry& e : item.entries) {
        if (e.tuple.size() != 1 || e.target) Fail(e.loc, "type domains list single elements");
        if (decl.integer != e.tuple[0].integer) {
          Fail(e.loc, "element '" + e.tuple[0].ToElement().ToString() + "' does not fit type '" +
                          item.name + "'");
        }
        per_type[*type].push_back(e.tuple[0].ToElement());
      }
    }
    std::shared_ptr<const Domains> domains;
    try {
      domains = std::make_shared<const Domains>(voc, std::move(per_type));
    } catch (const Error& err) {
      if (!err.diagnostics().empty() && err.diagnostics()[0].loc.line > 0) throw;
      Fail(loc, err.what());
    }
    PartialStructure s(domains);
    for (const RawItem& item : items) {
      if (voc->FindType(item.name)) continue;
      auto sym = voc->FindSymbol(item.name);
      if (!sym) Fail(item.loc, "unknown symbol '" + item.name + "'");
      FillTable(s, *sym, item);
    }
    try {
      s.Normalize();
    } catch (const Error& err) {
      Fail(loc, err.what());
    }
    return s;
  }

  std::size_t TupleIndex(const PartialStructure& s, SymbolId sym,
                         const std::vector<RawElem>& raw, SourceLoc loc) {
    Tuple args;
    for (const RawElem& e : raw) args.push_back(e.ToElement());
    auto idx = s.domains().TupleIndex(sym, args);
    if (!idx) {
      Fail(loc, "tuple " + TupleToString(args) + " is outside the domain of '" +
                    s.vocabulary().symbol(sym).name + "'");
    }
    return *idx;
  }

  std::size_t ValueIndex(const PartialStructure& s, SymbolId sym, const RawElem& e) {
    auto idx = s.domains().ResultIndex(sym, e.ToElement());
    if (!idx) {
      Fail(e.loc, "value '" + e.ToElement().ToString() + "' is outside the range of '" +
                      s.vocabulary().symbol(sym).name + "'");
    }
    return *idx;
  }

  void FillTable(PartialStructure& s, SymbolId sym, const RawItem& item) {
    const SymbolDecl& decl = s.vocabulary().symbol(sym);
    const std::size_t arity = decl.arity();
    if (!item.braced) {
      if (arity != 0) Fail(item.loc, "'" + decl.name + "' needs a braced table");
      if (!decl.is_function()) {
        if (item.bare.integer || (item.bare.name != "true" && item.bare.name != "false")) {
          Fail(item.loc, "expected true or false for '" + decl.name + "'");
        }
        s.SetValueTruth(sym, 0, 1, ToTruth(item.bare.name == "true"));
        return;
      }
      s.SetValueTruth(sym, 0, ValueIndex(s, sym, item.bare), Truth::kTrue);
      return;
    }
    std::optional<bool> three_valued;
    auto mode = [&](bool tv, SourceLoc loc) {
      if (three_valued && *three_valued != tv) Fail(loc, "mixed ->T/->F and plain entries");
      three_valued = tv;
    };
    if (!decl.is_function()) {
      std::vector<bool> listed(s.domains().NumTuples(sym), false);
      for (const RawEntry& e : item.entries) {
        if (e.tuple.size() != arity) Fail(e.loc, "wrong arity for '" + decl.name + "'");
        if (e.target && !IsMarker(e.target)) Fail(e.loc, "expected ->T or ->F");
        mode(e.target.has_value(), e.loc);
        std::size_t tuple = TupleIndex(s, sym, e.tuple, e.loc);
        Truth t = !e.target || e.target->name == "T" ? Truth::kTrue : Truth::kFalse;
        s.SetValueTruth(sym, tuple, 1, t);
        listed[tuple] = true;
      }
      if (!three_valued.value_or(false)) {
        for (std::size_t i = 0; i < listed.size(); ++i) {
          if (!listed[i]) s.SetValueTruth(sym, i, 1, Truth::kFalse);
        }
      }
      return;
    }
    for (const RawEntry& e : item.entries) {
      if (e.tuple.size() == arity + 1 && IsMarker(e.target)) {
        mode(true, e.loc);
        std::vector<RawElem> args(e.tuple.begin(), e.tuple.end() - 1);
        std::size_t tuple = TupleIndex(s, sym, args, e.loc);
        Truth t = e.target->name == "T" ? Truth::kTrue : Truth::kFalse;
        s.SetValueTruth(sym, tuple, ValueIndex(s, sym, e.tuple.back()), t);
      } else if (e.tuple.size() == arity && e.target) {
        mode(false, e.loc);
        std::size_t tuple = TupleIndex(s, sym, e.tuple, e.loc);
        std::size_t value = ValueIndex(s, sym, *e.target);
        for (std::size_t v = 0; v < s.domains().ResultDomain(sym).size(); ++v) {
          if (s.ValueTruth(sym, tuple, v) == Truth::kTrue && v != value) {
            Fail(e.loc, "two values for '" + decl.name + TupleToString(s.domains().TupleAt(sym, tuple)) + "'");
          }
        }
        s.SetValueTruth(sym, tuple, value, Truth::kTrue);
      } else {
        Fail(e.loc, "malformed entry for function '" + decl.name + "'");
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Problem Parse(std::string_view text) { return Parser(text).ParseProblem(); }

Problem Load(std::string_view text) { return Typecheck(Parse(text)); }

PartialStructure ParseStructure(std::string_view text, std::shared_ptr<const Vocabulary> voc) {
  return Parser(text).ParseStructureOnly(std::move(voc));
}

FormulaPtr ParseFormula(std::string_view text) { return Parser(text).ParseStandaloneFormula(); }

TermPtr ParseTerm(std::string_view text) { return Parser(text).ParseStandaloneTerm(); }

SetExpression ParseSetExpression(std::string_view text, const Domains& domains) {
  SetExpression raw = Parser(text).ParseSet();
  // Typecheck as an existential so the binders get types and slots.
  int slots = 0;
  FormulaPtr typed = TypecheckFormula(domains, ast::Exists(raw.vars, raw.cond), &slots);
  SetExpression out;
  out.vars = typed->vars;
  out.cond = typed->children[0];
  out.num_slots = slots;
  return out;
}

DomainTerm ParseTermPath(std::string_view text, const Domains& domains) {
  auto [name, raw] = Parser(text).ParsePath();
  const Vocabulary& voc = domains.vocabulary();
  auto sym = voc.FindSymbol(name);
  if (!sym) throw Error(ErrorKind::kDomain, "unknown symbol '" + name + "'");
  const SymbolDecl& decl = voc.symbol(*sym);
  if (raw.size() != decl.arity()) {
    throw Error(ErrorKind::kDomain, "wrong number of arguments for '" + name + "'");
  }
  DomainTerm term{*sym, {}};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Element e = raw[i].ToElement();
    if (!domains.Contains(decl.args[i], e)) {
      throw Error(ErrorKind::kDomain, "'" + e.ToString() + "' is not in type '" +
                                          voc.type(decl.args[i]).name + "'");
    }
    term.args.push_back(std::move(e));
  }
  return term;
}

Element ParseValue(std::string_view text, const DomainTerm& term, const Domains& domains) {
  const SymbolDecl& decl = domains.vocabulary().symbol(term.symbol);
  if (!decl.is_function()) {
    if (text == "true" || text == "T") return Element::Boolean(true);
    if (text == "false" || text == "F") return Element::Boolean(false);
    throw Error(ErrorKind::kDomain, "expected true or false, found '" + std::string(text) + "'");
  }
  RawElem raw = Parser(text).ParseSingleElem();
  Element e = raw.ToElement();
  if (!domains.Contains(decl.result, e)) {
    throw Error(ErrorKind::kDomain, "'" + e.ToString() + "' is not a value of '" + decl.name + "'");
  }
  return e;
}

Assignment ParseAssignment(std::string_view text, const Domains& domains) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '=' && depth == 0) {
      DomainTerm term = ParseTermPath(text.substr(0, i), domains);
      Element value = ParseValue(text.substr(i + 1), term, domains);
      return Assignment{std::move(term), std::move(value)};
    }
  }
  throw Error(ErrorKind::kSyntax, "expected TERM=VALUE, found '" + std::string(text) + "'");
}

}  // namespace cfgkb
