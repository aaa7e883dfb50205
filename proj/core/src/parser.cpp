/*
 * Copyright (c) 2026, the archsubst project authors
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

#include "archsubst/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace archsubst {

SourceText SourceText::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return SourceText{path, buf.str()};
}

ParseError::ParseError(std::string path, std::size_t line, std::size_t col,
                       std::string message)
    : std::runtime_error(path + ":" + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + message),
      path_(std::move(path)),
      line_(line),
      col_(col),
      message_(std::move(message)) {}

namespace {

struct Token {
  enum class Kind { Ident, Int, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::int64_t number = 0;
  std::size_t line = 0;
  std::size_t col = 0;
};

class Lexer {
 public:
  explicit Lexer(const SourceText& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(src_.path, at.line, at.col, msg);
  }

 private:
  void advance() {
    skip_blank();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.text.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text = "end of input";
      return;
    }
    char c = src_.text[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < src_.text.size() &&
             (std::isalnum(static_cast<unsigned char>(src_.text[pos_])) ||
              src_.text[pos_] == '_'))
        word += take();
      tok_.kind = Token::Kind::Ident;
      tok_.text = std::move(word);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.text.size() &&
             std::isdigit(static_cast<unsigned char>(src_.text[pos_])))
        digits += take();
      tok_.kind = Token::Kind::Int;
      tok_.text = digits;
      tok_.number = std::stoll(digits);
      return;
    }
    // Two-character symbols first so "->" is not read as "-" ">".
    static const char* two[] = {"->", ":=", "==", "!=", "<=", ">=", ".."};
    for (const char* s : two) {
      if (src_.text.compare(pos_, 2, s) == 0) {
        tok_.kind = Token::Kind::Symbol;
        tok_.text = s;
        take();
        take();
        return;
      }
    }
    static const std::string singles = "{}();:.,[]<>=+-";
    if (singles.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Symbol;
      tok_.text = std::string(1, take());
      return;
    }
    throw ParseError(src_.path, line_, col_,
                     std::string("unexpected character '") + c + "'");
  }

  void skip_blank() {
    while (pos_ < src_.text.size()) {
      char c = src_.text[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '#') {
        skip_line();
      } else if (c == '/' && pos_ + 1 < src_.text.size() &&
                 src_.text[pos_ + 1] == '/') {
        skip_line();
      } else {
        return;
      }
    }
  }

  void skip_line() {
    while (pos_ < src_.text.size() && src_.text[pos_] != '\n') take();
  }

  char take() {
    char c = src_.text[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  const SourceText& src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token tok_;
};

// ---------------------------------------------------------------------------

class ModelParser {
 public:
  explicit ModelParser(const SourceText& src) : src_(src), lex_(src) {}

  ModelSpec parse() {
    RawModel raw = parse_raw();
    try {
      return ModelSpec::make(std::move(raw.initial), std::move(raw.ops));
    } catch (const WellFormednessError& e) {
      throw ParseError(src_.path, 1, 1,
                       std::string("model validation: ") + e.what());
    }
  }

  RawModel parse_raw() {
    while (lex_.peek().kind != Token::Kind::End) {
      Token head = expect_ident("'component', 'bind', 'delegate' or "
                                "'reconfiguration'");
      if (head.text == "component")
        components_.push_back(parse_component(head));
      else if (head.text == "bind")
        parse_top_binding(head);
      else if (head.text == "delegate")
        parse_top_delegation(head);
      else if (head.text == "reconfiguration")
        ops_.push_back(parse_reconfiguration(head));
      else
        lex_.fail(head, "unknown top-level keyword '" + head.text + "'");
    }

    ConfigurationDeclaration decl;
    decl.components = components_;
    for (const auto& b : pending_bindings_) {
      auto prov = resolve_iface(b.at, b.lhs_comp, b.lhs_iface, true);
      auto req = resolve_iface(b.at, b.rhs_comp, b.rhs_iface, false);
      decl.bindings.push_back({prov, req});
    }
    for (const auto& d : pending_delegations_) {
      auto inner = resolve_any_iface(d.at, d.lhs_comp, d.lhs_iface);
      auto outer = resolve_any_iface(d.at, d.rhs_comp, d.rhs_iface);
      decl.delegations.push_back({inner, outer});
    }

    try {
      Configuration initial = new_configuration(decl);
      return RawModel{std::move(initial), std::move(ops_)};
    } catch (const WellFormednessError& e) {
      throw ParseError(src_.path, 1, 1,
                       std::string("model validation: ") + e.what());
    }
  }

 private:
  struct PendingLink {
    Token at;
    std::string lhs_comp, lhs_iface, rhs_comp, rhs_iface;
  };

  Token expect_ident(const std::string& what) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::Ident)
      lex_.fail(t, "expected " + what + ", found '" + t.text + "'");
    return t;
  }

  Token expect_sym(const std::string& sym) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::Symbol || t.text != sym)
      lex_.fail(t, "expected '" + sym + "', found '" + t.text + "'");
    return t;
  }

  Token expect_keyword(const std::string& word) {
    Token t = lex_.next();
    if (t.kind != Token::Kind::Ident || t.text != word)
      lex_.fail(t, "expected '" + word + "', found '" + t.text + "'");
    return t;
  }

  bool peek_sym(const std::string& sym) const {
    return lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == sym;
  }

  bool peek_word(const std::string& word) const {
    return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == word;
  }

  std::int64_t parse_int() {
    bool neg = false;
    if (peek_sym("-")) {
      lex_.next();
      neg = true;
    }
    Token t = lex_.next();
    if (t.kind != Token::Kind::Int)
      lex_.fail(t, "expected an integer, found '" + t.text + "'");
    return neg ? -t.number : t.number;
  }

  ParamValue parse_value_literal() {
    if (lex_.peek().kind == Token::Kind::Int || peek_sym("-"))
      return ParamValue{parse_int()};
    Token t = expect_ident("a value literal");
    if (t.text == "true") return ParamValue{true};
    if (t.text == "false") return ParamValue{false};
    return ParamValue{t.text};
  }

  ComponentDecl parse_component(const Token& head) {
    Token name = expect_ident("a component name");
    ComponentDecl comp;
    comp.id = id(name.text);
    if (declared_components_.count(name.text))
      lex_.fail(name, "component '" + name.text + "' declared twice");
    expect_sym("{");
    while (!peek_sym("}")) {
      Token item = expect_ident("a component item");
      if (item.text == "provides" || item.text == "requires") {
        InterfaceDecl iface;
        iface.provided = item.text == "provides";
        Token iname = expect_ident("an interface name");
        iface.id = id(iname.text);
        expect_sym(":");
        Token itype = expect_ident("an interface type");
        iface.itype = id(itype.text);
        if (!iface.provided &&
            (peek_word("mandatory") || peek_word("optional")))
          iface.contingency = lex_.next().text == "optional"
                                  ? Contingency::Optional
                                  : Contingency::Mandatory;
        expect_sym(";");
        comp.interfaces.push_back(std::move(iface));
        iface_owner_[iname.text] = name.text;
      } else if (item.text == "param") {
        comp.params.push_back(parse_param(name.text));
      } else if (item.text == "child") {
        Token child = expect_ident("a component name");
        expect_sym(";");
        comp.children.push_back(id(child.text));
      } else if (item.text == "state") {
        Token st = expect_ident("'started' or 'stopped'");
        if (st.text == "started")
          comp.state = CompState::Started;
        else if (st.text == "stopped")
          comp.state = CompState::Stopped;
        else
          lex_.fail(st, "expected 'started' or 'stopped'");
        expect_sym(";");
      } else {
        lex_.fail(item, "unknown component item '" + item.text + "'");
      }
    }
    expect_sym("}");
    declared_components_.insert(name.text);
    (void)head;
    return comp;
  }

  ParamDecl parse_param(const std::string& owner) {
    ParamDecl p;
    Token pname = expect_ident("a parameter name");
    p.id = id(pname.text);
    expect_sym(":");
    Token ptype = expect_ident("a parameter type");
    p.ptype = id(ptype.text);
    if (peek_word("in")) {
      lex_.next();
      p.domain = parse_domain();
      auto [it, fresh] = domains_.emplace(ptype.text, p.domain);
      if (!fresh && !(it->second == p.domain))
        lex_.fail(ptype, "parameter type '" + ptype.text +
                             "' redeclared with a different domain");
    } else {
      auto it = domains_.find(ptype.text);
      if (it == domains_.end())
        lex_.fail(ptype, "parameter type '" + ptype.text +
                             "' has no declared domain yet");
      p.domain = it->second;
    }
    expect_sym("=");
    p.initial = parse_value_literal();
    expect_sym(";");
    param_names_.insert(pname.text);
    (void)owner;
    return p;
  }

  ParamDomain parse_domain() {
    if (peek_word("bool")) {
      lex_.next();
      return ParamDomain::boolean();
    }
    if (peek_sym("[")) {
      lex_.next();
      std::int64_t lo = parse_int();
      expect_sym("..");
      std::int64_t hi = parse_int();
      expect_sym("]");
      return ParamDomain::int_range(lo, hi);
    }
    expect_sym("{");
    std::vector<std::string> lits;
    lits.push_back(expect_ident("an enum literal").text);
    while (peek_sym(",")) {
      lex_.next();
      lits.push_back(expect_ident("an enum literal").text);
    }
    expect_sym("}");
    return ParamDomain::enumeration(std::move(lits));
  }

  void parse_top_binding(const Token& head) {
    PendingLink link;
    link.at = head;
    qualified_ref(link.lhs_comp, link.lhs_iface);
    expect_sym("->");
    qualified_ref(link.rhs_comp, link.rhs_iface);
    expect_sym(";");
    pending_bindings_.push_back(std::move(link));
  }

  void parse_top_delegation(const Token& head) {
    PendingLink link;
    link.at = head;
    qualified_ref(link.lhs_comp, link.lhs_iface);
    expect_sym("->");
    qualified_ref(link.rhs_comp, link.rhs_iface);
    expect_sym(";");
    pending_delegations_.push_back(std::move(link));
  }

  void qualified_ref(std::string& comp, std::string& iface) {
    comp = expect_ident("a component name").text;
    expect_sym(".");
    iface = expect_ident("an interface name").text;
  }

  Identifier resolve_iface(const Token& at, const std::string& comp,
                           const std::string& iface, bool want_provided) {
    Identifier resolved = resolve_any_iface(at, comp, iface);
    for (const auto& c : components_) {
      if (c.id.name != comp) continue;
      for (const auto& i : c.interfaces)
        if (i.id.name == iface && i.provided != want_provided)
          lex_.fail(at, "interface '" + comp + "." + iface + "' is " +
                            (i.provided ? "provided" : "required") +
                            " but used on the " +
                            (want_provided ? "provided" : "required") +
                            " side");
    }
    return resolved;
  }

  Identifier resolve_any_iface(const Token& at, const std::string& comp,
                               const std::string& iface) {
    auto it = iface_owner_.find(iface);
    if (it == iface_owner_.end())
      lex_.fail(at, "unknown interface '" + comp + "." + iface + "'");
    if (it->second != comp)
      lex_.fail(at, "interface '" + iface + "' belongs to '" + it->second +
                        "', not '" + comp + "'");
    return id(iface);
  }

  // -------------------------------------------------------------------------
  // Guards

  GuardPtr parse_guard() { return parse_or(); }

  GuardPtr parse_or() {
    std::vector<GuardPtr> parts{parse_and()};
    while (peek_word("or")) {
      lex_.next();
      parts.push_back(parse_and());
    }
    return parts.size() == 1 ? parts.front() : Guard::disj(std::move(parts));
  }

  GuardPtr parse_and() {
    std::vector<GuardPtr> parts{parse_unary()};
    while (peek_word("and")) {
      lex_.next();
      parts.push_back(parse_unary());
    }
    return parts.size() == 1 ? parts.front() : Guard::conj(std::move(parts));
  }

  GuardPtr parse_unary() {
    if (peek_word("not")) {
      lex_.next();
      return Guard::negate(parse_unary());
    }
    return parse_atom();
  }

  GuardPtr parse_atom() {
    if (peek_sym("(")) {
      lex_.next();
      GuardPtr g = parse_guard();
      expect_sym(")");
      return g;
    }
    Token t = expect_ident("a guard atom");
    if (t.text == "true") return Guard::constant(true);
    if (t.text == "false") return Guard::constant(false);
    if (t.text == "present" || t.text == "started" || t.text == "stopped") {
      expect_sym("(");
      Token comp = expect_ident("a component name");
      expect_sym(")");
      if (t.text == "present") return Guard::present(id(comp.text));
      if (t.text == "started") return Guard::started(id(comp.text));
      return Guard::stopped(id(comp.text));
    }
    if (t.text == "bound") {
      expect_sym("(");
      Token comp = expect_ident("a component name");
      expect_sym(".");
      Token iface = expect_ident("an interface name");
      expect_sym(")");
      return Guard::bound(id(comp.text), id(iface.text));
    }
    // A bare identifier starts a parameter comparison.
    Guard::CmpOp op = parse_cmp_op();
    ParamValue lit = parse_value_literal();
    return Guard::compare(id(t.text), op, std::move(lit));
  }

  Guard::CmpOp parse_cmp_op() {
    Token t = lex_.next();
    if (t.kind != Token::Kind::Symbol)
      lex_.fail(t, "expected a comparison operator, found '" + t.text + "'");
    if (t.text == "==") return Guard::CmpOp::Eq;
    if (t.text == "!=") return Guard::CmpOp::Ne;
    if (t.text == "<") return Guard::CmpOp::Lt;
    if (t.text == "<=") return Guard::CmpOp::Le;
    if (t.text == ">") return Guard::CmpOp::Gt;
    if (t.text == ">=") return Guard::CmpOp::Ge;
    lex_.fail(t, "expected a comparison operator, found '" + t.text + "'");
  }

  // -------------------------------------------------------------------------
  // Reconfigurations

  ReconfigurationDef parse_reconfiguration(const Token& head) {
    (void)head;
    ReconfigurationDef def;
    Token name = expect_ident("a reconfiguration name");
    def.name = id(name.text);
    expect_keyword("when");
    def.guard = parse_guard();
    expect_sym("{");
    while (!peek_sym("}")) def.body.push_back(parse_edit());
    expect_sym("}");
    return def;
  }

  PrimitiveEdit parse_edit() {
    Token verb = expect_ident("an edit");
    if (verb.text == "new") {
      expect_keyword("component");
      ComponentDecl decl = parse_inline_component();
      return EditInstantiate{std::move(decl)};
    }
    if (verb.text == "destroy") {
      Token c = expect_ident("a component name");
      expect_sym(";");
      return EditDestroy{id(c.text)};
    }
    if (verb.text == "attach" || verb.text == "detach") {
      Token child = expect_ident("a component name");
      expect_keyword(verb.text == "attach" ? "to" : "from");
      Token parent = expect_ident("a component name");
      expect_sym(";");
      if (verb.text == "attach")
        return EditAddChild{id(child.text), id(parent.text)};
      return EditRemoveChild{id(child.text), id(parent.text)};
    }
    if (verb.text == "bind") {
      std::string pc, pi, rc, ri;
      qualified_ref(pc, pi);
      expect_sym("->");
      qualified_ref(rc, ri);
      expect_sym(";");
      return EditBind{id(pc), id(pi), id(rc), id(ri)};
    }
    if (verb.text == "unbind") {
      std::string pc, pi;
      qualified_ref(pc, pi);
      expect_sym(";");
      return EditUnbind{id(pc), id(pi)};
    }
    if (verb.text == "delegate") {
      std::string ic, ii, oc, oi;
      qualified_ref(ic, ii);
      expect_sym("->");
      qualified_ref(oc, oi);
      expect_sym(";");
      return EditDelegate{id(ic), id(ii), id(oc), id(oi)};
    }
    if (verb.text == "undelegate") {
      std::string ic, ii;
      qualified_ref(ic, ii);
      expect_sym(";");
      return EditUndelegate{id(ic), id(ii)};
    }
    if (verb.text == "start" || verb.text == "stop") {
      Token c = expect_ident("a component name");
      expect_sym(";");
      if (verb.text == "start") return EditStart{id(c.text)};
      return EditStop{id(c.text)};
    }
    if (verb.text == "set") {
      Token p = expect_ident("a parameter name");
      expect_sym(":=");
      SetExpr expr = parse_set_expr();
      expect_sym(";");
      return EditSetValue{id(p.text), std::move(expr)};
    }
    lex_.fail(verb, "unknown edit '" + verb.text + "'");
  }

  // A component block inside an Instantiate edit uses the same syntax as a
  // top-level declaration but does not join the static interface table.
  ComponentDecl parse_inline_component() {
    Token name = expect_ident("a component name");
    ComponentDecl comp;
    comp.id = id(name.text);
    expect_sym("{");
    while (!peek_sym("}")) {
      Token item = expect_ident("a component item");
      if (item.text == "provides" || item.text == "requires") {
        InterfaceDecl iface;
        iface.provided = item.text == "provides";
        iface.id = id(expect_ident("an interface name").text);
        expect_sym(":");
        iface.itype = id(expect_ident("an interface type").text);
        if (!iface.provided &&
            (peek_word("mandatory") || peek_word("optional")))
          iface.contingency = lex_.next().text == "optional"
                                  ? Contingency::Optional
                                  : Contingency::Mandatory;
        expect_sym(";");
        comp.interfaces.push_back(std::move(iface));
      } else if (item.text == "param") {
        comp.params.push_back(parse_param(name.text));
      } else if (item.text == "child") {
        comp.children.push_back(id(expect_ident("a component name").text));
        expect_sym(";");
      } else if (item.text == "state") {
        Token st = expect_ident("'started' or 'stopped'");
        if (st.text == "started")
          comp.state = CompState::Started;
        else if (st.text == "stopped")
          comp.state = CompState::Stopped;
        else
          lex_.fail(st, "expected 'started' or 'stopped'");
        expect_sym(";");
      } else {
        lex_.fail(item, "unknown component item '" + item.text + "'");
      }
    }
    expect_sym("}");
    return comp;
  }

  SetExpr parse_set_expr() {
    SetExpr expr;
    if (lex_.peek().kind == Token::Kind::Int || peek_sym("-")) {
      expr.literal = ParamValue{parse_int()};
      return expr;
    }
    Token t = expect_ident("a value or parameter name");
    if (t.text == "true") {
      expr.literal = ParamValue{true};
      return expr;
    }
    if (t.text == "false") {
      expr.literal = ParamValue{false};
      return expr;
    }
    bool shifted = peek_sym("+") || peek_sym("-");
    if (shifted || param_names_.count(t.text)) {
      expr.base = id(t.text);
      if (shifted) {
        bool minus = lex_.next().text == "-";
        std::int64_t off = parse_int();
        expr.offset = minus ? -off : off;
      }
      return expr;
    }
    expr.literal = ParamValue{t.text};
    return expr;
  }

  const SourceText& src_;
  Lexer lex_;
  std::vector<ComponentDecl> components_;
  std::vector<ReconfigurationDef> ops_;
  std::vector<PendingLink> pending_bindings_;
  std::vector<PendingLink> pending_delegations_;
  std::set<std::string> declared_components_;
  std::set<std::string> param_names_;
  std::map<std::string, std::string> iface_owner_;  // iface -> component
  std::map<std::string, ParamDomain> domains_;      // ptype -> domain
};

}  // namespace

RawModel parse_model_raw(const SourceText& src) {
  return ModelParser(src).parse_raw();
}

ModelSpec parse_model(const SourceText& src) {
  return ModelParser(src).parse();
}

SubstMap parse_substitution(const SourceText& src, const ModelSpec& pre,
                            const ModelSpec& post) {
  Lexer lex(src);
  SubstMap map;
  while (lex.peek().kind != Token::Kind::End) {
    Token kw = lex.next();
    if (kw.kind != Token::Kind::Ident || kw.text != "substitute")
      lex.fail(kw, "expected 'substitute', found '" + kw.text + "'");
    Token old_comp = lex.next();
    if (old_comp.kind != Token::Kind::Ident)
      lex.fail(old_comp, "expected a component name");
    Token arrow = lex.next();
    if (arrow.kind != Token::Kind::Symbol || arrow.text != "->")
      lex.fail(arrow, "expected '->'");
    Token new_comp = lex.next();
    if (new_comp.kind != Token::Kind::Ident)
      lex.fail(new_comp, "expected a component name");
    Token semi = lex.next();
    if (semi.kind != Token::Kind::Symbol || semi.text != ";")
      lex.fail(semi, "expected ';'");
    if (!map.mapping.emplace(id(old_comp.text), id(new_comp.text)).second)
      lex.fail(old_comp,
               "component '" + old_comp.text + "' substituted twice");
  }
  if (auto v = validate_subst_map(map, pre.initial(), post.initial()); !v.ok())
    throw ParseError(src.path, 1, 1,
                     "invalid substitution map: " + v.error().message);
  return map;
}

ScenarioScript parse_scenario(const SourceText& src) {
  Lexer lex(src);
  ScenarioScript script;
  while (lex.peek().kind != Token::Kind::End) {
    Token t = lex.next();
    if (t.kind != Token::Kind::Ident)
      lex.fail(t, "expected an operation name, found '" + t.text + "'");
    if (t.text == "expect") {
      Token kind = lex.next();
      if (kind.kind != Token::Kind::Ident)
        lex.fail(kind, "expected 'true', 'bot' or 'budget'");
      if (kind.text == "true")
        script.expect = FinalKind::ReturnedTrue;
      else if (kind.text == "bot")
        script.expect = FinalKind::ReturnedFalse;
      else if (kind.text == "budget")
        script.expect = FinalKind::BudgetExhausted;
      else
        lex.fail(kind, "expected 'true', 'bot' or 'budget'");
      if (lex.peek().kind != Token::Kind::End)
        lex.fail(lex.peek(), "'expect' must close the scenario");
      break;
    }
    script.ops.push_back(id(t.text));
  }
  if (script.ops.empty())
    throw ParseError(src.path, 1, 1, "scenario has no operations");
  return script;
}

}  // namespace archsubst
