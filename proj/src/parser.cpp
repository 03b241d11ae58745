#include "relsem/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace relsem {

namespace {

enum class Tok {
  ident,
  number,
  // keywords
  kw_proc, kw_is, kw_skip, kw_if, kw_then, kw_else, kw_while, kw_do, kw_call,
  kw_domain, kw_vars, kw_contract, kw_logical, kw_requires, kw_ensures,
  kw_true, kw_false, kw_not, kw_and, kw_or, kw_mod,
  // symbols
  assign, dotdot, semi, comma, lparen, rparen,
  plus, minus, star, eq, le, lt, ge, gt, implies,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int col = 1;
};

Tok keyword_kind(const std::string& s) {
  if (s == "proc") return Tok::kw_proc;
  if (s == "is") return Tok::kw_is;
  if (s == "skip") return Tok::kw_skip;
  if (s == "if") return Tok::kw_if;
  if (s == "then") return Tok::kw_then;
  if (s == "else") return Tok::kw_else;
  if (s == "while") return Tok::kw_while;
  if (s == "do") return Tok::kw_do;
  if (s == "call") return Tok::kw_call;
  if (s == "domain") return Tok::kw_domain;
  if (s == "vars") return Tok::kw_vars;
  if (s == "contract") return Tok::kw_contract;
  if (s == "logical") return Tok::kw_logical;
  if (s == "requires") return Tok::kw_requires;
  if (s == "ensures") return Tok::kw_ensures;
  if (s == "true") return Tok::kw_true;
  if (s == "false") return Tok::kw_false;
  if (s == "not") return Tok::kw_not;
  if (s == "and") return Tok::kw_and;
  if (s == "or") return Tok::kw_or;
  if (s == "mod") return Tok::kw_mod;
  return Tok::ident;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), 0, l, c});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      push(keyword_kind(word), std::move(word), l, cl);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      Token t{Tok::number, std::string(text.substr(i, j - i)), 0, l, cl};
      t.value = std::stoll(t.text);
      col += static_cast<int>(j - i);
      i = j;
      out.push_back(std::move(t));
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two(':', '=')) { push(Tok::assign, ":=", l, cl); i += 2; col += 2; continue; }
    if (two('.', '.')) { push(Tok::dotdot, "..", l, cl); i += 2; col += 2; continue; }
    if (two('=', '>')) { push(Tok::implies, "=>", l, cl); i += 2; col += 2; continue; }
    if (two('<', '=')) { push(Tok::le, "<=", l, cl); i += 2; col += 2; continue; }
    if (two('>', '=')) { push(Tok::ge, ">=", l, cl); i += 2; col += 2; continue; }
    switch (c) {
      case ';': push(Tok::semi, ";", l, cl); break;
      case ',': push(Tok::comma, ",", l, cl); break;
      case '(': push(Tok::lparen, "(", l, cl); break;
      case ')': push(Tok::rparen, ")", l, cl); break;
      case '+': push(Tok::plus, "+", l, cl); break;
      case '-': push(Tok::minus, "-", l, cl); break;
      case '*': push(Tok::star, "*", l, cl); break;
      case '=': push(Tok::eq, "=", l, cl); break;
      case '<': push(Tok::lt, "<", l, cl); break;
      case '>': push(Tok::gt, ">", l, cl); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::end, "", 0, line, col});
  return out;
}

struct VarUse {
  std::string name;
  int line;
  int col;
};

// Recursive-descent parser over the token vector. Assertions may use `mod`
// and the contract's logical variables; statements may not.
class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }

  Token take() { return toks_[pos_++]; }

  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError(std::string("expected ") + what + ", found '" +
                           describe(cur()) + "'",
                       cur().line, cur().col);
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of input" : t.text;
  }

  // --- expressions -------------------------------------------------------

  AExpPtr parse_aexp(bool assertion, const std::set<std::string>* logicals) {
    AExpPtr e = parse_aterm(assertion, logicals);
    while (at(Tok::plus) || at(Tok::minus)) {
      const AOp op = take().kind == Tok::plus ? AOp::add : AOp::sub;
      e = abin(op, std::move(e), parse_aterm(assertion, logicals));
    }
    return e;
  }

  AExpPtr parse_aterm(bool assertion, const std::set<std::string>* logicals) {
    AExpPtr e = parse_afactor(assertion, logicals);
    for (;;) {
      if (at(Tok::star)) {
        take();
        e = abin(AOp::mul, std::move(e), parse_afactor(assertion, logicals));
      } else if (at(Tok::kw_mod)) {
        if (!assertion)
          fail("'mod' is not allowed in program statements");
        take();
        e = abin(AOp::mod, std::move(e), parse_afactor(assertion, logicals));
      } else {
        return e;
      }
    }
  }

  AExpPtr parse_afactor(bool assertion, const std::set<std::string>* logicals) {
    if (at(Tok::number)) return lit(take().value);
    if (at(Tok::minus)) {
      take();
      const Token t = expect(Tok::number, "a number after unary '-'");
      return lit(-t.value);
    }
    if (at(Tok::ident)) {
      const Token t = take();
      if (assertion && logicals && logicals->count(t.text))
        return logical(t.text);
      var_uses_.push_back({t.text, t.line, t.col});
      return var(t.text);
    }
    if (at(Tok::lparen)) {
      take();
      AExpPtr e = parse_aexp(assertion, logicals);
      expect(Tok::rparen, "')'");
      return e;
    }
    fail("expected an arithmetic expression");
  }

  BExpPtr parse_bexp(bool assertion, const std::set<std::string>* logicals) {
    BExpPtr e = parse_bor(assertion, logicals);
    if (at(Tok::implies)) {
      take();
      return bbin(BOp::implies, std::move(e), parse_bexp(assertion, logicals));
    }
    return e;
  }

  BExpPtr parse_bor(bool assertion, const std::set<std::string>* logicals) {
    BExpPtr e = parse_band(assertion, logicals);
    while (at(Tok::kw_or)) {
      take();
      e = bbin(BOp::disj, std::move(e), parse_band(assertion, logicals));
    }
    return e;
  }

  BExpPtr parse_band(bool assertion, const std::set<std::string>* logicals) {
    BExpPtr e = parse_bnot(assertion, logicals);
    while (at(Tok::kw_and)) {
      take();
      e = bbin(BOp::conj, std::move(e), parse_bnot(assertion, logicals));
    }
    return e;
  }

  BExpPtr parse_bnot(bool assertion, const std::set<std::string>* logicals) {
    if (at(Tok::kw_not)) {
      take();
      return bnot(parse_bnot(assertion, logicals));
    }
    return parse_batom(assertion, logicals);
  }

  BExpPtr parse_batom(bool assertion, const std::set<std::string>* logicals) {
    if (at(Tok::kw_true)) { take(); return btrue(); }
    if (at(Tok::kw_false)) { take(); return bfalse(); }
    if (at(Tok::lparen) && paren_wraps_bexp()) {
      take();
      BExpPtr e = parse_bexp(assertion, logicals);
      expect(Tok::rparen, "')'");
      return e;
    }
    AExpPtr lhs = parse_aexp(assertion, logicals);
    const Cmp op = parse_cmp_op();
    return cmp(op, std::move(lhs), parse_aexp(assertion, logicals));
  }

  Cmp parse_cmp_op() {
    switch (cur().kind) {
      case Tok::eq: take(); return Cmp::eq;
      case Tok::le: take(); return Cmp::le;
      case Tok::lt: take(); return Cmp::lt;
      case Tok::ge: take(); return Cmp::ge;
      case Tok::gt: take(); return Cmp::gt;
      default: fail("expected a comparison operator");
    }
  }

  // Decides whether a '(' at the current position encloses a boolean
  // expression, by looking at the token after the matching ')'. A following
  // comparison or arithmetic operator means the parenthesis belongs to an
  // arithmetic operand.
  bool paren_wraps_bexp() const {
    std::size_t depth = 0;
    std::size_t j = pos_;
    for (; j < toks_.size(); ++j) {
      if (toks_[j].kind == Tok::lparen) ++depth;
      if (toks_[j].kind == Tok::rparen && --depth == 0) break;
    }
    if (j >= toks_.size()) return true;  // unbalanced; let the parser report it
    switch (toks_[std::min(j + 1, toks_.size() - 1)].kind) {
      case Tok::eq: case Tok::le: case Tok::lt: case Tok::ge: case Tok::gt:
      case Tok::plus: case Tok::minus: case Tok::star: case Tok::kw_mod:
        return false;
      default:
        return true;
    }
  }

  // --- statements ---------------------------------------------------------

  bool starts_stmt(const Token& t) const {
    switch (t.kind) {
      case Tok::kw_skip: case Tok::kw_if: case Tok::kw_while:
      case Tok::kw_call: case Tok::ident: case Tok::lparen:
        return true;
      default:
        return false;
    }
  }

  StmtPtr parse_stmt() {
    StmtPtr s = parse_atom_stmt();
    if (at(Tok::semi) && starts_stmt(peek(1))) {
      take();
      return seq(std::move(s), parse_stmt());
    }
    return s;
  }

  StmtPtr parse_atom_stmt() {
    if (at(Tok::kw_skip)) { take(); return skip(); }
    if (at(Tok::kw_call)) {
      take();
      return call(expect(Tok::ident, "a procedure name").text);
    }
    if (at(Tok::kw_if)) {
      take();
      BExpPtr c = parse_bexp(false, nullptr);
      expect(Tok::kw_then, "'then'");
      StmtPtr t = parse_atom_stmt();
      expect(Tok::kw_else, "'else'");
      return ifelse(std::move(c), std::move(t), parse_atom_stmt());
    }
    if (at(Tok::kw_while)) {
      take();
      BExpPtr c = parse_bexp(false, nullptr);
      expect(Tok::kw_do, "'do'");
      return loop(std::move(c), parse_atom_stmt());
    }
    if (at(Tok::lparen)) {
      take();
      StmtPtr s = parse_stmt();
      expect(Tok::rparen, "')'");
      return s;
    }
    if (at(Tok::ident)) {
      const Token name = take();
      expect(Tok::assign, "':='");
      var_uses_.push_back({name.text, name.line, name.col});
      return assign(name.text, parse_aexp(false, nullptr));
    }
    fail("expected a statement");
  }

  // --- files ---------------------------------------------------------------

  std::optional<DomainConfig> parse_header() {
    if (!at(Tok::kw_domain)) return std::nullopt;
    take();
    DomainConfig cfg;
    cfg.lo = parse_signed();
    expect(Tok::dotdot, "'..'");
    cfg.hi = parse_signed();
    expect(Tok::kw_vars, "'vars'");
    cfg.variables.push_back(expect(Tok::ident, "a variable name").text);
    while (at(Tok::comma)) {
      take();
      cfg.variables.push_back(expect(Tok::ident, "a variable name").text);
    }
    return cfg;
  }

  std::int64_t parse_signed() {
    bool neg = false;
    if (at(Tok::minus)) {
      take();
      neg = true;
    }
    const Token t = expect(Tok::number, "a number");
    return neg ? -t.value : t.value;
  }

  std::vector<ProcDecl> parse_decls() {
    std::vector<ProcDecl> decls;
    std::set<std::string> names;
    for (;;) {
      const Token kw = expect(Tok::kw_proc, "'proc'");
      const Token name = expect(Tok::ident, "a procedure name");
      if (!names.insert(name.text).second)
        throw ParseError("duplicate procedure '" + name.text + "'", name.line,
                         name.col);
      expect(Tok::kw_is, "'is'");
      decls.push_back({name.text, parse_stmt()});
      (void)kw;
      if (at(Tok::semi) && peek(1).kind == Tok::kw_proc) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::end, "end of input");
    return decls;
  }

  const std::vector<VarUse>& var_uses() const { return var_uses_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<VarUse> var_uses_;
};

void check_vars_declared(const std::vector<VarUse>& uses,
                         const DomainConfig& cfg, const char* context) {
  for (const auto& u : uses) {
    if (std::find(cfg.variables.begin(), cfg.variables.end(), u.name) ==
        cfg.variables.end())
      throw ParseError("unknown variable '" + u.name + "' in " + context +
                           " (logical variables may only appear in assertions)",
                       u.line, u.col);
  }
}

}  // namespace

ProgramParse parse_program(std::string_view text,
                           std::optional<DomainConfig> fallback) {
  Parser p(text);
  ProgramParse out;
  auto header = p.parse_header();
  out.program.decls = p.parse_decls();

  if (header) {
    out.domain_from_header = true;
    if (fallback) {
      header->state_cap = fallback->state_cap;
      if (!header->same_domain(*fallback))
        out.warnings.push_back(
            "program header domain overrides the domain given on the command "
            "line");
    }
    out.program.domain = *header;
  } else if (fallback) {
    out.program.domain = *fallback;
  } else {
    throw SemanticError(
        "no domain configuration: add a 'domain lo..hi vars ...' header or "
        "pass one explicitly");
  }
  out.program.domain.validate();
  check_vars_declared(p.var_uses(), out.program.domain, "a statement");
  return out;
}

ContractParse parse_contract_file(std::string_view text,
                                  const DomainConfig* domain) {
  Parser p(text);
  ContractParse out;
  while (!p.at(Tok::end)) {
    const Token kw = p.expect(Tok::kw_contract, "'contract'");
    (void)kw;
    const Token name = p.expect(Tok::ident, "a procedure name");
    if (out.table.count(name.text))
      throw ParseError("duplicate contract for '" + name.text + "'", name.line,
                       name.col);
    std::set<std::string> logicals;
    if (p.at(Tok::kw_logical)) {
      p.take();
      logicals.insert(p.expect(Tok::ident, "a logical variable name").text);
      while (p.at(Tok::comma)) {
        p.take();
        logicals.insert(p.expect(Tok::ident, "a logical variable name").text);
      }
    }
    p.expect(Tok::kw_requires, "'requires'");
    BExpPtr pre = p.parse_bexp(true, &logicals);
    p.expect(Tok::kw_ensures, "'ensures'");
    BExpPtr post = p.parse_bexp(true, &logicals);

    std::vector<std::string> logical_list(logicals.begin(), logicals.end());
    HoareContract c{{std::move(pre), logical_list}, {std::move(post), logical_list}};
    out.table.emplace(name.text, std::move(c));
  }
  if (domain) check_vars_declared(p.var_uses(), *domain, "an assertion");
  return out;
}

}  // namespace relsem
