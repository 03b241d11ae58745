#include "relsem/ast.hpp"

#include <sstream>

namespace relsem {

AExpPtr lit(std::int64_t value) {
  return std::make_shared<const AExp>(AExp{AExp::Lit{value}});
}
AExpPtr var(std::string name) {
  return std::make_shared<const AExp>(AExp{AExp::Var{std::move(name)}});
}
AExpPtr logical(std::string name) {
  return std::make_shared<const AExp>(AExp{AExp::Logical{std::move(name)}});
}
AExpPtr abin(AOp op, AExpPtr lhs, AExpPtr rhs) {
  return std::make_shared<const AExp>(
      AExp{AExp::Bin{op, std::move(lhs), std::move(rhs)}});
}

BExpPtr btrue() { return std::make_shared<const BExp>(BExp{BExp::Const{true}}); }
BExpPtr bfalse() { return std::make_shared<const BExp>(BExp{BExp::Const{false}}); }
BExpPtr cmp(Cmp op, AExpPtr lhs, AExpPtr rhs) {
  return std::make_shared<const BExp>(
      BExp{BExp::Compare{op, std::move(lhs), std::move(rhs)}});
}
BExpPtr bnot(BExpPtr inner) {
  return std::make_shared<const BExp>(BExp{BExp::Not{std::move(inner)}});
}
BExpPtr bbin(BOp op, BExpPtr lhs, BExpPtr rhs) {
  return std::make_shared<const BExp>(
      BExp{BExp::Bin{op, std::move(lhs), std::move(rhs)}});
}

StmtPtr skip() { return std::make_shared<const Stmt>(Stmt{Stmt::Skip{}}); }
StmtPtr assign(std::string var, AExpPtr rhs) {
  return std::make_shared<const Stmt>(
      Stmt{Stmt::Assign{std::move(var), std::move(rhs)}});
}
StmtPtr seq(StmtPtr first, StmtPtr second) {
  return std::make_shared<const Stmt>(
      Stmt{Stmt::Seq{std::move(first), std::move(second)}});
}
StmtPtr ifelse(BExpPtr cond, StmtPtr then_branch, StmtPtr else_branch) {
  return std::make_shared<const Stmt>(Stmt{
      Stmt::If{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}
StmtPtr loop(BExpPtr cond, StmtPtr body) {
  return std::make_shared<const Stmt>(
      Stmt{Stmt::While{std::move(cond), std::move(body)}});
}
StmtPtr call(std::string proc) {
  return std::make_shared<const Stmt>(Stmt{Stmt::Call{std::move(proc)}});
}

const ProcDecl* Program::find(std::string_view name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Structural equality.

bool equal(const AExp& a, const AExp& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* l = std::get_if<AExp::Lit>(&a.node))
    return l->value == std::get<AExp::Lit>(b.node).value;
  if (const auto* v = std::get_if<AExp::Var>(&a.node))
    return v->name == std::get<AExp::Var>(b.node).name;
  if (const auto* v = std::get_if<AExp::Logical>(&a.node))
    return v->name == std::get<AExp::Logical>(b.node).name;
  const auto& x = std::get<AExp::Bin>(a.node);
  const auto& y = std::get<AExp::Bin>(b.node);
  return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
}

bool equal(const BExp& a, const BExp& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* c = std::get_if<BExp::Const>(&a.node))
    return c->value == std::get<BExp::Const>(b.node).value;
  if (const auto* c = std::get_if<BExp::Compare>(&a.node)) {
    const auto& d = std::get<BExp::Compare>(b.node);
    return c->op == d.op && equal(*c->lhs, *d.lhs) && equal(*c->rhs, *d.rhs);
  }
  if (const auto* n = std::get_if<BExp::Not>(&a.node))
    return equal(*n->inner, *std::get<BExp::Not>(b.node).inner);
  const auto& x = std::get<BExp::Bin>(a.node);
  const auto& y = std::get<BExp::Bin>(b.node);
  return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (std::holds_alternative<Stmt::Skip>(a.node)) return true;
  if (const auto* s = std::get_if<Stmt::Assign>(&a.node)) {
    const auto& t = std::get<Stmt::Assign>(b.node);
    return s->var == t.var && equal(*s->rhs, *t.rhs);
  }
  if (const auto* s = std::get_if<Stmt::Seq>(&a.node)) {
    const auto& t = std::get<Stmt::Seq>(b.node);
    return equal(*s->first, *t.first) && equal(*s->second, *t.second);
  }
  if (const auto* s = std::get_if<Stmt::If>(&a.node)) {
    const auto& t = std::get<Stmt::If>(b.node);
    return equal(*s->cond, *t.cond) && equal(*s->then_branch, *t.then_branch) &&
           equal(*s->else_branch, *t.else_branch);
  }
  if (const auto* s = std::get_if<Stmt::While>(&a.node)) {
    const auto& t = std::get<Stmt::While>(b.node);
    return equal(*s->cond, *t.cond) && equal(*s->body, *t.body);
  }
  return std::get<Stmt::Call>(a.node).proc == std::get<Stmt::Call>(b.node).proc;
}

bool equal(const Program& a, const Program& b) {
  if (!a.domain.same_domain(b.domain)) return false;
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i) {
    if (a.decls[i].name != b.decls[i].name) return false;
    if (!equal(*a.decls[i].body, *b.decls[i].body)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pretty-printing. Binary operands are parenthesized unless they are atoms,
// which keeps the printer precedence-free and the round-trip exact.

namespace {

bool aexp_atomic(const AExp& e) {
  return !std::holds_alternative<AExp::Bin>(e.node);
}

void print(std::ostream& os, const AExp& e);

void print_operand(std::ostream& os, const AExp& e) {
  if (aexp_atomic(e)) {
    print(os, e);
  } else {
    os << '(';
    print(os, e);
    os << ')';
  }
}

void print(std::ostream& os, const AExp& e) {
  if (const auto* l = std::get_if<AExp::Lit>(&e.node)) {
    os << l->value;
  } else if (const auto* v = std::get_if<AExp::Var>(&e.node)) {
    os << v->name;
  } else if (const auto* v = std::get_if<AExp::Logical>(&e.node)) {
    os << v->name;
  } else {
    const auto& b = std::get<AExp::Bin>(e.node);
    print_operand(os, *b.lhs);
    switch (b.op) {
      case AOp::add: os << " + "; break;
      case AOp::sub: os << " - "; break;
      case AOp::mul: os << " * "; break;
      case AOp::mod: os << " mod "; break;
    }
    print_operand(os, *b.rhs);
  }
}

bool bexp_atomic(const BExp& e) {
  return std::holds_alternative<BExp::Const>(e.node) ||
         std::holds_alternative<BExp::Compare>(e.node);
}

void print(std::ostream& os, const BExp& e);

void print_operand(std::ostream& os, const BExp& e) {
  if (bexp_atomic(e)) {
    print(os, e);
  } else {
    os << '(';
    print(os, e);
    os << ')';
  }
}

void print(std::ostream& os, const BExp& e) {
  if (const auto* c = std::get_if<BExp::Const>(&e.node)) {
    os << (c->value ? "true" : "false");
  } else if (const auto* c = std::get_if<BExp::Compare>(&e.node)) {
    print_operand(os, *c->lhs);
    switch (c->op) {
      case Cmp::eq: os << " = "; break;
      case Cmp::le: os << " <= "; break;
      case Cmp::lt: os << " < "; break;
      case Cmp::ge: os << " >= "; break;
      case Cmp::gt: os << " > "; break;
    }
    print_operand(os, *c->rhs);
  } else if (const auto* n = std::get_if<BExp::Not>(&e.node)) {
    os << "not ";
    print_operand(os, *n->inner);
  } else {
    const auto& b = std::get<BExp::Bin>(e.node);
    print_operand(os, *b.lhs);
    switch (b.op) {
      case BOp::conj: os << " and "; break;
      case BOp::disj: os << " or "; break;
      case BOp::implies: os << " => "; break;
    }
    print_operand(os, *b.rhs);
  }
}

bool stmt_atomic(const Stmt& s) {
  return !std::holds_alternative<Stmt::Seq>(s.node);
}

void print(std::ostream& os, const Stmt& s);

void print_branch(std::ostream& os, const Stmt& s) {
  if (stmt_atomic(s)) {
    print(os, s);
  } else {
    os << '(';
    print(os, s);
    os << ')';
  }
}

void print(std::ostream& os, const Stmt& s) {
  if (std::holds_alternative<Stmt::Skip>(s.node)) {
    os << "skip";
  } else if (const auto* a = std::get_if<Stmt::Assign>(&s.node)) {
    os << a->var << " := ";
    print(os, *a->rhs);
  } else if (const auto* q = std::get_if<Stmt::Seq>(&s.node)) {
    print(os, *q->first);
    os << "; ";
    print(os, *q->second);
  } else if (const auto* i = std::get_if<Stmt::If>(&s.node)) {
    os << "if ";
    print(os, *i->cond);
    os << " then ";
    print_branch(os, *i->then_branch);
    os << " else ";
    print_branch(os, *i->else_branch);
  } else if (const auto* w = std::get_if<Stmt::While>(&s.node)) {
    os << "while ";
    print(os, *w->cond);
    os << " do ";
    print_branch(os, *w->body);
  } else {
    os << "call " << std::get<Stmt::Call>(s.node).proc;
  }
}

}  // namespace

std::string pretty(const AExp& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::string pretty(const BExp& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::string pretty(const Stmt& s) {
  std::ostringstream os;
  print(os, s);
  return os.str();
}

std::string pretty(const Program& p) {
  std::ostringstream os;
  os << "domain " << p.domain.lo << ".." << p.domain.hi << " vars ";
  for (std::size_t i = 0; i < p.domain.variables.size(); ++i) {
    if (i) os << ", ";
    os << p.domain.variables[i];
  }
  os << '\n';
  for (std::size_t i = 0; i < p.decls.size(); ++i) {
    os << "proc " << p.decls[i].name << " is ";
    print(os, *p.decls[i].body);
    os << (i + 1 < p.decls.size() ? ";\n" : "\n");
  }
  return os.str();
}

std::string pretty(const ContractTable& table) {
  std::ostringstream os;
  for (const auto& [name, c] : table) {
    os << "contract " << name;
    if (!c.pre.logicals.empty()) {
      os << " logical ";
      for (std::size_t i = 0; i < c.pre.logicals.size(); ++i) {
        if (i) os << ", ";
        os << c.pre.logicals[i];
      }
    }
    os << " requires ";
    print(os, *c.pre.formula);
    os << " ensures ";
    print(os, *c.post.formula);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Static analysis.

std::set<std::string> collect_calls(const Stmt& s) {
  std::set<std::string> out;
  if (const auto* q = std::get_if<Stmt::Seq>(&s.node)) {
    auto a = collect_calls(*q->first);
    out.insert(a.begin(), a.end());
    auto b = collect_calls(*q->second);
    out.insert(b.begin(), b.end());
  } else if (const auto* i = std::get_if<Stmt::If>(&s.node)) {
    auto a = collect_calls(*i->then_branch);
    out.insert(a.begin(), a.end());
    auto b = collect_calls(*i->else_branch);
    out.insert(b.begin(), b.end());
  } else if (const auto* w = std::get_if<Stmt::While>(&s.node)) {
    auto a = collect_calls(*w->body);
    out.insert(a.begin(), a.end());
  } else if (const auto* c = std::get_if<Stmt::Call>(&s.node)) {
    out.insert(c->proc);
  }
  return out;
}

void collect_vars(const AExp& e, std::set<std::string>& out) {
  if (const auto* v = std::get_if<AExp::Var>(&e.node)) {
    out.insert(v->name);
  } else if (const auto* b = std::get_if<AExp::Bin>(&e.node)) {
    collect_vars(*b->lhs, out);
    collect_vars(*b->rhs, out);
  }
}

void collect_vars(const BExp& e, std::set<std::string>& out) {
  if (const auto* c = std::get_if<BExp::Compare>(&e.node)) {
    collect_vars(*c->lhs, out);
    collect_vars(*c->rhs, out);
  } else if (const auto* n = std::get_if<BExp::Not>(&e.node)) {
    collect_vars(*n->inner, out);
  } else if (const auto* b = std::get_if<BExp::Bin>(&e.node)) {
    collect_vars(*b->lhs, out);
    collect_vars(*b->rhs, out);
  }
}

void collect_vars(const Stmt& s, std::set<std::string>& out) {
  if (const auto* a = std::get_if<Stmt::Assign>(&s.node)) {
    out.insert(a->var);
    collect_vars(*a->rhs, out);
  } else if (const auto* q = std::get_if<Stmt::Seq>(&s.node)) {
    collect_vars(*q->first, out);
    collect_vars(*q->second, out);
  } else if (const auto* i = std::get_if<Stmt::If>(&s.node)) {
    collect_vars(*i->cond, out);
    collect_vars(*i->then_branch, out);
    collect_vars(*i->else_branch, out);
  } else if (const auto* w = std::get_if<Stmt::While>(&s.node)) {
    collect_vars(*w->cond, out);
    collect_vars(*w->body, out);
  }
}

std::pair<std::set<std::string>, std::set<std::string>> static_interface(
    const Program& p) {
  std::set<std::string> provided;
  for (const auto& d : p.decls) provided.insert(d.name);
  std::set<std::string> required;
  for (const auto& d : p.decls)
    for (const auto& c : collect_calls(*d.body))
      if (!provided.count(c)) required.insert(c);
  return {required, provided};
}

}  // namespace relsem
