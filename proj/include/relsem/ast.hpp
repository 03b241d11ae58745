#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "relsem/domain.hpp"

namespace relsem {

// ---------------------------------------------------------------------------
// Arithmetic expressions. Logical variables are resolved at parse time from
// the contract's `logical` declarations; they never occur in statements.

enum class AOp { add, sub, mul, mod };
enum class Cmp { eq, le, lt, ge, gt };
enum class BOp { conj, disj, implies };

struct AExp;
using AExpPtr = std::shared_ptr<const AExp>;

struct AExp {
  struct Lit {
    std::int64_t value;
  };
  struct Var {
    std::string name;
  };
  struct Logical {
    std::string name;
  };
  struct Bin {
    AOp op;
    AExpPtr lhs;
    AExpPtr rhs;
  };
  std::variant<Lit, Var, Logical, Bin> node;
};

AExpPtr lit(std::int64_t value);
AExpPtr var(std::string name);
AExpPtr logical(std::string name);
AExpPtr abin(AOp op, AExpPtr lhs, AExpPtr rhs);

// ---------------------------------------------------------------------------
// Boolean expressions.

struct BExp;
using BExpPtr = std::shared_ptr<const BExp>;

struct BExp {
  struct Const {
    bool value;
  };
  struct Compare {
    Cmp op;
    AExpPtr lhs;
    AExpPtr rhs;
  };
  struct Not {
    BExpPtr inner;
  };
  struct Bin {
    BOp op;
    BExpPtr lhs;
    BExpPtr rhs;
  };
  std::variant<Const, Compare, Not, Bin> node;
};

BExpPtr btrue();
BExpPtr bfalse();
BExpPtr cmp(Cmp op, AExpPtr lhs, AExpPtr rhs);
BExpPtr bnot(BExpPtr inner);
BExpPtr bbin(BOp op, BExpPtr lhs, BExpPtr rhs);

// ---------------------------------------------------------------------------
// Statements and programs.

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  struct Skip {};
  struct Assign {
    std::string var;
    AExpPtr rhs;
  };
  struct Seq {
    StmtPtr first;
    StmtPtr second;
  };
  struct If {
    BExpPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch;
  };
  struct While {
    BExpPtr cond;
    StmtPtr body;
  };
  struct Call {
    std::string proc;
  };
  std::variant<Skip, Assign, Seq, If, While, Call> node;
};

StmtPtr skip();
StmtPtr assign(std::string var, AExpPtr rhs);
StmtPtr seq(StmtPtr first, StmtPtr second);
StmtPtr ifelse(BExpPtr cond, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr loop(BExpPtr cond, StmtPtr body);
StmtPtr call(std::string proc);

struct ProcDecl {
  std::string name;
  StmtPtr body;
};

struct Program {
  std::vector<ProcDecl> decls;
  DomainConfig domain;

  const ProcDecl* find(std::string_view name) const;
};

// ---------------------------------------------------------------------------
// Assertions and Hoare contracts.

struct Assertion {
  BExpPtr formula;
  std::vector<std::string> logicals;  // sorted, no duplicates
};

struct HoareContract {
  Assertion pre;
  Assertion post;  // same logical set as pre
};

using ContractTable = std::map<std::string, HoareContract>;

// ---------------------------------------------------------------------------
// Structural equality (pointer-identity independent).

bool equal(const AExp& a, const AExp& b);
bool equal(const BExp& a, const BExp& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const Program& a, const Program& b);

// ---------------------------------------------------------------------------
// Pretty-printing back to concrete syntax. pretty(parse(t)) reparses to a
// tree equal to parse(t).

std::string pretty(const AExp& e);
std::string pretty(const BExp& e);
std::string pretty(const Stmt& s);
std::string pretty(const Program& p);
std::string pretty(const ContractTable& table);

// ---------------------------------------------------------------------------
// Static analysis.

/// Names of all procedures called anywhere in the statement.
std::set<std::string> collect_calls(const Stmt& s);

/// Program variables mentioned in the expression/statement.
void collect_vars(const AExp& e, std::set<std::string>& out);
void collect_vars(const BExp& e, std::set<std::string>& out);
void collect_vars(const Stmt& s, std::set<std::string>& out);

/// (P-, P+): required (called but not declared) and provided (declared)
/// procedure names. Disjoint by construction.
std::pair<std::set<std::string>, std::set<std::string>> static_interface(
    const Program& p);

}  // namespace relsem
