#include "relsem/semantics.hpp"

#include <cstring>

namespace relsem {

namespace {

// Arithmetic in __int128 so huge lo/hi bounds cannot overflow; the
// in-domain check after every node keeps results inside int64 anyway.
std::optional<std::int64_t> clamp_to_domain(__int128 v, const StateSpace& sp) {
  if (v < sp.config().lo || v > sp.config().hi) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::optional<std::int64_t> eval_aexp(const AExp& e, const StateSpace& space,
                                      std::size_t state,
                                      const Interpretation& interp) {
  if (const auto* l = std::get_if<AExp::Lit>(&e.node))
    return clamp_to_domain(l->value, space);
  if (const auto* v = std::get_if<AExp::Var>(&e.node)) {
    auto idx = space.var_index(v->name);
    if (!idx) throw SemanticError("unbound variable '" + v->name + "'");
    return space.value(state, *idx);
  }
  if (const auto* v = std::get_if<AExp::Logical>(&e.node)) {
    auto val = interp.lookup(v->name);
    if (!val) throw SemanticError("unbound logical variable '" + v->name + "'");
    return clamp_to_domain(*val, space);
  }
  const auto& b = std::get<AExp::Bin>(e.node);
  auto lhs = eval_aexp(*b.lhs, space, state, interp);
  if (!lhs) return std::nullopt;
  auto rhs = eval_aexp(*b.rhs, space, state, interp);
  if (!rhs) return std::nullopt;
  const __int128 x = *lhs, y = *rhs;
  switch (b.op) {
    case AOp::add: return clamp_to_domain(x + y, space);
    case AOp::sub: return clamp_to_domain(x - y, space);
    case AOp::mul: return clamp_to_domain(x * y, space);
    case AOp::mod: {
      if (y == 0) return std::nullopt;
      __int128 r = x % y;
      if (r < 0) r += y < 0 ? -y : y;  // mathematical remainder, always >= 0
      return clamp_to_domain(r, space);
    }
  }
  return std::nullopt;
}

bool eval_bexp(const BExp& e, const StateSpace& space, std::size_t state,
               const Interpretation& interp) {
  if (const auto* c = std::get_if<BExp::Const>(&e.node)) return c->value;
  if (const auto* c = std::get_if<BExp::Compare>(&e.node)) {
    auto lhs = eval_aexp(*c->lhs, space, state, interp);
    if (!lhs) return false;
    auto rhs = eval_aexp(*c->rhs, space, state, interp);
    if (!rhs) return false;
    switch (c->op) {
      case Cmp::eq: return *lhs == *rhs;
      case Cmp::le: return *lhs <= *rhs;
      case Cmp::lt: return *lhs < *rhs;
      case Cmp::ge: return *lhs >= *rhs;
      case Cmp::gt: return *lhs > *rhs;
    }
    return false;
  }
  if (const auto* n = std::get_if<BExp::Not>(&e.node))
    return !eval_bexp(*n->inner, space, state, interp);
  const auto& b = std::get<BExp::Bin>(e.node);
  switch (b.op) {
    case BOp::conj:
      return eval_bexp(*b.lhs, space, state, interp) &&
             eval_bexp(*b.rhs, space, state, interp);
    case BOp::disj:
      return eval_bexp(*b.lhs, space, state, interp) ||
             eval_bexp(*b.rhs, space, state, interp);
    case BOp::implies:
      return !eval_bexp(*b.lhs, space, state, interp) ||
             eval_bexp(*b.rhs, space, state, interp);
  }
  return false;
}

namespace {

StateSet guard_states(const BExp& cond, const StateSpacePtr& space) {
  StateSet set(space);
  const Interpretation none;
  for (std::size_t s = 0; s < space->size(); ++s)
    if (eval_bexp(cond, *space, s, none)) set.set(s);
  return set;
}

// F(R) = {(s,s) | s not|= b} u {(s,s') | s |= b, (s,s') in body;R}.
// Kleene-iterated from the empty (least) or the full (greatest) relation.
BitRel loop_fixpoint(const BitRel& body, const StateSet& guard,
                     const StateSpacePtr& space, LoopFixpoint which) {
  BitRel exit_diag = BitRel::identity(space);
  StateSet not_guard = guard;
  not_guard.complement();
  exit_diag.restrict_sources(not_guard);

  BitRel r = which == LoopFixpoint::least ? BitRel::empty(space)
                                          : BitRel::full(space);
  const std::size_t bound = space->size() * space->size() + 2;
  for (std::size_t i = 0; i < bound; ++i) {
    BitRel next = body.compose(r);
    next.restrict_sources(guard);
    next.or_with(exit_diag);
    if (next == r) return r;
    r = std::move(next);
  }
  throw Error("loop fixed point failed to stabilize within the height bound");
}

}  // namespace

BitRel denote_stmt(const Stmt& s, const ProcEnv& required,
                   const ProcEnv& provided, const DenoteOptions& opt) {
  const StateSpacePtr& space =
      required.space() ? required.space() : provided.space();
  if (!space) throw SemanticError("denote_stmt: no state space available");
  const Interpretation none;

  if (std::holds_alternative<Stmt::Skip>(s.node)) return BitRel::identity(space);

  if (const auto* a = std::get_if<Stmt::Assign>(&s.node)) {
    auto idx = space->var_index(a->var);
    if (!idx) throw SemanticError("unbound variable '" + a->var + "'");
    BitRel r = BitRel::empty(space);
    for (std::size_t st = 0; st < space->size(); ++st) {
      auto v = eval_aexp(*a->rhs, *space, st, none);
      if (v) r.set(st, space->with_value(st, *idx, *v));
    }
    return r;
  }

  if (const auto* q = std::get_if<Stmt::Seq>(&s.node)) {
    return denote_stmt(*q->first, required, provided, opt)
        .compose(denote_stmt(*q->second, required, provided, opt));
  }

  if (const auto* i = std::get_if<Stmt::If>(&s.node)) {
    StateSet guard = guard_states(*i->cond, space);
    BitRel then_rel = denote_stmt(*i->then_branch, required, provided, opt);
    then_rel.restrict_sources(guard);
    BitRel else_rel = denote_stmt(*i->else_branch, required, provided, opt);
    guard.complement();
    else_rel.restrict_sources(guard);
    then_rel.or_with(else_rel);
    return then_rel;
  }

  if (const auto* w = std::get_if<Stmt::While>(&s.node)) {
    const StateSet guard = guard_states(*w->cond, space);
    const BitRel body = denote_stmt(*w->body, required, provided, opt);
    return loop_fixpoint(body, guard, space, opt.loop);
  }

  const auto& c = std::get<Stmt::Call>(s.node);
  if (required.contains(c.proc)) return required.at(c.proc);
  if (provided.contains(c.proc)) return provided.at(c.proc);
  throw SemanticError("call target '" + c.proc +
                      "' bound in neither environment");
}

ProcEnv xi_step(const std::vector<ProcDecl>& decls, const ProcEnv& required,
                const ProcEnv& provided, const DenoteOptions& opt) {
  ProcEnv out(provided.space() ? provided.space() : required.space());
  for (const auto& d : decls)
    out.bind(d.name, denote_stmt(*d.body, required, provided, opt));
  return out;
}

ProcEnv lfp(const std::function<ProcEnv(const ProcEnv&)>& f,
            const ProcEnv& bottom, std::size_t max_iters) {
  if (max_iters == 0) {
    const std::size_t n = bottom.space() ? bottom.space()->size() : 0;
    max_iters = bottom.size() * n * n + 1;
  }
  ProcEnv cur = bottom;
  for (std::size_t i = 0; i < max_iters; ++i) {
    ProcEnv next = f(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error(
      "fixed-point iteration exceeded the lattice height bound (is the "
      "function monotone?)");
}

ProcEnv standard_denotation(const Program& p, const ProcEnv& required,
                            const DenoteOptions& opt) {
  StateSpacePtr space =
      required.space() ? required.space() : make_state_space(p.domain);
  std::vector<std::string> provided_names;
  for (const auto& d : p.decls) provided_names.push_back(d.name);
  ProcEnv bottom = ProcEnv::bottom(space, std::move(provided_names));
  return lfp(
      [&](const ProcEnv& rho) { return xi_step(p.decls, required, rho, opt); },
      bottom);
}

}  // namespace relsem
