#pragma once

#include <functional>
#include <optional>

#include "relsem/ast.hpp"
#include "relsem/env.hpp"

namespace relsem {

/// Value of an arithmetic expression in a state (and interpretation of
/// logical variables), or nullopt when any intermediate or final value
/// leaves [lo, hi]. Throws SemanticError on unbound identifiers.
std::optional<std::int64_t> eval_aexp(const AExp& e, const StateSpace& space,
                                      std::size_t state,
                                      const Interpretation& interp);

/// Two-valued evaluation; a comparison whose operand evaluates out of
/// domain is false.
bool eval_bexp(const BExp& e, const StateSpace& space, std::size_t state,
               const Interpretation& interp);

/// Which fixed point interprets while-loops. `greatest` exists only as a
/// deliberately wrong variant for mutation-sensitivity tests.
enum class LoopFixpoint { least, greatest };

struct DenoteOptions {
  LoopFixpoint loop = LoopFixpoint::least;
};

/// Relational denotation of a statement relative to environments for the
/// required (rho-) and provided (rho+) procedure names. The two scopes
/// must be disjoint and cover every call target.
BitRel denote_stmt(const Stmt& s, const ProcEnv& required,
                   const ProcEnv& provided, const DenoteOptions& opt = {});

/// One application of the xi functional: maps a candidate provided
/// environment to the denotations of all declared bodies under it.
ProcEnv xi_step(const std::vector<ProcDecl>& decls, const ProcEnv& required,
                const ProcEnv& provided, const DenoteOptions& opt = {});

/// Least fixed point of a monotone endofunction on environments over the
/// bottom's scope, by Kleene iteration. `max_iters` guards against
/// non-monotone functions; 0 selects the lattice-height bound
/// |P| * |State|^2 + 1.
ProcEnv lfp(const std::function<ProcEnv(const ProcEnv&)>& f,
            const ProcEnv& bottom, std::size_t max_iters = 0);

/// The standard semantics rho+0 of a program relative to an environment for
/// its required names: the least fixed point of xi.
ProcEnv standard_denotation(const Program& p, const ProcEnv& required,
                            const DenoteOptions& opt = {});

}  // namespace relsem
