#pragma once

#include <optional>

#include "relsem/ast.hpp"
#include "relsem/bitrel.hpp"

namespace relsem {

/// Outcome of one big-step execution.
struct RunResult {
  std::optional<State> final_state;  // nullopt means divergence

  bool diverges() const { return !final_state.has_value(); }
};

/// Executes `entry` of a closed program from state s by direct
/// interpretation. Divergence is detected exactly: every while loop tracks
/// the states seen at its head, and the call stack tracks active
/// (procedure, state) configurations; a revisit proves divergence because
/// execution is deterministic over a finite state space. An assignment
/// leaving the value domain also diverges, matching the denotational rule.
RunResult run_operational(const Program& p, std::string_view entry,
                          const State& s);

/// The relation {(s, s') | entry terminates in s' from s}, by exhaustive
/// execution over all start states.
BitRel oracle_denotation(const Program& p, std::string_view entry);

/// Same, reusing a previously built state space for p.domain.
BitRel oracle_denotation(const Program& p, std::string_view entry,
                         const StateSpacePtr& space);

}  // namespace relsem
