#pragma once

#include <span>
#include <string>
#include <vector>

#include "relsem/bitrel.hpp"

namespace relsem {

/// Procedure environment: a total map from a finite, sorted scope of
/// procedure names to relations over one state space. Environments over all
/// scopes form the lattice ordered by env_leq.
class ProcEnv {
 public:
  ProcEnv() = default;
  explicit ProcEnv(StateSpacePtr space) : space_(std::move(space)) {}

  /// Every name bound to the empty relation.
  static ProcEnv bottom(StateSpacePtr space, std::vector<std::string> names);
  /// Every name bound to the full relation State x State.
  static ProcEnv top(StateSpacePtr space, std::vector<std::string> names);

  const StateSpacePtr& space() const { return space_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool empty_scope() const { return names_.empty(); }

  bool contains(std::string_view name) const;
  const BitRel& at(std::string_view name) const;
  BitRel& at_mut(std::string_view name);
  const BitRel& rel(std::size_t i) const { return rels_[i]; }
  BitRel& rel_mut(std::size_t i) { return rels_[i]; }

  /// Binds or replaces one name.
  void bind(std::string name, BitRel rel);

  bool same_scope(const ProcEnv& other) const { return names_ == other.names_; }
  bool operator==(const ProcEnv& other) const;

 private:
  StateSpacePtr space_;
  std::vector<std::string> names_;  // sorted
  std::vector<BitRel> rels_;        // parallel to names_
};

/// r1 below r2: scope(r1) is a subset of scope(r2) and pointwise inclusion
/// holds on scope(r1). Throws DomainMismatchError on different state spaces.
bool env_leq(const ProcEnv& r1, const ProcEnv& r2);

/// Least upper bound: union of scopes, pointwise union of relations.
ProcEnv env_lub(const ProcEnv& r1, const ProcEnv& r2);

/// Greatest lower bound: intersection of scopes, pointwise intersection.
ProcEnv env_glb(const ProcEnv& r1, const ProcEnv& r2);

/// The environment mapping every name in P to the full relation.
ProcEnv top_env(std::vector<std::string> names, StateSpacePtr space);

/// Scope restriction to the given names (missing names are dropped).
ProcEnv env_restrict(const ProcEnv& r, const std::vector<std::string>& names);

/// Pointwise meet evaluated on an explicit scope, where a name absent from
/// one operand behaves as the full relation. Every name of the scope must be
/// bound by at least one operand. This is the meet used by contract
/// composition, where exclusive assumptions are kept rather than dropped.
ProcEnv env_meet_on(const std::vector<std::string>& scope, const ProcEnv& r1,
                    const ProcEnv& r2);

}  // namespace relsem
