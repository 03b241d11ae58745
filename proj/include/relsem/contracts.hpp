#pragma once

#include <map>
#include <span>

#include "relsem/components.hpp"
#include "relsem/oracle.hpp"

namespace relsem {

/// Assume/guarantee contract over denotations: an environment over the
/// required names (what callees are assumed to do) and one over the provided
/// names (what the component guarantees).
struct DenotContract {
  Interface iface;
  ProcEnv assume;     // scope = iface.required
  ProcEnv guarantee;  // scope = iface.provided

  void validate() const;

  bool operator==(const DenotContract&) const = default;
};

/// Denotation of a Hoare contract: all pairs (s, s') such that for every
/// interpretation of the logical variables, s satisfying the precondition
/// forces s' to satisfy the postcondition.
BitRel hoare_denotation(const HoareContract& c, const StateSpacePtr& space);

/// The contract environment rho_c: each table entry mapped to its denotation.
ProcEnv contract_environment(const ContractTable& table,
                             const StateSpacePtr& space);

/// Contract-relative denotation: every call resolves through rho_c; no
/// fixed point over procedures is involved.
BitRel cr_denotation(const Stmt& s, const ProcEnv& rho_c);

struct ProcVerdict {
  bool verified = false;
  // first counterexample pairs of the uncovered difference, canonical order
  std::vector<std::pair<std::size_t, std::size_t>> witnesses;
};

struct VerifyResult {
  std::map<std::string, ProcVerdict> procs;
  bool all_verified = true;
  std::vector<std::string> warnings;
};

/// Procedure-modular verification: for each declared p, checks the
/// contract-relative denotation of its body against its contract
/// denotation. The table must cover every declared and required procedure.
VerifyResult verify_modular(const Program& p, const ContractTable& table,
                            std::size_t max_witnesses = 5);

/// Non-modular soundness confirmation for closed programs: the standard
/// denotation of every declared procedure lies within its contract.
bool soundness_check(const Program& p, const ContractTable& table);

/// Hoare-to-denotational abstraction: interface (called, {proc}),
/// guarantee(proc) and assume(p') taken from the contract environment.
/// `called` must not contain proc itself.
DenotContract abstract_contract(const std::string& proc,
                                const ContractTable& table,
                                const std::vector<std::string>& called,
                                const StateSpacePtr& space);

/// m implements c: interfaces nest (required of c within m's, provided of m
/// within c's) and applying m to the assumption padded with full relations
/// on m's extra required names stays below the guarantee.
bool implements(const Component& m, const DenotContract& c);

/// Canonical implementation: the constant map to the guarantee. Witnesses
/// consistency of every contract.
ComponentPtr max_implementation(const DenotContract& c);

struct EnvCheckOptions {
  int env_samples = 6;   // sampled outer environments per implementation
  int impl_samples = 4;  // randomized implementations beyond the canonical one
  std::uint64_t seed = 1;
};

/// Decides the contract-environment predicate against the canonical maximal
/// implementation plus randomized guarded implementations: sound for
/// refutation, sampled for confirmation (the definition quantifies over all
/// implementations and all environments of the composite).
bool is_environment(const Component& m, const DenotContract& c,
                    const EnvCheckOptions& opt = {});

/// c1 refines c2: weaker assumptions (assume of c2 below assume of c1) and
/// stronger guarantees (guarantee of c1 below guarantee of c2).
bool refines(const DenotContract& c1, const DenotContract& c2);

/// Conjunction: join of assumptions, meet of guarantees; interface
/// (required union, provided intersection).
DenotContract conjoin(const DenotContract& c1, const DenotContract& c2);

/// Provided sets disjoint and each guarantee within the partner's
/// assumption on the names they exchange.
bool contracts_composable(const DenotContract& c1, const DenotContract& c2);

/// Composition of composable contracts: guarantees join; assumptions meet
/// pointwise on the remaining outer required names (a name assumed by only
/// one contract keeps that assumption).
DenotContract compose_contracts(const DenotContract& c1,
                                const DenotContract& c2);

/// Flat n-ary composition by the same formula; requires pairwise
/// composability.
DenotContract compose_contracts_nary(std::span<const DenotContract> cs);

}  // namespace relsem
