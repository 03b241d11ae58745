#include "relsem/contracts.hpp"

#include <algorithm>

#include "relsem/kernels.hpp"
#include "relsem/rng.hpp"

namespace relsem {

void DenotContract::validate() const {
  if (assume.names() != iface.required)
    throw SemanticError("contract assume scope differs from required set");
  if (guarantee.names() != iface.provided)
    throw SemanticError("contract guarantee scope differs from provided set");
}

BitRel hoare_denotation(const HoareContract& c, const StateSpacePtr& space) {
  if (c.pre.logicals != c.post.logicals)
    throw SemanticError("contract pre/post declare different logical variables");
  const auto interps =
      enumerate_interpretations(c.pre.logicals, space->config());
  BitRel rel = BitRel::full(space);
  const std::size_t n = space->size();
  for (const auto& interp : interps) {
    StateSet post_ok(space);
    for (std::size_t s = 0; s < n; ++s)
      if (eval_bexp(*c.post.formula, *space, s, interp)) post_ok.set(s);
    for (std::size_t s = 0; s < n; ++s)
      if (eval_bexp(*c.pre.formula, *space, s, interp))
        kern::ops().and_into(rel.row(s), post_ok.data(), rel.row_words());
  }
  return rel;
}

ProcEnv contract_environment(const ContractTable& table,
                             const StateSpacePtr& space) {
  ProcEnv env(space);
  for (const auto& [name, c] : table) env.bind(name, hoare_denotation(c, space));
  return env;
}

BitRel cr_denotation(const Stmt& s, const ProcEnv& rho_c) {
  return denote_stmt(s, rho_c, ProcEnv(rho_c.space()));
}

VerifyResult verify_modular(const Program& p, const ContractTable& table,
                            std::size_t max_witnesses) {
  auto [required, provided] = static_interface(p);
  for (const auto& name : provided)
    if (!table.count(name))
      throw MissingContractError("no contract for declared procedure '" + name +
                                 "'");
  for (const auto& name : required)
    if (!table.count(name))
      throw MissingContractError("no contract for required procedure '" + name +
                                 "'");

  VerifyResult out;
  for (const auto& [name, c] : table)
    if (!provided.count(name) && !required.count(name))
      out.warnings.push_back("contract for unknown procedure '" + name +
                             "' is ignored");

  auto space = make_state_space(p.domain);
  ProcEnv rho_c(space);
  for (const auto& name : provided)
    rho_c.bind(name, hoare_denotation(table.at(name), space));
  for (const auto& name : required)
    rho_c.bind(name, hoare_denotation(table.at(name), space));

  for (const auto& d : p.decls) {
    BitRel body = cr_denotation(*d.body, rho_c);
    const BitRel& target = rho_c.at(d.name);
    ProcVerdict v;
    v.verified = body.subset_of(target);
    if (!v.verified) {
      BitRel diff = body;
      diff.diff_with(target);
      v.witnesses = diff.first_pairs(max_witnesses);
      out.all_verified = false;
    }
    out.procs.emplace(d.name, std::move(v));
  }
  return out;
}

bool soundness_check(const Program& p, const ContractTable& table) {
  auto [required, provided] = static_interface(p);
  if (!required.empty())
    throw SemanticError("soundness check needs a closed program");
  auto space = make_state_space(p.domain);
  ProcEnv rho_plus = standard_denotation(p, ProcEnv(space));
  for (const auto& d : p.decls) {
    auto it = table.find(d.name);
    if (it == table.end())
      throw MissingContractError("no contract for declared procedure '" +
                                 d.name + "'");
    if (!rho_plus.at(d.name).subset_of(hoare_denotation(it->second, space)))
      return false;
  }
  return true;
}

DenotContract abstract_contract(const std::string& proc,
                                const ContractTable& table,
                                const std::vector<std::string>& called,
                                const StateSpacePtr& space) {
  if (std::find(called.begin(), called.end(), proc) != called.end())
    throw SemanticError(
        "abstract_contract: the called set may not contain the procedure "
        "itself");
  auto lookup = [&](const std::string& name) -> const HoareContract& {
    auto it = table.find(name);
    if (it == table.end())
      throw MissingContractError("no contract for procedure '" + name + "'");
    return it->second;
  };
  DenotContract c;
  c.iface = Interface(called, {proc});
  c.assume = ProcEnv(space);
  for (const auto& name : c.iface.required)
    c.assume.bind(name, hoare_denotation(lookup(name), space));
  c.guarantee = ProcEnv(space);
  c.guarantee.bind(proc, hoare_denotation(lookup(proc), space));
  return c;
}

namespace {

bool subset_names(const std::vector<std::string>& a,
                  const std::vector<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool names_disjoint(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  std::vector<std::string> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

StateSpacePtr contract_space(const DenotContract& c) {
  return c.assume.space() ? c.assume.space() : c.guarantee.space();
}

}  // namespace

bool implements(const Component& m, const DenotContract& c) {
  if (!subset_names(c.iface.required, m.iface().required)) return false;
  if (!subset_names(m.iface().provided, c.iface.provided)) return false;
  StateSpacePtr space = contract_space(c);
  ProcEnv arg(space);
  for (const auto& p : m.iface().required)
    arg.bind(p, c.iface.requires_name(p) ? c.assume.at(p)
                                         : BitRel::full(space));
  return env_leq(apply_component(m, arg), c.guarantee);
}

ComponentPtr max_implementation(const DenotContract& c) {
  return constant_component(c.iface, c.guarantee);
}

namespace {

// Monotone step-function implementation of c: within the assumption it
// returns `inside` (a sub-environment of the guarantee), outside it vetoes
// with the full top environment. These are the implementations that make
// the environment check sensitive to assumption violations.
ComponentPtr guarded_implementation(const DenotContract& c, ProcEnv inside) {
  StateSpacePtr space = contract_space(c);
  ProcEnv assume = c.assume;
  ProcEnv top = ProcEnv::top(space, c.iface.provided);
  return opaque_component(
      c.iface,
      [assume = std::move(assume), inside = std::move(inside),
       top = std::move(top)](const ProcEnv& rho) {
        return env_leq(rho, assume) ? inside : top;
      },
      "guarded");
}

}  // namespace

bool is_environment(const Component& m, const DenotContract& c,
                    const EnvCheckOptions& opt) {
  // m must be composable with every implementation; the maximal one provides
  // all of the contract's provided names.
  if (!names_disjoint(m.iface().provided, c.iface.provided)) return false;

  StateSpacePtr space = contract_space(c);
  Rng rng(mix_seed(opt.seed, "is_environment", 0));

  std::vector<ComponentPtr> impls;
  impls.push_back(max_implementation(c));
  for (int i = 0; i < opt.impl_samples; ++i) {
    ProcEnv inside =
        i == 0 ? c.guarantee : random_subenv(rng, c.guarantee, 0.7);
    impls.push_back(guarded_implementation(c, std::move(inside)));
  }

  for (const auto& impl : impls) {
    if (!composable(m, *impl)) return false;
    ComponentPtr joint = compose(std::make_shared<const Component>(m),
                                 impl);
    const auto& outer = joint->iface().required;
    std::vector<ProcEnv> args;
    if (outer.empty()) {
      args.emplace_back(space);
    } else {
      args.push_back(ProcEnv::bottom(space, outer));
      args.push_back(ProcEnv::top(space, outer));
      for (int i = 0; i < opt.env_samples; ++i)
        args.push_back(random_env(rng, space, outer, 0.4));
    }
    for (const auto& arg : args) {
      ProcEnv out = apply_component(*joint, arg);
      if (!env_leq(env_restrict(out, c.iface.provided), c.guarantee))
        return false;
    }
  }
  return true;
}

bool refines(const DenotContract& c1, const DenotContract& c2) {
  return env_leq(c2.assume, c1.assume) && env_leq(c1.guarantee, c2.guarantee);
}

DenotContract conjoin(const DenotContract& c1, const DenotContract& c2) {
  DenotContract out;
  out.assume = env_lub(c1.assume, c2.assume);
  out.guarantee = env_glb(c1.guarantee, c2.guarantee);
  out.iface = Interface(out.assume.names(), out.guarantee.names());
  return out;
}

bool contracts_composable(const DenotContract& c1, const DenotContract& c2) {
  if (!names_disjoint(c1.iface.provided, c2.iface.provided)) return false;
  for (const auto& p : c1.iface.required)
    if (c2.iface.provides_name(p) &&
        !c2.guarantee.at(p).subset_of(c1.assume.at(p)))
      return false;
  for (const auto& p : c2.iface.required)
    if (c1.iface.provides_name(p) &&
        !c1.guarantee.at(p).subset_of(c2.assume.at(p)))
      return false;
  return true;
}

DenotContract compose_contracts(const DenotContract& c1,
                                const DenotContract& c2) {
  const DenotContract pair[2] = {c1, c2};
  return compose_contracts_nary(pair);
}

DenotContract compose_contracts_nary(std::span<const DenotContract> cs) {
  if (cs.empty()) throw SemanticError("composition of zero contracts");
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (!contracts_composable(cs[i], cs[j]))
        throw ComposabilityError("contracts are not pairwise composable");

  std::vector<std::string> provided;
  std::vector<std::string> required_all;
  for (const auto& c : cs) {
    provided.insert(provided.end(), c.iface.provided.begin(),
                    c.iface.provided.end());
    required_all.insert(required_all.end(), c.iface.required.begin(),
                        c.iface.required.end());
  }
  std::sort(provided.begin(), provided.end());
  std::sort(required_all.begin(), required_all.end());
  required_all.erase(std::unique(required_all.begin(), required_all.end()),
                     required_all.end());
  std::vector<std::string> required;
  std::set_difference(required_all.begin(), required_all.end(),
                      provided.begin(), provided.end(),
                      std::back_inserter(required));

  StateSpacePtr space = contract_space(cs[0]);
  DenotContract out;
  out.iface = Interface(required, provided);

  out.guarantee = ProcEnv(space);
  for (const auto& c : cs)
    for (std::size_t i = 0; i < c.guarantee.size(); ++i) {
      const auto& name = c.guarantee.names()[i];
      if (out.guarantee.contains(name)) {
        out.guarantee.at_mut(name).or_with(c.guarantee.rel(i));
      } else {
        out.guarantee.bind(name, c.guarantee.rel(i));
      }
    }

  // Pointwise meet of the assumptions over the outer required names; a name
  // assumed by a single contract keeps that assumption.
  out.assume = ProcEnv(space);
  for (const auto& name : out.iface.required) {
    BitRel rel = BitRel::full(space);
    bool bound = false;
    for (const auto& c : cs)
      if (c.assume.contains(name)) {
        rel.and_with(c.assume.at(name));
        bound = true;
      }
    if (!bound)
      throw SemanticError("composition: unassumed outer name '" + name + "'");
    out.assume.bind(name, std::move(rel));
  }
  return out;
}

}  // namespace relsem
