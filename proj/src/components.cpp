#include "relsem/components.hpp"

#include <algorithm>
#include <set>

namespace relsem {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> set_union(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<std::string> set_minus(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool disjoint(const std::vector<std::string>& a,
              const std::vector<std::string>& b) {
  std::vector<std::string> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  return inter.empty();
}

StateSpacePtr component_space(const Component& m);

StateSpacePtr kind_space(const Component::Kind& k) {
  if (const auto* b = std::get_if<Component::Base>(&k)) return b->space;
  if (const auto* c = std::get_if<Component::Composite>(&k))
    return component_space(*c->left);
  if (const auto* c = std::get_if<Component::Constant>(&k))
    return c->output.space();
  return nullptr;
}

StateSpacePtr component_space(const Component& m) { return kind_space(m.kind()); }

}  // namespace

Interface::Interface(std::vector<std::string> req, std::vector<std::string> prov)
    : required(sorted_unique(std::move(req))),
      provided(sorted_unique(std::move(prov))) {
  if (!disjoint(required, provided))
    throw SemanticError("interface: required and provided sets overlap");
}

bool Interface::requires_name(std::string_view name) const {
  return std::binary_search(required.begin(), required.end(), name);
}

bool Interface::provides_name(std::string_view name) const {
  return std::binary_search(provided.begin(), provided.end(), name);
}

ComponentPtr base_component(std::vector<ProcDecl> decls, StateSpacePtr space,
                            std::vector<std::string> extra_required) {
  std::set<std::string> names;
  for (const auto& d : decls)
    if (!names.insert(d.name).second)
      throw SemanticError("duplicate procedure '" + d.name +
                          "' in component declarations");
  std::vector<std::string> provided(names.begin(), names.end());
  std::vector<std::string> called = std::move(extra_required);
  for (const auto& d : decls)
    for (auto& c : collect_calls(*d.body)) called.push_back(c);
  Interface iface(set_minus(sorted_unique(std::move(called)), provided),
                  std::move(provided));
  return std::make_shared<const Component>(
      std::move(iface), Component::Base{std::move(decls), std::move(space)});
}

ComponentPtr constant_component(Interface iface, ProcEnv output) {
  if (output.names() != iface.provided)
    throw SemanticError("constant component output scope differs from its "
                        "provided set");
  return std::make_shared<const Component>(std::move(iface),
                                           Component::Constant{std::move(output)});
}

ComponentPtr opaque_component(Interface iface,
                              std::function<ProcEnv(const ProcEnv&)> fn,
                              std::string label) {
  return std::make_shared<const Component>(
      std::move(iface), Component::Opaque{std::move(fn), std::move(label)});
}

bool composable(const Component& m1, const Component& m2) {
  return disjoint(m1.iface().provided, m2.iface().provided);
}

ComponentPtr compose(ComponentPtr m1, ComponentPtr m2) {
  if (!m1 || !m2) throw SemanticError("compose: null component");
  if (!composable(*m1, *m2))
    throw ComposabilityError("components provide a common procedure");
  const auto provided = set_union(m1->iface().provided, m2->iface().provided);
  auto required =
      set_minus(set_union(m1->iface().required, m2->iface().required), provided);
  Interface iface(std::move(required), provided);
  return std::make_shared<const Component>(
      std::move(iface), Component::Composite{std::move(m1), std::move(m2)});
}

namespace {

// Environment fed to one side of a composition: partner-provided names are
// routed to the joint provided candidate, the rest to the outer required
// environment.
ProcEnv side_feed(const Interface& side, const Interface& partner,
                  const ProcEnv& joint, const ProcEnv& outer) {
  ProcEnv feed(joint.space() ? joint.space() : outer.space());
  for (const auto& p : side.required) {
    if (partner.provides_name(p)) {
      feed.bind(p, joint.at(p));
    } else {
      feed.bind(p, outer.at(p));
    }
  }
  return feed;
}

}  // namespace

ProcEnv apply_component(const Component& m, const ProcEnv& rho_minus) {
  if (rho_minus.names() != m.iface().required)
    throw SemanticError(
        "apply_component: argument scope differs from the required set");

  if (const auto* b = std::get_if<Component::Base>(&m.kind())) {
    Program prog{b->decls, b->space->config()};
    ProcEnv arg = rho_minus;
    if (!arg.space()) arg = ProcEnv(b->space);  // empty scope, fix the space
    return standard_denotation(prog, arg);
  }

  if (const auto* c = std::get_if<Component::Constant>(&m.kind()))
    return c->output;

  if (const auto* o = std::get_if<Component::Opaque>(&m.kind()))
    return o->fn(rho_minus);

  const auto& comp = std::get<Component::Composite>(m.kind());
  StateSpacePtr space =
      rho_minus.space() ? rho_minus.space() : component_space(m);
  if (!space)
    throw SemanticError("apply_component: composite without a state space");

  auto chi = [&](const ProcEnv& joint) {
    ProcEnv out(space);
    ProcEnv left_out = apply_component(
        *comp.left, side_feed(comp.left->iface(), comp.right->iface(), joint,
                              rho_minus));
    ProcEnv right_out = apply_component(
        *comp.right, side_feed(comp.right->iface(), comp.left->iface(), joint,
                               rho_minus));
    for (const auto& p : m.iface().provided)
      out.bind(p, comp.left->iface().provides_name(p) ? left_out.at(p)
                                                      : right_out.at(p));
    return out;
  };
  return lfp(chi, ProcEnv::bottom(space, m.iface().provided));
}

bool check_monotone(
    const Component& m,
    std::span<const std::pair<ProcEnv, ProcEnv>> ordered_samples) {
  for (const auto& [lo, hi] : ordered_samples) {
    if (!env_leq(lo, hi))
      throw SemanticError("check_monotone: sample pair is not ordered");
    if (!env_leq(apply_component(m, lo), apply_component(m, hi))) return false;
  }
  return true;
}

}  // namespace relsem
