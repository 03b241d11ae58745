#include "relsem/env.hpp"

#include <algorithm>

namespace relsem {

namespace {

void check_spaces(const ProcEnv& a, const ProcEnv& b) {
  if (a.space() && b.space() && !a.space()->same_space(*b.space()))
    throw DomainMismatchError("environments over different state spaces");
}

StateSpacePtr merged_space(const ProcEnv& a, const ProcEnv& b) {
  check_spaces(a, b);
  return a.space() ? a.space() : b.space();
}

}  // namespace

ProcEnv ProcEnv::bottom(StateSpacePtr space, std::vector<std::string> names) {
  ProcEnv env(space);
  std::sort(names.begin(), names.end());
  for (auto& n : names) env.bind(std::move(n), BitRel::empty(space));
  return env;
}

ProcEnv ProcEnv::top(StateSpacePtr space, std::vector<std::string> names) {
  ProcEnv env(space);
  std::sort(names.begin(), names.end());
  for (auto& n : names) env.bind(std::move(n), BitRel::full(space));
  return env;
}

bool ProcEnv::contains(std::string_view name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

const BitRel& ProcEnv::at(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw SemanticError("environment has no binding for '" + std::string(name) +
                        "'");
  return rels_[static_cast<std::size_t>(it - names_.begin())];
}

BitRel& ProcEnv::at_mut(std::string_view name) {
  return const_cast<BitRel&>(static_cast<const ProcEnv*>(this)->at(name));
}

void ProcEnv::bind(std::string name, BitRel rel) {
  if (space_ && rel.space() && !space_->same_space(*rel.space()))
    throw DomainMismatchError("relation bound over a different state space");
  if (!space_) space_ = rel.space();
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  const auto idx = static_cast<std::size_t>(it - names_.begin());
  if (it != names_.end() && *it == name) {
    rels_[idx] = std::move(rel);
  } else {
    names_.insert(it, std::move(name));
    rels_.insert(rels_.begin() + static_cast<std::ptrdiff_t>(idx),
                 std::move(rel));
  }
}

bool ProcEnv::operator==(const ProcEnv& other) const {
  if (names_ != other.names_) return false;
  for (std::size_t i = 0; i < rels_.size(); ++i)
    if (!(rels_[i] == other.rels_[i])) return false;
  return true;
}

bool env_leq(const ProcEnv& r1, const ProcEnv& r2) {
  check_spaces(r1, r2);
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const auto& name = r1.names()[i];
    if (!r2.contains(name)) return false;
    if (!r1.rel(i).subset_of(r2.at(name))) return false;
  }
  return true;
}

ProcEnv env_lub(const ProcEnv& r1, const ProcEnv& r2) {
  ProcEnv out(merged_space(r1, r2));
  for (std::size_t i = 0; i < r1.size(); ++i) out.bind(r1.names()[i], r1.rel(i));
  for (std::size_t i = 0; i < r2.size(); ++i) {
    const auto& name = r2.names()[i];
    if (out.contains(name)) {
      out.at_mut(name).or_with(r2.rel(i));
    } else {
      out.bind(name, r2.rel(i));
    }
  }
  return out;
}

ProcEnv env_glb(const ProcEnv& r1, const ProcEnv& r2) {
  ProcEnv out(merged_space(r1, r2));
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const auto& name = r1.names()[i];
    if (!r2.contains(name)) continue;
    BitRel rel = r1.rel(i);
    rel.and_with(r2.at(name));
    out.bind(name, std::move(rel));
  }
  return out;
}

ProcEnv top_env(std::vector<std::string> names, StateSpacePtr space) {
  return ProcEnv::top(std::move(space), std::move(names));
}

ProcEnv env_restrict(const ProcEnv& r, const std::vector<std::string>& names) {
  ProcEnv out(r.space());
  for (const auto& n : names)
    if (r.contains(n)) out.bind(n, r.at(n));
  return out;
}

ProcEnv env_meet_on(const std::vector<std::string>& scope, const ProcEnv& r1,
                    const ProcEnv& r2) {
  ProcEnv out(merged_space(r1, r2));
  for (const auto& name : scope) {
    const bool in1 = r1.contains(name);
    const bool in2 = r2.contains(name);
    if (in1 && in2) {
      BitRel rel = r1.at(name);
      rel.and_with(r2.at(name));
      out.bind(name, std::move(rel));
    } else if (in1) {
      out.bind(name, r1.at(name));
    } else if (in2) {
      out.bind(name, r2.at(name));
    } else {
      throw SemanticError("meet scope name '" + name +
                          "' bound in neither environment");
    }
  }
  return out;
}

}  // namespace relsem
