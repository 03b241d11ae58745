#include "relsem/domain.hpp"

#include <algorithm>
#include <set>

namespace relsem {

namespace {

// k^n with an overflow/cap guard; returns nullopt when the result exceeds cap.
std::optional<std::size_t> checked_pow(std::size_t k, std::size_t n,
                                       std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k != 0 && r > cap / k) return std::nullopt;
    r *= k;
    if (r > cap) return std::nullopt;
  }
  return r;
}

}  // namespace

void DomainConfig::validate() const {
  if (lo > hi) throw SemanticError("domain: lo > hi");
  if (variables.empty()) throw SemanticError("domain: no variables");
  std::set<std::string> seen;
  for (const auto& v : variables)
    if (!seen.insert(v).second)
      throw SemanticError("domain: duplicate variable '" + v + "'");
  if (!checked_pow(value_count(), variables.size(), state_cap))
    throw CapExceededError("domain: state count exceeds cap of " +
                           std::to_string(state_cap));
}

bool DomainConfig::same_domain(const DomainConfig& other) const {
  return lo == other.lo && hi == other.hi && variables == other.variables;
}

StateSpace::StateSpace(DomainConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  const std::size_t k = cfg_.value_count();
  const std::size_t v = cfg_.variables.size();
  weights_.assign(v, 1);
  for (std::size_t i = v; i-- > 0;)
    weights_[i] = (i + 1 < v) ? weights_[i + 1] * k : 1;
  size_ = weights_[0] * k;
}

std::optional<std::size_t> StateSpace::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < cfg_.variables.size(); ++i)
    if (cfg_.variables[i] == name) return i;
  return std::nullopt;
}

std::int64_t StateSpace::value(std::size_t state, std::size_t var) const {
  const std::size_t k = cfg_.value_count();
  return cfg_.lo + static_cast<std::int64_t>((state / weights_[var]) % k);
}

State StateSpace::decode(std::size_t state) const {
  State s;
  s.values.resize(var_count());
  for (std::size_t i = 0; i < var_count(); ++i) s.values[i] = value(state, i);
  return s;
}

std::size_t StateSpace::encode(const State& s) const {
  if (s.values.size() != var_count())
    throw DomainMismatchError("state arity does not match the domain");
  std::size_t id = 0;
  for (std::size_t i = 0; i < var_count(); ++i) {
    if (!in_range(s.values[i]))
      throw DomainMismatchError("state value out of domain range");
    id += static_cast<std::size_t>(s.values[i] - cfg_.lo) * weights_[i];
  }
  return id;
}

std::size_t StateSpace::with_value(std::size_t state, std::size_t var,
                                   std::int64_t v) const {
  const std::size_t k = cfg_.value_count();
  const std::size_t old_digit = (state / weights_[var]) % k;
  const std::size_t new_digit = static_cast<std::size_t>(v - cfg_.lo);
  return state - old_digit * weights_[var] + new_digit * weights_[var];
}

StateSpacePtr make_state_space(DomainConfig cfg) {
  return std::make_shared<const StateSpace>(std::move(cfg));
}

std::vector<State> enumerate_states(const DomainConfig& cfg) {
  StateSpace space(cfg);
  std::vector<State> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.decode(i));
  return out;
}

std::vector<Interpretation> enumerate_interpretations(
    const std::vector<std::string>& logicals, const DomainConfig& cfg) {
  const std::size_t k = cfg.value_count();
  auto count = checked_pow(k, logicals.size(), cfg.state_cap);
  if (!count)
    throw CapExceededError("interpretation count exceeds cap of " +
                           std::to_string(cfg.state_cap));
  std::vector<Interpretation> out;
  out.reserve(*count);
  for (std::size_t id = 0; id < *count; ++id) {
    Interpretation interp;
    interp.names = logicals;
    interp.values.resize(logicals.size());
    std::size_t rest = id;
    for (std::size_t i = logicals.size(); i-- > 0;) {
      interp.values[i] = cfg.lo + static_cast<std::int64_t>(rest % k);
      rest /= k;
    }
    out.push_back(std::move(interp));
  }
  return out;
}

}  // namespace relsem
