#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relsem/errors.hpp"

namespace relsem {

/// Default bound on |State| = (hi-lo+1)^|variables| and on the number of
/// logical-variable interpretations enumerated per contract.
inline constexpr std::size_t kDefaultStateCap = 65536;

/// Finite value domain [lo, hi] over an ordered set of program variables.
struct DomainConfig {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::string> variables;
  std::size_t state_cap = kDefaultStateCap;

  std::size_t value_count() const {
    return static_cast<std::size_t>(hi - lo + 1);
  }

  /// Throws on lo > hi, empty variable set, duplicate variables, or a state
  /// count above the cap.
  void validate() const;

  /// lo/hi/variables only; the cap does not affect semantic identity.
  bool same_domain(const DomainConfig& other) const;
};

/// Total assignment of in-range values to the domain's variables,
/// aligned with DomainConfig::variables.
struct State {
  std::vector<std::int64_t> values;

  bool operator==(const State&) const = default;
};

/// Total assignment of values to a contract's logical variables.
struct Interpretation {
  std::vector<std::string> names;
  std::vector<std::int64_t> values;

  std::optional<std::int64_t> lookup(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return values[i];
    return std::nullopt;
  }
};

/// Enumerated carrier of States for one DomainConfig. States are numbered
/// 0..size()-1 in lexicographic order of their value tuples (the first
/// variable is the most significant digit), which fixes the iteration order
/// everywhere else in the library.
class StateSpace {
 public:
  explicit StateSpace(DomainConfig cfg);

  const DomainConfig& config() const { return cfg_; }
  std::size_t size() const { return size_; }
  std::size_t var_count() const { return cfg_.variables.size(); }

  std::optional<std::size_t> var_index(std::string_view name) const;

  std::int64_t value(std::size_t state, std::size_t var) const;
  State decode(std::size_t state) const;
  std::size_t encode(const State& s) const;

  /// Index of s[var := v]; v must be in range.
  std::size_t with_value(std::size_t state, std::size_t var,
                         std::int64_t v) const;

  bool in_range(std::int64_t v) const { return v >= cfg_.lo && v <= cfg_.hi; }

  bool same_space(const StateSpace& other) const {
    return this == &other || cfg_.same_domain(other.cfg_);
  }

 private:
  DomainConfig cfg_;
  std::size_t size_;
  std::vector<std::size_t> weights_;  // weights_[i] = k^(vars-1-i)
};

using StateSpacePtr = std::shared_ptr<const StateSpace>;

StateSpacePtr make_state_space(DomainConfig cfg);

/// All states of the domain in their canonical order.
std::vector<State> enumerate_states(const DomainConfig& cfg);

/// All interpretations of the given logical variables over [lo, hi] of the
/// domain, in lexicographic order. Throws CapExceededError when the count
/// exceeds the domain's cap.
std::vector<Interpretation> enumerate_interpretations(
    const std::vector<std::string>& logicals, const DomainConfig& cfg);

}  // namespace relsem
