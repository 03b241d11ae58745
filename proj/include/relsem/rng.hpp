#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relsem/env.hpp"

namespace relsem {

/// splitmix64. Self-contained so that seeded runs reproduce bit-identically
/// on any platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

/// Stable FNV-style mixing of a seed with a label and index, for
/// reproducible per-sample sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view label,
                              std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (const char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  h ^= index * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
  return Rng(h).next();
}

/// Random relation where each pair is present with probability `density`.
inline BitRel random_rel(Rng& rng, const StateSpacePtr& space, double density) {
  BitRel r = BitRel::empty(space);
  const std::size_t n = space->size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (rng.chance(density)) r.set(s, t);
  return r;
}

/// Random environment binding each name to a random relation.
inline ProcEnv random_env(Rng& rng, const StateSpacePtr& space,
                          const std::vector<std::string>& names,
                          double density) {
  ProcEnv env(space);
  for (const auto& name : names) env.bind(name, random_rel(rng, space, density));
  return env;
}

/// Random subrelation of `rel` (every pair kept with probability `keep`).
inline BitRel random_subrel(Rng& rng, const BitRel& rel, double keep) {
  BitRel out = rel;
  rel.for_each_pair([&](std::size_t s, std::size_t t) {
    if (!rng.chance(keep)) out.reset(s, t);
  });
  return out;
}

/// Random sub-environment, pointwise random_subrel.
inline ProcEnv random_subenv(Rng& rng, const ProcEnv& env, double keep) {
  ProcEnv out(env.space());
  for (std::size_t i = 0; i < env.size(); ++i)
    out.bind(env.names()[i], random_subrel(rng, env.rel(i), keep));
  return out;
}

}  // namespace relsem
