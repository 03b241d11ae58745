#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Bit-vector kernels behind the relation and state-set types. Every
// operation works on whole 64-bit words; callers keep tail bits zero.
// A scalar reference implementation always exists; an AVX2 variant is
// compiled on x86-64 and selected at runtime when the CPU supports it.
// The two variants are equivalence-tested against each other.

namespace relsem::kern {

struct Ops {
  const char* name;
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // dst &= ~src
  void (*diff_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  // a & ~b == 0, i.e. a is a subset of b
  bool (*subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  bool (*any)(const std::uint64_t* a, std::size_t words);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t words);
};

const Ops& scalar_ops();

bool avx2_available();
const Ops& avx2_ops();  // only meaningful when avx2_available()

/// The variant all higher layers dispatch through.
const Ops& ops();

/// Force a variant: "auto", "scalar" or "avx2". Throws on unknown or
/// unsupported names. Intended for the CLI flag and the equivalence tests.
void select_ops(std::string_view which);

std::string_view active_name();

}  // namespace relsem::kern
