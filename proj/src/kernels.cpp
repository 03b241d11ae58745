#include "relsem/kernels.hpp"

#include <atomic>
#include <bit>

#include "relsem/errors.hpp"

namespace relsem::kern {

namespace {

void s_or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void s_and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void s_diff_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

bool s_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool s_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool s_any(const std::uint64_t* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i]) return true;
  return false;
}

std::uint64_t s_popcount(const std::uint64_t* a, std::size_t words) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < words; ++i) n += std::popcount(a[i]);
  return n;
}

constexpr Ops kScalar{
    "scalar", s_or_into, s_and_into, s_diff_into,
    s_subset, s_equal,   s_any,      s_popcount,
};

std::atomic<const Ops*> g_active{nullptr};

const Ops* detect() {
#ifdef RELSEM_HAVE_AVX2
  if (avx2_available()) return &avx2_ops();
#endif
  return &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

#ifndef RELSEM_HAVE_AVX2
bool avx2_available() { return false; }
const Ops& avx2_ops() { return kScalar; }
#endif

const Ops& ops() {
  const Ops* p = g_active.load(std::memory_order_relaxed);
  if (!p) {
    p = detect();
    g_active.store(p, std::memory_order_relaxed);
  }
  return *p;
}

void select_ops(std::string_view which) {
  if (which == "auto") {
    g_active.store(detect(), std::memory_order_relaxed);
  } else if (which == "scalar") {
    g_active.store(&kScalar, std::memory_order_relaxed);
  } else if (which == "avx2") {
    if (!avx2_available())
      throw Error("avx2 kernels are not available on this machine");
    g_active.store(&avx2_ops(), std::memory_order_relaxed);
  } else {
    throw Error("unknown kernel variant: " + std::string(which));
  }
}

std::string_view active_name() { return ops().name; }

}  // namespace relsem::kern
