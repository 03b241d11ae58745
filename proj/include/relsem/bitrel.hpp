#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relsem/domain.hpp"

namespace relsem {

/// Subset of the state space, one bit per state.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(StateSpacePtr space);

  static StateSet full(StateSpacePtr space);

  const StateSpacePtr& space() const { return space_; }
  std::size_t size() const { return n_; }
  std::size_t words() const { return bits_.size(); }

  bool test(std::size_t s) const {
    return bits_[s >> 6] >> (s & 63) & 1;
  }
  void set(std::size_t s) { bits_[s >> 6] |= std::uint64_t{1} << (s & 63); }
  void reset(std::size_t s) { bits_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

  std::uint64_t* data() { return bits_.data(); }
  const std::uint64_t* data() const { return bits_.data(); }

  std::size_t count() const;
  bool empty() const;
  void complement();  // in place, keeps tail bits zero

  bool operator==(const StateSet& other) const;

 private:
  StateSpacePtr space_;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Finite binary relation on States, stored as an n-by-n bit matrix.
/// Rows are source states, columns target states; pairs enumerate in
/// row-major order, which is the canonical (s, s') order everywhere.
class BitRel {
 public:
  BitRel() = default;

  static BitRel empty(StateSpacePtr space);
  static BitRel identity(StateSpacePtr space);
  static BitRel full(StateSpacePtr space);

  const StateSpacePtr& space() const { return space_; }
  std::size_t states() const { return n_; }
  std::size_t row_words() const { return row_words_; }

  bool test(std::size_t s, std::size_t t) const {
    return row(s)[t >> 6] >> (t & 63) & 1;
  }
  void set(std::size_t s, std::size_t t) {
    row(s)[t >> 6] |= std::uint64_t{1} << (t & 63);
  }
  void reset(std::size_t s, std::size_t t) {
    row(s)[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
  }

  std::uint64_t* row(std::size_t s) { return bits_.data() + s * row_words_; }
  const std::uint64_t* row(std::size_t s) const {
    return bits_.data() + s * row_words_;
  }

  std::size_t pair_count() const;
  bool is_empty() const;

  void or_with(const BitRel& other);
  void and_with(const BitRel& other);
  void diff_with(const BitRel& other);  // this \ other

  bool subset_of(const BitRel& other) const;
  bool operator==(const BitRel& other) const;

  /// Diagrammatic composition: (s,t) iff exists u with (s,u) here
  /// and (u,t) in `then`.
  BitRel compose(const BitRel& then) const;

  /// Keep only rows whose source state is in `sources`.
  void restrict_sources(const StateSet& sources);

  /// First `limit` pairs in canonical order.
  std::vector<std::pair<std::size_t, std::size_t>> first_pairs(
      std::size_t limit) const;

  template <typename F>
  void for_each_pair(F&& f) const {
    for (std::size_t s = 0; s < n_; ++s) {
      const std::uint64_t* r = row(s);
      for (std::size_t w = 0; w < row_words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          const std::size_t t = (w << 6) + std::countr_zero(bits);
          f(s, t);
          bits &= bits - 1;
        }
      }
    }
  }

 private:
  BitRel(StateSpacePtr space, bool fill);
  void check_same_space(const BitRel& other) const;

  StateSpacePtr space_;
  std::size_t n_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace relsem
