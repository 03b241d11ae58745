#include "relsem/bitrel.hpp"

#include <bit>

#include "relsem/kernels.hpp"

namespace relsem {

namespace {

constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

// Zero out bits >= n in the last word so whole-buffer kernels stay exact.
void mask_tail(std::uint64_t* words, std::size_t n) {
  const std::size_t rem = n & 63;
  if (rem) words[word_count(n) - 1] &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace

StateSet::StateSet(StateSpacePtr space)
    : space_(std::move(space)), n_(space_->size()), bits_(word_count(n_), 0) {}

StateSet StateSet::full(StateSpacePtr space) {
  StateSet s(std::move(space));
  for (auto& w : s.bits_) w = ~std::uint64_t{0};
  mask_tail(s.bits_.data(), s.n_);
  return s;
}

std::size_t StateSet::count() const {
  return kern::ops().popcount(bits_.data(), bits_.size());
}

bool StateSet::empty() const {
  return !kern::ops().any(bits_.data(), bits_.size());
}

void StateSet::complement() {
  for (auto& w : bits_) w = ~w;
  mask_tail(bits_.data(), n_);
}

bool StateSet::operator==(const StateSet& other) const {
  return n_ == other.n_ &&
         kern::ops().equal(bits_.data(), other.bits_.data(), bits_.size());
}

BitRel::BitRel(StateSpacePtr space, bool fill)
    : space_(std::move(space)),
      n_(space_->size()),
      row_words_(word_count(n_)),
      bits_(n_ * row_words_, fill ? ~std::uint64_t{0} : 0) {
  if (fill)
    for (std::size_t s = 0; s < n_; ++s) mask_tail(row(s), n_);
}

BitRel BitRel::empty(StateSpacePtr space) { return BitRel(std::move(space), false); }

BitRel BitRel::full(StateSpacePtr space) { return BitRel(std::move(space), true); }

BitRel BitRel::identity(StateSpacePtr space) {
  BitRel r(std::move(space), false);
  for (std::size_t s = 0; s < r.n_; ++s) r.set(s, s);
  return r;
}

void BitRel::check_same_space(const BitRel& other) const {
  if (!space_ || !other.space_ || !space_->same_space(*other.space_))
    throw DomainMismatchError("relations over different state spaces");
}

std::size_t BitRel::pair_count() const {
  return kern::ops().popcount(bits_.data(), bits_.size());
}

bool BitRel::is_empty() const {
  return !kern::ops().any(bits_.data(), bits_.size());
}

void BitRel::or_with(const BitRel& other) {
  check_same_space(other);
  kern::ops().or_into(bits_.data(), other.bits_.data(), bits_.size());
}

void BitRel::and_with(const BitRel& other) {
  check_same_space(other);
  kern::ops().and_into(bits_.data(), other.bits_.data(), bits_.size());
}

void BitRel::diff_with(const BitRel& other) {
  check_same_space(other);
  kern::ops().diff_into(bits_.data(), other.bits_.data(), bits_.size());
}

bool BitRel::subset_of(const BitRel& other) const {
  check_same_space(other);
  return kern::ops().subset(bits_.data(), other.bits_.data(), bits_.size());
}

bool BitRel::operator==(const BitRel& other) const {
  check_same_space(other);
  return kern::ops().equal(bits_.data(), other.bits_.data(), bits_.size());
}

BitRel BitRel::compose(const BitRel& then) const {
  check_same_space(then);
  BitRel out = BitRel::empty(space_);
  for (std::size_t s = 0; s < n_; ++s) {
    const std::uint64_t* r = row(s);
    std::uint64_t* dst = out.row(s);
    for (std::size_t w = 0; w < row_words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        const std::size_t u = (w << 6) + std::countr_zero(bits);
        kern::ops().or_into(dst, then.row(u), row_words_);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

void BitRel::restrict_sources(const StateSet& sources) {
  for (std::size_t s = 0; s < n_; ++s)
    if (!sources.test(s))
      for (std::size_t w = 0; w < row_words_; ++w) row(s)[w] = 0;
}

std::vector<std::pair<std::size_t, std::size_t>> BitRel::first_pairs(
    std::size_t limit) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < n_ && out.size() < limit; ++s) {
    const std::uint64_t* r = row(s);
    for (std::size_t w = 0; w < row_words_ && out.size() < limit; ++w) {
      std::uint64_t bits = r[w];
      while (bits && out.size() < limit) {
        out.emplace_back(s, (w << 6) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

}  // namespace relsem
