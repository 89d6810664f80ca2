#ifndef POSETCM_BITSET_HPP
#define POSETCM_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace posetcm {

// Fixed-width dynamic bitset over element ids. Width is set at construction
// and every binary operation requires equal widths.
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t width, bool value = false)
      : width_(width), words_((width + 63) / 64, value ? ~Word{0} : Word{0}) {
    trim();
  }

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t i) const noexcept {
    assert(i < width_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) noexcept {
    assert(i < width_);
    words_[i >> 6] |= Word{1} << (i & 63);
  }
  void reset(std::size_t i) noexcept {
    assert(i < width_);
    words_[i >> 6] &= ~(Word{1} << (i & 63));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  bool is_subset_of(const Bitset& o) const noexcept {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const noexcept {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  // popcount of (*this & o) without materializing the intersection
  std::size_t count_and(const Bitset& o) const noexcept {
    assert(width_ == o.width_);
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }

  std::size_t find_first() const noexcept { return find_from(0); }
  std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& subtract(const Bitset& o) noexcept {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  Bitset operator~() const {
    Bitset r(*this);
    for (Word& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  std::size_t find_from(std::size_t i) const noexcept {
    if (i >= width_) return npos;
    std::size_t k = i >> 6;
    Word w = words_[k] & (~Word{0} << (i & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return npos;
      w = words_[k];
    }
  }
  void trim() noexcept {
    if (width_ % 64 != 0 && !words_.empty())
      words_.back() &= (Word{1} << (width_ % 64)) - 1;
  }

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

}  // namespace posetcm

#endif
