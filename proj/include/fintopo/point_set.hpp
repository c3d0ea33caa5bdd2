#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace fintopo {

// Set of point indices over a fixed universe 0..universe_size-1, packed
// 64 per word. Binary operations require both operands to share the same
// universe; bits past the universe stay zero so operator== and count()
// can work wordwise.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + 63) / 64, 0) {}

  static PointSet full(std::size_t universe_size) {
    PointSet s(universe_size);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.clear_padding();
    return s;
  }

  static PointSet of(std::size_t universe_size,
                     std::initializer_list<std::size_t> members) {
    PointSet s(universe_size);
    for (std::size_t m : members) s.set(m);
    return s;
  }

  // Low word as the whole set; only valid for universes of at most 64.
  static PointSet from_mask(std::size_t universe_size, std::uint64_t mask) {
    assert(universe_size <= 64);
    PointSet s(universe_size);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.clear_padding();
    return s;
  }

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  PointSet& operator|=(const PointSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  PointSet& operator&=(const PointSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference.
  PointSet& operator-=(const PointSet& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  bool intersects(const PointSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const PointSet& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const PointSet& o) const = default;

  std::optional<std::size_t> first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
  }

  // Visits members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> v;
    v.reserve(count());
    for_each([&](std::size_t i) { v.push_back(i); });
    return v;
  }

  std::uint64_t as_mask() const {
    assert(size_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

 private:
  void clear_padding() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fintopo
