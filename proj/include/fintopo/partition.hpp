#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "fintopo/fin_space.hpp"

namespace fintopo {

// Disjoint nonempty classes covering every point. Canonical order: classes
// sorted by their smallest member, members ascending within a class.
class Partition {
 public:
  Partition() = default;

  // Normalizes arbitrary class ids (one per point, equal id = same class)
  // into the canonical order.
  static Partition from_class_ids(std::size_t n,
                                  const std::vector<std::size_t>& ids) {
    assert(ids.size() == n);
    Partition p;
    p.class_of_.assign(n, 0);
    std::map<std::size_t, std::size_t> renumber;  // id -> canonical index
    for (std::size_t x = 0; x < n; ++x) {
      auto [it, fresh] = renumber.emplace(ids[x], p.classes_.size());
      if (fresh) p.classes_.emplace_back(n);
      p.class_of_[x] = it->second;
      p.classes_[it->second].set(x);
    }
    return p;
  }

  std::size_t point_count() const { return class_of_.size(); }
  std::size_t count() const { return classes_.size(); }

  const std::vector<PointSet>& classes() const { return classes_; }

  const PointSet& class_at(std::size_t k) const {
    assert(k < classes_.size());
    return classes_[k];
  }

  std::size_t class_of(std::size_t point) const {
    assert(point < class_of_.size());
    return class_of_[point];
  }

  bool operator==(const Partition& o) const { return classes_ == o.classes_; }

 private:
  std::vector<PointSet> classes_;
  std::vector<std::size_t> class_of_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// No proper nonempty part of `mask` may be relatively open together with
// its complement. Neighborhoods are passed pre-masked to 64-bit words.
inline bool connected_mask(const std::vector<std::uint64_t>& nbhd,
                           std::uint64_t mask) {
  if ((mask & (mask - 1)) == 0) return true;  // one point or empty
  const std::uint64_t low = mask & (~mask + 1);
  auto relatively_open = [&](std::uint64_t part) {
    for (std::uint64_t bits = part; bits;) {
      const int x = std::countr_zero(bits);
      bits &= bits - 1;
      if ((nbhd[static_cast<std::size_t>(x)] & mask) & ~part) return false;
    }
    return true;
  };
  // Each separation is visited once by keeping the lowest point on one side.
  for (std::uint64_t part = (mask - 1) & mask; part; part = (part - 1) & mask) {
    if (!(part & low)) continue;
    if (part == mask) continue;
    if (relatively_open(part) && relatively_open(mask ^ part)) return false;
  }
  return true;
}

}  // namespace detail

inline constexpr std::size_t kComponentsOracleDefaultLimit = 12;

// Connected components computed as the classes of the relation "the
// minimal neighborhoods overlap", closed transitively: a chain
// x = x_1, ..., x_n = y with V_{x_i} meeting V_{x_{i+1}} links x to y.
// Every point of a neighborhood unions with the first point seen owning
// it, so the pass is linear in the total neighborhood size.
inline Partition components(const FinSpace& space) {
  const std::size_t n = space.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  detail::UnionFind uf(n);
  std::vector<std::size_t> first_owner(n, kNone);
  for (std::size_t x = 0; x < n; ++x) {
    space.min_nbhd(x).for_each([&](std::size_t y) {
      if (first_owner[y] == kNone)
        first_owner[y] = x;
      else
        uf.unite(first_owner[y], x);
    });
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t x = 0; x < n; ++x) ids[x] = uf.find(x);
  return Partition::from_class_ids(n, ids);
}

// True when the subspace on `subset` admits no partition into two nonempty
// relatively open parts. Exhaustive over all 2^|subset| candidate parts;
// requires a universe of at most 63 points.
inline bool is_connected_subset_bruteforce(const FinSpace& space,
                                           const PointSet& subset) {
  const std::size_t n = space.size();
  if (n > 63) throw OracleTooLargeError(n, 63);
  std::vector<std::uint64_t> nbhd(n);
  for (std::size_t x = 0; x < n; ++x) nbhd[x] = space.min_nbhd(x).as_mask();
  return detail::connected_mask(nbhd, subset.as_mask());
}

// Definition-level component computation, independent of the overlap
// relation: the component of x is the union of every connected subset
// containing x, with connectedness decided by exhaustive separation
// search. Exponential in the point count, hence the size cap.
inline Partition components_oracle(
    const FinSpace& space,
    std::size_t max_points = kComponentsOracleDefaultLimit) {
  const std::size_t n = space.size();
  const std::size_t limit = std::min<std::size_t>(max_points, 63);
  if (n > limit) throw OracleTooLargeError(n, limit);

  std::vector<std::uint64_t> nbhd(n);
  for (std::size_t x = 0; x < n; ++x) nbhd[x] = space.min_nbhd(x).as_mask();

  std::vector<std::uint64_t> component(n, 0);
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  for (std::uint64_t mask = 1; mask <= all && n > 0; ++mask) {
    if (!detail::connected_mask(nbhd, mask)) continue;
    for (std::uint64_t bits = mask; bits;) {
      const int x = std::countr_zero(bits);
      bits &= bits - 1;
      component[static_cast<std::size_t>(x)] |= mask;
    }
  }

  std::vector<std::size_t> ids(n);
  for (std::size_t x = 0; x < n; ++x) {
    // The union of connected sets through x is itself connected, so the
    // accumulated masks must agree across a class; the smallest member
    // serves as the id.
    ids[x] = static_cast<std::size_t>(std::countr_zero(component[x]));
  }
  return Partition::from_class_ids(n, ids);
}

}  // namespace fintopo
