#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fintopo/fin_space.hpp"

namespace fintopo {

// Total map between two finite spaces. Spaces are held by value and
// immutable; values_[x] is the codomain index of the image of domain
// point x.
class SpaceMap {
 public:
  SpaceMap() = default;  // the empty map between empty spaces

  SpaceMap(FinSpace domain, FinSpace codomain, std::vector<std::size_t> values)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        values_(std::move(values)) {
    if (values_.size() != domain_.size())
      throw MapSpaceMismatchError(
          "map must assign exactly one value to each domain point");
    for (std::size_t v : values_) {
      if (v >= codomain_.size())
        throw MapSpaceMismatchError("map value index out of codomain range");
    }
  }

  static SpaceMap from_labels(FinSpace domain, FinSpace codomain,
                              const std::map<std::string, std::string>& values) {
    std::vector<std::size_t> idx(domain.size(), 0);
    std::vector<bool> seen(domain.size(), false);
    for (const auto& [from, to] : values) {
      const std::size_t x = domain.index_of(from);
      idx[x] = codomain.index_of(to);
      seen[x] = true;
    }
    for (std::size_t x = 0; x < domain.size(); ++x) {
      if (!seen[x])
        throw MapSpaceMismatchError("no value for domain point \"" +
                                    domain.label(x) + "\"");
    }
    return SpaceMap(std::move(domain), std::move(codomain), std::move(idx));
  }

  static SpaceMap constant(FinSpace domain, FinSpace codomain,
                           const std::string& value_label) {
    const std::size_t v = codomain.index_of(value_label);
    std::vector<std::size_t> values(domain.size(), v);
    return SpaceMap(std::move(domain), std::move(codomain), std::move(values));
  }

  static SpaceMap identity(FinSpace space) {
    std::vector<std::size_t> values(space.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = i;
    FinSpace codomain = space;
    return SpaceMap(std::move(space), std::move(codomain), std::move(values));
  }

  const FinSpace& domain() const { return domain_; }
  const FinSpace& codomain() const { return codomain_; }

  std::size_t value(std::size_t x) const {
    assert(x < values_.size());
    return values_[x];
  }

  const std::vector<std::size_t>& values() const { return values_; }

  PointSet image(const PointSet& s) const {
    assert(s.universe_size() == domain_.size());
    PointSet img(codomain_.size());
    s.for_each([&](std::size_t x) { img.set(values_[x]); });
    return img;
  }

  bool constant_on(const PointSet& s) const {
    auto x0 = s.first();
    if (!x0) return true;
    bool same = true;
    s.for_each([&](std::size_t x) {
      if (values_[x] != values_[*x0]) same = false;
    });
    return same;
  }

  bool operator==(const SpaceMap& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ &&
           values_ == o.values_;
  }

 private:
  FinSpace domain_;
  FinSpace codomain_;
  std::vector<std::size_t> values_;
};

// f is continuous exactly when the image of each minimal neighborhood
// lands inside the minimal neighborhood of the image point.
inline bool is_continuous(const SpaceMap& f) {
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    if (!f.image(f.domain().min_nbhd(x))
             .is_subset_of(f.codomain().min_nbhd(f.value(x))))
      return false;
  }
  return true;
}

// Subset of the product of two spaces. The pair (x, y) is stored at index
// x * |codomain| + y, matching the point order of product(domain, codomain).
class GraphSet {
 public:
  GraphSet(FinSpace domain, FinSpace codomain, PointSet pairs)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        pairs_(std::move(pairs)) {
    assert(pairs_.universe_size() == domain_.size() * codomain_.size());
  }

  const FinSpace& domain() const { return domain_; }
  const FinSpace& codomain() const { return codomain_; }
  const PointSet& pairs() const { return pairs_; }

  std::size_t pair_count() const { return pairs_.count(); }

  bool contains(std::size_t x, std::size_t y) const {
    return pairs_.test(x * codomain_.size() + y);
  }

 private:
  FinSpace domain_;
  FinSpace codomain_;
  PointSet pairs_;
};

inline GraphSet graph_of(const SpaceMap& f) {
  const std::size_t m = f.codomain().size();
  PointSet pairs(f.domain().size() * m);
  for (std::size_t x = 0; x < f.domain().size(); ++x)
    pairs.set(x * m + f.value(x));
  return GraphSet(f.domain(), f.codomain(), std::move(pairs));
}

// Restriction to the subspace on `subset`; the codomain is unchanged.
inline SpaceMap restrict_to(const SpaceMap& f, const PointSet& subset) {
  assert(subset.universe_size() == f.domain().size());
  std::vector<std::size_t> values;
  values.reserve(subset.count());
  subset.for_each([&](std::size_t x) { values.push_back(f.value(x)); });
  return SpaceMap(f.domain().subspace(subset), f.codomain(),
                  std::move(values));
}

}  // namespace fintopo
