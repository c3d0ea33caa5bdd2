#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fintopo/errors.hpp"
#include "fintopo/point_set.hpp"

namespace fintopo {

// First defect found when checking a raw space description. The two axioms
// on the minimal-neighborhood function are: x lies in its own neighborhood,
// and y in the neighborhood of x implies the neighborhood of y is contained
// in that of x.
struct ValidationError {
  enum class Kind {
    DuplicatePoint,
    UnknownPoint,
    ReflexivityViolation,
    InteriorityViolation,
  };

  Kind kind;
  std::string x;  // offending point
  std::string y;  // second point for interiority violations, else empty

  bool operator==(const ValidationError&) const = default;

  std::string describe() const {
    switch (kind) {
      case Kind::DuplicatePoint:
        return "duplicate point \"" + x + "\"";
      case Kind::UnknownPoint:
        return "unknown point \"" + x + "\"";
      case Kind::ReflexivityViolation:
        return "point \"" + x + "\" is not in its own minimal neighborhood";
      case Kind::InteriorityViolation:
        return "min_nbhd(\"" + y + "\") is not contained in min_nbhd(\"" + x +
               "\") although \"" + y + "\" lies in min_nbhd(\"" + x + "\")";
    }
    return "";
  }
};

inline const char* to_string(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::DuplicatePoint:
      return "DuplicatePoint";
    case ValidationError::Kind::UnknownPoint:
      return "UnknownPoint";
    case ValidationError::Kind::ReflexivityViolation:
      return "ReflexivityViolation";
    case ValidationError::Kind::InteriorityViolation:
      return "InteriorityViolation";
  }
  return "";
}

class InvalidSpaceError : public Error {
 public:
  explicit InvalidSpaceError(ValidationError detail)
      : Error(to_string(detail.kind), detail.describe()),
        detail_(std::move(detail)) {}

  const ValidationError& detail() const noexcept { return detail_; }

 private:
  ValidationError detail_;
};

// Finite topological space represented by the smallest open neighborhood
// of each point. The neighborhoods are the single source of truth: open
// sets, closures and closed points are all derived from them. Immutable
// once built.
class FinSpace {
 public:
  // Raw, possibly invalid description as read from input files. min_nbhd
  // keys must cover the points exactly; a missing key is an empty
  // neighborhood, which always fails validation.
  struct Data {
    std::vector<std::string> points;
    std::map<std::string, std::vector<std::string>> min_nbhd;
  };

  FinSpace() = default;  // the empty space

  // Checks identifier integrity and both axioms; reports the first defect
  // in a fixed scan order (duplicates, unknown ids, reflexivity,
  // interiority; points in listed order throughout).
  static std::optional<ValidationError> validate(const Data& data) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < data.points.size(); ++i) {
      if (!index.emplace(data.points[i], i).second)
        return ValidationError{ValidationError::Kind::DuplicatePoint,
                               data.points[i], ""};
    }
    for (const auto& [key, members] : data.min_nbhd) {
      if (!index.count(key))
        return ValidationError{ValidationError::Kind::UnknownPoint, key, ""};
      for (const auto& m : members) {
        if (!index.count(m))
          return ValidationError{ValidationError::Kind::UnknownPoint, m, ""};
      }
    }
    const std::size_t n = data.points.size();
    std::vector<PointSet> rows(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      auto it = data.min_nbhd.find(data.points[i]);
      if (it == data.min_nbhd.end()) continue;
      for (const auto& m : it->second) rows[i].set(index.at(m));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].test(i))
        return ValidationError{ValidationError::Kind::ReflexivityViolation,
                               data.points[i], ""};
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto it = data.min_nbhd.find(data.points[i]);
      if (it == data.min_nbhd.end()) continue;
      for (const auto& m : it->second) {
        if (!rows[index.at(m)].is_subset_of(rows[i]))
          return ValidationError{ValidationError::Kind::InteriorityViolation,
                                 data.points[i], m};
      }
    }
    return std::nullopt;
  }

  // Throws InvalidSpaceError when validate(data) reports a defect.
  static FinSpace build(const Data& data) {
    if (auto err = validate(data)) throw InvalidSpaceError(*err);
    FinSpace s;
    s.labels_ = data.points;
    const std::size_t n = s.labels_.size();
    for (std::size_t i = 0; i < n; ++i) s.index_.emplace(s.labels_[i], i);
    s.min_nbhd_.assign(n, PointSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& m : data.min_nbhd.at(s.labels_[i]))
        s.min_nbhd_[i].set(s.index_.at(m));
    }
    return s;
  }

  // Trusted constructor for code that produces valid spaces by
  // construction (products, subspaces, generated spaces). Labels must be
  // unique and each neighborhood a set over the same universe; the axioms
  // themselves are not re-checked here.
  static FinSpace from_neighborhoods(std::vector<std::string> labels,
                                     std::vector<PointSet> min_nbhds) {
    FinSpace s;
    const std::size_t n = labels.size();
    if (min_nbhds.size() != n)
      throw InvalidSpaceError(
          {ValidationError::Kind::UnknownPoint, "<size mismatch>", ""});
    s.labels_ = std::move(labels);
    s.min_nbhd_ = std::move(min_nbhds);
    for (std::size_t i = 0; i < n; ++i) {
      assert(s.min_nbhd_[i].universe_size() == n);
      if (!s.index_.emplace(s.labels_[i], i).second)
        throw InvalidSpaceError(
            {ValidationError::Kind::DuplicatePoint, s.labels_[i], ""});
    }
    return s;
  }

  // Re-checks both axioms on the built representation.
  std::optional<ValidationError> verify() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!min_nbhd_[i].test(i))
        return ValidationError{ValidationError::Kind::ReflexivityViolation,
                               labels_[i], ""};
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<ValidationError> err;
      min_nbhd_[i].for_each([&](std::size_t y) {
        if (!err && !min_nbhd_[y].is_subset_of(min_nbhd_[i]))
          err = ValidationError{ValidationError::Kind::InteriorityViolation,
                                labels_[i], labels_[y]};
      });
      if (err) return err;
    }
    return std::nullopt;
  }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(std::size_t i) const {
    assert(i < size());
    return labels_[i];
  }

  std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw UnknownPointError(label);
    return *i;
  }

  const PointSet& min_nbhd(std::size_t x) const {
    assert(x < size());
    return min_nbhd_[x];
  }

  PointSet universe() const { return PointSet::full(size()); }

  PointSet to_point_set(const std::vector<std::string>& members) const {
    PointSet s(size());
    for (const auto& m : members) s.set(index_of(m));
    return s;
  }

  // Ascending point order.
  std::vector<std::string> to_labels(const PointSet& s) const {
    assert(s.universe_size() == size());
    std::vector<std::string> out;
    out.reserve(s.count());
    s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  // p lies in the closure of s exactly when its minimal neighborhood
  // meets s.
  PointSet closure(const PointSet& s) const {
    assert(s.universe_size() == size());
    PointSet cl(size());
    for (std::size_t p = 0; p < size(); ++p)
      if (min_nbhd_[p].intersects(s)) cl.set(p);
    return cl;
  }

  bool is_open(const PointSet& s) const {
    assert(s.universe_size() == size());
    bool open = true;
    s.for_each([&](std::size_t x) {
      if (open && !min_nbhd_[x].is_subset_of(s)) open = false;
    });
    return open;
  }

  bool is_closed(const PointSet& s) const { return closure(s) == s; }

  bool is_closed_point(std::size_t x) const {
    assert(x < size());
    for (std::size_t p = 0; p < size(); ++p)
      if (p != x && min_nbhd_[p].test(x)) return false;
    return true;
  }

  PointSet closed_points() const {
    PointSet closed = PointSet::full(size());
    for (std::size_t p = 0; p < size(); ++p) {
      PointSet others = min_nbhd_[p];
      others.reset(p);
      closed -= others;
    }
    return closed;
  }

  // Subspace on `keep`: labels preserved, neighborhoods intersected with
  // keep and reindexed.
  FinSpace subspace(const PointSet& keep) const {
    assert(keep.universe_size() == size());
    const auto members = keep.to_vector();
    std::vector<std::size_t> new_index(size(), 0);
    for (std::size_t k = 0; k < members.size(); ++k)
      new_index[members[k]] = k;

    std::vector<std::string> labels;
    labels.reserve(members.size());
    std::vector<PointSet> rows(members.size(), PointSet(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) {
      labels.push_back(labels_[members[k]]);
      PointSet clipped = min_nbhd_[members[k]] & keep;
      clipped.for_each([&](std::size_t old) { rows[k].set(new_index[old]); });
    }
    return from_neighborhoods(std::move(labels), std::move(rows));
  }

  bool operator==(const FinSpace& o) const {
    return labels_ == o.labels_ && min_nbhd_ == o.min_nbhd_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PointSet> min_nbhd_;
};

inline std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

// Product space. Points are the pairs "(p,q)" in left-major order, so the
// pair (i, j) sits at index i * |b| + j; its minimal neighborhood is the
// product of the factor neighborhoods.
inline FinSpace product(const FinSpace& a, const FinSpace& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<PointSet> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      labels.push_back(pair_label(a.label(i), b.label(j)));
      PointSet v(n);
      a.min_nbhd(i).for_each([&](std::size_t p) {
        b.min_nbhd(j).for_each([&](std::size_t q) { v.set(p * nb + q); });
      });
      rows.push_back(std::move(v));
    }
  }
  return FinSpace::from_neighborhoods(std::move(labels), std::move(rows));
}

}  // namespace fintopo
