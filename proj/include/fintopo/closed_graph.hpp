#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "fintopo/big_nat.hpp"
#include "fintopo/partition.hpp"
#include "fintopo/space_map.hpp"

namespace fintopo {

inline constexpr std::size_t kClosedGraphOracleDefaultLimit = 10'000;

// Definitional check: the graph of f, as a subset of the product space,
// must equal its own closure there. The product is materialized, so the
// pair count is capped.
inline bool has_closed_graph_oracle(
    const SpaceMap& f,
    std::size_t max_pairs = kClosedGraphOracleDefaultLimit) {
  const std::size_t pairs = f.domain().size() * f.codomain().size();
  if (pairs > max_pairs) throw OracleTooLargeError(pairs, max_pairs);
  const FinSpace prod = product(f.domain(), f.codomain());
  const PointSet graph = graph_of(f).pairs();
  return prod.closure(graph) == graph;
}

// Fast check: f has closed graph exactly when it is constant on every
// connected component of the domain and each value is a closed point of
// the codomain. Runs in time linear in the total neighborhood size of the
// two spaces.
inline bool has_closed_graph(const SpaceMap& f) {
  const Partition parts = components(f.domain());
  const PointSet closed = f.codomain().closed_points();
  for (const PointSet& cls : parts.classes()) {
    if (!f.constant_on(cls)) return false;
    if (!closed.test(f.value(*cls.first()))) return false;
  }
  return true;
}

struct NotConstantOnComponent {
  PointSet component;
  std::size_t x;  // smallest point of the component
  std::size_t y;  // smallest point with f(y) != f(x)

  bool operator==(const NotConstantOnComponent&) const = default;
};

struct ValueNotClosed {
  PointSet component;
  std::size_t value;
  std::size_t in_closure;  // smallest point of cl({value}) \ {value}

  bool operator==(const ValueNotClosed&) const = default;
};

using ClosedGraphViolation =
    std::variant<NotConstantOnComponent, ValueNotClosed>;

// Diagnostic companion of has_closed_graph: the first violation in
// component order, or nullopt when the graph is closed.
inline std::optional<ClosedGraphViolation> closed_graph_witness(
    const SpaceMap& f) {
  const Partition parts = components(f.domain());
  const PointSet closed = f.codomain().closed_points();
  for (const PointSet& cls : parts.classes()) {
    const std::size_t x0 = *cls.first();
    std::optional<std::size_t> deviant;
    cls.for_each([&](std::size_t x) {
      if (!deviant && f.value(x) != f.value(x0)) deviant = x;
    });
    if (deviant) return NotConstantOnComponent{cls, x0, *deviant};
    const std::size_t v = f.value(x0);
    if (!closed.test(v)) {
      PointSet single(f.codomain().size());
      single.set(v);
      PointSet extra = f.codomain().closure(single);
      extra.reset(v);
      return ValueNotClosed{cls, v, *extra.first()};
    }
  }
  return std::nullopt;
}

// Exact count of closed-graph maps: beta^alpha, where alpha is the number
// of connected components of the domain and beta the number of closed
// points of the codomain (0^0 = 1 for the empty domain).
struct CountReport {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  BigNat count;
};

inline CountReport count_closed_graph_maps(const FinSpace& domain,
                                           const FinSpace& codomain) {
  CountReport r;
  r.alpha = components(domain).count();
  r.beta = codomain.closed_points().count();
  r.count = BigNat::pow(r.beta, r.alpha);
  return r;
}

// Every assignment of a closed codomain point to each component yields one
// closed-graph map; maps are listed in lexicographic order of that
// assignment (component index major, closed points ascending). Refuses to
// build more than `limit` maps.
inline std::vector<SpaceMap> enumerate_closed_graph_maps(
    const FinSpace& domain, const FinSpace& codomain, std::size_t limit) {
  const CountReport report = count_closed_graph_maps(domain, codomain);
  if (BigNat(limit) < report.count)
    throw EnumerationTooLargeError(report.count.to_string(), limit);

  std::vector<SpaceMap> out;
  if (report.count.is_zero()) return out;

  const Partition parts = components(domain);
  const std::vector<std::size_t> closed =
      codomain.closed_points().to_vector();
  std::vector<std::size_t> assignment(report.alpha, 0);
  while (true) {
    std::vector<std::size_t> values(domain.size(), 0);
    for (std::size_t x = 0; x < domain.size(); ++x)
      values[x] = closed[assignment[parts.class_of(x)]];
    out.emplace_back(domain, codomain, std::move(values));

    std::size_t k = report.alpha;
    while (k > 0 && assignment[k - 1] + 1 == report.beta) {
      assignment[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    ++assignment[k - 1];
  }
  return out;
}

}  // namespace fintopo
