#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fintopo/fin_space.hpp"

namespace fintopo {

inline constexpr std::size_t kKhalimskyDefaultMaxPoints = 20'000;

inline std::string khalimsky_label(const std::vector<long>& tuple) {
  if (tuple.size() == 1) return std::to_string(tuple[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tuple[i]);
  }
  return s + ")";
}

namespace detail {

inline bool is_even(long v) { return v % 2 == 0; }

// Basic opens of the digital line: {v} for odd v, {v-1, v, v+1} for even
// v. Windows take the subspace topology, clipping at the ends.
inline std::vector<long> khalimsky_axis_nbhd(long v, long lo, long hi) {
  std::vector<long> out;
  if (is_even(v)) {
    for (long w = v - 1; w <= v + 1; ++w)
      if (lo <= w && w <= hi) out.push_back(w);
  } else {
    out.push_back(v);
  }
  return out;
}

inline std::size_t checked_window_count(std::size_t dim, long lo, long hi,
                                        std::size_t max_points) {
  if (dim == 0) throw std::invalid_argument("khalimsky dimension must be >= 1");
  if (lo > hi) throw EmptyWindowError(lo, hi);
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  std::size_t count = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    if (count > max_points / width)
      throw SizeLimitError("window of " + std::to_string(width) + "^" +
                               std::to_string(dim) + " points",
                           max_points);
    count *= width;
  }
  return count;
}

}  // namespace detail

inline FinSpace khalimsky_line(long lo, long hi) {
  if (lo > hi) throw EmptyWindowError(lo, hi);
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<PointSet> rows;
  rows.reserve(n);
  for (long v = lo; v <= hi; ++v) {
    labels.push_back(std::to_string(v));
    PointSet row(n);
    for (long w : detail::khalimsky_axis_nbhd(v, lo, hi))
      row.set(static_cast<std::size_t>(w - lo));
    rows.push_back(std::move(row));
  }
  return FinSpace::from_neighborhoods(std::move(labels), std::move(rows));
}

// n-dimensional window: integer tuples in [lo, hi]^dim ordered
// lexicographically (first coordinate major), neighborhoods taken
// coordinatewise. Matches the point order of iterated product().
inline FinSpace khalimsky_space(
    std::size_t dim, long lo, long hi,
    std::size_t max_points = kKhalimskyDefaultMaxPoints) {
  const std::size_t n = detail::checked_window_count(dim, lo, hi, max_points);
  if (dim == 1) return khalimsky_line(lo, hi);

  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  auto tuple_index = [&](const std::vector<long>& t) {
    std::size_t idx = 0;
    for (long c : t) idx = idx * width + static_cast<std::size_t>(c - lo);
    return idx;
  };

  std::vector<std::string> labels(n);
  std::vector<PointSet> rows(n, PointSet(n));
  std::vector<long> tuple(dim, lo);
  for (std::size_t idx = 0; idx < n; ++idx) {
    labels[idx] = khalimsky_label(tuple);

    std::vector<std::vector<long>> axis(dim);
    for (std::size_t d = 0; d < dim; ++d)
      axis[d] = detail::khalimsky_axis_nbhd(tuple[d], lo, hi);
    std::vector<long> nb(dim);
    std::vector<std::size_t> pick(dim, 0);
    while (true) {
      for (std::size_t d = 0; d < dim; ++d) nb[d] = axis[d][pick[d]];
      rows[idx].set(tuple_index(nb));
      std::size_t d = dim;
      while (d > 0 && pick[d - 1] + 1 == axis[d - 1].size()) pick[--d] = 0;
      if (d == 0) break;
      ++pick[d - 1];
    }

    std::size_t d = dim;
    while (d > 0 && tuple[d - 1] == hi) tuple[--d] = lo;
    if (d == 0) break;
    ++tuple[d - 1];
  }
  return FinSpace::from_neighborhoods(std::move(labels), std::move(rows));
}

// The closed points of a window, as labels in point order.
struct KhalimskyClosedPoints {
  std::vector<std::string> points;
  // Set when the window is clipped at an even coordinate: the all-even
  // formula is not asserted there and the answer is computed from the
  // space instead.
  bool even_endpoint_fallback = false;
};

// For odd-endpoint windows the closed points are exactly the tuples with
// every coordinate even; that set is produced directly. Even-endpoint
// windows fall back to per-point closure checks on the generated space.
inline KhalimskyClosedPoints khalimsky_closed_points(
    std::size_t dim, long lo, long hi,
    std::size_t max_points = kKhalimskyDefaultMaxPoints) {
  detail::checked_window_count(dim, lo, hi, max_points);

  KhalimskyClosedPoints result;
  if (detail::is_even(lo) || detail::is_even(hi)) {
    result.even_endpoint_fallback = true;
    const FinSpace space = khalimsky_space(dim, lo, hi, max_points);
    result.points = space.to_labels(space.closed_points());
    return result;
  }

  const long first_even = lo + 1;  // lo is odd
  if (first_even > hi) return result;
  std::vector<long> tuple(dim, first_even);
  while (true) {
    result.points.push_back(khalimsky_label(tuple));
    std::size_t d = dim;
    while (d > 0 && tuple[d - 1] + 2 > hi) tuple[--d] = first_even;
    if (d == 0) break;
    tuple[d - 1] += 2;
  }
  return result;
}

}  // namespace fintopo
