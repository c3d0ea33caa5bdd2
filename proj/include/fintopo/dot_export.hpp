#pragma once

#include <string>
#include <vector>

#include "fintopo/fin_space.hpp"

namespace fintopo {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// Specialization structure as DOT: edge x -> y whenever y lies in
// min_nbhd(x), transitively reduced. Points with identical neighborhoods
// specialize to each other; such groups are preorder cycles and are drawn
// as bidirectional edges between all their members, with one
// representative edge per covering pair of groups. Closed points get a
// double circle.
inline std::string export_dot(const FinSpace& space) {
  const std::size_t n = space.size();

  // Mutual specialization is exactly neighborhood equality.
  std::vector<std::size_t> group_of(n, 0);
  std::vector<std::size_t> reps;  // smallest member of each group
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t g = 0; g < reps.size() && !found; ++g) {
      if (space.min_nbhd(x) == space.min_nbhd(reps[g])) {
        group_of[x] = g;
        found = true;
      }
    }
    if (!found) {
      group_of[x] = reps.size();
      reps.push_back(x);
    }
  }

  const std::size_t k = reps.size();
  auto reaches = [&](std::size_t g, std::size_t h) {
    return g != h && space.min_nbhd(reps[g]).test(reps[h]);
  };

  std::string out = "digraph space {\n";
  const PointSet closed = space.closed_points();
  for (std::size_t x = 0; x < n; ++x) {
    out += "  " + detail::dot_quote(space.label(x)) +
           (closed.test(x) ? " [shape=doublecircle];\n" : " [shape=circle];\n");
  }
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if (group_of[x] == g) members.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        out += "  " + detail::dot_quote(space.label(members[i])) + " -> " +
               detail::dot_quote(space.label(members[j])) + " [dir=both];\n";
      }
    }
  }
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t h = 0; h < k; ++h) {
      if (!reaches(g, h)) continue;
      bool covered = false;
      for (std::size_t m = 0; m < k && !covered; ++m)
        covered = m != g && m != h && reaches(g, m) && reaches(m, h);
      if (!covered) {
        out += "  " + detail::dot_quote(space.label(reps[g])) + " -> " +
               detail::dot_quote(space.label(reps[h])) + ";\n";
      }
    }
  }
  return out + "}\n";
}

}  // namespace fintopo
