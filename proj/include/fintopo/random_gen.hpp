#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fintopo/fin_space.hpp"
#include "fintopo/space_map.hpp"

namespace fintopo {

// SplitMix64. Fixed and self-contained so that every fixture is
// reproducible from its seed alone, independent of the standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound must be positive. Plain modulo, which is
  // what a reimplementation in another language would reach for first.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n_points = 0;
  double density = 0.0;  // edge probability, in [0, 1]
};

// Random valid space: draw a directed relation with the configured edge
// probability (pairs visited row-major, diagonal skipped), close it
// reflexively and transitively, and read each row as a minimal
// neighborhood. Any reflexive-transitive relation satisfies both axioms,
// so the result always validates. density 0 gives the discrete space,
// density 1 the indiscrete one.
inline FinSpace random_space(const GenConfig& cfg) {
  if (!(cfg.density >= 0.0 && cfg.density <= 1.0))
    throw std::invalid_argument("density must lie in [0, 1]");
  const std::size_t n = cfg.n_points;
  SplitMix64 rng(cfg.seed);

  std::vector<PointSet> rows(n, PointSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    rows[x].set(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      if (rng.next_unit() < cfg.density) rows[x].set(y);
    }
  }
  // Warshall pass on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (rows[x].test(k)) rows[x] |= rows[k];
    }
  }

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return FinSpace::from_neighborhoods(std::move(labels), std::move(rows));
}

// Uniform independent value per domain point, in domain point order.
inline SpaceMap random_map(std::uint64_t seed, FinSpace domain,
                           FinSpace codomain) {
  if (codomain.empty() && !domain.empty()) throw EmptyCodomainError();
  SplitMix64 rng(seed);
  std::vector<std::size_t> values(domain.size(), 0);
  for (std::size_t x = 0; x < domain.size(); ++x)
    values[x] = static_cast<std::size_t>(rng.next_below(codomain.size()));
  return SpaceMap(std::move(domain), std::move(codomain), std::move(values));
}

}  // namespace fintopo
