#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fintopo {

// Arbitrary-precision natural number. Covers exactly what exact map
// counting needs: construction from machine integers, multiplication by a
// machine integer, powers, comparison, and decimal output.
class BigNat {
 public:
  BigNat() = default;  // zero

  explicit BigNat(std::uint64_t v) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    }
  }

  // base^exp with 0^0 = 1.
  static BigNat pow(std::uint64_t base, std::uint64_t exp) {
    BigNat r(1);
    for (std::uint64_t i = 0; i < exp; ++i) {
      r *= base;
      if (r.is_zero()) break;  // 0^k stays 0
    }
    return r;
  }

  BigNat& operator*=(std::uint64_t m) {
    if (m == 0 || is_zero()) {
      limbs_.clear();
      return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
      unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    return *this;
  }

  bool is_zero() const { return limbs_.empty(); }

  bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }

  // -1, 0, 1 as *this compares to o.
  int cmp(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator<(const BigNat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigNat& o) const { return cmp(o) <= 0; }

  std::string to_string() const {
    if (limbs_.empty()) return "0";
    std::string s = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
      std::string part = std::to_string(limbs_[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr std::uint64_t kBase = 1'000'000'000;

  // Base-1e9 limbs, least significant first; empty means zero.
  std::vector<std::uint32_t> limbs_;
};

}  // namespace fintopo
