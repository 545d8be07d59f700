#pragma once

// Integer-graded rank functions of sutured Floer homology.

#include <cstdint>
#include <map>

#include "sutured/bigint.hpp"

namespace sutured {

class GradedRanks {
 public:
  using Table = std::map<std::int64_t, BigInt>;

  GradedRanks() = default;
  static GradedRanks unit() {
    GradedRanks g;
    g.set(0, 1);
    return g;
  }

  // Zero ranks are not stored.
  void set(std::int64_t grading, const BigInt& rank);
  BigInt at(std::int64_t grading) const;
  BigInt total() const;
  const Table& table() const { return ranks_; }

  friend bool operator==(const GradedRanks&, const GradedRanks&) = default;

 private:
  Table ranks_;
};

BigInt binomial(std::int64_t n, std::int64_t k);

// Solid torus with n parallel (p,q) torus-knot sutures, n = 2k+2:
// rank binom(k, floor(i/p)) in gradings 0 <= i < p(k+1). q does not enter.
GradedRanks torus_sfh(std::int64_t p, std::int64_t q, std::int64_t n);

// Convolution of gradings; total ranks multiply.
GradedRanks tensor_ranks(const GradedRanks& lhs, const GradedRanks& rhs);

}  // namespace sutured
