#include "sutured/sfh.hpp"

#include <string>

#include "sutured/error.hpp"

namespace sutured {

void GradedRanks::set(std::int64_t grading, const BigInt& rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  if (rank == 0) {
    ranks_.erase(grading);
  } else {
    ranks_[grading] = rank;
  }
}

BigInt GradedRanks::at(std::int64_t grading) const {
  const auto it = ranks_.find(grading);
  return it == ranks_.end() ? BigInt(0) : it->second;
}

BigInt GradedRanks::total() const {
  BigInt sum = 0;
  for (const auto& [i, r] : ranks_) sum += r;
  return sum;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

GradedRanks torus_sfh(std::int64_t p, std::int64_t /*q*/, std::int64_t n) {
  if (p <= 0) throw Error(ErrorKind::NonpositiveP, "p must be positive, got " + std::to_string(p));
  if (n % 2 != 0) {
    throw Error(ErrorKind::OddSutureCount, "suture count must be even, got " + std::to_string(n));
  }
  if (n < 2) {
    throw Error(ErrorKind::SutureCountTooSmall,
                "suture count must be at least 2, got " + std::to_string(n));
  }
  const std::int64_t k = (n - 2) / 2;
  GradedRanks ranks;
  for (std::int64_t i = 0; i < p * (k + 1); ++i) ranks.set(i, binomial(k, i / p));
  return ranks;
}

GradedRanks tensor_ranks(const GradedRanks& lhs, const GradedRanks& rhs) {
  GradedRanks out;
  for (const auto& [i, a] : lhs.table()) {
    for (const auto& [j, b] : rhs.table()) out.set(i + j, out.at(i + j) + a * b);
  }
  return out;
}

}  // namespace sutured
