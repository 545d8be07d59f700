#pragma once

// Equivalence of torsion classes under affine isomorphisms of H1:
// t1 ~ t2 iff psi(t1) = +-h * t2 for a unimodular affine psi.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sutured/laurent.hpp"
#include "sutured/torsion.hpp"

namespace sutured {

enum class VerdictKind { Equivalent, NotEquivalent, Inconclusive };

std::string_view to_string(VerdictKind kind);

using IntMatrix64 = std::vector<std::vector<std::int64_t>>;

// rep(t2) == sign * x^translation * U(rep(t1)), where U acts on exponents.
struct EquivalenceWitness {
  IntMatrix64 matrix;
  Exponent translation;
  int sign = 1;
};

struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<EquivalenceWitness> witness;
  std::string reason;
};

// Exponent-wise linear map e -> U e.
LaurentPoly apply_linear(const LaurentPoly& p, const IntMatrix64& u);
LaurentPoly apply_witness(const LaurentPoly& p, const EquivalenceWitness& w);

EquivalenceVerdict compare_torsion(const TorsionClass& t1, const TorsionClass& t2);

}  // namespace sutured
