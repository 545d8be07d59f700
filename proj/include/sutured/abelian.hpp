#pragma once

// Abelianization of finitely presented groups into free abelian groups Z^r.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sutured/bigint.hpp"
#include "sutured/groupring.hpp"
#include "sutured/laurent.hpp"
#include "sutured/words.hpp"

namespace sutured {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs, std::size_t inner_size);

// left * input * right == diagonal, with left and right unimodular and the
// nonzero diagonal entries positive, each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& input, std::size_t rows, std::size_t cols);

// Rows are relators, columns generators, entries exponent sums.
IntMatrix relator_matrix(const Presentation& presentation);

struct AbelianizationMap {
  std::vector<std::string> basis_names;
  std::map<Generator, Exponent> images;

  std::size_t rank() const { return basis_names.size(); }
  // Throws UnknownGenerator if a letter has no image.
  Exponent image_of(const Word& word) const;
};

// Uses `user_basis` verbatim when it kills every relator, generates Z^r and
// r equals the free rank of H1; otherwise InvalidBasis. Without a user basis
// the Smith normal form basis is returned. H1 with torsion is rejected.
AbelianizationMap abelianize_presentation(const Presentation& presentation,
                                          const std::optional<AbelianizationMap>& user_basis = {});

LaurentPoly apply_abelianization(const AbelianizationMap& map, const GroupRingElement& element);

}  // namespace sutured
