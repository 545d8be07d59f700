#include "sutured/abelian.hpp"

#include <utility>

#include "sutured/error.hpp"

namespace sutured {

namespace {

IntMatrix zeros(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, std::vector<BigInt>(cols, BigInt(0)));
}

// Floor division so that remainders stay small in magnitude.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& input, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(input), u_(identity_matrix(rows)), v_(identity_matrix(cols)) {}

  SmithForm run() {
    std::size_t t = 0;
    while (t < rows_ && t < cols_) {
      if (!place_pivot(t)) break;
      for (;;) {
        clear_row_and_column(t);
        if (!fix_divisibility(t)) break;
      }
      if (d_[t][t] < 0) negate_row(t);
      ++t;
    }
    return SmithForm{std::move(u_), std::move(d_), std::move(v_), t};
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (d_[i][j] == 0) continue;
        if (!best || abs(d_[i][j]) < abs(d_[best->first][best->second])) best = {{i, j}};
      }
    }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void clear_row_and_column(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (d_[i][t] == 0) continue;
        add_row(i, t, -floor_div(d_[i][t], d_[t][t]));
        if (d_[i][t] != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (d_[t][j] == 0) continue;
        add_col(j, t, -floor_div(d_[t][j], d_[t][t]));
        if (d_[t][j] != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) return;
    }
  }

  // If some trailing entry is not a multiple of the pivot, fold its row into
  // the pivot row so the next clearing pass lowers the pivot.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (d_[i][j] % d_[t][t] != 0) {
          add_row(t, i, 1);
          return true;
        }
      }
    }
    return false;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d_[a], d_[b]);
    std::swap(u_[a], u_[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : d_) std::swap(row[a], row[b]);
    for (auto& row : v_) std::swap(row[a], row[b]);
  }
  // row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t j = 0; j < cols_; ++j) d_[target][j] += factor * d_[source][j];
    for (std::size_t j = 0; j < rows_; ++j) u_[target][j] += factor * u_[source][j];
  }
  // col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, const BigInt& factor) {
    for (std::size_t i = 0; i < rows_; ++i) d_[i][target] += factor * d_[i][source];
    for (std::size_t i = 0; i < cols_; ++i) v_[i][target] += factor * v_[i][source];
  }
  void negate_row(std::size_t t) {
    for (auto& x : d_[t]) x = -x;
    for (auto& x : u_[t]) x = -x;
  }

  std::size_t rows_;
  std::size_t cols_;
  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
};

std::int64_t to_int64(const BigInt& value) {
  if (!fits_int64(value)) throw Error(ErrorKind::SizeLimit, "exponent exceeds 64 bits");
  return static_cast<std::int64_t>(value);
}

void validate_user_basis(const Presentation& presentation, const AbelianizationMap& basis,
                         std::size_t free_rank) {
  const std::size_t r = basis.rank();
  for (const Generator& g : presentation.generators) {
    const auto it = basis.images.find(g);
    if (it == basis.images.end()) {
      throw Error(ErrorKind::InvalidBasis, "basis has no image for generator '" + g + "'");
    }
    if (it->second.size() != r) {
      throw Error(ErrorKind::InvalidBasis, "image of '" + g + "' has wrong length");
    }
  }
  if (basis.images.size() != presentation.generators.size()) {
    throw Error(ErrorKind::InvalidBasis, "basis maps generators outside the presentation");
  }
  for (std::size_t k = 0; k < presentation.relators.size(); ++k) {
    const Exponent e = basis.image_of(presentation.relators[k]);
    for (const auto x : e) {
      if (x != 0) {
        throw Error(ErrorKind::InvalidBasis,
                    "relator " + std::to_string(k + 1) + " does not map to zero");
      }
    }
  }
  if (r != free_rank) {
    throw Error(ErrorKind::InvalidBasis, "basis rank " + std::to_string(r) +
                                             " differs from the free rank " +
                                             std::to_string(free_rank) + " of H1");
  }
  // The images generate Z^r iff the image matrix has r invariant factors equal to 1.
  const std::size_t m = presentation.generators.size();
  IntMatrix images = zeros(m, r);
  for (std::size_t i = 0; i < m; ++i) {
    const Exponent& e = basis.images.at(presentation.generators[i]);
    for (std::size_t j = 0; j < r; ++j) images[i][j] = e[j];
  }
  const SmithForm snf = smith_normal_form(images, m, r);
  bool generates = snf.rank == r;
  for (std::size_t t = 0; generates && t < snf.rank; ++t) generates = snf.diagonal[t][t] == 1;
  if (!generates) throw Error(ErrorKind::InvalidBasis, "images do not generate Z^" + std::to_string(r));
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs, std::size_t inner_size) {
  const std::size_t rows = lhs.size();
  const std::size_t cols = rhs.empty() ? 0 : rhs.front().size();
  IntMatrix out = zeros(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner_size; ++k) {
      if (lhs[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += lhs[i][k] * rhs[k][j];
    }
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input, std::size_t rows, std::size_t cols) {
  return SmithReducer(input, rows, cols).run();
}

IntMatrix relator_matrix(const Presentation& presentation) {
  IntMatrix m = zeros(presentation.relators.size(), presentation.generators.size());
  for (std::size_t k = 0; k < presentation.relators.size(); ++k) {
    for (const Letter& letter : presentation.relators[k].letters()) {
      m[k][presentation.index_of(letter.generator)] += letter.sign;
    }
  }
  return m;
}

Exponent AbelianizationMap::image_of(const Word& word) const {
  Exponent e(rank(), 0);
  for (const Letter& letter : word.letters()) {
    const auto it = images.find(letter.generator);
    if (it == images.end()) {
      throw Error(ErrorKind::UnknownGenerator,
                  "no abelianization image for generator '" + letter.generator + "'");
    }
    for (std::size_t j = 0; j < e.size(); ++j) e[j] += letter.sign * it->second[j];
  }
  return e;
}

AbelianizationMap abelianize_presentation(const Presentation& presentation,
                                          const std::optional<AbelianizationMap>& user_basis) {
  const std::size_t n = presentation.relators.size();
  const std::size_t m = presentation.generators.size();
  const SmithForm snf = smith_normal_form(relator_matrix(presentation), n, m);
  for (std::size_t t = 0; t < snf.rank; ++t) {
    if (snf.diagonal[t][t] != 1) {
      throw Error(ErrorKind::NontrivialTorsion,
                  "H1 has a cyclic factor of order " + snf.diagonal[t][t].str());
    }
  }
  const std::size_t free_rank = m - snf.rank;

  if (user_basis) {
    validate_user_basis(presentation, *user_basis, free_rank);
    return *user_basis;
  }

  // Generator i maps to row i of the right transform; the free part lives in
  // the columns past the Smith rank.
  AbelianizationMap map;
  if (n == 0) {
    map.basis_names = presentation.generators;
  } else {
    for (std::size_t j = 0; j < free_rank; ++j) map.basis_names.push_back("t" + std::to_string(j + 1));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Exponent e(free_rank);
    for (std::size_t j = 0; j < free_rank; ++j) e[j] = to_int64(snf.right[i][snf.rank + j]);
    map.images.emplace(presentation.generators[i], std::move(e));
  }
  return map;
}

LaurentPoly apply_abelianization(const AbelianizationMap& map, const GroupRingElement& element) {
  LaurentPoly out(map.rank());
  for (const auto& [word, c] : element.terms()) out.add_term(map.image_of(word), c);
  return out;
}

}  // namespace sutured
