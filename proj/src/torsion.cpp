#include "sutured/torsion.hpp"

#include <string>
#include <utility>

#include "sutured/error.hpp"
#include "sutured/groupring.hpp"

namespace sutured {

namespace {

std::size_t check_square(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  }
  return n;
}

std::size_t common_rank(const LaurentMatrix& m) {
  const std::size_t rank = m.front().front().rank();
  for (const auto& row : m) {
    for (const auto& entry : row) {
      if (entry.rank() != rank) throw Error(ErrorKind::RankMismatch, "matrix entries differ in rank");
    }
  }
  return rank;
}

LaurentPoly cofactor_expand(const LaurentMatrix& m, std::vector<std::size_t>& columns,
                            std::size_t row, std::size_t rank) {
  if (row == m.size()) return LaurentPoly::constant(rank, 1);
  LaurentPoly sum(rank);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const std::size_t col = columns[k];
    if (m[row][col].is_zero()) continue;
    columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(k));
    LaurentPoly minor = m[row][col] * cofactor_expand(m, columns, row + 1, rank);
    columns.insert(columns.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0) {
      sum += minor;
    } else {
      sum -= minor;
    }
  }
  return sum;
}

}  // namespace

UnitNormalization normalize_with_unit(const LaurentPoly& p) {
  UnitNormalization out;
  out.shift = Exponent(p.rank(), 0);
  out.torsion.representative_ = LaurentPoly(p.rank());
  if (p.is_zero()) return out;
  const Exponent lo = p.min_exponents();
  for (std::size_t i = 0; i < lo.size(); ++i) out.shift[i] = -lo[i];
  LaurentPoly rep = p.shifted(out.shift);
  if (rep.terms().begin()->second < 0) {
    out.sign = -1;
    rep *= BigInt(-1);
  }
  out.torsion.representative_ = std::move(rep);
  return out;
}

TorsionClass torsion_normal_form(const LaurentPoly& p) { return normalize_with_unit(p).torsion; }

LaurentMatrix build_theta(const TorsionInput& input) {
  const Presentation& pres = input.presentation;
  const std::size_t m = pres.generators.size();
  const std::int64_t genus = static_cast<std::int64_t>(input.inclusion_words.size());
  if (pres.deficiency() != genus) {
    throw Error(ErrorKind::NotBalanced,
                "presentation deficiency " + std::to_string(pres.deficiency()) +
                    " does not match " + std::to_string(genus) + " inclusion words");
  }
  for (const Word& w : input.inclusion_words) {
    for (const Letter& letter : w.letters()) {
      if (!pres.has_generator(letter.generator)) {
        throw Error(ErrorKind::UnknownGenerator,
                    "inclusion word uses unknown generator '" + letter.generator + "'");
      }
    }
  }

  std::vector<const Word*> columns;
  for (const Word& w : input.inclusion_words) columns.push_back(&w);
  for (const Word& r : pres.relators) columns.push_back(&r);

  LaurentMatrix theta(m, std::vector<LaurentPoly>(m, LaurentPoly(input.abelianization.rank())));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      theta[i][j] = apply_abelianization(input.abelianization,
                                         fox_derivative(*columns[j], pres.generators[i]));
    }
  }
  return theta;
}

LaurentPoly determinant_cofactor(const LaurentMatrix& m) {
  const std::size_t n = check_square(m);
  if (n == 0) return LaurentPoly::constant(0, 1);
  const std::size_t rank = common_rank(m);
  std::vector<std::size_t> columns(n);
  for (std::size_t j = 0; j < n; ++j) columns[j] = j;
  return cofactor_expand(m, columns, 0, rank);
}

LaurentPoly determinant_bareiss(const LaurentMatrix& input) {
  const std::size_t n = check_square(input);
  if (n == 0) return LaurentPoly::constant(0, 1);
  const std::size_t rank = common_rank(input);
  LaurentMatrix a = input;
  LaurentPoly previous = LaurentPoly::constant(rank, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly(rank);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        try {
          a[i][j] = exact_div(numerator, previous);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::InexactDivision) throw;
          throw Error(ErrorKind::InternalInexactDivision,
                      "fraction-free elimination produced a remainder");
        }
      }
      a[i][k] = LaurentPoly(rank);
    }
    previous = a[k][k];
  }
  LaurentPoly det = a[n - 1][n - 1];
  if (negate) det *= BigInt(-1);
  return det;
}

LaurentPoly determinant(const LaurentMatrix& m) {
  return m.size() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

TorsionClass sutured_torsion(const TorsionInput& input) {
  return torsion_normal_form(determinant(build_theta(input)));
}

TorsionClass reflect(const TorsionClass& t) {
  const LaurentPoly& p = t.representative();
  LaurentPoly mirrored(p.rank());
  for (const auto& [e, c] : p.terms()) {
    Exponent neg = e;
    for (auto& x : neg) x = -x;
    mirrored.add_term(neg, c);
  }
  return torsion_normal_form(mirrored);
}

bool is_centrally_symmetric(const TorsionClass& t) { return reflect(t) == t; }

}  // namespace sutured
