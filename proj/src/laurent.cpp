#include "sutured/laurent.hpp"

#include <algorithm>
#include <numeric>

#include "sutured/error.hpp"

namespace sutured {

std::int64_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

bool GrLexLess::operator()(const Exponent& lhs, const Exponent& rhs) const {
  const auto dl = total_degree(lhs);
  const auto dr = total_degree(rhs);
  if (dl != dr) return dl < dr;
  return lhs < rhs;
}

LaurentPoly LaurentPoly::constant(std::size_t rank, const BigInt& value) {
  LaurentPoly p(rank);
  p.add_term(Exponent(rank, 0), value);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& exponent, const BigInt& coefficient) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t rank,
                                    const std::vector<std::pair<Exponent, BigInt>>& terms) {
  LaurentPoly p(rank);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

BigInt LaurentPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) lo[i] = std::min(lo[i], e[i]);
  }
  return lo;
}

void LaurentPoly::check_rank(const Exponent& e) const {
  if (e.size() != rank_) {
    throw Error(ErrorKind::RankMismatch, "exponent of rank " + std::to_string(e.size()) +
                                             " in polynomial of rank " + std::to_string(rank_));
  }
}

void LaurentPoly::check_rank(const LaurentPoly& other) const {
  if (other.rank_ != rank_) {
    throw Error(ErrorKind::RankMismatch, "polynomial ranks " + std::to_string(rank_) +
                                             " and " + std::to_string(other.rank_) + " differ");
  }
}

void LaurentPoly::add_term(const Exponent& e, const BigInt& coefficient) {
  check_rank(e);
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  check_rank(shift);
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent moved = e;
    for (std::size_t i = 0; i < rank_; ++i) moved[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(moved), c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_rank(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_rank(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.check_rank(rhs);
  LaurentPoly out(lhs.rank_);
  Exponent sum(lhs.rank_);
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = el[i] + er[i];
      out.add_term(sum, cl * cr);
    }
  }
  return out;
}

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (dividend.rank() != divisor.rank()) {
    throw Error(ErrorKind::RankMismatch, "cannot divide polynomials of different rank");
  }
  if (divisor.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero");
  if (dividend.is_zero()) return LaurentPoly(dividend.rank());

  // Shift both operands into the polynomial ring (minimum exponent 0 in every
  // variable). A Laurent quotient of such polynomials is itself a polynomial,
  // so ordinary leading-term division decides exactness and terminates.
  const std::size_t rank = dividend.rank();
  const Exponent lo_num = dividend.min_exponents();
  const Exponent lo_den = divisor.min_exponents();
  Exponent neg_num(rank), neg_den(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    neg_num[i] = -lo_num[i];
    neg_den[i] = -lo_den[i];
  }
  LaurentPoly remainder = dividend.shifted(neg_num);
  const LaurentPoly den = divisor.shifted(neg_den);
  const auto& [lead_e, lead_c] = *den.terms().rbegin();

  LaurentPoly quotient(rank);
  Exponent step(rank);
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms().rbegin();
    for (std::size_t i = 0; i < rank; ++i) {
      step[i] = re[i] - lead_e[i];
      if (step[i] < 0) throw Error(ErrorKind::InexactDivision, "divisor does not divide dividend");
    }
    if (rc % lead_c != 0) {
      throw Error(ErrorKind::InexactDivision, "coefficient is not divisible");
    }
    const LaurentPoly term = LaurentPoly::monomial(step, rc / lead_c);
    quotient += term;
    remainder -= term * den;
  }

  Exponent shift(rank);
  for (std::size_t i = 0; i < rank; ++i) shift[i] = lo_num[i] - lo_den[i];
  return quotient.shifted(shift);
}

LaurentPoly substitute(const LaurentPoly& p, const MonomialSubstitution& map) {
  if (map.images.size() != p.rank()) {
    throw Error(ErrorKind::RankMismatch, "substitution expects " +
                                             std::to_string(map.images.size()) +
                                             " variables, polynomial has " +
                                             std::to_string(p.rank()));
  }
  Exponent offset = map.offset.empty() ? Exponent(map.target_rank, 0) : map.offset;
  for (const Exponent& image : map.images) {
    if (image.size() != map.target_rank) {
      throw Error(ErrorKind::RankMismatch, "substitution image has wrong rank");
    }
  }
  if (offset.size() != map.target_rank) {
    throw Error(ErrorKind::RankMismatch, "substitution offset has wrong rank");
  }
  LaurentPoly out(map.target_rank);
  for (const auto& [e, c] : p.terms()) {
    Exponent target = offset;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < map.target_rank; ++j) target[j] += e[i] * map.images[i][j];
    }
    out.add_term(target, c);
  }
  return out;
}

std::string render(const LaurentPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += i < names.size() ? names[i] : "t" + std::to_string(i + 1);
      if (e[i] != 1) monomial += '^' + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.str() + '*' + monomial;
    }
  }
  return out;
}

}  // namespace sutured
