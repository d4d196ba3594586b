#ifndef MAXBETTI_MACAULAY_HPP
#define MAXBETTI_MACAULAY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "maxbetti/bigint.hpp"

namespace maxbetti {

/// binomial(n, k) with the convention that out-of-range arguments give 0.
Int binomial(int64_t n, int64_t k);
Int binomial(const Int& n, int64_t k);

/// The greedy expansion a = sum_i C(k_i, i) for i = d, d-1, ..., with
/// strictly decreasing tops k_d > k_{d-1} > ... and every k_i >= i >= 1.
/// Unique for a >= 0, d >= 1; a = 0 has the empty representation.
struct MacaulayRep {
  std::vector<std::pair<Int, int64_t>> terms;  // (k_i, i), i strictly decreasing
};

MacaulayRep macaulay_rep(const Int& a, int64_t d);

/// a^<d>: replace each C(k_i, i) by C(k_i + 1, i + 1). Largest value an
/// O-sequence may take in degree d + 1 given value a in degree d.
Int macaulay_upper_bound(const Int& a, int64_t d);

/// a_<d>: replace each C(k_i, i) by C(k_i - 1, i - 1). Smallest admissible
/// value in degree d - 1, i.e. the least b with b^<d-1> >= a.
Int macaulay_lower_bound(const Int& a, int64_t d);

/// Integer-valued polynomial in one variable, stored in the power basis
/// with exact rational coefficients.
class BinomialPolynomial {
 public:
  BinomialPolynomial() = default;  // the zero polynomial
  static BinomialPolynomial constant(const Int& c);
  /// Coefficients ordered highest degree first, e.g. {3, -6, 175} for
  /// 3d^2 - 6d + 175.
  static BinomialPolynomial from_coefficients(const std::vector<Rat>& descending);

  bool is_zero() const { return coeff_.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeff_.size()) - 1; }
  bool is_integer_valued() const;
  Int eval(const Int& d) const;  // throws if the value is not an integer
  const std::vector<Rat>& coefficients() const { return coeff_; }  // ascending
  bool operator==(const BinomialPolynomial&) const = default;

 private:
  std::vector<Rat> coeff_;  // ascending degree, no trailing zeros
};

/// Number of terms r in the decomposition
///   p(d) = sum_{i=1..r} C(d + a_i - i + 1, a_i),  a_1 >= a_2 >= ... >= a_r >= 0,
/// obtained by repeatedly peeling the term of degree deg(remainder).
/// Throws std::invalid_argument if p is not the Hilbert polynomial of any
/// quotient, std::runtime_error if r would exceed the ceiling.
int64_t gotzmann_number(const BinomialPolynomial& p, int64_t ceiling = 1000000);

}  // namespace maxbetti

#endif
