#include "maxbetti/macaulay.hpp"

#include <cassert>
#include <stdexcept>

namespace maxbetti {

Int binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int binomial(const Int& n, int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (n.fits_slong_p()) return binomial(to_int64(n), k);
  Int r = 1;
  for (int64_t j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact: r is C(n-k+j, j) after this step
  }
  return r;
}

MacaulayRep macaulay_rep(const Int& a, int64_t d) {
  if (a < 0 || d < 1) throw std::invalid_argument("macaulay_rep: need a >= 0, d >= 1");
  MacaulayRep rep;
  Int rem = a;
  int64_t i = d;
  while (rem > 0) {
    if (i < 1) throw std::logic_error("macaulay_rep: expansion did not terminate");
    // largest k with C(k, i) <= rem; greedy guarantees strict decrease of tops
    Int lo = i;
    Int hi = i + 1;
    while (binomial(hi, i) <= rem) {
      lo = hi;
      hi *= 2;
    }
    while (lo < hi - 1) {
      Int mid = (lo + hi) / 2;
      if (binomial(mid, i) <= rem) lo = mid;
      else hi = mid;
    }
    if (!rep.terms.empty()) assert(lo < rep.terms.back().first);
    rem -= binomial(lo, i);
    rep.terms.emplace_back(lo, i);
    --i;
  }
  return rep;
}

Int macaulay_upper_bound(const Int& a, int64_t d) {
  Int r = 0;
  for (const auto& [k, i] : macaulay_rep(a, d).terms) r += binomial(k + 1, i + 1);
  return r;
}

Int macaulay_lower_bound(const Int& a, int64_t d) {
  Int r = 0;
  for (const auto& [k, i] : macaulay_rep(a, d).terms) r += binomial(k - 1, i - 1);
  return r;
}

BinomialPolynomial BinomialPolynomial::constant(const Int& c) {
  BinomialPolynomial p;
  if (c != 0) p.coeff_.push_back(Rat(c));
  return p;
}

BinomialPolynomial BinomialPolynomial::from_coefficients(const std::vector<Rat>& descending) {
  BinomialPolynomial p;
  p.coeff_.assign(descending.rbegin(), descending.rend());
  while (!p.coeff_.empty() && p.coeff_.back() == 0) p.coeff_.pop_back();
  for (auto& c : p.coeff_) c.canonicalize();
  return p;
}

namespace {

Rat eval_rat(const std::vector<Rat>& coeff, const Int& d) {
  Rat acc = 0;
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * Rat(d) + *it;
  return acc;
}

}  // namespace

bool BinomialPolynomial::is_integer_valued() const {
  // a degree-m polynomial is integer-valued iff it is integral at m+1
  // consecutive points
  for (int64_t d = 0; d <= degree(); ++d) {
    if (eval_rat(coeff_, d).get_den() != 1) return false;
  }
  return true;
}

Int BinomialPolynomial::eval(const Int& d) const {
  Rat v = eval_rat(coeff_, d);
  if (v.get_den() != 1) throw std::domain_error("BinomialPolynomial: non-integer value");
  return v.get_num();
}

namespace {

// coefficients of C(d + s, a) = (d+s)(d+s-1)...(d+s-a+1) / a! as a
// polynomial in d, ascending power basis
std::vector<Rat> binomial_poly(const Int& s, int64_t a) {
  std::vector<Rat> poly{Rat(1)};
  for (int64_t j = 0; j < a; ++j) {
    Rat shift(s - j);
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] += poly[t];
      next[t] += poly[t] * shift;
    }
    poly = std::move(next);
  }
  Rat fact = 1;
  for (int64_t j = 2; j <= a; ++j) fact *= j;
  for (auto& c : poly) c /= fact;
  return poly;
}

}  // namespace

int64_t gotzmann_number(const BinomialPolynomial& p, int64_t ceiling) {
  if (p.is_zero()) return 0;
  if (!p.is_integer_valued())
    throw std::invalid_argument("gotzmann_number: polynomial is not integer-valued");
  std::vector<Rat> rem = p.coefficients();
  auto deg = [&rem]() { return static_cast<int64_t>(rem.size()) - 1; };
  int64_t i = 0;
  while (!rem.empty()) {
    ++i;
    if (i > ceiling) throw std::runtime_error("gotzmann_number: term count exceeds ceiling");
    int64_t a = deg();
    if (rem.back() < 0)
      throw std::invalid_argument("gotzmann_number: not a Hilbert polynomial");
    std::vector<Rat> term = binomial_poly(Int(a - i + 1), a);
    int64_t prev = a;
    for (size_t t = 0; t < term.size(); ++t) rem[t] -= term[t];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (!rem.empty() && deg() > prev)
      throw std::invalid_argument("gotzmann_number: not a Hilbert polynomial");
  }
  return i;
}

}  // namespace maxbetti
