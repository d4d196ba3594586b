#include "maxbetti/monomials.hpp"

#include <numeric>
#include <stdexcept>

#include "maxbetti/macaulay.hpp"

namespace maxbetti {

int64_t Monomial::degree() const {
  return std::accumulate(exp.begin(), exp.end(), int64_t{0});
}

int max_index(const Monomial& m) {
  for (int i = static_cast<int>(m.exp.size()) - 1; i >= 0; --i) {
    if (m.exp[i] > 0) return i;
  }
  throw std::invalid_argument("max_index: undefined for the degree-0 monomial");
}

Int count_monomials(int64_t num_vars, int64_t degree) {
  if (num_vars < 1 || degree < 0)
    throw std::invalid_argument("count_monomials: need num_vars >= 1, degree >= 0");
  return binomial(num_vars - 1 + degree, degree);
}

Monomial lex_last_monomial(int64_t n, int64_t d, const Int& k) {
  if (n < 0 || d < 0) throw std::invalid_argument("lex_last_monomial: bad n or d");
  if (k < 1 || k > count_monomials(n + 1, d))
    throw std::out_of_range("lex_last_monomial: rank out of range");
  Monomial m;
  m.exp.assign(static_cast<size_t>(n) + 1, 0);
  // ascending lex = ascending exponent of x_0, then recurse on x_1..x_n
  Int rem = k;
  int64_t deg = d;
  for (int64_t i = 0; i < n; ++i) {
    int32_t v = 0;
    for (;; ++v) {
      Int block = count_monomials(n - i, deg - v);
      if (rem <= block) break;
      rem -= block;
    }
    m.exp[static_cast<size_t>(i)] = v;
    deg -= v;
  }
  m.exp[static_cast<size_t>(n)] = static_cast<int32_t>(deg);
  return m;
}

Int lex_rank(const Monomial& m) {
  int64_t n = static_cast<int64_t>(m.exp.size()) - 1;
  Int r = 1;
  int64_t deg = m.degree();
  for (int64_t i = 0; i < n; ++i) {
    for (int32_t v = 0; v < m.exp[static_cast<size_t>(i)]; ++v) {
      r += count_monomials(n - i, deg - v);
    }
    deg -= m.exp[static_cast<size_t>(i)];
  }
  return r;
}

LexLastEnumerator::LexLastEnumerator(int64_t n, int64_t d) {
  if (n < 0 || d < 0) throw std::invalid_argument("LexLastEnumerator: bad n or d");
  m_.exp.assign(static_cast<size_t>(n) + 1, 0);
  m_.exp.back() = static_cast<int32_t>(d);
  maxi_ = d > 0 ? static_cast<int>(n) : 0;
}

bool LexLastEnumerator::advance() {
  auto& e = m_.exp;
  int n = static_cast<int>(e.size()) - 1;
  // successor: bump the variable left of the current tail, move the
  // remainder of the tail to x_n
  int j;
  if (e[static_cast<size_t>(n)] > 0) {
    j = n - 1;
  } else {
    int i = n;
    while (i >= 0 && e[static_cast<size_t>(i)] == 0) --i;
    if (i <= 0) return false;  // x_0^d (or degree 0) is last
    j = i - 1;
  }
  if (j < 0) return false;
  int32_t tail = 0;
  for (int i = j + 1; i <= n; ++i) {
    tail += e[static_cast<size_t>(i)];
    e[static_cast<size_t>(i)] = 0;
  }
  e[static_cast<size_t>(j)] += 1;
  e[static_cast<size_t>(n)] = tail - 1;
  maxi_ = tail - 1 > 0 ? n : j;
  return true;
}

std::string display(const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

VTable v_table(int64_t n, int64_t d, int64_t l_max) {
  if (n < 0 || d < 0 || l_max < 0) throw std::invalid_argument("v_table: bad arguments");
  if (l_max > count_monomials(n + 1, d))
    throw std::out_of_range("v_table: l_max exceeds the monomial count");
  VTable t;
  t.n = n;
  t.d = d;
  t.rows.assign(static_cast<size_t>(n) + 1,
                std::vector<Int>(static_cast<size_t>(l_max) + 1, Int(0)));
  std::vector<Int> full(static_cast<size_t>(n) + 1);
  for (int64_t q = 0; q <= n; ++q) full[static_cast<size_t>(q)] = binomial(n + 1, q + 1);
  LexLastEnumerator en(n, d);
  for (int64_t l = 1; l <= l_max; ++l) {
    int mi = en.max_index();
    for (int64_t q = 0; q <= n; ++q) {
      t.rows[static_cast<size_t>(q)][static_cast<size_t>(l)] =
          t.rows[static_cast<size_t>(q)][static_cast<size_t>(l - 1)] +
          full[static_cast<size_t>(q)] - binomial(mi + 1, q + 1);
    }
    if (l < l_max) en.advance();
  }
  return t;
}

}  // namespace maxbetti
