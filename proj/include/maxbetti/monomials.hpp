#ifndef MAXBETTI_MONOMIALS_HPP
#define MAXBETTI_MONOMIALS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxbetti/bigint.hpp"

namespace maxbetti {

/// Monomial of R = K[x_0, ..., x_n] as a dense exponent vector; index 0 is
/// the lex-greatest variable x_0.
struct Monomial {
  std::vector<int32_t> exp;

  int64_t degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Largest index of a variable dividing m. Rejects the degree-0 monomial.
int max_index(const Monomial& m);

/// Number of monomials of the given degree in num_vars variables,
/// C(num_vars - 1 + degree, degree).
Int count_monomials(int64_t num_vars, int64_t degree);

/// The k-th lexicographically last monomial of degree d in x_0..x_n,
/// 1-based: R_d[1] = x_n^d. Combinatorial unranking, O(n * log) probes.
Monomial lex_last_monomial(int64_t n, int64_t d, const Int& k);

/// Inverse of lex_last_monomial: 1-based position of m among degree-d
/// monomials in ascending lex order.
Int lex_rank(const Monomial& m);

/// Streams R_d[1], R_d[2], ... with O(n) work per step and an O(1)
/// running max_index. Degree 0 yields the unit monomial with max_index
/// reported as 0.
class LexLastEnumerator {
 public:
  LexLastEnumerator(int64_t n, int64_t d);

  const Monomial& current() const { return m_; }
  int max_index() const { return maxi_; }
  /// Advances to the next monomial; false when the current one is x_0^d.
  bool advance();

 private:
  Monomial m_;
  int maxi_;
};

/// "x2^3*x3*x4" with 1-based variable names; the unit monomial is "1".
std::string display(const Monomial& m);

/// V_q[d, l] for all 0 <= q <= n, 0 <= l <= l_max:
///   V_q[d, l] = sum_{k=1..l} (C(n+1, q+1) - C(max_index(R_d[k]) + 1, q+1)).
struct VTable {
  int64_t n = 0;
  int64_t d = 0;
  std::vector<std::vector<Int>> rows;  // rows[q][l]

  const Int& at(int64_t q, int64_t l) const { return rows[q][l]; }
  int64_t l_max() const { return static_cast<int64_t>(rows.empty() ? 0 : rows[0].size()) - 1; }
};

VTable v_table(int64_t n, int64_t d, int64_t l_max);

}  // namespace maxbetti

#endif
