#ifndef MAXBETTI_CONSTRAINTS_HPP
#define MAXBETTI_CONSTRAINTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxbetti/bigint.hpp"
#include "maxbetti/macaulay.hpp"

namespace maxbetti {

class SpecError : public std::runtime_error {
 public:
  enum class Kind { Inconsistent, NoHorizon };

  SpecError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

/// Partial bound list: degree -> value, unset degrees take defaults.
using BoundMap = std::map<int64_t, Int>;

/// Bounds for the family of Hilbert functions of saturated ideals in
/// S = K[x_0..x_{N-1}]: G(d) <= h(d) <= F(d) and g(d) <= Dh(d) <= f(d) for
/// 0 <= d <= D, with h pinned to the tail from degree D on. Difference
/// functions live in R, the subring on the first N - 1 variables; n = N - 2
/// indexes the Betti vector (q = 0..n).
struct ConstraintSpec {
  int64_t N = 0;
  int64_t D = 0;
  std::vector<Int> G, F, g, f;  // indexed 0..D
  std::optional<BinomialPolynomial> tail_poly;

  int64_t n() const { return N - 2; }
  int64_t num_vars_R() const { return N - 1; }

  Int tail_value(int64_t d) const;  // h(d) for d >= D
  Int tail_delta(int64_t d) const;  // Dh(d) for d > D
};

/// Resolves defaults (G = 0, F = h_S, g = 0, f = h_R), computes the horizon
/// D and the forced tail, and validates consistency. With a polynomial,
/// D = max(gotzmann_number(p), 1 + last constrained degree) and
/// G(D) = F(D) = p(D); without one, D is the last constrained degree and
/// G(D) = F(D) must already hold there.
ConstraintSpec build_spec(int64_t N, const BoundMap& lower_h, const BoundMap& upper_h,
                          const BoundMap& lower_dh, const BoundMap& upper_dh,
                          const std::optional<BinomialPolynomial>& p);

enum class AlgorithmChoice { Automatic, Simplified, Complete };

/// Automatic resolves to Simplified exactly when no upper bound below the
/// horizon constrains h (F(d) = h_S(d) for all d < D); explicit requests are
/// honored verbatim.
AlgorithmChoice choose_algorithm(const ConstraintSpec& spec, AlgorithmChoice requested);

}  // namespace maxbetti

#endif
