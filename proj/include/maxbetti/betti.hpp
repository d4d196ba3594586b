#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxbetti/bigint.hpp"
#include "maxbetti/constraints.hpp"
#include "maxbetti/dp.hpp"
#include "maxbetti/monomials.hpp"

namespace maxbetti {

class NotOSequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generators sorted by (degree ascending, lex descending); pairwise non-divisible.
struct MonomialIdeal {
  int64_t num_vars = 0;
  std::vector<Monomial> gens;
};

// Graded Betti numbers, zero entries omitted. Ideal convention stores
// beta_{q,j}(I); quotient convention stores beta_{q,j}(S/I), related by
// beta_{q+1,j}(S/I) = beta_{q,j}(I) with beta_{0,0}(S/I) = 1.
struct BettiTable {
  bool quotient = false;
  std::map<std::pair<int64_t, int64_t>, Int> entries;

  Int at(int64_t q, int64_t j) const;
  std::vector<Int> totals() const;
  BettiTable to_quotient() const;
  std::string render() const;
};

// Minimal generators of the lexsegment ideal of R = K[x_0..x_{num_vars_R-1}]
// whose degree-d quotient has exactly deltas[d] standard monomials, for
// d = 0..deltas.size()-1. Throws NotOSequenceError naming the first bad degree.
MonomialIdeal lex_ideal_generators(int64_t num_vars_R, const std::vector<Int>& deltas);

// Total and graded Betti numbers of a stable monomial ideal from its minimal
// generators: a generator u of degree t adds C(max_index(u), q) to beta_{q,t+q}.
// Stability is assumed, not checked.
BettiTable ek_graded_betti(const MonomialIdeal& ideal);

// The degreewise-minimal difference tuple compatible with the spec's tail,
// built by chaining Macaulay lower bounds backward from degree D+1. It is
// always the difference function of a lexsegment ideal with the right tail,
// whether or not it satisfies the spec's box constraints.
DifferenceTuple canonical_reference(const ConstraintSpec& spec);

// Offsets C_q = beta_q(L_ref) - sum_d V_q[d, ref_d]; for every member of the
// family, beta_q = C_q + sum_d V_q[d, delta_d]. Independent of the reference.
std::vector<Int> betti_offsets(const ConstraintSpec& spec, const DifferenceTuple& reference);
std::vector<Int> betti_offsets(const ConstraintSpec& spec);

struct MaxBettiResult {
  std::vector<Int> betti_upper_bound;
  Int maximum_betti_sum = 0;
  bool is_realizable = false;
  std::vector<std::vector<Int>> hilbert_functions;      // modes One, AllMaxBettiSum, All
  std::vector<std::vector<Int>> maximal_betti_numbers;  // mode All, descending lex
};

MaxBettiResult finalize(const RawDPResult& raw, const ConstraintSpec& spec, ResultsMode mode);

struct AlmostLexIdeal {
  MonomialIdeal ideal;  // in S: generators involve only the first N-1 variables
  BettiTable betti;     // quotient convention; equals the R-side table
};

// h holds h_{S/I}(0..len-1) and stays constant beyond. The returned ideal is
// the saturated almost-lexsegment ideal L*S with that Hilbert function.
AlmostLexIdeal almost_lex_ideal(int64_t num_vars, const std::vector<Int>& h);

}  // namespace maxbetti
