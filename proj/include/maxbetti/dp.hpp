#ifndef MAXBETTI_DP_HPP
#define MAXBETTI_DP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "maxbetti/bigint.hpp"
#include "maxbetti/constraints.hpp"

namespace maxbetti {

enum class ResultsMode { None, One, AllMaxBettiSum, All };

class EmptyFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InstanceTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (l_0, ..., l_D) with l_d = Dh(d); guarded instances keep entries in
/// 64-bit range.
using DifferenceTuple = std::vector<int64_t>;

struct FrontierEntry {
  std::vector<Int> value;                  // accumulated (V_0, ..., V_n)
  std::vector<DifferenceTuple> witnesses;  // tuples attaining exactly this vector
};

/// Inserts a candidate into a Pareto antichain under componentwise <=.
/// Dominated candidates are dropped, equal vectors merge witness lists,
/// dominated incumbents are evicted.
void pareto_insert(std::vector<FrontierEntry>& frontier, const std::vector<Int>& value,
                   std::vector<DifferenceTuple> witnesses);

struct RawDPResult {
  std::vector<Int> per_q_max;              // independent maxima of sum_d V_q[d, l_d]
  Int max_sum;                             // maximum of sum_q sum_d V_q[d, l_d]
  std::vector<DifferenceTuple> witnesses;  // One: a single tuple; AllMaxBettiSum: every
                                           // max-sum tuple; sorted ascending
  std::vector<FrontierEntry> frontier;     // mode All; sorted by value, descending
};

struct DPOptions {
  int64_t max_table = 50'000'000;     // cap on V-row length and per-layer cell count
  int64_t max_witnesses = 1'000'000;  // cap on materialized witness tuples
  bool force_wide_values = false;     // big-integer accumulators even when 64 bits fit
};

/// Maximizes over tuples constrained by the windows alone (no Macaulay
/// growth condition between consecutive degrees).
RawDPResult run_simplified(const ConstraintSpec& spec, ResultsMode mode,
                           const DPOptions& options = {});

/// Maximizes over tuples additionally satisfying
/// macaulay_lower_bound(l_d, d) <= l_{d-1}, i.e. genuine difference
/// functions of Hilbert functions.
RawDPResult run_complete(const ConstraintSpec& spec, ResultsMode mode,
                         const DPOptions& options = {});

}  // namespace maxbetti

#endif
