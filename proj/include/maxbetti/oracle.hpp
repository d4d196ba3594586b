#pragma once

#include <cstdint>
#include <vector>

#include "maxbetti/betti.hpp"
#include "maxbetti/constraints.hpp"
#include "maxbetti/dp.hpp"

namespace maxbetti {

/// WithMacaulayCondition additionally requires
/// macaulay_lower_bound(l_d, d) <= l_{d-1} in every degree, and compatibility
/// with the forced tail at D + 1; this is the family of genuine difference
/// functions of saturated ideals.
enum class FamilyKind { WithMacaulayCondition, WithoutMacaulayCondition };

struct OracleOptions {
  Int max_tuples = 10'000'000;  // guard on the estimated enumeration size
};

/// Direct restatement of the family's defining inequalities, used as the
/// per-tuple re-check behind enumerate_tuples.
bool satisfies_family(const ConstraintSpec& spec, FamilyKind kind, const DifferenceTuple& t);

/// Every family member exactly once, ascending lexicographic order.
/// Depth-first with prefix pruning; throws InstanceTooLargeError when the
/// box-window product exceeds options.max_tuples.
std::vector<DifferenceTuple> enumerate_tuples(const ConstraintSpec& spec, FamilyKind kind,
                                              const OracleOptions& options = {});

/// Exhaustive maximization: evaluates sum_d V_q[d, l_d] per tuple straight
/// from v_table and aggregates per q, by sum, and by Pareto dominance. The
/// selection logic is deliberately independent of the DP engine.
RawDPResult brute_force_raw(const ConstraintSpec& spec, FamilyKind kind, ResultsMode mode,
                            const OracleOptions& options = {});

/// brute_force_raw finalized through the same betti_offsets path as the DP.
MaxBettiResult brute_force_result(const ConstraintSpec& spec, FamilyKind kind, ResultsMode mode,
                                  const OracleOptions& options = {});

}  // namespace maxbetti
