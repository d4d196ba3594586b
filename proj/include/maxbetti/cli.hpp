#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxbetti/bigint.hpp"
#include "maxbetti/constraints.hpp"
#include "maxbetti/dp.hpp"
#include "maxbetti/macaulay.hpp"

namespace maxbetti {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadSpec = 2;    // inconsistent constraints, invalid input
inline constexpr int kExitEmpty = 3;      // no tuple satisfies the constraints
inline constexpr int kExitMismatch = 4;   // --verify disagreement

struct SolveRequest {
  int64_t variables = 0;
  std::optional<BinomialPolynomial> hilbert_polynomial;
  BoundMap hf_lower, hf_upper, diff_lower, diff_upper;
  AlgorithmChoice algorithm = AlgorithmChoice::Automatic;
  ResultsMode results = ResultsMode::None;
  bool verify = false;
};

/// "(,,,8,8,5,5)" positional form: the i-th slot constrains degree i, empty
/// slots stay unconstrained. "3=8,4=8,5=5,6=5" (or "3:8,...") names degrees
/// directly. Braces and whitespace are ignored.
BoundMap parse_bound_list(const std::string& text);

/// Comma-separated integers with no gaps, e.g. "1,5,11,21".
std::vector<Int> parse_int_list(const std::string& text);

/// Power-basis coefficients, highest degree first ("3,-6,175" for
/// 3d^2 - 6d + 175); exact rationals allowed ("1/2,1/2"). Must be
/// integer-valued.
BinomialPolynomial parse_polynomial(const std::string& text);

AlgorithmChoice parse_algorithm(const std::string& text);
ResultsMode parse_results(const std::string& text);

/// Reads the JSON request document (see README for the schema).
SolveRequest request_from_json(const nlohmann::json& doc);

/// Runs build_spec -> choose_algorithm -> DP -> finalize, optionally diffing
/// against the brute-force oracle (--verify). Human-readable table or JSON
/// response document on `out`, diagnostics on `err`; returns the exit code.
int solve_command(const SolveRequest& request, bool json_output, std::ostream& out,
                  std::ostream& err);

/// Saturated almost-lexsegment ideal for h plus its quotient Betti table.
int ideal_command(int64_t variables, const std::vector<Int>& h, bool json_output,
                  std::ostream& out, std::ostream& err);

struct BenchRequest {
  int64_t variables = 5;
  int64_t max_p = 100;
};

/// Constant-polynomial sweep p = 0..max_p; CSV "p,simplified_ms,complete_ms".
int bench_command(const BenchRequest& request, std::ostream& out, std::ostream& err);

}  // namespace maxbetti
