#include "maxbetti/betti.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "maxbetti/macaulay.hpp"

namespace maxbetti {

Int BettiTable::at(int64_t q, int64_t j) const {
  auto it = entries.find({q, j});
  return it == entries.end() ? Int(0) : it->second;
}

std::vector<Int> BettiTable::totals() const {
  int64_t qmax = -1;
  for (const auto& [key, val] : entries) qmax = std::max(qmax, key.first);
  std::vector<Int> t(static_cast<size_t>(qmax + 1), Int(0));
  for (const auto& [key, val] : entries) t[static_cast<size_t>(key.first)] += val;
  return t;
}

BettiTable BettiTable::to_quotient() const {
  assert(!quotient);
  BettiTable t;
  t.quotient = true;
  t.entries[{0, 0}] = 1;
  for (const auto& [key, val] : entries) t.entries[{key.first + 1, key.second}] = val;
  return t;
}

std::string BettiTable::render() const {
  int64_t qmax = 0, rmax = 0;
  for (const auto& [key, val] : entries) {
    qmax = std::max(qmax, key.first);
    rmax = std::max(rmax, key.second - key.first);
  }
  auto totals_v = totals();
  totals_v.resize(static_cast<size_t>(qmax + 1), Int(0));
  std::vector<std::string> labels;
  labels.push_back("");
  labels.push_back("total:");
  for (int64_t r = 0; r <= rmax; ++r) labels.push_back(std::to_string(r) + ":");
  size_t label_w = 0;
  for (const auto& s : labels) label_w = std::max(label_w, s.size());

  // grid[0] = column headers, grid[1] = totals, grid[2 + r] = row r
  std::vector<std::vector<std::string>> grid(labels.size());
  for (int64_t q = 0; q <= qmax; ++q) {
    grid[0].push_back(std::to_string(q));
    grid[1].push_back(totals_v[static_cast<size_t>(q)].get_str());
    for (int64_t r = 0; r <= rmax; ++r) {
      Int v = at(q, q + r);
      grid[static_cast<size_t>(r) + 2].push_back(v == 0 ? "." : v.get_str());
    }
  }
  std::vector<size_t> col_w(static_cast<size_t>(qmax + 1), 0);
  for (const auto& row : grid)
    for (size_t q = 0; q < row.size(); ++q) col_w[q] = std::max(col_w[q], row[q].size());

  std::ostringstream out;
  for (size_t i = 0; i < grid.size(); ++i) {
    out << std::string(label_w - labels[i].size(), ' ') << labels[i];
    for (size_t q = 0; q < grid[i].size(); ++q)
      out << ' ' << std::string(col_w[q] - grid[i][q].size(), ' ') << grid[i][q];
    out << '\n';
  }
  return out.str();
}

MonomialIdeal lex_ideal_generators(int64_t num_vars_R, const std::vector<Int>& deltas) {
  if (num_vars_R < 1) throw std::invalid_argument("lex_ideal_generators: need at least one variable");
  if (deltas.empty()) throw std::invalid_argument("lex_ideal_generators: need degree 0");
  auto fail = [](int64_t d, const std::string& why) {
    throw NotOSequenceError("not an O-sequence at degree " + std::to_string(d) + ": " + why);
  };
  for (size_t d = 0; d < deltas.size(); ++d)
    if (deltas[d] < 0) fail(static_cast<int64_t>(d), "negative difference " + deltas[d].get_str());
  MonomialIdeal ideal;
  ideal.num_vars = num_vars_R;
  if (deltas[0] == 0) {
    for (size_t d = 1; d < deltas.size(); ++d)
      if (deltas[d] != 0)
        fail(static_cast<int64_t>(d), "growth from 0 allows only 0, got " + deltas[d].get_str());
    ideal.gens.push_back(Monomial{std::vector<int32_t>(static_cast<size_t>(num_vars_R), 0)});
    return ideal;
  }
  if (deltas[0] > 1) fail(0, deltas[0].get_str() + " exceeds the single degree-0 monomial");
  for (size_t d = 1; d < deltas.size(); ++d) {
    auto dd = static_cast<int64_t>(d);
    Int ub_prev = dd == 1 ? count_monomials(num_vars_R, 1)
                          : macaulay_upper_bound(deltas[d - 1], dd - 1);
    if (deltas[d] > ub_prev)
      fail(dd, deltas[d].get_str() + " exceeds the Macaulay growth bound " + ub_prev.get_str() +
                   " from degree " + std::to_string(dd - 1));
    // new generators: the slice of L_d not reached by multiplying L_{d-1}
    size_t mark = ideal.gens.size();
    for (Int k = deltas[d] + 1; k <= ub_prev; ++k)
      ideal.gens.push_back(lex_last_monomial(num_vars_R - 1, dd, k));
    std::reverse(ideal.gens.begin() + static_cast<std::ptrdiff_t>(mark), ideal.gens.end());
  }
  return ideal;
}

BettiTable ek_graded_betti(const MonomialIdeal& ideal) {
  BettiTable t;
  for (const auto& u : ideal.gens) {
    int64_t deg = u.degree();
    int64_t m = deg == 0 ? 0 : max_index(u);
    for (int64_t q = 0; q <= m; ++q) t.entries[{q, deg + q}] += binomial(m, q);
  }
  return t;
}

DifferenceTuple canonical_reference(const ConstraintSpec& spec) {
  DifferenceTuple ref(static_cast<size_t>(spec.D) + 1, 0);
  Int next = spec.tail_delta(spec.D + 1);
  for (int64_t d = spec.D; d >= 0; --d) {
    Int cur = macaulay_lower_bound(next, d + 1);
    ref[static_cast<size_t>(d)] = to_int64(cur);
    next = cur;
  }
  return ref;
}

std::vector<Int> betti_offsets(const ConstraintSpec& spec, const DifferenceTuple& reference) {
  assert(static_cast<int64_t>(reference.size()) == spec.D + 1);
  std::vector<Int> deltas(reference.size() + 1);
  for (size_t d = 0; d < reference.size(); ++d) deltas[d] = reference[d];
  deltas.back() = spec.tail_delta(spec.D + 1);
  BettiTable table = ek_graded_betti(lex_ideal_generators(spec.num_vars_R(), deltas));
  std::vector<Int> offsets = table.totals();
  offsets.resize(static_cast<size_t>(spec.n()) + 1, Int(0));
  for (int64_t d = 0; d <= spec.D; ++d) {
    int64_t l = reference[static_cast<size_t>(d)];
    VTable vt = v_table(spec.n(), d, l);
    for (int64_t q = 0; q <= spec.n(); ++q) offsets[static_cast<size_t>(q)] -= vt.at(q, l);
  }
  return offsets;
}

std::vector<Int> betti_offsets(const ConstraintSpec& spec) {
  return betti_offsets(spec, canonical_reference(spec));
}

namespace {

// Cumulative h-values of a difference tuple. Constant tail: cut after the
// first repeat of the stabilized value; otherwise run through degree D + 1.
std::vector<Int> to_hilbert(const ConstraintSpec& spec, const DifferenceTuple& t) {
  std::vector<Int> h(static_cast<size_t>(spec.D) + 2);
  Int run = 0;
  for (int64_t d = 0; d <= spec.D; ++d) {
    run += t[static_cast<size_t>(d)];
    h[static_cast<size_t>(d)] = run;
  }
  Int tail = spec.tail_delta(spec.D + 1);
  h.back() = run + tail;
  if (tail == 0) {
    const Int v = run;
    size_t s = 0;
    while (h[s] != v) ++s;
    h.resize(s + 2, v);
  }
  return h;
}

}  // namespace

MaxBettiResult finalize(const RawDPResult& raw, const ConstraintSpec& spec, ResultsMode mode) {
  std::vector<Int> offsets = betti_offsets(spec);
  MaxBettiResult out;
  Int offset_sum = 0, bound_sum = 0;
  out.betti_upper_bound.reserve(offsets.size());
  for (size_t q = 0; q < offsets.size(); ++q) {
    out.betti_upper_bound.push_back(offsets[q] + raw.per_q_max[q]);
    offset_sum += offsets[q];
    bound_sum += out.betti_upper_bound.back();
  }
  out.maximum_betti_sum = offset_sum + raw.max_sum;
  out.is_realizable = bound_sum == out.maximum_betti_sum;
  if (mode == ResultsMode::One || mode == ResultsMode::AllMaxBettiSum) {
    for (const auto& t : raw.witnesses) out.hilbert_functions.push_back(to_hilbert(spec, t));
  } else if (mode == ResultsMode::All) {
    for (const auto& fe : raw.frontier) {
      std::vector<Int> v;
      v.reserve(fe.value.size());
      for (size_t q = 0; q < fe.value.size(); ++q) v.push_back(offsets[q] + fe.value[q]);
      out.maximal_betti_numbers.push_back(std::move(v));
      for (const auto& t : fe.witnesses) out.hilbert_functions.push_back(to_hilbert(spec, t));
    }
    std::sort(out.hilbert_functions.begin(), out.hilbert_functions.end());
  }
  return out;
}

AlmostLexIdeal almost_lex_ideal(int64_t num_vars, const std::vector<Int>& h) {
  if (num_vars < 2) throw std::invalid_argument("almost_lex_ideal: need at least 2 variables");
  if (h.empty()) throw std::invalid_argument("almost_lex_ideal: need h(0)");
  std::vector<Int> deltas(h.size() + 1);
  for (size_t d = 0; d < h.size(); ++d) deltas[d] = d == 0 ? h[0] : h[d] - h[d - 1];
  deltas.back() = 0;  // h is constant past the given values
  AlmostLexIdeal out;
  MonomialIdeal in_R = lex_ideal_generators(num_vars - 1, deltas);
  out.betti = ek_graded_betti(in_R).to_quotient();
  out.ideal.num_vars = num_vars;
  for (auto& g : in_R.gens) {
    g.exp.push_back(0);
    out.ideal.gens.push_back(std::move(g));
  }
  return out;
}

}  // namespace maxbetti
