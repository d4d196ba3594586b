#include "maxbetti/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "maxbetti/macaulay.hpp"
#include "maxbetti/monomials.hpp"

namespace maxbetti {

bool satisfies_family(const ConstraintSpec& spec, FamilyKind kind, const DifferenceTuple& t) {
  if (static_cast<int64_t>(t.size()) != spec.D + 1) return false;
  Int c = 0;
  for (int64_t d = 0; d <= spec.D; ++d) {
    auto i = static_cast<size_t>(d);
    Int l(static_cast<long>(t[i]));
    if (l < spec.g[i] || l > spec.f[i]) return false;
    c += l;
    if (c < spec.G[i] || c > spec.F[i]) return false;
    if (kind == FamilyKind::WithMacaulayCondition && d >= 1 &&
        macaulay_lower_bound(l, d) > Int(static_cast<long>(t[i - 1])))
      return false;
  }
  if (kind == FamilyKind::WithMacaulayCondition &&
      macaulay_lower_bound(spec.tail_delta(spec.D + 1), spec.D + 1) >
          Int(static_cast<long>(t.back())))
    return false;
  return true;
}

namespace {

struct Enumerator {
  const ConstraintSpec& spec;
  FamilyKind kind;
  Int budget;  // remaining node visits before the instance is declared too large
  std::vector<Int> minreq;  // least partial sum at degree d completable to G(D)
  std::vector<Int> maxallow;  // largest partial sum at degree d not already over a later F
  Int tail_floor = 0;
  std::vector<DifferenceTuple> out;
  DifferenceTuple t;

  Enumerator(const ConstraintSpec& s, FamilyKind k, const OracleOptions& opt)
      : spec(s), kind(k), budget(opt.max_tuples) {
    auto n = static_cast<size_t>(spec.D) + 1;
    minreq.resize(n);
    maxallow.resize(n);
    minreq[n - 1] = spec.G[n - 1];
    maxallow[n - 1] = spec.F[n - 1];
    for (size_t d = n - 1; d-- > 0;) {
      Int reach = minreq[d + 1] - std::min(spec.f[d + 1], spec.F[d + 1]);
      minreq[d] = std::max(spec.G[d], reach);
      Int room = maxallow[d + 1] - spec.g[d + 1];
      maxallow[d] = std::min(spec.F[d], room);
    }
    if (kind == FamilyKind::WithMacaulayCondition)
      tail_floor = macaulay_lower_bound(spec.tail_delta(spec.D + 1), spec.D + 1);
    t.resize(n);
  }

  void spend() {
    if (--budget < 0)
      throw InstanceTooLargeError("instance too large: enumeration exceeded the tuple ceiling");
  }

  void walk(int64_t d, const Int& csum) {
    auto i = static_cast<size_t>(d);
    Int lo = spec.g[i];
    if (d == spec.D && tail_floor > lo) lo = tail_floor;
    Int room = spec.F[i] - csum;
    Int hi = std::min(spec.f[i], room);
    for (Int l = lo; l <= hi; ++l) {
      spend();
      if (kind == FamilyKind::WithMacaulayCondition && d >= 1 &&
          macaulay_lower_bound(l, d) > Int(static_cast<long>(t[i - 1])))
        break;  // the bound only grows with l
      Int c = csum + l;
      if (c < minreq[i]) continue;
      if (!fits_int64(l))
        throw InstanceTooLargeError("instance too large: appended value exceeds 64 bits");
      t[i] = to_int64(l);
      if (d == spec.D) {
        if (!satisfies_family(spec, kind, t))
          throw std::logic_error("oracle enumeration produced an invalid tuple");
        out.push_back(t);
      } else {
        walk(d + 1, c);
      }
    }
  }
};

bool dominates(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (size_t q = 0; q < a.size(); ++q)
    if (a[q] < b[q]) return false;
  return true;
}

// smaller when read from the last coordinate backward; the tie order both
// DP variants induce in mode One
bool reversed_less(const DifferenceTuple& a, const DifferenceTuple& b) {
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<DifferenceTuple> enumerate_tuples(const ConstraintSpec& spec, FamilyKind kind,
                                              const OracleOptions& options) {
  Enumerator e(spec, kind, options);
  e.walk(0, Int(0));
  return std::move(e.out);
}

RawDPResult brute_force_raw(const ConstraintSpec& spec, FamilyKind kind, ResultsMode mode,
                            const OracleOptions& options) {
  std::vector<DifferenceTuple> tuples = enumerate_tuples(spec, kind, options);
  if (tuples.empty()) throw EmptyFamilyError("empty family: enumeration found no tuple");
  auto nq = static_cast<size_t>(spec.n()) + 1;
  std::vector<int64_t> lmax(static_cast<size_t>(spec.D) + 1, 0);
  for (const auto& t : tuples)
    for (size_t d = 0; d < t.size(); ++d) lmax[d] = std::max(lmax[d], t[d]);
  std::vector<VTable> vt;
  vt.reserve(lmax.size());
  for (int64_t d = 0; d <= spec.D; ++d)
    vt.push_back(v_table(spec.n(), d, lmax[static_cast<size_t>(d)]));

  RawDPResult out;
  out.per_q_max.assign(nq, Int(0));
  const DifferenceTuple* best = nullptr;
  std::vector<DifferenceTuple> attainers;
  std::map<std::vector<Int>, std::vector<DifferenceTuple>> by_value;
  bool first = true;
  for (const auto& t : tuples) {
    std::vector<Int> vec(nq, Int(0));
    for (size_t d = 0; d < t.size(); ++d)
      for (size_t q = 0; q < nq; ++q)
        vec[q] += vt[d].at(static_cast<int64_t>(q), t[d]);
    Int s = 0;
    for (const auto& v : vec) s += v;
    for (size_t q = 0; q < nq; ++q)
      if (first || vec[q] > out.per_q_max[q]) out.per_q_max[q] = vec[q];
    if (first || s > out.max_sum) {
      out.max_sum = s;
      best = &t;
      attainers.assign(1, t);
    } else if (s == out.max_sum) {
      if (reversed_less(t, *best)) best = &t;
      attainers.push_back(t);
    }
    first = false;
    if (mode == ResultsMode::All) by_value[std::move(vec)].push_back(t);
  }
  if (mode == ResultsMode::One) {
    out.witnesses.assign(1, *best);
  } else if (mode == ResultsMode::AllMaxBettiSum) {
    std::sort(attainers.begin(), attainers.end());
    out.witnesses = std::move(attainers);
  } else if (mode == ResultsMode::All) {
    for (auto& [vec, wits] : by_value) {
      bool maximal = true;
      for (const auto& [other, w2] : by_value) {
        if (&other != &vec && dominates(other, vec)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      std::sort(wits.begin(), wits.end());
      out.frontier.push_back(FrontierEntry{vec, std::move(wits)});
    }
    std::sort(out.frontier.begin(), out.frontier.end(),
              [](const FrontierEntry& a, const FrontierEntry& b) { return a.value > b.value; });
  }
  return out;
}

MaxBettiResult brute_force_result(const ConstraintSpec& spec, FamilyKind kind, ResultsMode mode,
                                  const OracleOptions& options) {
  return finalize(brute_force_raw(spec, kind, mode, options), spec, mode);
}

}  // namespace maxbetti
