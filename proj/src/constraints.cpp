#include "maxbetti/constraints.hpp"

#include <algorithm>

#include "maxbetti/monomials.hpp"

namespace maxbetti {

Int ConstraintSpec::tail_value(int64_t d) const {
  if (d < D) throw std::invalid_argument("tail_value: degree below horizon");
  if (tail_poly) return tail_poly->eval(d);
  return G[static_cast<size_t>(D)];
}

Int ConstraintSpec::tail_delta(int64_t d) const {
  if (d <= D) throw std::invalid_argument("tail_delta: degree not past horizon");
  if (tail_poly) return tail_poly->eval(d) - tail_poly->eval(d - 1);
  return 0;
}

namespace {

int64_t last_key(const BoundMap& m) {
  return m.empty() ? -1 : m.rbegin()->first;
}

void check_keys(const BoundMap& m) {
  if (!m.empty() && m.begin()->first < 0)
    throw std::invalid_argument("build_spec: negative degree in a bound list");
}

}  // namespace

ConstraintSpec build_spec(int64_t N, const BoundMap& lower_h, const BoundMap& upper_h,
                          const BoundMap& lower_dh, const BoundMap& upper_dh,
                          const std::optional<BinomialPolynomial>& p) {
  if (N < 2) throw std::invalid_argument("build_spec: need N >= 2");
  for (const auto* m : {&lower_h, &upper_h, &lower_dh, &upper_dh}) check_keys(*m);

  int64_t last = std::max(std::max(last_key(lower_h), last_key(upper_h)),
                          std::max(last_key(lower_dh), last_key(upper_dh)));

  ConstraintSpec spec;
  spec.N = N;
  spec.tail_poly = p;
  if (p) {
    spec.D = std::max(gotzmann_number(*p), last + 1);
  } else {
    if (last < 0) throw SpecError(SpecError::Kind::NoHorizon,
                                  "no horizon: no polynomial and no constrained degree");
    spec.D = last;
  }

  auto sz = static_cast<size_t>(spec.D) + 1;
  spec.G.assign(sz, Int(0));
  spec.F.resize(sz);
  spec.g.assign(sz, Int(0));
  spec.f.resize(sz);
  for (int64_t d = 0; d <= spec.D; ++d) {
    spec.F[static_cast<size_t>(d)] = count_monomials(N, d);
    spec.f[static_cast<size_t>(d)] = count_monomials(N - 1, d);
  }

  auto apply = [&](const BoundMap& m, std::vector<Int>& dst, bool is_lower,
                   const std::vector<Int>& cap) {
    for (const auto& [d, v] : m) {
      if (d > spec.D) continue;  // unreachable when p is absent
      auto i = static_cast<size_t>(d);
      dst[i] = is_lower ? std::max(v, Int(0)) : std::min(v, cap[i]);
    }
  };
  apply(lower_h, spec.G, true, spec.F);
  apply(upper_h, spec.F, false, spec.F);
  apply(lower_dh, spec.g, true, spec.f);
  apply(upper_dh, spec.f, false, spec.f);

  if (p) {
    Int v = p->eval(spec.D);
    auto i = static_cast<size_t>(spec.D);
    spec.G[i] = v;
    spec.F[i] = std::min(v, count_monomials(N, spec.D));
  }

  for (int64_t d = 0; d <= spec.D; ++d) {
    auto i = static_cast<size_t>(d);
    if (spec.G[i] > spec.F[i])
      throw SpecError(SpecError::Kind::Inconsistent,
                      "inconsistent constraints: G(" + std::to_string(d) + ") > F(" +
                          std::to_string(d) + ")");
    if (spec.g[i] > spec.f[i])
      throw SpecError(SpecError::Kind::Inconsistent,
                      "inconsistent constraints: g(" + std::to_string(d) + ") > f(" +
                          std::to_string(d) + ")");
  }
  if (!p && spec.G[static_cast<size_t>(spec.D)] != spec.F[static_cast<size_t>(spec.D)])
    throw SpecError(SpecError::Kind::NoHorizon,
                    "no horizon: G(" + std::to_string(spec.D) + ") != F(" +
                        std::to_string(spec.D) + ") and no polynomial pins the tail");
  return spec;
}

AlgorithmChoice choose_algorithm(const ConstraintSpec& spec, AlgorithmChoice requested) {
  if (requested != AlgorithmChoice::Automatic) return requested;
  for (int64_t d = 0; d < spec.D; ++d) {
    if (spec.F[static_cast<size_t>(d)] != count_monomials(spec.N, d))
      return AlgorithmChoice::Complete;
  }
  return AlgorithmChoice::Simplified;
}

}  // namespace maxbetti
