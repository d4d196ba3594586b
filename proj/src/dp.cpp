#include "maxbetti/dp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_map>
#include <utility>

#include "maxbetti/macaulay.hpp"
#include "maxbetti/monomials.hpp"

namespace maxbetti {

namespace {

template <class V>
bool dominates_vec(const std::vector<V>& a, const std::vector<V>& b) {
  for (size_t q = 0; q < a.size(); ++q) {
    if (a[q] < b[q]) return false;
  }
  return true;
}

}  // namespace

void pareto_insert(std::vector<FrontierEntry>& frontier, const std::vector<Int>& value,
                   std::vector<DifferenceTuple> witnesses) {
  for (auto& e : frontier) {
    if (e.value == value) {
      for (auto& w : witnesses) e.witnesses.push_back(std::move(w));
      return;
    }
  }
  for (const auto& e : frontier) {
    if (dominates_vec(e.value, value)) return;
  }
  std::erase_if(frontier,
                [&](const FrontierEntry& e) { return dominates_vec(value, e.value); });
  frontier.push_back(FrontierEntry{value, std::move(witnesses)});
}

namespace {

constexpr uint32_t kNil = std::numeric_limits<uint32_t>::max();
constexpr int64_t kInfeasible = std::numeric_limits<int64_t>::max();

struct Windows {
  int64_t D = 0;
  bool empty = false;
  std::vector<Int> clo, chi;  // partial-sum windows, 0..D
  std::vector<Int> jlo, jhi;  // appended-value windows, 0..D
};

// Interval narrowing to a fixpoint. With the chain enabled, appended-value
// minima additionally propagate backward through the Macaulay lower bound,
// seeded by the forced tail difference at D + 1: no chain-feasible tuple can
// drop below those minima, which is what keeps wide instances tractable.
Windows build_windows(const ConstraintSpec& spec, bool with_chain) {
  Windows w;
  w.D = spec.D;
  w.clo = spec.G;
  w.chi = spec.F;
  w.jlo = spec.g;
  w.jhi = spec.f;
  if (with_chain) {
    Int tail = spec.tail_delta(w.D + 1);
    if (tail > 0) {
      Int seed = macaulay_lower_bound(tail, w.D + 1);
      auto& dst = w.jlo[static_cast<size_t>(w.D)];
      dst = std::max(dst, seed);
    }
    for (int64_t d = w.D; d >= 1; --d) {
      const Int& cur = w.jlo[static_cast<size_t>(d)];
      if (cur == 0) continue;
      Int m = macaulay_lower_bound(cur, d);
      auto& dst = w.jlo[static_cast<size_t>(d - 1)];
      dst = std::max(dst, m);
    }
  }
  bool changed = true;
  auto raise = [&changed](Int& x, const Int& v) {
    if (v > x) {
      x = v;
      changed = true;
    }
  };
  auto lower = [&changed](Int& x, const Int& v) {
    if (v < x) {
      x = v;
      changed = true;
    }
  };
  for (int pass = 0; pass < 64 && changed; ++pass) {
    changed = false;
    raise(w.clo[0], w.jlo[0]);
    lower(w.chi[0], w.jhi[0]);
    for (int64_t d = 1; d <= w.D; ++d) {
      auto i = static_cast<size_t>(d);
      raise(w.clo[i], w.clo[i - 1] + w.jlo[i]);
      lower(w.chi[i], w.chi[i - 1] + w.jhi[i]);
    }
    for (int64_t d = w.D - 1; d >= 0; --d) {
      auto i = static_cast<size_t>(d);
      raise(w.clo[i], w.clo[i + 1] - w.jhi[i + 1]);
      lower(w.chi[i], w.chi[i + 1] - w.jlo[i + 1]);
    }
    raise(w.jlo[0], w.clo[0]);
    lower(w.jhi[0], w.chi[0]);
    for (int64_t d = 1; d <= w.D; ++d) {
      auto i = static_cast<size_t>(d);
      raise(w.jlo[i], w.clo[i] - w.chi[i - 1]);
      lower(w.jhi[i], w.chi[i] - w.clo[i - 1]);
    }
  }
  for (int64_t d = 0; d <= w.D; ++d) {
    auto i = static_cast<size_t>(d);
    if (w.clo[i] > w.chi[i] || w.jlo[i] > w.jhi[i]) {
      w.empty = true;
      return w;
    }
  }
  return w;
}

template <class Value>
struct ValueTraits;

template <>
struct ValueTraits<int64_t> {
  static int64_t from_int(const Int& v) { return to_int64(v); }
  static Int to_int(int64_t v) { return Int(static_cast<long>(v)); }
};

template <>
struct ValueTraits<Int> {
  static const Int& from_int(const Int& v) { return v; }
  static const Int& to_int(const Int& v) { return v; }
};

template <class Value>
class Engine {
 public:
  Engine(const ConstraintSpec& spec, ResultsMode mode, const DPOptions& opt,
         const Windows& win, const std::vector<VTable>& tables)
      : mode_(mode), opt_(opt), win_(win), tables_(tables),
        nq_(spec.n() + 1) {}

  RawDPResult run(bool with_chain) {
    Layer prev;
    for (int64_t d = 0; d <= win_.D; ++d) {
      Layer cur = make_layer(d, with_chain);
      fill_layer(cur, prev, d, with_chain);
      prev = std::move(cur);
    }
    return harvest(prev);
  }

 private:
  struct Layer {
    Int cbase = 0;
    int64_t jbase = 0;  // fits 64 bits: bounded by the guarded window top
    int64_t cw = 0, jw = 0;
    int64_t jwin_w = 0;  // width of the appended-value window (= jw when chained)
    std::vector<uint8_t> present;
    std::vector<Value> vals;  // cell-major, nq per cell (all modes except All)
    std::vector<Value> sums;
    std::vector<uint32_t> wit;    // witness-set ids (modes One, AllMaxBettiSum)
    std::vector<uint32_t> front;  // frontier ids (mode All)

    size_t cell(int64_t coff, int64_t joff) const {
      return static_cast<size_t>(coff) * static_cast<size_t>(jw) + static_cast<size_t>(joff);
    }
  };

  struct WitEntry {
    int64_t j;
    uint32_t parent;
  };
  struct FrontCell {
    std::vector<Value> vec;
    uint32_t wits;
  };
  struct Running {
    bool present = false;
    std::vector<Value> vec;
    Value sum{};
    uint32_t wit = kNil;
    std::vector<FrontCell> front;  // mode All; arena id shared_front mirrors it
    uint32_t shared_front = kNil;  // valid while front is an unmodified arena copy
  };

  ResultsMode mode_;
  const DPOptions& opt_;
  const Windows& win_;
  const std::vector<VTable>& tables_;
  int64_t nq_;

  std::vector<std::vector<WitEntry>> sets_;
  std::vector<std::vector<FrontCell>> fronts_;

  // per-layer scratch
  std::vector<std::vector<Value>> vrow_;  // vrow_[q][j - jbase]
  std::vector<Value> vsum_;
  std::vector<int64_t> mlb_;  // chain key offsets into the previous layer, or kInfeasible

  bool track_wits() const {
    return mode_ == ResultsMode::One || mode_ == ResultsMode::AllMaxBettiSum;
  }

  uint32_t new_set(std::vector<WitEntry> entries) {
    sets_.push_back(std::move(entries));
    return static_cast<uint32_t>(sets_.size() - 1);
  }

  uint32_t new_front(std::vector<FrontCell> entries) {
    fronts_.push_back(std::move(entries));
    return static_cast<uint32_t>(fronts_.size() - 1);
  }

  Layer make_layer(int64_t d, bool with_chain) const {
    auto i = static_cast<size_t>(d);
    Layer l;
    l.cbase = win_.clo[i];
    l.jbase = to_int64(win_.jlo[i]);
    Int cwi = win_.chi[i] - win_.clo[i] + 1;
    Int jwi = win_.jhi[i] - win_.jlo[i] + 1;
    Int cells = cwi * (with_chain ? jwi : Int(1));
    if (cells > opt_.max_table)
      throw InstanceTooLargeError("dp: degree " + std::to_string(d) + " needs " +
                                  cells.get_str() + " cells, over the configured cap");
    l.cw = to_int64(cwi);
    l.jwin_w = to_int64(jwi);
    l.jw = with_chain ? l.jwin_w : 1;
    auto count = static_cast<size_t>(l.cw) * static_cast<size_t>(l.jw);
    l.present.assign(count, 0);
    if (mode_ != ResultsMode::All) {
      l.vals.assign(count * static_cast<size_t>(nq_), Value{});
      l.sums.assign(count, Value{});
    }
    if (track_wits()) l.wit.assign(count, kNil);
    if (mode_ == ResultsMode::All) l.front.assign(count, kNil);
    return l;
  }

  void prepare_rows(const Layer& cur, int64_t d) {
    const VTable& vt = tables_[static_cast<size_t>(d)];
    vrow_.assign(static_cast<size_t>(nq_), {});
    for (int64_t q = 0; q < nq_; ++q) {
      auto& row = vrow_[static_cast<size_t>(q)];
      row.reserve(static_cast<size_t>(cur.jwin_w));
      for (int64_t off = 0; off < cur.jwin_w; ++off)
        row.push_back(ValueTraits<Value>::from_int(vt.at(q, cur.jbase + off)));
    }
    vsum_.assign(static_cast<size_t>(cur.jwin_w), Value{});
    for (int64_t off = 0; off < cur.jwin_w; ++off) {
      Value s{};
      for (int64_t q = 0; q < nq_; ++q)
        s += vrow_[static_cast<size_t>(q)][static_cast<size_t>(off)];
      vsum_[static_cast<size_t>(off)] = s;
    }
  }

  void prepare_chain(const Layer& cur, const Layer& prev, int64_t d) {
    mlb_.assign(static_cast<size_t>(cur.jwin_w), 0);
    for (int64_t off = 0; off < cur.jwin_w; ++off) {
      int64_t j = cur.jbase + off;
      Int k = j == 0 ? Int(0) : macaulay_lower_bound(Int(static_cast<long>(j)), d);
      // keys below the window floor land on the floor cell, whose suffix
      // maximum already ranges over every feasible appended value
      int64_t koff = k <= prev.jbase ? 0
                     : k > prev.jbase + (prev.jw - 1) ? kInfeasible
                                                      : to_int64(k) - prev.jbase;
      mlb_[static_cast<size_t>(off)] = koff;
    }
  }

  void merge_cell(Running& r, const Layer& prev, size_t pcell, bool base, int64_t joff,
                  int64_t j, bool prefer_new_on_tie) {
    if (mode_ == ResultsMode::All) {
      merge_frontier(r, base ? kNil : prev.front[pcell], joff, j);
      return;
    }
    const Value* pv = base ? nullptr : &prev.vals[pcell * static_cast<size_t>(nq_)];
    Value cand_sum = (base ? Value{} : prev.sums[pcell]) + vsum_[static_cast<size_t>(joff)];
    uint32_t pwit = (!base && track_wits()) ? prev.wit[pcell] : kNil;
    if (!r.present) {
      r.present = true;
      r.vec.assign(static_cast<size_t>(nq_), Value{});
      for (int64_t q = 0; q < nq_; ++q) {
        auto qi = static_cast<size_t>(q);
        r.vec[qi] = (pv ? pv[qi] : Value{}) + vrow_[qi][static_cast<size_t>(joff)];
      }
      r.sum = cand_sum;
      if (track_wits()) r.wit = new_set({{j, pwit}});
      return;
    }
    for (int64_t q = 0; q < nq_; ++q) {
      auto qi = static_cast<size_t>(q);
      Value v = (pv ? pv[qi] : Value{}) + vrow_[qi][static_cast<size_t>(joff)];
      if (v > r.vec[qi]) r.vec[qi] = v;
    }
    if (cand_sum > r.sum) {
      r.sum = cand_sum;
      if (track_wits()) r.wit = new_set({{j, pwit}});
    } else if (cand_sum == r.sum && track_wits()) {
      if (mode_ == ResultsMode::AllMaxBettiSum) {
        auto merged = sets_[r.wit];
        merged.push_back({j, pwit});
        r.wit = new_set(std::move(merged));
      } else if (prefer_new_on_tie) {
        r.wit = new_set({{j, pwit}});
      }
    }
  }

  void merge_frontier(Running& r, uint32_t parent_front, int64_t joff, int64_t j) {
    if (!r.present) {
      r.present = true;
      r.front.clear();
      r.shared_front = kNil;
    }
    auto add = [&](const std::vector<Value>* pvec, uint32_t pwits) {
      std::vector<Value> v(static_cast<size_t>(nq_));
      for (int64_t q = 0; q < nq_; ++q) {
        auto qi = static_cast<size_t>(q);
        v[qi] = (pvec ? (*pvec)[qi] : Value{}) + vrow_[qi][static_cast<size_t>(joff)];
      }
      insert_front(r, std::move(v), j, pwits);
    };
    if (parent_front == kNil) {
      add(nullptr, kNil);
    } else {
      for (const auto& e : fronts_[parent_front]) add(&e.vec, e.wits);
    }
  }

  // r.front is always a private copy (the arena holds its own); modifying it
  // just invalidates the shared id so the next store snapshots anew
  void insert_front(Running& r, std::vector<Value> v, int64_t j, uint32_t pwits) {
    for (auto& e : r.front) {
      if (e.vec == v) {
        auto merged = sets_[e.wits];
        merged.push_back({j, pwits});
        e.wits = new_set(std::move(merged));
        r.shared_front = kNil;
        return;
      }
    }
    for (const auto& e : r.front) {
      if (dominates_vec(e.vec, v)) return;
    }
    std::erase_if(r.front, [&](const FrontCell& e) { return dominates_vec(v, e.vec); });
    r.front.push_back(FrontCell{std::move(v), new_set({{j, pwits}})});
    r.shared_front = kNil;
  }

  void store_cell(Layer& cur, size_t cell, Running& r) {
    if (!r.present) return;
    cur.present[cell] = 1;
    if (mode_ == ResultsMode::All) {
      if (r.shared_front == kNil) r.shared_front = new_front(r.front);
      cur.front[cell] = r.shared_front;
      return;
    }
    for (int64_t q = 0; q < nq_; ++q) {
      auto qi = static_cast<size_t>(q);
      cur.vals[cell * static_cast<size_t>(nq_) + qi] = r.vec[qi];
    }
    cur.sums[cell] = r.sum;
    if (track_wits()) cur.wit[cell] = r.wit;
  }

  void fill_layer(Layer& cur, const Layer& prev, int64_t d, bool with_chain) {
    prepare_rows(cur, d);
    if (with_chain && d >= 1) prepare_chain(cur, prev, d);
    for (int64_t coff = 0; coff < cur.cw; ++coff) {
      Int c = cur.cbase + coff;
      // intersect the appended-value window with what the previous layer's
      // partial sums can reach
      Int jlo_c = c, jhi_c = c;
      if (d > 0) {
        jlo_c -= prev.cbase + (prev.cw - 1);
        jhi_c -= prev.cbase;
      }
      if (jlo_c < cur.jbase) jlo_c = cur.jbase;
      Int jtop = cur.jbase + (cur.jwin_w - 1);
      if (jhi_c > jtop) jhi_c = jtop;
      int64_t lo = jlo_c > jhi_c ? 1 : to_int64(jlo_c - cur.jbase);
      int64_t hi = jlo_c > jhi_c ? 0 : to_int64(jhi_c - cur.jbase);
      Running r;
      if (with_chain) {
        for (int64_t joff = cur.jw - 1; joff >= 0; --joff) {
          if (joff >= lo && joff <= hi)
            try_transition(r, prev, d, coff, joff, true);
          store_cell(cur, cur.cell(coff, joff), r);
        }
      } else {
        for (int64_t joff = lo; joff <= hi; ++joff)
          try_transition(r, prev, d, coff, joff, false);
        store_cell(cur, cur.cell(coff, 0), r);
      }
    }
  }

  void try_transition(Running& r, const Layer& prev, int64_t d, int64_t coff, int64_t joff,
                      bool with_chain) {
    int64_t j = to_int64(win_.jlo[static_cast<size_t>(d)]) + joff;
    if (d == 0) {
      merge_cell(r, prev, 0, true, joff, j, with_chain);
      return;
    }
    // parent partial sum c - j; both windows are 64-bit sized, so offsets fit
    Int pcoff_i = (win_.clo[static_cast<size_t>(d)] + coff) - j - prev.cbase;
    assert(pcoff_i >= 0 && pcoff_i < prev.cw);
    auto pcoff = to_int64(pcoff_i);
    int64_t koff = 0;
    if (with_chain) {
      koff = mlb_[static_cast<size_t>(joff)];
      if (koff == kInfeasible) return;  // chain demands more than the window holds
    }
    size_t pcell = prev.cell(pcoff, koff);
    if (!prev.present[pcell]) return;
    merge_cell(r, prev, pcell, false, joff, j, with_chain);
  }

  RawDPResult harvest(const Layer& last) {
    const Int& term_c = win_.clo[static_cast<size_t>(win_.D)];
    size_t cell = last.cell(to_int64(term_c - last.cbase), 0);
    if (!last.present[cell])
      throw EmptyFamilyError("empty family: no tuple satisfies the constraints");
    RawDPResult out;
    if (mode_ == ResultsMode::All) {
      const auto& entries = fronts_[last.front[cell]];
      out.per_q_max.assign(static_cast<size_t>(nq_), Int(0));
      bool first = true;
      for (const auto& e : entries) {
        FrontierEntry fe;
        fe.value.reserve(static_cast<size_t>(nq_));
        Int s = 0;
        for (const auto& v : e.vec) {
          Int iv = ValueTraits<Value>::to_int(v);
          s += iv;
          fe.value.push_back(iv);
        }
        for (int64_t q = 0; q < nq_; ++q) {
          auto qi = static_cast<size_t>(q);
          if (first || fe.value[qi] > out.per_q_max[qi]) out.per_q_max[qi] = fe.value[qi];
        }
        if (first || s > out.max_sum) out.max_sum = s;
        first = false;
        fe.witnesses = materialize(e.wits);
        std::sort(fe.witnesses.begin(), fe.witnesses.end());
        out.frontier.push_back(std::move(fe));
      }
      std::sort(out.frontier.begin(), out.frontier.end(),
                [](const FrontierEntry& a, const FrontierEntry& b) { return a.value > b.value; });
      return out;
    }
    out.per_q_max.reserve(static_cast<size_t>(nq_));
    for (int64_t q = 0; q < nq_; ++q)
      out.per_q_max.push_back(ValueTraits<Value>::to_int(
          last.vals[cell * static_cast<size_t>(nq_) + static_cast<size_t>(q)]));
    out.max_sum = ValueTraits<Value>::to_int(last.sums[cell]);
    if (track_wits()) {
      out.witnesses = materialize(last.wit[cell]);
      std::sort(out.witnesses.begin(), out.witnesses.end());
    }
    return out;
  }

  std::vector<DifferenceTuple> materialize(uint32_t set_id) {
    std::unordered_map<uint32_t, std::vector<DifferenceTuple>> memo;
    memo[kNil] = {DifferenceTuple{}};
    std::vector<uint32_t> order;  // parents before dependents
    std::vector<std::pair<uint32_t, size_t>> stack{{set_id, 0}};
    while (!stack.empty()) {
      auto& [id, next] = stack.back();
      if (id == kNil || memo.count(id)) {
        stack.pop_back();
        continue;
      }
      const auto& entries = sets_[id];
      if (next < entries.size()) {
        uint32_t parent = entries[next].parent;
        ++next;
        if (parent != kNil && !memo.count(parent)) stack.emplace_back(parent, 0);
        continue;
      }
      memo[id];  // mark visited
      order.push_back(id);
      stack.pop_back();
    }
    size_t total = 0;
    for (uint32_t id : order) {
      std::vector<DifferenceTuple> tuples;
      for (const auto& en : sets_[id]) {
        for (const auto& prefix : memo.at(en.parent)) {
          DifferenceTuple t = prefix;
          t.push_back(en.j);
          tuples.push_back(std::move(t));
        }
      }
      total += tuples.size();
      if (total > static_cast<size_t>(opt_.max_witnesses))
        throw InstanceTooLargeError("dp: witness count exceeds the configured cap");
      memo[id] = std::move(tuples);
    }
    return memo.at(set_id);
  }
};

RawDPResult run_dp(const ConstraintSpec& spec, ResultsMode mode, const DPOptions& opt,
                   bool with_chain) {
  Windows win = build_windows(spec, with_chain);
  if (win.empty) throw EmptyFamilyError("empty family: constraint windows are infeasible");
  std::vector<VTable> tables;
  tables.reserve(static_cast<size_t>(win.D) + 1);
  Int cap = 0;
  for (int64_t d = 0; d <= win.D; ++d) {
    auto i = static_cast<size_t>(d);
    const Int& lmax = win.jhi[i];
    if (lmax > opt.max_table)
      throw InstanceTooLargeError("dp: V table at degree " + std::to_string(d) + " needs " +
                                  lmax.get_str() + " entries, over the configured cap");
    tables.push_back(v_table(spec.n(), d, to_int64(lmax)));
    for (int64_t q = 0; q <= spec.n(); ++q) cap += tables.back().at(q, to_int64(lmax));
  }
  bool narrow = !opt.force_wide_values && cap < (Int(1) << 61);
  if (narrow) {
    Engine<int64_t> e(spec, mode, opt, win, tables);
    return e.run(with_chain);
  }
  Engine<Int> e(spec, mode, opt, win, tables);
  return e.run(with_chain);
}

}  // namespace

RawDPResult run_simplified(const ConstraintSpec& spec, ResultsMode mode,
                           const DPOptions& options) {
  return run_dp(spec, mode, options, false);
}

RawDPResult run_complete(const ConstraintSpec& spec, ResultsMode mode,
                         const DPOptions& options) {
  return run_dp(spec, mode, options, true);
}

}  // namespace maxbetti
