#include "growthlab/gap_sweep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace growthlab {

namespace {

// Sign-preserving passage from x = 1/gamma to gamma (multiply by gamma^deg).
IntPoly gamma_form(const IntPoly& f) { return f.is_zero() ? f : f.reversed(static_cast<unsigned>(f.degree())); }

// p(-y) for the downward sweep; an involution.
IntPoly negate_variable(const IntPoly& p) {
  std::vector<Integer> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

struct Tracked {
  IntPoly poly;
  SturmChain chain;
  std::vector<RootBracket> roots;  // inside the sweep window, increasing
  std::size_t next = 0;            // roots before this index lie at or below the sweep point
};

struct Cand {
  Tracked* t;
  std::size_t idx;
  RootBracket& b() const { return t->roots[idx]; }
};

struct Constraint {
  std::size_t position;
  IntPoly x_poly;  // N_n(x) - g(x)(1 - x^P) >= 0
};

class Sweep {
 public:
  Sweep(const DigitSetSequence& D, const Rational& start, const Rational& limit, SweepDirection dir, unsigned bits)
      : D_(D), sigma_(dir == SweepDirection::up ? 1 : -1), bits_(bits) {
    y0_ = sigma_ * start;
    y1_ = sigma_ * limit;
    if (!(y0_ < y1_)) throw InputError("sweep limit lies on the wrong side of the start");
    if (start <= 1 || limit <= 1) throw InputError("sweep range must lie above 1");
    a_ = D.preperiod.size();
    P_ = D.period.size();
    std::map<std::vector<IntPoly>, int> seen;
    for (std::size_t n = 1; n <= a_ + P_; ++n) {
      std::vector<IntPoly> vals;
      for (const auto& d : D.at(n)) vals.push_back(d.trimmed().value_poly());
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      auto [it, fresh] = seen.emplace(vals, static_cast<int>(sets_.size()));
      if (fresh) sets_.push_back(std::move(vals));
      pos_set_.push_back(it->second);
    }
    one_minus_xP_ = IntPoly::from_ints({1}) - IntPoly::monomial(1, static_cast<unsigned>(P_));
  }

  std::optional<GapBoundary> run() {
    Rational y = y0_;
    if (!gap_inequalities_hold(D_, gamma(y))) throw InputError("gap inequalities fail at the sweep start");
    y = enter(y);
    while (true) {
      auto polys = state_polys(y);
      std::vector<Cand> cands;
      for (Tracked* t : polys) {
        std::size_t i = first_above(*t, y);
        if (i != npos) cands.push_back({t, i});
      }
      if (cands.empty()) return std::nullopt;

      std::vector<Cand> Z;
      std::vector<Cand> others;
      least_event(cands, Z, others);
      Cand& rep = Z.front();
      if (rep.b().exact() && rep.b().lo == y1_) return std::nullopt;

      Rational upper = y1_;
      for (auto& c : others) upper = std::min(upper, c.b().lo);
      for (auto& z : Z)
        if (z.idx + 1 < z.t->roots.size()) upper = std::min(upper, z.t->roots[z.idx + 1].lo);

      Rational t;
      std::vector<Tracked*> next_polys;
      while (true) {
        t = step_point(Z, polys, upper);
        next_polys = state_polys(t);
        if (new_polys_clear(polys, next_polys, Z, t)) break;
        if (rep.b().exact()) {
          upper = t;  // halve towards the exact event
        } else {
          rep.t->chain.bisect(rep.b());
        }
      }
      if (gap_inequalities_hold(D_, gamma(t))) {
        y = t;
        continue;
      }
      return boundary(Z, t);
    }
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Rational gamma(const Rational& y) const { return sigma_ * y; }
  IntPoly to_y(const IntPoly& p_gamma) const { return sigma_ > 0 ? p_gamma : negate_variable(p_gamma); }

  // Moves off the start if it is itself an event, so that the digit order
  // at the returned point holds on (start, point].
  Rational enter(const Rational& y) {
    bool clean = true;
    for (Tracked* t : state_polys(y))
      if (t->poly.sign_at(y) == 0) clean = false;
    if (clean) return y;
    Rational w = std::min<Rational>(dyadic_epsilon(20), (y1_ - y) / 2);
    while (true) {
      const Rational t = y + w;
      bool ok = gap_inequalities_hold(D_, gamma(t));
      for (Tracked* p : state_polys(t)) {
        if (p->chain.count(y, t) != 0) ok = false;
      }
      if (ok) return t;
      w /= 2;
      if (w < dyadic_epsilon(200)) throw CertificationError("cannot leave the sweep start cleanly");
    }
  }

  // Digit order of each set at the point y.
  std::vector<std::vector<int>> orders_at(const Rational& y) const {
    const Rational x = 1 / gamma(y);
    std::vector<std::vector<int>> out;
    for (const auto& vals : sets_) {
      std::vector<Rational> v;
      for (const auto& p : vals) v.push_back(p.eval(x));
      std::vector<int> o(vals.size());
      for (std::size_t i = 0; i < o.size(); ++i) o[i] = static_cast<int>(i);
      std::stable_sort(o.begin(), o.end(), [&](int i, int j) { return v[i] < v[j]; });
      out.push_back(std::move(o));
    }
    return out;
  }

  std::size_t reduce(std::size_t m) const { return m <= a_ + P_ ? m : a_ + (m - a_ - 1) % P_ + 1; }

  std::vector<Constraint> constraints(const std::vector<std::vector<int>>& ord) const {
    std::vector<IntPoly> Delta(a_ + P_ + 1);
    for (std::size_t m = 1; m <= a_ + P_; ++m) {
      const auto& vals = sets_[pos_set_[m - 1]];
      const auto& o = ord[pos_set_[m - 1]];
      Delta[m] = vals[o.back()] - vals[o.front()];
    }
    std::vector<Constraint> out;
    for (std::size_t n = 1; n <= a_ + P_; ++n) {
      const int si = pos_set_[n - 1];
      if (sets_[si].size() < 2) continue;
      IntPoly N;
      if (n >= a_) {
        for (std::size_t j = 1; j <= P_; ++j) N = N + Delta[reduce(n + j)].shifted(static_cast<unsigned>(j));
      } else {
        IntPoly head;
        for (std::size_t m = n + 1; m <= a_; ++m) head = head + Delta[m].shifted(static_cast<unsigned>(m - n));
        IntPoly tail;
        for (std::size_t j = 1; j <= P_; ++j) tail = tail + Delta[a_ + j].shifted(static_cast<unsigned>(j));
        N = head * one_minus_xP_ + tail.shifted(static_cast<unsigned>(a_ - n));
      }
      const auto& vals = sets_[si];
      const auto& o = ord[si];
      for (std::size_t j = 0; j + 1 < o.size(); ++j) {
        const IntPoly g = vals[o[j + 1]] - vals[o[j]];
        out.push_back({n, N - g * one_minus_xP_});
      }
    }
    return out;
  }

  // Order-change and constraint polynomials of the state at y.
  std::vector<Tracked*> state_polys(const Rational& y) {
    const auto ord = orders_at(y);
    std::set<Tracked*> out;
    for (std::size_t si = 0; si < sets_.size(); ++si) {
      const auto& vals = sets_[si];
      const auto& o = ord[si];
      for (std::size_t j = 0; j + 1 < o.size(); ++j)
        if (Tracked* t = track(vals[o[j + 1]] - vals[o[j]])) out.insert(t);
    }
    for (const auto& c : constraints(ord))
      if (Tracked* t = track(c.x_poly)) out.insert(t);
    return {out.begin(), out.end()};
  }

  Tracked* track(const IntPoly& x_poly) {
    IntPoly p = gamma_form(x_poly);
    if (p.degree() < 1) return nullptr;
    p = to_y(p).primitive();
    auto it = cache_.find(p);
    if (it == cache_.end()) {
      SturmChain chain(p);
      auto roots = chain.isolate(y0_, y1_);
      it = cache_.emplace(p, Tracked{p, std::move(chain), std::move(roots), 0}).first;
    }
    return &it->second;
  }

  // -1, 0, 1 as the bracketed root lies below, at or above y.
  int compare(Tracked& t, RootBracket& b, const Rational& y) {
    while (true) {
      if (b.exact()) return b.lo < y ? -1 : (b.lo == y ? 0 : 1);
      if (b.lo >= y) return 1;
      if (b.hi <= y) return -1;
      if (t.poly.sign_at(y) == 0) return 0;
      t.chain.bisect(b);
    }
  }

  std::size_t first_above(Tracked& t, const Rational& y) {
    while (t.next < t.roots.size()) {
      if (compare(t, t.roots[t.next], y) > 0) return t.next;
      ++t.next;
    }
    return npos;
  }

  bool same_root(const Cand& u, const Cand& v) {
    const RootBracket& bu = u.b();
    const RootBracket& bv = v.b();
    if (bu.exact() && bv.exact()) return bu.lo == bv.lo;
    if (bu.exact()) return bv.lo < bu.lo && bu.lo < bv.hi && v.t->poly.sign_at(bu.lo) == 0;
    if (bv.exact()) return bu.lo < bv.lo && bv.lo < bu.hi && u.t->poly.sign_at(bv.lo) == 0;
    const Rational L = std::max(bu.lo, bv.lo);
    const Rational H = std::min(bu.hi, bv.hi);
    if (!(L < H)) return false;
    auto key = std::make_pair(u.t, v.t);
    auto it = gcds_.find(key);
    if (it == gcds_.end()) it = gcds_.emplace(key, gcd(u.t->poly, v.t->poly)).first;
    const IntPoly& g = it->second;
    if (g.degree() < 1) return false;
    return SturmChain(g).count(L, H) > 0;
  }

  // Splits the candidates into those at the least root (Z, non-empty) and
  // the rest, which are certified to lie strictly above it.
  void least_event(std::vector<Cand>& cands, std::vector<Cand>& Z, std::vector<Cand>& others) {
    const Rational fine = dyadic_epsilon(48);
    while (true) {
      std::size_t star = 0;
      for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].b().hi < cands[star].b().hi) star = i;
      const RootBracket& s = cands[star].b();
      Z.assign(1, cands[star]);
      others.clear();
      std::vector<std::size_t> unresolved;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (i == star) continue;
        const RootBracket& b = cands[i].b();
        const bool both_exact = b.exact() && s.exact();
        if (b.lo > s.hi || (b.lo == s.hi && !both_exact)) {
          others.push_back(cands[i]);
          continue;
        }
        // Overlapping exact brackets are necessarily equal; otherwise only
        // pay for a gcd once both brackets are narrow.
        const bool small = (b.exact() || b.width() < fine) && (s.exact() || s.width() < fine);
        if ((both_exact || small) && same_root(cands[star], cands[i])) {
          Z.push_back(cands[i]);
          continue;
        }
        unresolved.push_back(i);
      }
      if (unresolved.empty()) return;
      if (!s.exact()) cands[star].t->chain.bisect(cands[star].b());
      for (std::size_t i : unresolved)
        if (!cands[i].b().exact()) cands[i].t->chain.bisect(cands[i].b());
    }
  }

  static Rational event_lo(const std::vector<Cand>& Z) {
    Rational L = Z.front().b().lo;
    for (const auto& z : Z) L = std::max(L, z.b().lo);
    return L;
  }
  static Rational event_hi(const std::vector<Cand>& Z) {
    Rational H = Z.front().b().hi;
    for (const auto& z : Z) H = std::min(H, z.b().hi);
    return H;
  }
  static bool event_exact(const std::vector<Cand>& Z) {
    return std::any_of(Z.begin(), Z.end(), [](const Cand& z) { return z.b().exact(); });
  }

  // A point just past the event, below `upper`, where no current polynomial
  // vanishes.
  Rational step_point(std::vector<Cand>& Z, const std::vector<Tracked*>& polys, const Rational& upper) {
    while (true) {
      Rational t;
      if (event_exact(Z)) {
        const Rational e = event_lo(Z);
        t = (e + upper) / 2;
        while (std::any_of(polys.begin(), polys.end(), [&](Tracked* p) { return p->poly.sign_at(t) == 0; }))
          t = (e + t) / 2;
        return t;
      }
      t = event_hi(Z);
      if (std::none_of(polys.begin(), polys.end(), [&](Tracked* p) { return p->poly.sign_at(t) == 0; })) return t;
      Z.front().t->chain.bisect(Z.front().b());
    }
  }

  // True when no polynomial of the new state has a root in (event, t].
  bool new_polys_clear(const std::vector<Tracked*>& old_polys, const std::vector<Tracked*>& new_polys,
                       const std::vector<Cand>& Z, const Rational& t) {
    const std::set<Tracked*> old(old_polys.begin(), old_polys.end());
    const bool exact = event_exact(Z);
    const Rational lo = event_lo(Z);
    for (Tracked* p : new_polys) {
      if (old.count(p)) continue;
      if (p->poly.sign_at(t) == 0) return false;
      int n = p->chain.count(lo, t);
      if (n == 0) continue;
      if (exact) return false;
      // one of the roots may be the event itself
      const IntPoly g = gcd(p->poly, Z.front().t->poly);
      const bool at_event = g.degree() >= 1 && SturmChain(g).count(lo, event_hi(Z)) > 0;
      if (n - (at_event ? 1 : 0) > 0) return false;
    }
    return true;
  }

  GapBoundary boundary(std::vector<Cand>& Z, const Rational& t) {
    const Rational gt = gamma(t);
    const Rational x = 1 / gt;
    const auto cons = constraints(orders_at(t));
    const Constraint* binding = nullptr;
    for (const auto& c : cons)
      if (c.x_poly.eval(x) < 0) {
        binding = &c;
        break;
      }
    if (!binding) throw CertificationError("gap inequalities fail but no constraint is negative");

    GapBoundary out;
    out.raw_constraint = gamma_form(binding->x_poly).primitive();
    out.position = binding->position;
    if (auto v = first_violated_gap(D_, gt)) out.position = *v;

    const IntPoly by = to_y(out.raw_constraint);
    RootEnclosure& w = out.where;
    w.bits = bits_;
    if (event_exact(Z)) {
      const Rational e = gamma(event_lo(Z));
      w.lo = w.hi = e;
      w.poly = IntPoly({-Integer(e.get_num()), Integer(e.get_den())});
      return out;
    }
    const IntPoly g = gcd(by, Z.front().t->poly);
    SturmChain chain(g);
    auto roots = chain.isolate(event_lo(Z), event_hi(Z));
    if (roots.size() != 1) throw CertificationError("boundary is not a simple common root");
    chain.refine(roots[0], dyadic_epsilon(bits_));
    Rational lo = gamma(roots[0].lo), hi = gamma(roots[0].hi);
    if (hi < lo) std::swap(lo, hi);
    w.lo = lo;
    w.hi = hi;
    if (w.exact()) {
      w.poly = IntPoly({-Integer(w.lo.get_num()), Integer(w.lo.get_den())});
      return out;
    }
    const IntPoly g_gamma = to_y(g).primitive();
    const IntPoly stripped = strip_rational_roots(g_gamma);
    const bool keeps = stripped.degree() >= 1 && SturmChain(stripped).count(w.lo, w.hi) == 1;
    w.poly = keeps ? stripped : squarefree_part(g_gamma).primitive();
    return out;
  }

  const DigitSetSequence& D_;
  int sigma_;
  unsigned bits_;
  Rational y0_, y1_;
  std::size_t a_ = 0, P_ = 1;
  std::vector<std::vector<IntPoly>> sets_;
  std::vector<int> pos_set_;
  IntPoly one_minus_xP_;
  std::map<IntPoly, Tracked> cache_;
  std::map<std::pair<Tracked*, Tracked*>, IntPoly> gcds_;
};

}  // namespace

std::optional<GapBoundary> next_gap_boundary(const DigitSetSequence& D, const Rational& start,
                                             const Rational& limit, SweepDirection dir, unsigned bits) {
  Sweep sweep(D, start, limit, dir, bits);
  return sweep.run();
}

}  // namespace growthlab
