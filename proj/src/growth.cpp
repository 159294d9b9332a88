#include "growthlab/growth.hpp"

#include <algorithm>

namespace growthlab {

std::string RootEnclosure::decimal(unsigned places) const { return to_decimal(midpoint(), places); }

bool RootEnclosure::decimal_certain(unsigned places) const {
  return to_decimal(lo, places) == to_decimal(hi, places);
}

EnumSequence digit_seq_to_enum(const DigitSequence& a) {
  if (a.period.empty()) throw InputError("digit sequence needs a non-empty period");
  std::size_t L = 1;
  for (const auto& d : a.preperiod) L = std::max(L, d.length());
  for (const auto& d : a.period) L = std::max(L, d.length());
  for (const auto& d : a.preperiod)
    for (long c : d.subdigits())
      if (c < 0) throw InputError("subdigits must be non-negative");
  for (const auto& d : a.period)
    for (long c : d.subdigits())
      if (c < 0) throw InputError("subdigits must be non-negative");

  // Once every contributing a_n is periodic, t is periodic too.
  const std::size_t head = a.preperiod.size() + L;
  const std::size_t P = a.period.size();
  std::vector<long> t(head + P, 0);
  for (std::size_t m = 1; m <= head + P; ++m) {
    long sum = 0;
    for (std::size_t i = 0; i < L && i < m; ++i) {
      const auto& sub = a.at(m - i).subdigits();
      if (i < sub.size()) sum += sub[i];
    }
    t[m - 1] = sum;
  }
  std::vector<long> pre(t.begin(), t.begin() + static_cast<long>(head));
  std::vector<long> per(t.begin() + static_cast<long>(head), t.end());
  return EnumSequence(std::move(pre), std::move(per));
}

std::vector<Integer> class_counts(const EnumSequence& s, std::size_t N) {
  std::vector<Integer> c(N + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const long si = s[i];
      if (si != 0) acc += si * c[n - i];
    }
    c[n] = acc;
  }
  return {c.begin() + 1, c.end()};
}

IntPoly char_polynomial(const EnumSequence& s) {
  if (!s.positive()) throw InputError("growth rates need a positive sequence");
  const auto& pre = s.preperiod();
  const auto& per = s.period();
  const unsigned a = static_cast<unsigned>(pre.size());
  const unsigned P = static_cast<unsigned>(per.size());

  // (1 - x^P)(sum pre_n x^n - 1) + x^a sum per_j x^j, with x = 1/gamma.
  std::vector<Integer> pc(a + 1, 0);
  pc[0] = -1;
  for (unsigned n = 1; n <= a; ++n) pc[n] = pre[n - 1];
  std::vector<Integer> qc(a + P + 1, 0);
  for (unsigned j = 1; j <= P; ++j) qc[a + j] = per[j - 1];
  const IntPoly one_minus = IntPoly::from_ints({1}) - IntPoly::monomial(1, P);
  const IntPoly in_x = one_minus * IntPoly(pc) + IntPoly(qc);
  return in_x.reversed(a + P).primitive();
}

namespace {

// Cauchy bound: every real root has |x| < 1 + max |a_i / a_n|.
Rational cauchy_bound(const IntPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q(abs(p.coeff(i)), abs(p.leading()));
    q.canonicalize();
    m = std::max(m, q);
  }
  return m + 1;
}

void bisect_to(const IntPoly& p, Rational& lo, Rational& hi, const Rational& width) {
  int slo = p.sign_at(lo);
  if (slo == 0) {
    hi = lo;
    return;
  }
  if (p.sign_at(hi) == 0) {
    lo = hi;
    return;
  }
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

void check_unique_above_one(const IntPoly& p) {
  SturmChain chain(p);
  const int n = chain.count(1, cauchy_bound(p));
  if (n != 1)
    throw CertificationError(p.to_pretty() + " has " + std::to_string(n) + " roots in (1, inf), expected exactly 1");
}

}  // namespace

RootEnclosure growth_rate(const EnumSequence& s, unsigned bits) {
  if (bits == 0) throw InputError("precision must be at least 1 bit");
  RootEnclosure e;
  e.poly = char_polynomial(s);
  e.bits = bits;
  check_unique_above_one(e.poly);
  e.lo = 1 + dyadic_epsilon(20);
  e.hi = Rational(s.max() + 2);
  const int slo = e.poly.sign_at(e.lo);
  const int shi = e.poly.sign_at(e.hi);
  if (slo != 0 && shi != 0 && slo == shi)
    throw CertificationError("no sign change of " + e.poly.to_pretty() + " on the initial bracket");
  bisect_to(e.poly, e.lo, e.hi, dyadic_epsilon(bits));
  return e;
}

RootEnclosure enclose_root_above_one(const IntPoly& poly, unsigned bits) {
  if (bits == 0) throw InputError("precision must be at least 1 bit");
  SturmChain chain(poly);
  auto roots = chain.isolate(1, cauchy_bound(poly));
  if (roots.size() != 1)
    throw CertificationError(poly.to_pretty() + " has " + std::to_string(roots.size()) +
                             " roots in (1, inf), expected exactly 1");
  chain.refine(roots[0], dyadic_epsilon(bits));
  return {poly, roots[0].lo, roots[0].hi, bits};
}

void refine(RootEnclosure& e, unsigned bits) {
  if (e.exact()) return;
  bisect_to(e.poly, e.lo, e.hi, dyadic_epsilon(bits));
  e.bits = std::max(e.bits, bits);
}

std::vector<NamedConstant> named_constants(unsigned bits) {
  const std::vector<std::pair<std::string, std::vector<long>>> table = {
      {"phi", {1, -1, -1}},
      {"kappa", {1, -2, 0, -1}},
      {"xi_A", {1, -2, 0, -1, -1, -1}},
      {"theta_B", {1, -2, 0, -1, -1, -2, -2, -1}},
      {"lambda_B", {1, -2, 0, -1, -1, -2, -2, -1, -1}},
      {"lambda_A", {1, -2, 0, -2, -2, -1}},
  };
  std::vector<NamedConstant> out;
  for (const auto& [name, coeffs] : table) {
    IntPoly p = IntPoly::from_descending(coeffs);
    out.push_back({name, p, enclose_root_above_one(p, bits)});
  }
  return out;
}

unsigned agreement_bound(long c, const Rational& eps) {
  if (c < 1) throw InputError("bound c must be >= 1");
  if (eps <= 0) throw InputError("eps must be positive");
  const Rational target = Rational(c) * (c + 1) * (c + 1) / eps;
  unsigned m = 0;
  Integer p2 = 1;
  while (p2 < target) {
    p2 *= 2;
    ++m;
  }
  return m;
}

}  // namespace growthlab
