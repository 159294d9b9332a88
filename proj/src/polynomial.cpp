#include "growthlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace growthlab {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_ints(std::initializer_list<long> lowest_first) {
  std::vector<Integer> c;
  for (long v : lowest_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::from_descending(const std::vector<long>& highest_first) {
  std::vector<Integer> c;
  for (auto it = highest_first.rbegin(); it != highest_first.rend(); ++it) c.emplace_back(*it);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<Integer> desc;
  std::string tok;
  while (in >> tok) {
    Integer v;
    if (v.set_str(tok, 10) != 0) throw InputError("bad polynomial coefficient: " + tok);
    desc.push_back(v);
  }
  std::reverse(desc.begin(), desc.end());
  return IntPoly(std::move(desc));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::coeff(unsigned i) const {
  static const Integer zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  // Homogenised Horner: sum c_i n^i d^(deg-i), with d > 0.
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = coeffs_.back();
  Integer dpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + coeffs_[i] * dpow;
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed(unsigned deg) const {
  std::vector<Integer> c(deg + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[deg - i] = coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Integer> c(k, Integer(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(c));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> c(coeffs_);
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& k, const IntPoly& b) {
  std::vector<Integer> c(b.coeffs_);
  for (auto& v : c) v *= k;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const { return Integer(-1) * *this; }

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    s += coeffs_[i].get_str();
    if (i > 0) s += ",";
  }
  return s;
}

std::string IntPoly::to_pretty(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += mag.get_str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder by zero polynomial");
  std::vector<Integer> r(a.coeffs());
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = a.degree();
  int steps = std::max(0, a.degree() - db + 1);
  while (dr >= db && dr >= 0) {
    Integer lr = r[dr];
    for (auto& v : r) v *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeff(i);
    --steps;
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  // Normalise to exactly lc^(deg a - deg b + 1).
  for (; steps > 0; --steps)
    for (auto& v : r) v *= lb;
  return IntPoly(std::move(r));
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide by zero polynomial");
  if (a.is_zero()) return {};
  std::vector<Integer> r(a.coeffs());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw std::domain_error("exact_divide: divisor has larger degree");
  std::vector<Integer> q(da - db + 1);
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.leading().get_mpz_t()))
      throw std::domain_error("exact_divide: not divisible over Z");
    Integer t = r[i] / b.leading();
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeff(j);
  }
  for (const auto& v : r)
    if (v != 0) throw std::domain_error("exact_divide: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive();
  IntPoly y = b.primitive();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  IntPoly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.primitive();
  return exact_divide(p.primitive(), g).primitive();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

IntPoly strip_rational_roots(const IntPoly& p) {
  IntPoly q = squarefree_part(p);
  while (q.degree() >= 1 && q.coeff(0) == 0) q = exact_divide(q, IntPoly::from_ints({0, 1}));
  bool changed = true;
  while (changed && q.degree() >= 1) {
    changed = false;
    for (const auto& num : positive_divisors(q.coeff(0))) {
      for (const auto& den : positive_divisors(q.leading())) {
        for (int sign : {1, -1}) {
          Rational cand(num * sign, den);
          cand.canonicalize();
          if (q.sign_at(cand) == 0) {
            IntPoly lin(std::vector<Integer>{-cand.get_num(), cand.get_den()});
            q = exact_divide(q, lin).primitive();
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  return q.primitive();
}

SturmChain::SturmChain(const IntPoly& p) {
  IntPoly f = squarefree_part(p);
  chain_.push_back(f);
  if (f.degree() <= 0) return;
  chain_.push_back(f.derivative().primitive());
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^k * a - q b; only the sign of the scale matters.
    int k = a.degree() - b.degree() + 1;
    bool scale_negative = (b.leading() < 0) && (k % 2 == 1);
    Integer c = r.content();
    IntPoly next = exact_divide(r, IntPoly(std::vector<Integer>{c}));
    chain_.push_back(scale_negative ? next : -next);
  }
}

int SturmChain::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (chain_.front().degree() <= 0 || !(a < b)) return 0;
  return variations(a) - variations(b);
}

std::vector<RootBracket> SturmChain::isolate(const Rational& a, const Rational& b) const {
  std::vector<RootBracket> out;
  struct Cell {
    Rational lo, hi;
    int n;
  };
  std::vector<Cell> stack{{a, b, count(a, b)}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (c.n == 0) continue;
    if (c.n == 1) {
      out.push_back({c.lo, c.hi});
      continue;
    }
    Rational mid = (c.lo + c.hi) / 2;
    int left = count(c.lo, mid);
    // right half first so the left half is processed (and emitted) first
    stack.push_back({mid, c.hi, c.n - left});
    stack.push_back({c.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  for (auto& r : out)
    if (chain_.front().sign_at(r.hi) == 0) r.lo = r.hi;
  return out;
}

void SturmChain::bisect(RootBracket& r) const {
  if (r.exact()) return;
  const IntPoly& f = chain_.front();
  Rational mid = (r.lo + r.hi) / 2;
  int sm = f.sign_at(mid);
  if (sm == 0) {
    r.lo = r.hi = mid;
    return;
  }
  int slo = f.sign_at(r.lo);
  if (slo != 0) {
    if (sm == slo)
      r.lo = mid;
    else
      r.hi = mid;
  } else if (count(r.lo, mid) == 1) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
  if (f.sign_at(r.hi) == 0) r.lo = r.hi;
}

void SturmChain::refine(RootBracket& r, const Rational& width) const {
  while (!r.exact() && r.width() > width) bisect(r);
}

}  // namespace growthlab
