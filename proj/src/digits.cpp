#include "growthlab/digits.hpp"

#include <algorithm>
#include <cctype>

namespace growthlab {

GeneralisedDigit::GeneralisedDigit(std::vector<long> subdigits) : sub_(std::move(subdigits)) {
  if (sub_.empty()) throw InputError("a digit needs at least one subdigit");
}

GeneralisedDigit GeneralisedDigit::parse(const std::string& text) {
  std::vector<long> sub;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw InputError("bad digit: " + text);
    return std::stol(text.substr(start, pos - start));
  };
  sub.push_back(read_int(i));
  if (i < text.size()) {
    if (text[i] != '.') throw InputError("bad digit: " + text);
    ++i;
    if (i < text.size() && text[i] == '[') {
      ++i;
      while (true) {
        while (i < text.size() && text[i] == ' ') ++i;
        sub.push_back(read_int(i));
        while (i < text.size() && text[i] == ' ') ++i;
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw InputError("bad digit: " + text);
      }
      if (i != text.size()) throw InputError("bad digit: " + text);
    } else {
      if (i == text.size()) throw InputError("bad digit: " + text);
      for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InputError("bad digit: " + text);
        sub.push_back(text[i] - '0');
      }
    }
  }
  return GeneralisedDigit(std::move(sub));
}

IntPoly GeneralisedDigit::value_poly() const {
  std::vector<Integer> c;
  c.reserve(sub_.size());
  for (long v : sub_) c.emplace_back(v);
  return IntPoly(std::move(c));
}

Rational GeneralisedDigit::value(const Rational& beta) const {
  if (beta <= 1) throw InputError("base must exceed 1");
  // Horner in 1/beta from the last subdigit.
  const Rational x = 1 / beta;
  Rational acc = 0;
  for (auto it = sub_.rbegin(); it != sub_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GeneralisedDigit GeneralisedDigit::trimmed() const {
  std::vector<long> s = sub_;
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return GeneralisedDigit(std::move(s));
}

GeneralisedDigit GeneralisedDigit::plus(long n) const {
  std::vector<long> s = sub_;
  s[0] += n;
  return GeneralisedDigit(std::move(s));
}

GeneralisedDigit operator+(const GeneralisedDigit& a, const GeneralisedDigit& b) {
  std::vector<long> s(std::max(a.length(), b.length()), 0);
  for (std::size_t i = 0; i < a.length(); ++i) s[i] += a.sub_[i];
  for (std::size_t i = 0; i < b.length(); ++i) s[i] += b.sub_[i];
  return GeneralisedDigit(std::move(s));
}

std::string GeneralisedDigit::to_string() const {
  std::string out = std::to_string(sub_[0]);
  if (sub_.size() == 1) return out;
  const bool wide = std::any_of(sub_.begin() + 1, sub_.end(), [](long v) { return v < 0 || v > 9; });
  out += '.';
  if (wide) out += '[';
  for (std::size_t i = 1; i < sub_.size(); ++i) {
    if (wide && i > 1) out += ',';
    out += std::to_string(sub_[i]);
  }
  if (wide) out += ']';
  return out;
}

DigitSet make_digit_set(std::vector<GeneralisedDigit> digits) {
  if (digits.empty()) throw InputError("digit sets must be non-empty");
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  return digits;
}

DigitSetSequence::DigitSetSequence(std::vector<DigitSet> pre, std::vector<DigitSet> per)
    : preperiod(std::move(pre)), period(std::move(per)) {
  if (period.empty()) throw InputError("digit set sequence needs a non-empty period");
  for (auto& d : preperiod) d = make_digit_set(std::move(d));
  for (auto& d : period) d = make_digit_set(std::move(d));
}

const DigitSet& DigitSetSequence::at(std::size_t n) const {
  if (n == 0) throw std::out_of_range("digit positions are 1-based");
  if (n <= preperiod.size()) return preperiod[n - 1];
  return period[(n - preperiod.size() - 1) % period.size()];
}

const GeneralisedDigit& DigitSequence::at(std::size_t n) const {
  if (n == 0) throw std::out_of_range("digit positions are 1-based");
  if (n <= preperiod.size()) return preperiod[n - 1];
  return period[(n - preperiod.size() - 1) % period.size()];
}

Rational digit_value(const GeneralisedDigit& d, const Rational& beta) { return d.value(beta); }

DigitStats digit_stats(const DigitSet& set, const Rational& beta) {
  if (set.empty()) throw InputError("digit sets must be non-empty");
  std::vector<Rational> v;
  v.reserve(set.size());
  for (const auto& d : set) v.push_back(d.value(beta));
  std::sort(v.begin(), v.end());
  DigitStats s;
  s.ell = v.front();
  s.u = v.back();
  s.Delta = s.u - s.ell;
  s.delta = 0;
  for (std::size_t i = 1; i < v.size(); ++i) s.delta = std::max<Rational>(s.delta, v[i] - v[i - 1]);
  return s;
}

namespace {

// sum_{j=1}^{len} w_j x^j for the weights of a block, x = 1/beta.
Rational block_sum(const std::vector<Rational>& w, const Rational& x) {
  Rational acc = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = (acc + *it) * x;
  return acc;
}

// Value of an eventually periodic weight sequence sum w_n x^n.
Rational periodic_sum(const std::vector<Rational>& pre, const std::vector<Rational>& per, const Rational& beta) {
  const Rational x = 1 / beta;
  const Rational xa = pow(x, static_cast<unsigned>(pre.size()));
  const Rational xp = pow(x, static_cast<unsigned>(per.size()));
  return block_sum(pre, x) + xa * block_sum(per, x) / (1 - xp);
}

DigitSequence pick_digits(const DigitSetSequence& D, const Rational& beta, bool greatest) {
  auto pick = [&](const DigitSet& set) {
    const GeneralisedDigit* best = &set.front();
    Rational bv = best->value(beta);
    for (const auto& d : set) {
      Rational v = d.value(beta);
      if (greatest ? v > bv : v < bv) {
        best = &d;
        bv = v;
      }
    }
    return *best;
  };
  DigitSequence out;
  out.preperiod.clear();
  out.period.clear();
  for (const auto& s : D.preperiod) out.preperiod.push_back(pick(s));
  for (const auto& s : D.period) out.period.push_back(pick(s));
  return out;
}

// Deltas at positions 1..a+P, 0-based vector.
std::vector<Rational> deltas_capital(const DigitSetSequence& D, const Rational& beta) {
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= D.distinct_positions(); ++n) out.push_back(digit_stats(D.at(n), beta).Delta);
  return out;
}

Rational tail_from(const std::vector<Rational>& Delta, std::size_t a, std::size_t P, std::size_t n,
                   const Rational& beta) {
  // Reduce n into 0..a+P-1 by periodicity (positions past a repeat every P).
  if (n > a) n = a + (n - a) % P;
  std::vector<Rational> pre, per;
  if (n < a) {
    pre.assign(Delta.begin() + static_cast<long>(n), Delta.begin() + static_cast<long>(a));
    per.assign(Delta.begin() + static_cast<long>(a), Delta.end());
  } else {
    const std::size_t off = n - a;
    for (std::size_t j = 1; j <= P; ++j) per.push_back(Delta[a + (off + j - 1) % P]);
  }
  return periodic_sum(pre, per, beta);
}

}  // namespace

Rational series_value(const DigitSequence& a, const Rational& beta) {
  if (beta <= 1) throw InputError("base must exceed 1");
  if (a.period.empty()) throw InputError("digit sequence needs a non-empty period");
  std::vector<Rational> pre, per;
  for (const auto& d : a.preperiod) pre.push_back(d.value(beta));
  for (const auto& d : a.period) per.push_back(d.value(beta));
  return periodic_sum(pre, per, beta);
}

DigitSequence lower_digits(const DigitSetSequence& D, const Rational& beta) { return pick_digits(D, beta, false); }
DigitSequence upper_digits(const DigitSetSequence& D, const Rational& beta) { return pick_digits(D, beta, true); }

Rational gap_tail(const DigitSetSequence& D, std::size_t n, const Rational& beta) {
  if (beta <= 1) throw InputError("base must exceed 1");
  return tail_from(deltas_capital(D, beta), D.preperiod.size(), D.period.size(), n, beta);
}

GreedyExpansion greedy_expansion(const Rational& x, const DigitSetSequence& D, const Rational& beta,
                                 std::size_t n_terms) {
  if (beta <= 1) throw InputError("base must exceed 1");
  const DigitSequence lower = lower_digits(D, beta);
  const std::size_t a = D.preperiod.size();
  const std::size_t P = D.period.size();

  std::vector<Rational> ell;
  for (std::size_t n = 1; n <= a + P; ++n) ell.push_back(lower.at(n).value(beta));
  const Rational xinv = 1 / beta;

  const Rational lo = series_value(lower, beta);
  const Rational hi = series_value(upper_digits(D, beta), beta);
  if (x < lo || x > hi) throw InputError("x lies outside the representable range");

  GreedyExpansion out;
  Rational partial = 0;
  Rational scale = 1;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    scale *= xinv;
    const Rational tail = scale * tail_from(ell, a, P, n, beta);
    const DigitSet& set = D.at(n);
    const GeneralisedDigit* best = nullptr;
    Rational best_v;
    for (const auto& d : set) {
      Rational v = d.value(beta);
      if (partial + v * scale + tail > x) continue;
      if (!best || v > best_v) {
        best = &d;
        best_v = v;
      }
    }
    if (!best) throw InputError("x lies outside the representable range");
    out.digits.push_back(*best);
    partial += best_v * scale;
  }

  const std::size_t M = std::max(n_terms, a);
  out.completed.preperiod = out.digits;
  out.completed.period.clear();
  for (std::size_t m = n_terms + 1; m <= M; ++m) out.completed.preperiod.push_back(lower.at(m));
  for (std::size_t m = M + 1; m <= M + P; ++m) out.completed.period.push_back(lower.at(m));

  out.error = abs(x - series_value(out.completed, beta));
  out.error_bound = pow(xinv, static_cast<unsigned>(n_terms)) * gap_tail(D, n_terms, beta);
  return out;
}

bool gap_inequality_at(const DigitSetSequence& D, std::size_t n, const Rational& beta) {
  if (beta <= 1) throw InputError("base must exceed 1");
  const DigitStats s = digit_stats(D.at(n), beta);
  if (s.delta == 0) return true;
  return s.delta <= gap_tail(D, n, beta);
}

std::optional<std::size_t> first_violated_gap(const DigitSetSequence& D, const Rational& beta) {
  if (beta <= 1) throw InputError("base must exceed 1");
  const auto Delta = deltas_capital(D, beta);
  const std::size_t a = D.preperiod.size();
  const std::size_t P = D.period.size();
  for (std::size_t n = 1; n <= a + P; ++n) {
    const DigitStats s = digit_stats(D.at(n), beta);
    if (s.delta == 0) continue;
    if (s.delta > tail_from(Delta, a, P, n, beta)) return n;
  }
  return std::nullopt;
}

bool corollary_gap_bounds(int k, const DigitSet& D1, const DigitSet& Dk, const Rational& beta) {
  if (k < 3 || k % 2 == 0) throw InputError("k must be odd and >= 3");
  if (beta <= 1) throw InputError("base must exceed 1");
  const DigitStats s1 = digit_stats(D1, beta);
  const DigitStats sf = digit_stats(Dk, beta);
  const Rational b2 = beta * beta;
  if ((b2 - 1) * sf.delta > sf.Delta) return false;
  const Rational lhs = (pow(beta, k - 1) - pow(beta, k - 3)) * s1.delta;
  return lhs <= sf.Delta;
}

DigitSetSequence corollary_sequence(int k, const DigitSet& D1, const DigitSet& Dk) {
  if (k < 3 || k % 2 == 0) throw InputError("k must be odd and >= 3");
  const DigitSet zero{GeneralisedDigit(0)};
  std::vector<DigitSet> pre{D1};
  for (int n = 2; n < k; ++n) pre.push_back(zero);
  return DigitSetSequence(std::move(pre), {Dk, zero});
}

std::vector<SignChange> threshold_brackets(const std::function<bool(const Rational&)>& pred,
                                           const std::vector<Rational>& probes, const Rational& width) {
  std::vector<SignChange> out;
  if (probes.size() < 2) return out;
  bool prev = pred(probes[0]);
  for (std::size_t i = 1; i < probes.size(); ++i) {
    if (!(probes[i - 1] < probes[i])) throw InputError("probe grid must be increasing");
    const bool cur = pred(probes[i]);
    if (cur != prev) {
      Rational lo = probes[i - 1], hi = probes[i];
      while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (pred(mid) == prev)
          lo = mid;
        else
          hi = mid;
      }
      out.push_back({lo, hi, prev});
    }
    prev = cur;
  }
  return out;
}

}  // namespace growthlab
