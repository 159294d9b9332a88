#include "growthlab/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "growthlab/rational.hpp"

namespace growthlab {

EnumSequence::EnumSequence(std::vector<long> preperiod, std::vector<long> period)
    : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw InputError("sequence period must be non-empty");
  for (long v : pre_)
    if (v < 0) throw InputError("sequence terms must be non-negative");
  for (long v : period_)
    if (v < 0) throw InputError("sequence terms must be non-negative");
  normalise();
}

EnumSequence EnumSequence::with_constant_tail(std::vector<long> head, long tail) {
  return EnumSequence(std::move(head), {tail});
}

namespace {

std::vector<long> parse_list(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<long> out;
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad sequence term: " + tok);
    }
    if (used != tok.size()) throw InputError("bad sequence term: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace

EnumSequence EnumSequence::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw InputError("sequence must be written as \"pre;period\"");
  return EnumSequence(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

void EnumSequence::normalise() {
  // shortest period
  const std::size_t p = period_.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  // absorb the preperiod's tail into the period by rotation
  while (!pre_.empty() && pre_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    pre_.pop_back();
  }
}

long EnumSequence::operator[](std::size_t n) const {
  if (n == 0) throw std::out_of_range("EnumSequence is 1-based");
  if (n <= pre_.size()) return pre_[n - 1];
  return period_[(n - pre_.size() - 1) % period_.size()];
}

std::vector<long> EnumSequence::head(std::size_t count) const {
  std::vector<long> out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) out.push_back((*this)[n]);
  return out;
}

long EnumSequence::max() const {
  long m = *std::max_element(period_.begin(), period_.end());
  for (long v : pre_) m = std::max(m, v);
  return m;
}

bool EnumSequence::positive() const {
  auto pos = [](long v) { return v >= 1; };
  return std::all_of(pre_.begin(), pre_.end(), pos) && std::all_of(period_.begin(), period_.end(), pos);
}

std::string EnumSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < pre_.size(); ++i) s += std::to_string(pre_[i]) + ",";
  if (period_.size() == 1) return s + std::to_string(period_[0]) + "bar)";
  s += "[";
  for (std::size_t i = 0; i < period_.size(); ++i) s += (i ? "," : "") + std::to_string(period_[i]);
  return s + "]bar)";
}

}  // namespace growthlab
