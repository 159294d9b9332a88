#include "growthlab/rational.hpp"

#include <cctype>

namespace growthlab {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw InputError("empty rational");

  auto dot = t.find('.');
  if (dot != std::string::npos && t.find('/') == std::string::npos) {
    // decimal literal such as 2.31
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    Integer num;
    if (num.set_str(digits, 10) != 0) throw InputError("bad rational: " + text);
    Integer den = 1;
    for (std::size_t i = dot + 1; i < t.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(t, 10) != 0 || q.get_den() == 0) throw InputError("bad rational: " + text);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exp) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  out.canonicalize();
  return out;
}

Integer pow(const Integer& base, unsigned exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational dyadic_epsilon(unsigned bits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(Integer(1), den);
}

std::string to_exact_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string to_decimal(const Rational& q, unsigned places) {
  Integer scale = pow(Integer(10), places);
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer digits = floor(scaled);
  std::string s = digits.get_str();
  if (s.size() <= places) s.insert(0, places + 1 - s.size(), '0');
  if (places > 0) s.insert(s.size() - places, ".");
  if (q < 0 && digits != 0) s.insert(0, "-");
  return s;
}

}  // namespace growthlab
