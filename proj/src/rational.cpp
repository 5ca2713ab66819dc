#include "forestmaps/rational.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace fm {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  s = s.substr(b);
  if (s.empty()) throw std::invalid_argument("empty rational");

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + text);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad rational: " + text);
    if (digits[0] == '+') digits.erase(0, 1);
    for (size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw std::invalid_argument("bad rational: " + text);
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  if (s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational: " + text);
    for (size_t i = (part[0] == '-') ? 1 : 0; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw std::invalid_argument("bad rational: " + text);
    if (part == "-") throw std::invalid_argument("bad rational: " + text);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(Integer(s, 10));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  check_int(n);
  check_int(d);
  Integer den(d, 10);
  if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(Integer(n, 10), den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  static std::mutex m;
  static std::vector<Integer> memo{Integer(1)};
  std::lock_guard<std::mutex> lock(m);
  while (memo.size() <= n) memo.push_back(memo.back() * static_cast<unsigned long>(memo.size()));
  return memo[n];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer trinomial(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return 0;
  return binomial(a + b + c, a) * binomial(b + c, b);
}

}  // namespace fm
