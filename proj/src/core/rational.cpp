#include "rational.hpp"

#include <sstream>

#include "errors.hpp"

namespace cohera {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text))
      fail(Errc::kParseError, "not a rational: '" + text + "'");
    Rational r(text);
    r.canonicalize();
    return r;
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) ||
      den.find('-') != std::string::npos)
    fail(Errc::kParseError, "not a rational: '" + text + "'");
  Rational r(text);
  if (r.get_den() == 0) fail(Errc::kParseError, "zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(Errc::kDimensionMismatch, "dot: size mismatch");
  Rational acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(Errc::kDimensionMismatch, "add: size mismatch");
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Vec vec_neg(const Vec& v) { return vec_scale(Rational(-1), v); }

void vec_canonicalize(Vec& v) {
  if (vec_is_zero(v)) return;
  mpz_class den_lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (auto& x : v) {
    x *= den_lcm;  // now integral
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  for (auto& x : v) {
    x /= num_gcd;
    x.canonicalize();
  }
}

bool vec_lex_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(Errc::kDimensionMismatch, "lex: size mismatch");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

std::string vec_str(const Vec& v, char sep) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i].get_str();
  }
  return out.str();
}

Vec vec_parse_csv(const std::string& text) {
  Vec out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    // tolerate surrounding spaces in hand-typed CLI input
    const auto a = tok.find_first_not_of(" \t");
    const auto b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) fail(Errc::kParseError, "empty vector entry");
    out.push_back(rat_parse(tok.substr(a, b - a + 1)));
  }
  if (out.empty()) fail(Errc::kParseError, "empty vector");
  return out;
}

}  // namespace cohera
