#include "quantoid/rational.hpp"

#include <cctype>

#include "quantoid/error.hpp"

namespace quantoid {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::MalformedRational, "\"" + std::string(text) + "\"");
  }
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(Errc::MalformedRational, "zero denominator in \"" + std::string(text) + "\"");
  mpz_class p(std::string(num), 10);
  if (text.front() == '-') p = -p;
  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational limit_denominator(const Rational& value, const mpz_class& max_denominator) {
  if (max_denominator < 1) throw Error(Errc::InvalidArgument, "max_denominator must be >= 1");
  if (value.get_den() <= max_denominator) return value;

  // Continued-fraction convergents; the answer is the last convergent or the
  // best semiconvergent below the bound.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = value.get_num(), d = value.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
  }
  mpz_class k = (max_denominator - q0) / q1;
  Rational bound1(p0 + k * p1, q0 + k * q1);
  Rational bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  // Ties go to the convergent, as in Python's Fraction.limit_denominator.
  return abs(bound2 - value) <= abs(bound1 - value) ? bound2 : bound1;
}

}  // namespace quantoid
