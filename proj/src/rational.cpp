#include "urnwalk/rational.hpp"

#include <stdexcept>

namespace urnwalk {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse \"" + text + "\"");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.v_ == 0) throw std::domain_error("rational: division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int places) const {
  if (places < 0) throw std::invalid_argument("rational: negative precision");
  mpz_class num = v_.get_num();
  const mpz_class& den = v_.get_den();
  const bool negative = num < 0;
  if (negative) num = -num;

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));

  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mpz_class(num * scale).get_mpz_t(), den.get_mpz_t());

  // round half to even on the discarded remainder
  const int twice = cmp(mpz_class(2 * r), den);
  if (twice > 0 || (twice == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;

  mpz_class ip = q / scale;
  mpz_class fp = q % scale;
  std::string out = ip.get_str();
  if (places > 0) {
    std::string frac = fp.get_str();
    out += "." + std::string(static_cast<size_t>(places) - frac.size(), '0') + frac;
  }
  if (negative && q != 0) out.insert(out.begin(), '-');
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace urnwalk
