#include "causet/exact_scalar.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "causet/errors.hpp"

namespace causet {

namespace {

std::vector<std::pair<Integer, unsigned long>> factorize(Integer n) {
  std::vector<std::pair<Integer, unsigned long>> out;
  auto strip = [&](const Integer& p) {
    unsigned long k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) out.emplace_back(p, k);
  };
  strip(2);
  // Bases here are small (factorials, user ratios); past 1e6 the cofactor is
  // kept whole and treated as prime.
  for (unsigned long d = 3; d <= 1000000UL; d += 2) {
    Integer dd(d);
    if (dd * dd > n) break;
    strip(dd);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Integer pow_integer(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rational pow_rational(const Rational& base, const Integer& e) {
  if (!e.fits_slong_p()) throw DomainError("exponent too large");
  long k = e.get_si();
  unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
  Rational out(pow_integer(base.get_num(), m), pow_integer(base.get_den(), m));
  out.canonicalize();
  if (k < 0) {
    if (out == 0) throw DomainError("zero to a negative power");
    out = 1 / out;
  }
  return out;
}

std::string exponent_suffix(const Rational& e) {
  if (e == 1) return "";
  return "^(" + rational_string(e) + ")";
}

}  // namespace

bool ExactScalar::Atom::operator<(const Atom& other) const {
  if (kind != other.kind) return static_cast<int>(kind) < static_cast<int>(other.kind);
  return arg < other.arg;
}

bool ExactScalar::Atom::operator==(const Atom& other) const {
  return kind == other.kind && arg == other.arg;
}

ExactScalar::ExactScalar() : coefficient_(0) {}
ExactScalar::ExactScalar(long value) : coefficient_(value) {}
ExactScalar::ExactScalar(const Rational& value) : coefficient_(value) {}

ExactScalar ExactScalar::pi(const Rational& exponent) {
  ExactScalar out(1);
  out.multiply_atom({AtomKind::pi, 0}, exponent);
  out.normalize();
  return out;
}

ExactScalar ExactScalar::power(const Rational& base, const Rational& exponent) {
  ExactScalar out(1);
  out.multiply_rational_power(base, exponent);
  out.normalize();
  return out;
}

ExactScalar ExactScalar::gamma(const Rational& x) {
  Rational fl = floor_rational(x);
  if (x == fl && x <= 0) throw DomainError("Gamma pole at " + rational_string(x));
  Rational f = x - fl;
  if (f == 0) f = 1;
  Rational shift = x - f;
  ExactScalar out(1);
  if (shift >= 0) {
    out.coefficient_ = rising(f, shift.get_num().get_ui());
  } else {
    Rational neg = -shift;
    out.coefficient_ = 1 / rising(x, neg.get_num().get_ui());
  }
  if (f == Rational(1, 2)) {
    out.multiply_atom({AtomKind::pi, 0}, Rational(1, 2));
  } else if (f != 1) {
    out.multiply_atom({AtomKind::gamma, f}, 1);
  }
  out.normalize();
  return out;
}

ExactScalar ExactScalar::pow(const Rational& exponent) const {
  if (is_zero()) {
    if (exponent <= 0) throw DomainError("zero to a non-positive power");
    return ExactScalar();
  }
  ExactScalar out(1);
  out.multiply_rational_power(coefficient_, exponent);
  for (const auto& [atom, e] : atoms_) out.multiply_atom(atom, e * exponent);
  out.normalize();
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out(*this);
  out.coefficient_ = -out.coefficient_;
  return out;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  coefficient_ *= rhs.coefficient_;
  for (const auto& [atom, e] : rhs.atoms_) multiply_atom(atom, e);
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  coefficient_ /= rhs.coefficient_;
  for (const auto& [atom, e] : rhs.atoms_) multiply_atom(atom, -e);
  normalize();
  return *this;
}

bool ExactScalar::operator==(const ExactScalar& other) const {
  return coefficient_ == other.coefficient_ && atoms_ == other.atoms_;
}

const Rational& ExactScalar::rational_value() const {
  if (!is_rational()) throw DomainError("value is not rational: " + exact_string());
  return coefficient_;
}

void ExactScalar::multiply_atom(const Atom& atom, const Rational& exponent) {
  if (exponent == 0) return;
  Rational& e = atoms_[atom];
  e += exponent;
}

void ExactScalar::multiply_rational_power(const Rational& base, const Rational& exponent) {
  if (exponent.get_den() == 1) {
    coefficient_ *= pow_rational(base, exponent.get_num());
    return;
  }
  if (base <= 0) throw DomainError("fractional power of a non-positive rational");
  for (const auto& [p, k] : factorize(base.get_num())) {
    multiply_atom({AtomKind::radical, Rational(p)}, exponent * Rational(k));
  }
  for (const auto& [p, k] : factorize(base.get_den())) {
    multiply_atom({AtomKind::radical, Rational(p)}, -exponent * Rational(k));
  }
}

void ExactScalar::normalize() {
  if (coefficient_ == 0) {
    atoms_.clear();
    return;
  }
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    if (it->first.kind == AtomKind::radical) {
      Rational fl = floor_rational(it->second);
      if (fl != 0) {
        coefficient_ *= pow_rational(it->first.arg, fl.get_num());
        it->second -= fl;
      }
    }
    if (it->second == 0) {
      it = atoms_.erase(it);
    } else {
      ++it;
    }
  }
}

BigFloat ExactScalar::evaluate(mpfr_prec_t bits) const {
  const mpfr_prec_t guard = bits + 64;
  BigFloat out(coefficient_, guard);
  for (const auto& [atom, e] : atoms_) {
    switch (atom.kind) {
      case AtomKind::pi:
        out *= causet::pow(const_pi(guard), e);
        break;
      case AtomKind::radical:
        out *= causet::pow(BigFloat(atom.arg, guard), e);
        break;
      case AtomKind::gamma:
        out *= causet::pow(causet::gamma(BigFloat(atom.arg, guard)), e);
        break;
    }
  }
  return out.with_precision(bits);
}

double ExactScalar::to_double() const { return evaluate(96).to_double(); }

std::string ExactScalar::decimal(int digits) const {
  return evaluate(bits_for_digits(digits) + 32).to_string(digits);
}

std::string ExactScalar::exact_string() const {
  if (atoms_.empty()) return rational_string(coefficient_);
  std::string out;
  if (coefficient_ == -1) {
    out = "-";
  } else if (coefficient_ != 1) {
    out = rational_string(coefficient_) + "*";
  }
  bool first = true;
  for (const auto& [atom, e] : atoms_) {
    if (!first) out += "*";
    first = false;
    switch (atom.kind) {
      case AtomKind::pi:
        out += "pi" + exponent_suffix(e);
        break;
      case AtomKind::radical:
        out += rational_string(atom.arg) + "^(" + rational_string(e) + ")";
        break;
      case AtomKind::gamma:
        out += "Gamma(" + rational_string(atom.arg) + ")" + exponent_suffix(e);
        break;
    }
  }
  return out;
}

Rational ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  if (text.empty()) throw DomainError("empty rational");
  auto parse_int = [&](const std::string& s) {
    Integer v;
    std::string body = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    if (body.empty() || v.set_str(body, 10) != 0) throw DomainError("bad number: " + raw);
    return v;
  };
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator: " + raw);
    Rational out(parse_int(text.substr(0, slash)), den);
    out.canonicalize();
    return out;
  }
  std::string mantissa = text;
  long exponent = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    exponent = parse_int(text.substr(epos + 1)).get_si();
  }
  auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    std::string frac = mantissa.substr(dot + 1);
    std::string whole = mantissa.substr(0, dot);
    exponent -= static_cast<long>(frac.size());
    mantissa = whole + frac;
    if (mantissa.empty() || mantissa == "-" || mantissa == "+") throw DomainError("bad number: " + raw);
  }
  Rational out(parse_int(mantissa));
  Rational scale = pow_rational(Rational(10), Integer(exponent));
  out *= scale;
  out.canonicalize();
  return out;
}

Rational floor_rational(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(out);
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational rising(const Rational& x, unsigned long n) {
  Rational out(1);
  for (unsigned long j = 0; j < n; ++j) out *= x + Rational(j);
  return out;
}

}  // namespace causet
