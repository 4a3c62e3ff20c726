#include "causet/polynomial.hpp"

#include <algorithm>

#include "causet/errors.hpp"
#include "causet/exact_scalar.hpp"

namespace causet {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear_root(const Rational& r) { return RationalPolynomial({r, 1}); }

int RationalPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Rational RationalPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat RationalPolynomial::operator()(const BigFloat& x) const {
  BigFloat acc(x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += BigFloat(*it, x.precision());
  }
  return acc;
}

RationalPolynomial RationalPolynomial::truncated(int n) const {
  if (n < 0) return {};
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min<size_t>(coeffs_.size(), static_cast<size_t>(n) + 1));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational lead = divisor.coeffs_.back();
  std::vector<Rational> quot;
  if (degree() >= dd) quot.assign(static_cast<size_t>(degree() - dd + 1), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    Rational factor = rem[static_cast<size_t>(k)] / lead;
    quot[static_cast<size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= factor * divisor.coeffs_[static_cast<size_t>(j)];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

std::string RationalPolynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    std::string term = rational_string(abs(c));
    if (k >= 1) term += "*" + variable;
    if (k >= 2) term += "^" + std::to_string(k);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace causet
