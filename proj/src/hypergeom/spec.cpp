#include <algorithm>

#include "causet/errors.hpp"
#include "causet/exact_scalar.hpp"
#include "causet/hypergeom.hpp"

namespace causet::hypergeom {

HypergeometricSpec::HypergeometricSpec(std::vector<Rational> upper, std::vector<Rational> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  for (auto& a : upper_) a.canonicalize();
  for (auto& b : lower_) {
    b.canonicalize();
    if (b <= 0 && b.get_den() == 1) throw DomainError("lower parameter at a pole: " + rational_string(b));
  }
}

HypergeometricSpec HypergeometricSpec::reduced() const {
  std::vector<Rational> up = upper_;
  std::vector<Rational> low;
  for (const auto& b : lower_) {
    auto it = std::find(up.begin(), up.end(), b);
    if (it != up.end()) {
      up.erase(it);
    } else {
      low.push_back(b);
    }
  }
  std::sort(up.begin(), up.end());
  std::sort(low.begin(), low.end());
  return HypergeometricSpec(std::move(up), std::move(low));
}

HypergeometricSpec HypergeometricSpec::shifted() const {
  std::vector<Rational> up = upper_;
  std::vector<Rational> low = lower_;
  for (auto& a : up) a += 1;
  for (auto& b : low) b += 1;
  return HypergeometricSpec(std::move(up), std::move(low));
}

Rational HypergeometricSpec::derivative_factor() const {
  Rational out(1);
  for (const auto& a : upper_) out *= a;
  for (const auto& b : lower_) out /= b;
  return out;
}

bool HypergeometricSpec::operator==(const HypergeometricSpec& other) const {
  return upper_ == other.upper_ && lower_ == other.lower_;
}

std::string HypergeometricSpec::to_string() const {
  auto join = [](const std::vector<Rational>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rational_string(v[i]);
    return s;
  };
  return std::to_string(p()) + "F" + std::to_string(q()) + "(" + join(upper_) + ";" + join(lower_) + ")";
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::automatic:
      return "automatic";
    case Backend::exact_rational:
      return "exact_rational";
    case Backend::big_float:
      return "big_float";
  }
  return "unknown";
}

}  // namespace causet::hypergeom
