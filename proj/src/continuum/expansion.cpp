#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "causet/coefficients.hpp"
#include "causet/continuum.hpp"
#include "causet/errors.hpp"

namespace causet::continuum {

namespace {

using hypergeom::HypergeometricSpec;

bool is_even(int d) { return d % 2 == 0; }

int od_pairs(int d) { return is_even(d) ? d / 2 + 1 : (d + 1) / 2; }

ExactScalar signed_binomial(int n, int k) {
  ExactScalar b(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
  return k % 2 == 0 ? b : -b;
}

ExactScalar sqrt2_power(const Rational& e) { return ExactScalar::power(2, e); }

void check_dimension(int d) {
  if (d < 2) throw DomainError("dimension must be >= 2");
}

// Parameters j*2/d + 1 over j*2/d for j in [first, last].
void append_od_sequence(std::vector<Rational>& up, std::vector<Rational>& low, int d, int first, int last) {
  for (int j = first; j <= last; ++j) {
    up.push_back(ratio(2 * j, d) + 1);
    low.push_back(ratio(2 * j, d));
  }
}

}  // namespace

KSumExpansion expand_weighted_integral(int d, int m, const std::vector<Monomial>& weight, const std::string& source) {
  check_dimension(d);
  const ExactScalar c = coefficients::volume_constant(d);
  const Rational z_power = ratio(m + 2, d);
  const ExactScalar c_factor = c.pow(-z_power);
  KSumExpansion out;
  out.dimension = d;
  out.even = is_even(d);
  out.source = source;
  for (const auto& mono : weight) {
    const Rational a = ratio(2 * (mono.q + 1), d);
    std::vector<Rational> up{a, z_power};
    std::vector<Rational> low{a + 1, z_power + 1};
    append_od_sequence(up, low, d, 1, od_pairs(d));
    KSumTerm term;
    term.weight = mono.coefficient / ExactScalar(Rational((mono.q + 1) * (m + 2))) * c_factor;
    term.z_power = z_power;
    term.spec = HypergeometricSpec(up, low).reduced();
    term.label = mono.label;
    out.terms.push_back(std::move(term));
  }
  return out;
}

KSumExpansion build_beta_expansion(int d) {
  check_dimension(d);
  const ExactScalar c = coefficients::volume_constant(d);
  const Rational z_power = 1 + ratio(2, d);
  KSumExpansion out;
  out.dimension = d;
  out.even = is_even(d);
  out.source = "beta";
  for (int k = 0; k <= d; ++k) {
    const Rational a = ratio(2 * (k + 1), d);
    std::vector<Rational> up;
    std::vector<Rational> low;
    if (is_even(d)) {
      up = {a};
      low = {a + 1};
      append_od_sequence(up, low, d, 1, d / 2);
    } else {
      up = {1 + ratio(2, d), a};
      low = {2 + ratio(2, d), a + 1};
      append_od_sequence(up, low, d, 1, (d + 1) / 2);
    }
    KSumTerm term;
    term.weight = signed_binomial(d, k) / (sqrt2_power(ratio(d, 2)) * ExactScalar(Rational((k + 1) * (d + 2)))) *
                  c.pow(-z_power);
    term.z_power = z_power;
    term.spec = HypergeometricSpec(up, low);
    term.label = "k=" + std::to_string(k);
    out.terms.push_back(std::move(term));
  }
  return out;
}

KSumExpansion build_alpha_beta_expansion(int d) {
  check_dimension(d);
  const ExactScalar c = coefficients::volume_constant(d);
  KSumExpansion out;
  out.dimension = d;
  out.even = is_even(d);
  out.source = "alpha-beta";
  for (int k = 0; k <= d - 2; ++k) {
    const Rational a = ratio(2 * (k + 1), d);
    std::vector<Rational> up;
    std::vector<Rational> low;
    if (is_even(d)) {
      up = {a};
      low = {a + 1};
      append_od_sequence(up, low, d, 1, d / 2 - 1);
      up.push_back(2 + ratio(2, d));
      low.push_back(1 + ratio(2, d));
    } else {
      up = {1, a};
      low = {2, a + 1};
      append_od_sequence(up, low, d, 1, (d + 1) / 2);
    }
    KSumTerm term;
    term.weight = signed_binomial(d - 2, k) / (sqrt2_power(ratio(d - 2, 2)) * ExactScalar(Rational(d * (k + 1)))) / c;
    term.z_power = 1;
    term.spec = HypergeometricSpec(up, low);
    term.label = "k=" + std::to_string(k);
    out.terms.push_back(std::move(term));
  }
  return out;
}

KSumExpansion build_t1_independent(int d) {
  check_dimension(d);
  std::vector<Monomial> w;
  const ExactScalar scale = ExactScalar(1) / (sqrt2_power(ratio(d, 2)) * ExactScalar(d - 1));
  for (int k = 0; k <= d; ++k) w.push_back({k, signed_binomial(d, k) * scale, "k=" + std::to_string(k)});
  return expand_weighted_integral(d, d, w, "T1");
}

RicciExpansions build_ricci_expansions(int d) {
  check_dimension(d);
  RicciExpansions out;
  out.t1 = scaled(build_beta_expansion(d), ExactScalar(ratio(1, d - 1)));
  out.t1.source = "T1";

  std::vector<Monomial> w2;
  const ExactScalar s2 = ExactScalar(1) / sqrt2_power(ratio(d, 2));
  for (int x = 0; x <= 2; ++x) {
    for (int k = 0; k <= d - 2; ++k) {
      ExactScalar coeff = ExactScalar(Rational(binomial(2, static_cast<unsigned long>(x)))) * signed_binomial(d - 2, k) * s2;
      w2.push_back({k + x, coeff, "x=" + std::to_string(x) + ",k=" + std::to_string(k)});
    }
  }
  out.t2 = expand_weighted_integral(d, d, w2, "T2");

  std::vector<Monomial> w3;
  const ExactScalar s3 = ExactScalar(1) / sqrt2_power(ratio(d - 2, 2));
  for (int k = 0; k <= d - 2; ++k) w3.push_back({k + 1, signed_binomial(d - 2, k) * s3, "k=" + std::to_string(k)});
  out.t3 = expand_weighted_integral(d, d, w3, "T3");
  return out;
}

KSumExpansion apply_l_dl(const KSumExpansion& expansion) {
  KSumExpansion out = expansion;
  out.source = "l d/dl " + expansion.source;
  for (auto& term : out.terms) {
    term.weight = term.weight * ExactScalar(Rational(expansion.dimension) * term.spec.derivative_factor());
    term.z_power += 1;
    term.spec = term.spec.shifted();
    term.label = "D(" + term.label + ")";
  }
  return out;
}

KSumExpansion scaled(const KSumExpansion& expansion, const ExactScalar& factor) {
  KSumExpansion out = expansion;
  for (auto& term : out.terms) term.weight = term.weight * factor;
  return out;
}

KSumExpansion concatenated(const KSumExpansion& a, const KSumExpansion& b) {
  if (a.dimension != b.dimension) throw DomainError("expansions of different dimension");
  KSumExpansion out = a;
  out.source = a.source + " + " + b.source;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

KSumExpansion assemble_ricci_r(int d) {
  const RicciExpansions t = build_ricci_expansions(d);
  const ExactScalar pref = coefficients::beta(d) * coefficients::sphere_volume(d - 2);
  KSumExpansion out = scaled(t.t1, pref * ExactScalar(ratio(-1, 6)));
  out = concatenated(out, scaled(apply_l_dl(t.t1), pref * ExactScalar(ratio(-1, 24 * (d + 1)))));
  out = concatenated(out, scaled(apply_l_dl(t.t3), pref * ExactScalar(ratio(1, 12 * (d + 1) * (d + 2)))));
  out.source = "I_R";
  return out;
}

KSumExpansion assemble_ricci_00(int d) {
  const RicciExpansions t = build_ricci_expansions(d);
  const ExactScalar pref = coefficients::beta(d) * coefficients::sphere_volume(d - 2);
  const KSumExpansion t12 = concatenated(t.t1, t.t2);
  KSumExpansion out = scaled(t12, pref * ExactScalar(ratio(-1, 6)));
  out = concatenated(out, scaled(apply_l_dl(t12), pref * ExactScalar(ratio(-1, 24 * (d + 1)))));
  out.source = "I_00";
  return out;
}

TermValues evaluate_detailed(const KSumExpansion& expansion, const Rational& z, mpfr_prec_t bits) {
  mpfr_prec_t work = bits + 64;
  for (int attempt = 0; attempt < 6; ++attempt) {
    TermValues out{BigFloat(work), {}};
    const BigFloat zb(z, work);
    double max_log = -INFINITY;
    for (const auto& term : expansion.terms) {
      BigFloat v = term.weight.evaluate(work) * pow(zb, term.z_power) * hypergeom::evaluate(term.spec, z, work);
      max_log = std::max(max_log, v.log_abs());
      out.total += v;
      out.terms.push_back(std::move(v));
    }
    if (out.terms.empty()) return out;
    const double lost = out.total.is_zero() ? static_cast<double>(work) : (max_log - out.total.log_abs()) / std::log(2.0);
    if (lost < static_cast<double>(work - bits) - 16) return out;
    if (out.total.is_zero() && attempt > 0) return out;
    work = bits + static_cast<mpfr_prec_t>(lost) + 64;
  }
  throw ConvergenceError("expansion lost all precision to cancellation");
}

BigFloat evaluate(const KSumExpansion& expansion, const Rational& z, mpfr_prec_t bits) {
  return evaluate_detailed(expansion, z, bits).total.with_precision(bits);
}

Asymptotics asymptotics(const KSumExpansion& expansion, mpfr_prec_t bits) {
  const mpfr_prec_t work = bits + 64;
  std::map<Rational, BigFloat> by_power;
  std::map<Rational, double> scale;
  for (const auto& term : expansion.terms) {
    auto cf = hypergeom::ClosedForm::build(term.spec);
    if (!cf) throw DomainError("no closed form for " + term.spec.to_string());
    const BigFloat w = term.weight.evaluate(work);
    for (const auto& pole : cf->poles()) {
      const Rational power = term.z_power - pole.shift;
      BigFloat coeff = w * BigFloat(pole.residue, work) * gamma(BigFloat(pole.shift, work));
      auto it = by_power.find(power);
      if (it == by_power.end()) {
        by_power.emplace(power, coeff);
        scale[power] = coeff.log_abs();
      } else {
        scale[power] = std::max(scale[power], coeff.log_abs());
        it->second += coeff;
      }
    }
  }
  Asymptotics out{BigFloat(bits), std::nullopt, true};
  const double negligible = -static_cast<double>(bits) / 2 * std::log(2.0);
  for (const auto& [power, coeff] : by_power) {
    const bool zero = coeff.is_zero() || coeff.log_abs() < scale[power] + negligible;
    if (zero) continue;
    if (power > 0) {
      out.bounded = false;
    } else if (power == 0) {
      out.limit = coeff.with_precision(bits);
    } else if (!out.decay || -power < *out.decay) {
      out.decay = -power;
    }
  }
  return out;
}

LimitParameterSets limit_parameter_sets(int d) {
  LimitParameterSets out;
  std::set<std::string> seen;
  auto add_flat = [&](std::vector<Rational> a) {
    if (a.empty()) return;
    std::sort(a.begin(), a.end());
    std::string key = "f";
    for (const auto& x : a) key += rational_string(x) + ",";
    if (seen.insert(key).second) out.flat.push_back(std::move(a));
  };
  auto add_gamma = [&](const Rational& a0, std::vector<Rational> a) {
    if (std::find(a.begin(), a.end(), a0 + 1) != a.end()) return;
    std::sort(a.begin(), a.end());
    std::string key = "g" + rational_string(a0) + ";";
    for (const auto& x : a) key += rational_string(x) + ",";
    if (seen.insert(key).second) out.gamma.emplace_back(a0, std::move(a));
  };

  for (const auto& expansion : {build_beta_expansion(d), build_alpha_beta_expansion(d)}) {
    for (const auto& term : expansion.terms) {
      const auto spec = term.spec.reduced();
      std::vector<Rational> lower = spec.lower();
      std::vector<Rational> flats;
      std::vector<Rational> poles;
      bool ok = true;
      for (const auto& a : spec.upper()) {
        auto take = [&](const Rational& b) {
          auto it = std::find(lower.begin(), lower.end(), b);
          if (it == lower.end()) return false;
          lower.erase(it);
          return true;
        };
        if (take(a - 1)) {
          flats.push_back(a);
        } else if (take(a + 1)) {
          poles.push_back(a);
        } else {
          ok = false;
        }
      }
      if (!ok || !lower.empty()) continue;
      add_flat(flats);
      if (poles.empty()) {
        continue;
      } else if (poles.size() == 1) {
        add_gamma(poles[0], flats);
      } else if (poles.size() == 2) {
        add_gamma(poles[0], flats);
        add_gamma(poles[1], flats);
      }
    }
  }
  return out;
}

}  // namespace causet::continuum
