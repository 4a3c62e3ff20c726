#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>

#include "causet/dalembertian.hpp"
#include "causet/errors.hpp"

namespace causet::dalembertian {

namespace {

constexpr int kMaxDegree = 4;

std::string number_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Parser {
 public:
  Parser(const std::string& text, int d) : text_(text), d_(d) {}

  FieldSpec parse() {
    std::map<std::vector<int>, double> collected;
    skip();
    if (pos_ == text_.size()) fail("empty field");
    bool first = true;
    while (pos_ < text_.size()) {
      double sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      auto [coeff, powers] = term();
      collected[powers] += sign * coeff;
      skip();
    }
    std::vector<FieldTerm> terms;
    for (const auto& [powers, c] : collected) {
      if (c != 0) terms.push_back({c, powers});
    }
    return FieldSpec(d_, std::move(terms), window_);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("field '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }

  double number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    if (!std::isfinite(v)) fail("non-finite number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }

  std::pair<double, std::vector<int>> term() {
    double coeff = 1;
    std::vector<int> powers(static_cast<std::size_t>(d_), 0);
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        coeff *= number();
      } else if (text_.compare(pos_, 6, "window") == 0) {
        pos_ += 6;
        expect('(');
        Window w;
        w.r_in = number();
        expect(',');
        w.r_out = number();
        expect(')');
        if (!(w.r_in >= 0) || !(w.r_in < w.r_out)) fail("window needs 0 <= r_in < r_out");
        if (window_ && (window_->r_in != w.r_in || window_->r_out != w.r_out)) fail("conflicting windows");
        window_ = w;
      } else if (c == 't') {
        ++pos_;
        powers[0] += exponent();
      } else if (c == 'x') {
        ++pos_;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        int index = 1;
        if (start != pos_) {
          index = std::stoi(text_.substr(start, pos_ - start));
        } else if (d_ != 2) {
          fail("bare x is only accepted in d = 2");
        }
        if (index < 1 || index >= d_) fail("coordinate x" + std::to_string(index) + " out of range");
        powers[static_cast<std::size_t>(index)] += exponent();
      } else {
        fail("unexpected character");
      }
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    int degree = 0;
    for (int p : powers) degree += p;
    if (degree > kMaxDegree) fail("total degree above 4");
    return {coeff, powers};
  }

  const std::string& text_;
  int d_;
  std::size_t pos_ = 0;
  std::optional<Window> window_;
};

double ipow(double x, int k) {
  double out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

double radius(const double* offset, int d) {
  double r2 = 0;
  for (int k = 0; k < d; ++k) r2 += offset[k] * offset[k];
  return std::sqrt(r2);
}

}  // namespace

double Window::operator()(double r) const {
  if (r <= r_in) return 1;
  if (r >= r_out) return 0;
  const double s = (r - r_in) / (r_out - r_in);
  return 1 - s * s * s * (10 - 15 * s + 6 * s * s);
}

FieldSpec::FieldSpec(int dimension, std::vector<FieldTerm> terms, std::optional<Window> window)
    : dimension_(dimension), terms_(std::move(terms)), window_(window) {
  if (dimension < 2) throw DomainError("dimension must be >= 2");
  for (const auto& t : terms_) {
    if (static_cast<int>(t.powers.size()) != dimension) throw DomainError("field term has wrong arity");
    int degree = 0;
    for (int p : t.powers) {
      if (p < 0) throw DomainError("negative exponent");
      degree += p;
    }
    if (degree > kMaxDegree) throw DomainError("field degree above 4");
  }
  if (window_ && !(window_->r_in >= 0 && window_->r_in < window_->r_out)) {
    throw DomainError("window needs 0 <= r_in < r_out");
  }
}

FieldSpec FieldSpec::parse(const std::string& text, int dimension) {
  if (dimension < 2) throw DomainError("dimension must be >= 2");
  return Parser(text, dimension).parse();
}

double FieldSpec::polynomial(const double* offset) const {
  double out = 0;
  for (const auto& t : terms_) {
    double v = t.coefficient;
    for (int k = 0; k < dimension_; ++k) v *= ipow(offset[k], t.powers[static_cast<std::size_t>(k)]);
    out += v;
  }
  return out;
}

double FieldSpec::operator()(const double* offset) const {
  if (!window_) return polynomial(offset);
  const double w = (*window_)(radius(offset, dimension_));
  return w == 0 ? 0 : w * polynomial(offset);
}

FieldSpec FieldSpec::linear_combination(double a, const FieldSpec& f, double b, const FieldSpec& g) {
  if (f.dimension_ != g.dimension_) throw DomainError("fields of different dimension");
  const bool same_window = f.window_.has_value() == g.window_.has_value() &&
                           (!f.window_ || (f.window_->r_in == g.window_->r_in && f.window_->r_out == g.window_->r_out));
  if (!same_window) throw DomainError("fields with different windows");
  std::map<std::vector<int>, double> collected;
  for (const auto& t : f.terms_) collected[t.powers] += a * t.coefficient;
  for (const auto& t : g.terms_) collected[t.powers] += b * t.coefficient;
  std::vector<FieldTerm> terms;
  for (const auto& [powers, c] : collected) {
    if (c != 0) terms.push_back({c, powers});
  }
  return FieldSpec(f.dimension_, std::move(terms), f.window_);
}

std::string FieldSpec::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i == 0) {
      out += number_string(t.coefficient);
    } else {
      out += t.coefficient < 0 ? " - " : " + ";
      out += number_string(std::fabs(t.coefficient));
    }
    for (int k = 0; k < dimension_; ++k) {
      const int p = t.powers[static_cast<std::size_t>(k)];
      if (p == 0) continue;
      out += "*" + (k == 0 ? std::string("t") : "x" + std::to_string(k));
      if (p > 1) out += "^" + std::to_string(p);
    }
    if (window_) out += "*window(" + number_string(window_->r_in) + "," + number_string(window_->r_out) + ")";
  }
  return out;
}

double continuum_dalembertian(const FieldSpec& field, const std::vector<double>& offset) {
  const int d = field.dimension();
  if (static_cast<int>(offset.size()) != d) throw DomainError("point has wrong dimension");
  if (const auto& w = field.window()) {
    const double r = radius(offset.data(), d);
    if (r >= w->r_out) return 0;
    if (r > w->r_in) throw DomainError("point lies in the window's transition shell");
  }
  double out = 0;
  for (const auto& t : field.terms()) {
    for (int k = 0; k < d; ++k) {
      const int p = t.powers[static_cast<std::size_t>(k)];
      if (p < 2) continue;
      double v = t.coefficient * p * (p - 1);
      for (int m = 0; m < d; ++m) v *= ipow(offset[static_cast<std::size_t>(m)], t.powers[static_cast<std::size_t>(m)] - (m == k ? 2 : 0));
      out += k == 0 ? -v : v;
    }
  }
  return out;
}

}  // namespace causet::dalembertian
