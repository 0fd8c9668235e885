#include "gkm/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gkm {

unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool TermOrder::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned m) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Lexicographically descending enumeration: Y1^m first.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned x = left + 1; x-- > 0;) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, m);
  return out;
}

IntPolynomial IntPolynomial::constant(std::size_t nvars, const BigInt& c) {
  IntPolynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  IntPolynomial p(nvars);
  p.add_term(e, 1);
  return p;
}

IntPolynomial IntPolynomial::monomial(const Exponent& e, const BigInt& c) {
  IntPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

IntPolynomial IntPolynomial::linear_form(const IntVector& v) {
  IntPolynomial p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Exponent e(v.size(), 0);
    e[i] = 1;
    p.add_term(e, v[i]);
  }
  return p;
}

BigInt IntPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(const Exponent& e, const BigInt& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int IntPolynomial::degree() const {
  if (terms_.empty()) return -1;
  return 2 * static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool IntPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

IntPolynomial IntPolynomial::homogeneous_component(int cohomological_degree) const {
  IntPolynomial out(nvars_);
  if (cohomological_degree < 0 || cohomological_degree % 2 != 0) return out;
  unsigned m = static_cast<unsigned>(cohomological_degree / 2);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == m) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

IntVector IntPolynomial::coefficients(std::span<const Exponent> monomials) const {
  IntVector out;
  out.reserve(monomials.size());
  for (const auto& e : monomials) out.push_back(coefficient(e));
  return out;
}

IntPolynomial IntPolynomial::from_coefficients(std::size_t nvars,
                                               std::span<const Exponent> monomials,
                                               std::span<const BigInt> coeffs) {
  if (monomials.size() != coeffs.size())
    throw std::invalid_argument("coefficient count mismatch");
  IntPolynomial p(nvars);
  for (std::size_t i = 0; i < monomials.size(); ++i) p.add_term(monomials[i], coeffs[i]);
  return p;
}

IntVector IntPolynomial::as_linear_form() const {
  IntVector v(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != 1) throw std::invalid_argument("not a linear form");
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] == 1) v[i] = c;
  }
  return v;
}

void IntPolynomial::check_compatible(const IntPolynomial& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("polynomial variable count mismatch");
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.check_compatible(b);
  IntPolynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(nvars_, 1);
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

void Mod2Polynomial::flip_term(const Exponent& e) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
  auto [it, inserted] = terms_.insert(e);
  if (!inserted) terms_.erase(it);
}

Mod2Polynomial Mod2Polynomial::homogeneous_component(int cohomological_degree) const {
  Mod2Polynomial out(nvars_);
  if (cohomological_degree < 0 || cohomological_degree % 2 != 0) return out;
  unsigned m = static_cast<unsigned>(cohomological_degree / 2);
  for (const auto& e : terms_)
    if (total_degree(e) == m) out.terms_.insert(e);
  return out;
}

Mod2Polynomial& Mod2Polynomial::operator+=(const Mod2Polynomial& other) {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& e : other.terms_) flip_term(e);
  return *this;
}

Mod2Polynomial operator*(const Mod2Polynomial& a, const Mod2Polynomial& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("polynomial variable count mismatch");
  Mod2Polynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& ea : a.terms_)
    for (const auto& eb : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.flip_term(e);
    }
  return out;
}

IntPolynomial linear_substitute(const IntPolynomial& p, const IntMatrix& b) {
  const std::size_t k = p.variable_count();
  if (b.rows() != k || b.cols() != k)
    throw std::invalid_argument("linear_substitute: dimension mismatch");
  std::vector<IntPolynomial> images;
  images.reserve(k);
  for (std::size_t j = 0; j < k; ++j) images.push_back(IntPolynomial::linear_form(b.column(j)));
  return compose(p, images);
}

IntPolynomial compose(const IntPolynomial& p, std::span<const IntPolynomial> images) {
  if (images.size() != p.variable_count())
    throw std::invalid_argument("compose: one image per variable required");
  if (images.empty()) return p;
  const std::size_t target_vars = images.front().variable_count();
  for (const auto& img : images)
    if (img.variable_count() != target_vars)
      throw std::invalid_argument("compose: images over different rings");

  // Cache powers per variable, since exponents repeat across terms.
  std::vector<std::vector<IntPolynomial>> powers(images.size());
  auto power = [&](std::size_t var, unsigned e) -> const IntPolynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(IntPolynomial::constant(target_vars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  IntPolynomial out(target_vars);
  for (const auto& [e, c] : p.terms()) {
    IntPolynomial term = IntPolynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p,
                                          const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.variable_count() != divisor.variable_count())
    throw std::invalid_argument("polynomial variable count mismatch");
  const auto& [lead_exp, lead_coef] = *divisor.terms().rbegin();
  IntPolynomial remainder = p;
  IntPolynomial quotient(p.variable_count());
  Exponent e(p.variable_count());
  while (!remainder.is_zero()) {
    const auto& [rexp, rcoef] = *remainder.terms().rbegin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (rexp[i] < lead_exp[i]) return std::nullopt;
      e[i] = rexp[i] - lead_exp[i];
    }
    if (rcoef % lead_coef != 0) return std::nullopt;
    IntPolynomial step = IntPolynomial::monomial(e, rcoef / lead_coef);
    remainder -= step * divisor;
    quotient += step;
  }
  return quotient;
}

std::optional<IntPolynomial> divide_by_linear(const IntPolynomial& p,
                                              const IntPolynomial& linear) {
  if (linear.is_zero()) throw std::invalid_argument("division by a zero linear form");
  if (linear.degree() != 2 || !linear.is_homogeneous())
    throw std::invalid_argument("divisor is not a linear form");
  return divide_exact(p, linear);
}

Mod2Polynomial mod2_reduce(const IntPolynomial& p) {
  Mod2Polynomial out(p.variable_count());
  for (const auto& [e, c] : p.terms())
    if (c % 2 != 0) out.flip_term(e);
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars,
                                                std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back(std::string(prefix) + std::to_string(i + 1));
  return names;
}

namespace {

std::string monomial_text(const Exponent& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const IntPolynomial& p, std::span<const std::string> names) {
  if (names.size() != p.variable_count())
    throw std::invalid_argument("to_string: one name per variable required");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(e, names);
    if (mono.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + '*';
      out += mono;
    }
  }
  return out;
}

std::string to_string(const IntPolynomial& p) {
  auto names = default_variable_names(p.variable_count());
  return to_string(p, names);
}

std::string to_string(const Mod2Polynomial& p, std::span<const std::string> names) {
  if (names.size() != p.variable_count())
    throw std::invalid_argument("to_string: one name per variable required");
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& e : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono = monomial_text(e, names);
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  IntPolynomial parse() {
    IntPolynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos_) + ": " + what + " in \"" +
                                std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  // Accepts ASCII '-' and U+2212.
  bool eat_minus() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  IntPolynomial expression() {
    IntPolynomial acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat_minus()) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntPolynomial term() {
    IntPolynomial acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (at_factor_start()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  IntPolynomial unary() {
    if (eat_minus()) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  IntPolynomial power() {
    IntPolynomial base = atom();
    if (eat('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  IntPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat('(')) {
      IntPolynomial inner = expression();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    char c = text_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return IntPolynomial::constant(names_.size(), BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return IntPolynomial::variable(names_.size(), i);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  return PolynomialParser(text, names).parse();
}

}  // namespace gkm
