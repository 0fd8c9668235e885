#pragma once

// Graded polynomial rings Z[Y1..Yk] and Z/2[Y1..Yk]. Each variable has
// cohomological degree 2; every degree argument in this interface is a
// cohomological (even) degree.

#include "gkm/intlinalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkm {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, arranged for printing: lower degree first,
/// and within a degree Y1^2 before Y1*Y2 before Y2^2.
struct TermOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of polynomial degree m in `nvars` variables,
/// in TermOrder.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned m);

class IntPolynomial {
 public:
  using Terms = std::map<Exponent, BigInt, TermOrder>;

  explicit IntPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static IntPolynomial constant(std::size_t nvars, const BigInt& c);
  static IntPolynomial variable(std::size_t nvars, std::size_t index);
  static IntPolynomial monomial(const Exponent& e, const BigInt& c);
  /// sum_i v[i] * Y_{i+1}
  static IntPolynomial linear_form(const IntVector& v);

  std::size_t variable_count() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponent& e) const;
  /// Adds c to the coefficient of e, dropping the term if it cancels.
  void add_term(const Exponent& e, const BigInt& c);

  /// Highest cohomological degree present; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  IntPolynomial homogeneous_component(int cohomological_degree) const;
  /// Coefficients of the given monomials, in order.
  IntVector coefficients(std::span<const Exponent> monomials) const;
  /// Inverse of coefficients().
  static IntPolynomial from_coefficients(std::size_t nvars,
                                         std::span<const Exponent> monomials,
                                         std::span<const BigInt> coeffs);
  /// Linear coefficient vector; throws unless this is a linear form.
  IntVector as_linear_form() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned e) const;

  bool operator==(const IntPolynomial& other) const = default;

 private:
  void check_compatible(const IntPolynomial& other) const;

  std::size_t nvars_;
  Terms terms_;
};

class Mod2Polynomial {
 public:
  using Terms = std::set<Exponent, TermOrder>;

  explicit Mod2Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t variable_count() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void flip_term(const Exponent& e);
  Mod2Polynomial homogeneous_component(int cohomological_degree) const;

  Mod2Polynomial& operator+=(const Mod2Polynomial& other);
  friend Mod2Polynomial operator+(Mod2Polynomial a, const Mod2Polynomial& b) {
    return a += b;
  }
  friend Mod2Polynomial operator*(const Mod2Polynomial& a, const Mod2Polynomial& b);
  bool operator==(const Mod2Polynomial& other) const = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Replaces Y_j by sum_i B(i, j) * Y_i.
IntPolynomial linear_substitute(const IntPolynomial& p, const IntMatrix& b);

/// Ring map sending Y_j to images[j].
IntPolynomial compose(const IntPolynomial& p, std::span<const IntPolynomial> images);

/// q with q * divisor == p over Z[Y], or nullopt when the division is not
/// exact. Throws std::invalid_argument on a zero divisor.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p,
                                          const IntPolynomial& divisor);

/// Exact division by a nonzero homogeneous linear form; throws
/// std::invalid_argument if `linear` is zero or not linear.
std::optional<IntPolynomial> divide_by_linear(const IntPolynomial& p,
                                              const IntPolynomial& linear);

Mod2Polynomial mod2_reduce(const IntPolynomial& p);

/// Default variable names Y1..Yk.
std::vector<std::string> default_variable_names(std::size_t nvars,
                                                std::string_view prefix = "Y");

/// Canonical text form, e.g. "4*X1 + 2*X2" or "1 + 2*Y1 - Y2 + Y1^2".
std::string to_string(const IntPolynomial& p, std::span<const std::string> names);
std::string to_string(const IntPolynomial& p);
std::string to_string(const Mod2Polynomial& p, std::span<const std::string> names);

/// Parses +, -, *, ^ (nonnegative integer exponents), parentheses, integer
/// literals and the given variable names. Throws std::invalid_argument with
/// the offending position on malformed input.
IntPolynomial parse_polynomial(std::string_view text,
                               std::span<const std::string> names);

}  // namespace gkm
