#pragma once

// Sparse multivariate polynomials and Laurent polynomials over Q, with the
// two divisibility tests used for equivariant Euler classes: by a linear
// form, and by a binomial 1 - t^a.

#include "toric/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Exponent = std::vector<long>;

/// Graded lexicographic order, largest first. Maps keyed with it iterate in
/// printing order.
struct GrLexDescending {
  bool operator()(const Exponent &a, const Exponent &b) const;
};

/// Sparse polynomial in a fixed number of variables. With `Laurent` set,
/// exponents may be negative.
template <bool Laurent> class BasicPolynomial {
public:
  using Terms = std::map<Exponent, Rational, GrLexDescending>;

  explicit BasicPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static BasicPolynomial constant(std::size_t num_vars, const Rational &c);
  static BasicPolynomial variable(std::size_t num_vars, std::size_t i);
  static BasicPolynomial monomial(std::size_t num_vars, Exponent e,
                                  const Rational &c = 1);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponent &e) const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent &e, const Rational &c);

  /// Largest total degree, -1 for zero.
  long degree() const;
  bool is_homogeneous(long d) const;
  bool has_integer_coefficients() const;

  BasicPolynomial operator-() const;
  BasicPolynomial &operator+=(const BasicPolynomial &o);
  BasicPolynomial &operator-=(const BasicPolynomial &o);
  BasicPolynomial &operator*=(const Rational &c);
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial &b) {
    return a += b;
  }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial &b) {
    return a -= b;
  }
  friend BasicPolynomial operator*(const Rational &c, BasicPolynomial a) {
    return a *= c;
  }
  friend BasicPolynomial operator*(const BasicPolynomial &a,
                                   const BasicPolynomial &b) {
    return a.times(b);
  }
  friend bool operator==(const BasicPolynomial &a, const BasicPolynomial &b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Canonical text: graded-lex descending terms, "p/q" coefficients,
  /// "u1^2*u3" monomials. Round-trips through the parser.
  std::string to_string(const std::vector<std::string> &variables) const;

private:
  BasicPolynomial times(const BasicPolynomial &o) const;
  void check_vars(const BasicPolynomial &o) const;

  std::size_t num_vars_;
  Terms terms_;
};

using Polynomial = BasicPolynomial<false>;
using LaurentPolynomial = BasicPolynomial<true>;

extern template class BasicPolynomial<false>;
extern template class BasicPolynomial<true>;

/// {prefix}1 .. {prefix}n
std::vector<std::string> default_variables(std::string_view prefix,
                                           std::size_t n);

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string> &variables);
LaurentPolynomial parse_laurent(std::string_view text,
                                const std::vector<std::string> &variables);

/// f(images[0], ..., images[n-1]); all images share a variable count.
Polynomial substitute(const Polynomial &f, const std::vector<Polynomial> &images);

/// Nonzero integer linear form, kept as multiple * primitive.
class LinearForm {
public:
  explicit LinearForm(IntVector coeffs);

  const IntVector &primitive() const noexcept { return primitive_; }
  const Integer &multiple() const noexcept { return multiple_; }
  IntVector coefficients() const;
  std::size_t num_vars() const noexcept { return primitive_.size(); }
  Polynomial to_polynomial() const;

private:
  IntVector primitive_;
  Integer multiple_;
};

enum class CoefficientRing { Q, Z };

/// Quotient q with g = lambda * q when it exists. Over Z the form is used
/// exactly as given and q must have integer coefficients.
std::optional<Polynomial> divides_linear(const LinearForm &lambda,
                                         const Polynomial &g,
                                         CoefficientRing ring);

/// Quotient q with g = (1 - t^a) * q in the Laurent ring over Q, when it
/// exists.
std::optional<LaurentPolynomial> divides_binomial(const IntVector &a,
                                                  const LaurentPolynomial &g);

} // namespace toric
