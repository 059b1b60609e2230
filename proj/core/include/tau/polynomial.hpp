#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Terms are kept in a std::map keyed by exponent vectors, so iteration is in
// lexicographic order (x_1 most significant) and output is deterministic. An
// optional degree cap truncates every product eagerly; coefficients above the
// cap are never formed or read.

#include "tau/exact.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tau {

using Exponents = std::vector<int>;

class DivisibilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GradedSymPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit GradedSymPoly(int nvars = 0, std::optional<int> degree_cap = std::nullopt);

  static GradedSymPoly constant(int nvars, const Rational& c);
  static GradedSymPoly variable(int nvars, int index);
  /// x_1 + ... + x_n
  static GradedSymPoly variable_sum(int nvars);
  static GradedSymPoly monomial(Exponents e, const Rational& c);

  int nvars() const { return nvars_; }
  std::optional<int> degree_cap() const { return cap_; }
  GradedSymPoly& set_degree_cap(std::optional<int> cap);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^e; throws std::out_of_range if |e| exceeds the cap.
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  GradedSymPoly& operator+=(const GradedSymPoly& other);
  GradedSymPoly& operator-=(const GradedSymPoly& other);
  GradedSymPoly& operator*=(const Rational& c);
  friend GradedSymPoly operator+(GradedSymPoly a, const GradedSymPoly& b) { return a += b; }
  friend GradedSymPoly operator-(GradedSymPoly a, const GradedSymPoly& b) { return a -= b; }
  friend GradedSymPoly operator*(GradedSymPoly a, const Rational& c) { return a *= c; }
  friend GradedSymPoly operator*(const GradedSymPoly& a, const GradedSymPoly& b);
  friend bool operator==(const GradedSymPoly& a, const GradedSymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  GradedSymPoly pow(int exponent) const;

  /// Degree-d homogeneous component.
  GradedSymPoly homogeneous_part(int degree) const;
  std::optional<int> max_degree() const;

  /// Places variable i of this polynomial at position slots[i] of an
  /// nvars-variable polynomial.
  GradedSymPoly embed(int nvars, std::span<const int> slots) const;

  /// Exact quotient by x_1 + ... + x_n via leading-term elimination in lex
  /// order. Throws DivisibilityError with the offending term on a nonzero remainder.
  GradedSymPoly divide_by_variable_sum() const;

  /// Applies x_{i} -> x_{perm[i]}.
  GradedSymPoly permuted(std::span<const int> perm) const;
  bool is_symmetric() const;

  /// "d1,...,dn -> num/den" per line, sorted by total degree then lexicographically.
  std::string dump() const;

 private:
  void check_arity(const GradedSymPoly& other) const;
  bool within_cap(const Exponents& e) const;

  int nvars_;
  std::optional<int> cap_;
  TermMap terms_;
};

int total_degree(const Exponents& e);

}  // namespace tau
