#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace commvar {

/// Integer polynomial in t, stored sparsely. Zero coefficients are never kept.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial monomial(int degree, std::int64_t coeff = 1);
  static IntPolynomial from_map(const std::map<int, std::int64_t>& c);

  const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coeff(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Highest degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int low_degree() const;
  std::int64_t eval(std::int64_t t) const;
  /// e.g. "1 + t^3 + 2t^4 + t^5"
  std::string to_string() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial&) const = default;

 private:
  void add_term(int degree, std::int64_t c);
  std::map<int, std::int64_t> coeffs_;
};

bool is_prime(int p);

/// 1 + t^{2p-3} (1+t) prod_{i=1}^{p-2} (1 + t^{2i-1}). Throws NotOddPrime.
IntPolynomial poincare_poly(int p);

/// Graded dimensions of the shifted exterior module, i.e. the reduced part of poincare_poly.
std::map<int, std::int64_t> a0_lambda_table(int p);

}  // namespace commvar
