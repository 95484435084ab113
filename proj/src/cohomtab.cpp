#include "commvar/cohomtab.hpp"

#include <sstream>

#include "commvar/numkit.hpp"

namespace commvar {

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t coeff) {
  IntPolynomial p;
  p.add_term(degree, coeff);
  return p;
}

IntPolynomial IntPolynomial::from_map(const std::map<int, std::int64_t>& c) {
  IntPolynomial p;
  for (const auto& [d, v] : c) p.add_term(d, v);
  return p;
}

void IntPolynomial::add_term(int degree, std::int64_t c) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (c == 0) return;
  const std::int64_t v = (coeffs_[degree] += c);
  if (v == 0) coeffs_.erase(degree);
}

std::int64_t IntPolynomial::coeff(int degree) const {
  const auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

int IntPolynomial::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

int IntPolynomial::low_degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

std::int64_t IntPolynomial::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  int cur = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (; cur > it->first; --cur) acc *= t;
    acc += it->second;
  }
  for (; cur > 0; --cur) acc *= t;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    std::int64_t a = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    if (d == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << "t";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  for (const auto& [d, c] : o.coeffs_) r.add_term(d, c);
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_) r.add_term(d1 + d2, c1 * c2);
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

IntPolynomial reduced_part(int p) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::NotOddPrime, "p must be an odd prime, got " + std::to_string(p));
  const IntPolynomial one = IntPolynomial::monomial(0);
  IntPolynomial r = IntPolynomial::monomial(2 * p - 3) * (one + IntPolynomial::monomial(1));
  for (int i = 1; i <= p - 2; ++i) r = r * (one + IntPolynomial::monomial(2 * i - 1));
  return r;
}

}  // namespace

IntPolynomial poincare_poly(int p) { return IntPolynomial::monomial(0) + reduced_part(p); }

std::map<int, std::int64_t> a0_lambda_table(int p) { return reduced_part(p).coefficients(); }

}  // namespace commvar
