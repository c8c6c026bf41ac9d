#pragma once

// Exact Laurent polynomials in one variable t with arbitrary-precision
// integer coefficients, usable as an Eigen scalar.

#include <Eigen/Core>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qpsurf {

using BigInt = boost::multiprecision::cpp_int;

template <typename Coeff>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int c) : LaurentPolynomial(Coeff(c), 0) {}  // NOLINT: implicit from int for Eigen
  LaurentPolynomial(Coeff c, int exponent) : low_(exponent), coeffs_{std::move(c)} { trim(); }

  /// Coefficients of t^low, t^(low+1), ...
  static LaurentPolynomial from_coefficients(int low, std::vector<Coeff> coeffs) {
    LaurentPolynomial p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static LaurentPolynomial monomial(int exponent, Coeff c = Coeff(1)) { return {std::move(c), exponent}; }
  static LaurentPolynomial t() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff coefficient(int exponent) const {
    const int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Coeff(0);
    return coeffs_[k];
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return add_scaled(o, 1); }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return add_scaled(o, -1); }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_coefficients(a.low_ + b.low_, std::move(out));
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

  /// Multiply by t^k.
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// Substitute t -> t^{-1}.
  LaurentPolynomial reflected() const {
    if (is_zero()) return {};
    std::vector<Coeff> c(coeffs_.rbegin(), coeffs_.rend());
    return from_coefficients(-high_degree(), std::move(c));
  }

  Coeff evaluate_at_one() const {
    Coeff s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// Exact quotient a / b in Z[t, t^-1], or nullopt when b does not divide a.
  friend std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPolynomial{};
    std::vector<Coeff> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size();
    if (rem.size() < db) return std::nullopt;
    const Coeff& lead = b.coeffs_.back();
    std::vector<Coeff> quot(rem.size() - db + 1, Coeff(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Coeff& top = rem[k + db - 1];
      if (top == 0) continue;
      if (top % lead != 0) return std::nullopt;
      Coeff q = top / lead;
      for (std::size_t j = 0; j < db; ++j) rem[k + j] -= q * b.coeffs_[j];
      quot[k] = std::move(q);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Coeff& c) { return c != 0; })) return std::nullopt;
    return from_coefficients(a.low_ - b.low_, std::move(quot));
  }

  /// Representative of the class {+-t^j p}: lowest exponent 0, positive
  /// lowest coefficient. Zero stays zero.
  LaurentPolynomial canonical() const {
    if (is_zero()) return {};
    LaurentPolynomial r = shifted(-low_);
    if (r.coeffs_.front() < 0) r = -r;
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = high_degree(); e >= low_; --e) {
      const Coeff& c = coeffs_[e - low_];
      if (c == 0) continue;
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (out.empty()) out += c < 0 ? "-" : "";
      else out += c < 0 ? " - " : " + ";
      const bool unit = mag == 1 && e != 0;
      if (!unit) out += mag.str();
      if (e != 0) out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return out;
  }

 private:
  LaurentPolynomial& add_scaled(const LaurentPolynomial& o, int s) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = s > 0 ? o : -o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high_degree(), o.high_degree());
    std::vector<Coeff> out(hi - lo + 1, Coeff(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[low_ - lo + k] = coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
      if (s > 0) out[o.low_ - lo + k] += o.coeffs_[k];
      else out[o.low_ - lo + k] -= o.coeffs_[k];
    }
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_ = std::vector<Coeff>(coeffs_.begin() + first, coeffs_.begin() + last);
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

using Laurent = LaurentPolynomial<BigInt>;

template <typename Coeff>
using LaurentMatrix = Eigen::Matrix<LaurentPolynomial<Coeff>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial<Coeff>& p) {
  return os << p.to_string();
}

/// True iff p = +-t^j q for some j.
template <typename Coeff>
bool eq_up_to_units(const LaurentPolynomial<Coeff>& p, const LaurentPolynomial<Coeff>& q) {
  return p.canonical() == q.canonical();
}

/// Fraction-free (Bareiss) determinant. Every division is exact over Z[t^+-1];
/// a failed division means the input was corrupted and raises NonExactDivision.
template <typename Coeff>
LaurentPolynomial<Coeff> determinant(LaurentMatrix<Coeff> m);

}  // namespace qpsurf

namespace Eigen {
template <typename Coeff>
struct NumTraits<qpsurf::LaurentPolynomial<Coeff>> : GenericNumTraits<qpsurf::LaurentPolynomial<Coeff>> {
  using Real = qpsurf::LaurentPolynomial<Coeff>;
  using NonInteger = qpsurf::LaurentPolynomial<Coeff>;
  using Nested = qpsurf::LaurentPolynomial<Coeff>;
  using Literal = qpsurf::LaurentPolynomial<Coeff>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};
}  // namespace Eigen

#include "qpsurf/error.hpp"

namespace qpsurf {

template <typename Coeff>
LaurentPolynomial<Coeff> determinant(LaurentMatrix<Coeff> m) {
  using Poly = LaurentPolynomial<Coeff>;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::InvalidParameter, "determinant of a non-square matrix");
  if (n == 0) return Poly(1);
  Poly prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return Poly{};
      m.row(k).swap(m.row(swap));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Poly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw Error(ErrorKind::NonExactDivision, "Bareiss step did not divide exactly");
        m(i, j) = std::move(*q);
      }
      m(i, k) = Poly{};
    }
    prev = m(k, k);
  }
  Poly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace qpsurf
