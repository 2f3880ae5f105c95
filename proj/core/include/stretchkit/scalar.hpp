#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace stretchkit {

enum class ScalarKind { ComplexFloat, GaussianRational };

std::string_view to_string(ScalarKind kind);

/// Exact complex rational re + i*im. Both parts are kept canonical by GMP.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Parses "p/q", "p" or "-p/q"; the result is canonical. Throws ParseError.
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& q);

/// A field element: either an approximate complex double or an exact
/// Gaussian rational. Binary arithmetic between different kinds throws
/// ScalarKindError.
class Scalar {
 public:
  Scalar() : value_(std::complex<double>{}) {}
  explicit Scalar(std::complex<double> z) : value_(z) {}
  explicit Scalar(GaussianRational q) : value_(std::move(q)) {}

  static Scalar complex(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }
  static Scalar rational(mpq_class re, mpq_class im = 0);
  static Scalar rational(long num, long den = 1);
  static Scalar from_int(ScalarKind kind, long value);
  static Scalar zero(ScalarKind kind) { return from_int(kind, 0); }
  static Scalar one(ScalarKind kind) { return from_int(kind, 1); }

  ScalarKind kind() const {
    return std::holds_alternative<GaussianRational>(value_) ? ScalarKind::GaussianRational
                                                            : ScalarKind::ComplexFloat;
  }
  bool is_exact() const { return kind() == ScalarKind::GaussianRational; }
  bool is_zero() const;

  const std::complex<double>& as_complex() const;
  const GaussianRational& as_rational() const;

  /// Approximate value regardless of kind (exact values are rounded).
  std::complex<double> to_complex() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Division by zero throws std::domain_error for both kinds.
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  Scalar conj() const;
  /// |z|^2, same kind as *this.
  Scalar norm2() const;

  /// Exact comparison. Values of different kinds are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for canonical sorting: kind, then re, then im.
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<std::complex<double>, GaussianRational> value_;
};

void require_same_kind(const Scalar& a, const Scalar& b);
void require_same_kind(ScalarKind a, ScalarKind b);

/// |a-b| <= max(abs_floor, rel * max(|a|,|b|)). Exact kinds compare exactly.
bool approx_equal(const Scalar& a, const Scalar& b, double rel = 1e-9, double abs_floor = 1e-12);

}  // namespace stretchkit
