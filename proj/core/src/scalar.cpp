#include "stretchkit/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "stretchkit/errors.hpp"

namespace stretchkit {

std::string_view to_string(ScalarKind kind) {
  return kind == ScalarKind::GaussianRational ? "gq" : "cf64";
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t start = part.front() == '-' ? 1 : 0;
    if (start == part.size()) return false;
    return std::all_of(part.begin() + start, part.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("invalid rational literal '" + std::string(text) + "'");
    return mpq_class(mpz_class(s, 10));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::rational(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  return Scalar(GaussianRational{std::move(re), std::move(im)});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(GaussianRational{std::move(q), mpq_class(0)});
}

Scalar Scalar::from_int(ScalarKind kind, long value) {
  if (kind == ScalarKind::GaussianRational) {
    return Scalar(GaussianRational{mpq_class(value), mpq_class(0)});
  }
  return Scalar(std::complex<double>(static_cast<double>(value), 0.0));
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return sgn(q->re) == 0 && sgn(q->im) == 0;
  }
  return std::get<std::complex<double>>(value_) == std::complex<double>{};
}

const std::complex<double>& Scalar::as_complex() const {
  if (const auto* z = std::get_if<std::complex<double>>(&value_)) return *z;
  throw ScalarKindError("expected a cf64 scalar, got gq");
}

const GaussianRational& Scalar::as_rational() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) return *q;
  throw ScalarKindError("expected a gq scalar, got cf64");
}

std::complex<double> Scalar::to_complex() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return {q->re.get_d(), q->im.get_d()};
  }
  return std::get<std::complex<double>>(value_);
}

void require_same_kind(ScalarKind a, ScalarKind b) {
  if (a != b) {
    throw ScalarKindError("scalar kind mismatch: " + std::string(to_string(a)) + " vs " +
                          std::string(to_string(b)));
  }
}

void require_same_kind(const Scalar& a, const Scalar& b) { require_same_kind(a.kind(), b.kind()); }

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_kind(*this, other);
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& o = std::get<GaussianRational>(other.value_);
    q->re += o.re;
    q->im += o.im;
  } else {
    std::get<std::complex<double>>(value_) += std::get<std::complex<double>>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_kind(*this, other);
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& o = std::get<GaussianRational>(other.value_);
    q->re -= o.re;
    q->im -= o.im;
  } else {
    std::get<std::complex<double>>(value_) -= std::get<std::complex<double>>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_kind(*this, other);
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& o = std::get<GaussianRational>(other.value_);
    if (sgn(q->im) == 0 && sgn(o.im) == 0) {
      q->re *= o.re;
      return *this;
    }
    mpq_class re = q->re * o.re - q->im * o.im;
    mpq_class im = q->re * o.im + q->im * o.re;
    q->re = std::move(re);
    q->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) *= std::get<std::complex<double>>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_kind(*this, other);
  if (other.is_zero()) throw std::domain_error("division by zero");
  if (auto* q = std::get_if<GaussianRational>(&value_)) {
    const auto& o = std::get<GaussianRational>(other.value_);
    if (sgn(q->im) == 0 && sgn(o.im) == 0) {
      q->re /= o.re;
      return *this;
    }
    const mpq_class denom = o.re * o.re + o.im * o.im;
    mpq_class re = (q->re * o.re + q->im * o.im) / denom;
    mpq_class im = (q->im * o.re - q->re * o.im) / denom;
    q->re = std::move(re);
    q->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) /= std::get<std::complex<double>>(other.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return Scalar(GaussianRational{-q->re, -q->im});
  }
  return Scalar(-std::get<std::complex<double>>(value_));
}

Scalar Scalar::conj() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return Scalar(GaussianRational{q->re, -q->im});
  }
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

Scalar Scalar::norm2() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    return Scalar(GaussianRational{q->re * q->re + q->im * q->im, mpq_class(0)});
  }
  return Scalar(std::complex<double>(std::norm(std::get<std::complex<double>>(value_)), 0.0));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_exact()) return a.as_rational() == b.as_rational();
  return a.as_complex() == b.as_complex();
}

namespace {

std::strong_ordering cmp_q(const mpq_class& a, const mpq_class& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering cmp_d(double a, double b) {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) {
    return a.kind() == ScalarKind::ComplexFloat ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
  }
  if (a.is_exact()) {
    const auto& x = a.as_rational();
    const auto& y = b.as_rational();
    if (auto c = cmp_q(x.re, y.re); c != 0) return c;
    return cmp_q(x.im, y.im);
  }
  const auto& x = a.as_complex();
  const auto& y = b.as_complex();
  if (auto c = cmp_d(x.real(), y.real()); c != 0) return c;
  return cmp_d(x.imag(), y.imag());
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<GaussianRational>(&value_)) {
    if (sgn(q->im) == 0) return q->re.get_str();
    std::string out = q->re.get_str();
    out += sgn(q->im) < 0 ? "-" : "+";
    mpq_class mag = abs(q->im);
    out += (mag == 1 ? std::string() : mag.get_str()) + "i";
    return out;
  }
  const auto& z = std::get<std::complex<double>>(value_);
  std::ostringstream os;
  os.precision(6);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

bool approx_equal(const Scalar& a, const Scalar& b, double rel, double abs_floor) {
  require_same_kind(a, b);
  if (a.is_exact()) return a == b;
  const auto& x = a.as_complex();
  const auto& y = b.as_complex();
  const double scale = std::max(std::abs(x), std::abs(y));
  return std::abs(x - y) <= std::max(abs_floor, rel * scale);
}

}  // namespace stretchkit
