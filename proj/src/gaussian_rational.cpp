#include "mixedpf/gaussian_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mixedpf {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) {
    throw std::domain_error("GaussianRational: division by zero");
  }
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  mpz_class nz(n, 10);
  mpz_class dz(std::string(den), 10);
  if (dz == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(nz, dz);
  q.canonicalize();
  return q;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string imag = abs(im_) == 1 ? (sgn(im_) < 0 ? "-i" : "i") : rational_to_string(im_) + "i";
  if (sgn(re_) == 0) return imag;
  return rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return {re, im};
}

GaussianRational i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return GaussianRational(1);
    case 1:
      return {Rational(0), Rational(1)};
    case 2:
      return GaussianRational(-1);
    default:
      return {Rational(0), Rational(-1)};
  }
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace mixedpf
