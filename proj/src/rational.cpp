#include "qlat/rational.hpp"

#include "qlat/errors.hpp"

namespace qlat {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty number", 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw ParseError(std::string("unexpected character '") + c + "' in number", i);
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  q.canonicalize();
  return q;
}

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero scalar");
  Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
  Scalar num = a * b.conj();
  return Scalar(num.re_ / norm, num.im_ / norm);
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "i";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string out = re_.get_str();
  std::string im = imag(im_);
  if (im[0] != '-') out += '+';
  return out + im;
}

}  // namespace qlat
