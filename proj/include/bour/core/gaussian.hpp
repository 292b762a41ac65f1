#pragma once

#include <string>
#include <utility>

#include "bour/core/rational.hpp"

namespace bour {

/// Element of Q(i). Arithmetic is exact; the real-only fast paths skip the
/// imaginary products, which dominate in the real polynomial workloads.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(ExactRational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(ExactRational re, ExactRational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re) : re_(re) {}  // NOLINT(implicit)
  GaussianRational(int re) : re_(re) {}   // NOLINT(implicit)

  static GaussianRational i() { return {ExactRational(0), ExactRational(1)}; }

  const ExactRational& re() const noexcept { return re_; }
  const ExactRational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  ExactRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.is_real()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.is_real()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.is_real()) {
      re_ *= o.re_;
      if (!is_real()) im_ *= o.re_;
    } else if (is_real()) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
    } else {
      ExactRational r = re_ * o.re_ - im_ * o.im_;
      im_ = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(r);
    }
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionError("division by zero in Q(i)");
    if (o.is_real()) {
      re_ /= o.re_;
      if (!is_real()) im_ /= o.re_;
      return *this;
    }
    ExactRational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  ExactRational re_{0};
  ExactRational im_{0};
};

/// "a", "a/b", or "(a+c*i)" when the imaginary part is nonzero.
inline std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string s = "(" + to_string(z.re());
  s += sgn(z.im()) < 0 ? "-" : "+";
  s += to_string(ExactRational(abs(z.im()))) + "*i)";
  return s;
}

}  // namespace bour
