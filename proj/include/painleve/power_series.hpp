#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace painleve {

// Truncated power series in one variable, fixed length. Arithmetic keeps the
// length of the left operand; everything beyond it is discarded.
class PowerSeries {
 public:
  using value_type = std::complex<double>;

  PowerSeries() = default;
  explicit PowerSeries(std::size_t n, value_type c0 = 0.0) : c_(n, 0.0) {
    if (n) c_[0] = c0;
  }
  explicit PowerSeries(std::vector<value_type> c) : c_(std::move(c)) {}

  // c0 + c1*t
  static PowerSeries linear(std::size_t n, value_type c0, value_type c1) {
    PowerSeries s(n, c0);
    if (n > 1) s.c_[1] = c1;
    return s;
  }

  std::size_t size() const noexcept { return c_.size(); }
  value_type& operator[](std::size_t i) { return c_[i]; }
  value_type operator[](std::size_t i) const { return i < c_.size() ? c_[i] : value_type(0.0); }
  const std::vector<value_type>& coeffs() const noexcept { return c_; }

  PowerSeries& operator+=(const PowerSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o[i];
    return *this;
  }
  PowerSeries& operator*=(value_type a) {
    for (auto& v : c_) v *= a;
    return *this;
  }
  PowerSeries operator-() const {
    PowerSeries r(*this);
    r *= -1.0;
    return r;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator+(PowerSeries a, value_type b) {
    if (a.size()) a.c_[0] += b;
    return a;
  }
  friend PowerSeries operator+(value_type b, PowerSeries a) { return std::move(a) + b; }
  friend PowerSeries operator-(PowerSeries a, value_type b) { return std::move(a) + (-b); }
  friend PowerSeries operator-(value_type b, const PowerSeries& a) { return (-a) + b; }
  friend PowerSeries operator*(PowerSeries a, value_type b) { return a *= b; }
  friend PowerSeries operator*(value_type b, PowerSeries a) { return a *= b; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = a.size();
    PowerSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == value_type(0.0)) continue;
      for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  // 1/s; requires s[0] != 0.
  PowerSeries reciprocal() const {
    if (c_.empty() || c_[0] == value_type(0.0))
      throw std::domain_error("reciprocal of a series with zero constant term");
    PowerSeries r(c_.size());
    r.c_[0] = 1.0 / c_[0];
    for (std::size_t n = 1; n < c_.size(); ++n) {
      value_type acc = 0.0;
      for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
      r.c_[n] = -acc * r.c_[0];
    }
    return r;
  }

  // Drops the first k coefficients (division by t^k when they vanish).
  PowerSeries shifted_down(std::size_t k) const {
    PowerSeries r(c_.size());
    for (std::size_t i = k; i < c_.size(); ++i) r.c_[i - k] = c_[i];
    return r;
  }

  value_type operator()(value_type t) const {
    value_type acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

 private:
  std::vector<value_type> c_;
};

}  // namespace painleve
