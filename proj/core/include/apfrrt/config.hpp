// Copyright 2026 The apfrrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace apfrrt {

inline constexpr std::size_t kMaxDimension = 8;

/// Small fixed-capacity real vector. The tag keeps configurations (points in
/// C-space) apart from tangent vectors (differences, gradients, directions).
template <class Tag>
class BasicVector {
 public:
  BasicVector() = default;

  explicit BasicVector(std::size_t dim) : dim_(dim) {
    if (dim > kMaxDimension) throw std::invalid_argument("dimension exceeds kMaxDimension");
  }

  BasicVector(std::initializer_list<double> values) : BasicVector(values.size()) {
    std::copy(values.begin(), values.end(), data_.begin());
  }

  static BasicVector from(std::span<const double> values) {
    BasicVector v(values.size());
    std::copy(values.begin(), values.end(), v.data_.begin());
    return v;
  }

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  double& operator[](std::size_t i) noexcept {
    assert(i < dim_);
    return data_[i];
  }
  double operator[](std::size_t i) const noexcept {
    assert(i < dim_);
    return data_[i];
  }

  std::span<double> values() noexcept { return {data_.data(), dim_}; }
  std::span<const double> values() const noexcept { return {data_.data(), dim_}; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.begin() + static_cast<std::ptrdiff_t>(dim_); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.begin() + static_cast<std::ptrdiff_t>(dim_); }

  bool all_finite() const noexcept {
    return std::all_of(begin(), end(), [](double x) { return std::isfinite(x); });
  }

  friend bool operator==(const BasicVector& a, const BasicVector& b) noexcept {
    return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
  }

  BasicVector& operator+=(const BasicVector& o) noexcept {
    assert(o.dim_ == dim_);
    for (std::size_t i = 0; i < dim_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  BasicVector& operator-=(const BasicVector& o) noexcept {
    assert(o.dim_ == dim_);
    for (std::size_t i = 0; i < dim_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  BasicVector& operator*=(double s) noexcept {
    for (std::size_t i = 0; i < dim_; ++i) data_[i] *= s;
    return *this;
  }

  friend BasicVector operator+(BasicVector a, const BasicVector& b) noexcept { return a += b; }
  friend BasicVector operator-(BasicVector a, const BasicVector& b) noexcept { return a -= b; }
  friend BasicVector operator*(BasicVector a, double s) noexcept { return a *= s; }
  friend BasicVector operator*(double s, BasicVector a) noexcept { return a *= s; }
  friend BasicVector operator-(BasicVector a) noexcept { return a *= -1.0; }

 private:
  std::array<double, kMaxDimension> data_{};
  std::size_t dim_ = 0;
};

struct ConfigTag {};
struct TangentTag {};

/// A point in configuration space: (x, y) for the point robot, joint angles
/// in radians for the arm.
using Config = BasicVector<ConfigTag>;

/// A C-space displacement, gradient or direction.
using Tangent = BasicVector<TangentTag>;

inline double dot(const Tangent& a, const Tangent& b) noexcept {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Tangent& v) noexcept { return std::sqrt(dot(v, v)); }

/// Raw coordinate difference a - b, without any topology (no angle wrapping).
inline Tangent coordinate_difference(const Config& a, const Config& b) noexcept {
  assert(a.dim() == b.dim());
  Tangent d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = a[i] - b[i];
  return d;
}

/// Raw coordinate offset q + v, without clamping or wrapping.
inline Config coordinate_offset(const Config& q, const Tangent& v) noexcept {
  assert(q.dim() == v.dim());
  Config r(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) r[i] = q[i] + v[i];
  return r;
}

}  // namespace apfrrt
