// Copyright 2026 The genrig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <ostream>
#include <random>

#include <Eigen/Core>

namespace genrig {

/// Element of Z/pZ for a prime p < 2^63. Usable as an Eigen scalar.
template <std::uint64_t Modulus>
class ModInt {
  static_assert(Modulus > 1 && Modulus < (std::uint64_t{1} << 63));

 public:
  using rep = std::uint64_t;
  static constexpr rep modulus = Modulus;

  constexpr ModInt() = default;
  constexpr ModInt(std::int64_t v)  // NOLINT: implicit, Eigen needs Scalar(0)
      : value_(static_cast<rep>(
            v >= 0 ? static_cast<rep>(v) % Modulus
                   : Modulus - 1 - (static_cast<rep>(-(v + 1)) % Modulus))) {}
  constexpr ModInt(int v) : ModInt(static_cast<std::int64_t>(v)) {}

  static constexpr ModInt from_raw(rep v) {
    ModInt m;
    m.value_ = v;
    return m;
  }

  /// Uniform over the field, reproducible for a given engine state.
  template <typename Engine>
  static ModInt random(Engine& gen) {
    static_assert(Engine::min() == 0 &&
                  Engine::max() == std::numeric_limits<std::uint64_t>::max());
    constexpr int bits = 64 - __builtin_clzll(Modulus - 1);
    constexpr rep mask = bits >= 64 ? ~rep{0} : ((rep{1} << bits) - 1);
    while (true) {
      const rep x = static_cast<rep>(gen()) & mask;
      if (x < Modulus) return from_raw(x);
    }
  }

  constexpr rep value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  constexpr ModInt& operator+=(ModInt o) {
    value_ += o.value_;
    if (value_ >= Modulus) value_ -= Modulus;
    return *this;
  }
  constexpr ModInt& operator-=(ModInt o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + Modulus - o.value_;
    return *this;
  }
  constexpr ModInt& operator*=(ModInt o) {
    value_ = mul(value_, o.value_);
    return *this;
  }
  constexpr ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

  friend constexpr ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend constexpr ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend constexpr ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend constexpr ModInt operator/(ModInt a, ModInt b) { return a /= b; }
  constexpr ModInt operator-() const { return from_raw(value_ ? Modulus - value_ : 0); }
  friend constexpr bool operator==(ModInt a, ModInt b) = default;

  constexpr ModInt pow(std::uint64_t e) const {
    ModInt base = *this, acc = from_raw(1);
    for (; e; e >>= 1, base *= base)
      if (e & 1) acc *= base;
    return acc;
  }
  /// Fermat inverse; zero maps to zero.
  constexpr ModInt inverse() const { return pow(Modulus - 2); }

  friend std::ostream& operator<<(std::ostream& os, ModInt m) {
    return os << m.value_;
  }

 private:
  static constexpr rep mul(rep a, rep b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if constexpr (Modulus == (rep{1} << 61) - 1) {
      // Mersenne reduction.
      rep lo = static_cast<rep>(p & Modulus);
      rep hi = static_cast<rep>(p >> 61);
      rep s = lo + hi;
      if (s >= Modulus) s -= Modulus;
      return s;
    } else {
      return static_cast<rep>(p % Modulus);
    }
  }

  rep value_ = 0;
};

/// Default field: p = 2^61 - 1.
using Fp61 = ModInt<(std::uint64_t{1} << 61) - 1>;

}  // namespace genrig

namespace Eigen {

template <std::uint64_t P>
struct NumTraits<genrig::ModInt<P>> : GenericNumTraits<genrig::ModInt<P>> {
  using Real = genrig::ModInt<P>;
  using NonInteger = genrig::ModInt<P>;
  using Literal = genrig::ModInt<P>;
  using Nested = genrig::ModInt<P>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
