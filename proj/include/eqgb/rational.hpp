// Copyright 2026 The eqgb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQGB_RATIONAL_HPP
#define EQGB_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eqgb {

/// Exact rational number. Values whose numerator and denominator fit in a
/// machine word are stored inline; larger ones fall back to GMP. Always kept
/// in lowest terms with a positive denominator, and a value is stored inline
/// whenever it fits, so equal values have equal representations.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : num_(value) {  // NOLINT: implicit by design of the arithmetic API
    if (value == kMin) set_big(mpq_class(value));
  }
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    assign(static_cast<Wide>(num), static_cast<Wide>(den));
  }
  explicit Rational(mpq_class value) {
    value.canonicalize();
    set_big(std::move(value));
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses `[+-]digits[/digits]`.
  static Rational parse(std::string_view text) {
    std::size_t i = 0;
    std::string normalized;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') normalized.push_back('-');
      ++i;
    }
    auto digits = [&](std::string& out) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out.push_back(text[i++]);
      return i > start;
    };
    if (!digits(normalized)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (i < text.size() && text[i] == '/') {
      normalized.push_back('/');
      ++i;
      std::string den;
      if (!digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      bool all_zero = den.find_first_not_of('0') == std::string::npos;
      if (all_zero) throw std::domain_error("rational with zero denominator");
      normalized += den;
    }
    if (i != text.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpq_class v(normalized, 10);
    return Rational(std::move(v));
  }

  mpq_class get() const {
    if (big_) return *big_;
    mpq_class v(num_, den_);
    return v;
  }

  /// The value as a machine integer, when it is one.
  std::optional<long> to_long() const {
    if (big_ || den_ != 1) return std::nullopt;
    return num_;
  }

  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return add(o, false); }
  Rational& operator-=(const Rational& o) { return add(o, true); }
  Rational& operator*=(const Rational& o) {
    if (big_ || o.big_) {
      set_big(mpq_class(get() * o.get()));
      return *this;
    }
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    long g1 = o.den_ == 1 ? 1 : std::gcd(num_, o.den_);
    long g2 = den_ == 1 ? 1 : std::gcd(o.num_, den_);
    Wide n = static_cast<Wide>(num_ / g1) * (o.num_ / g2);
    Wide d = static_cast<Wide>(den_ / g2) * (o.den_ / g1);
    if (n == 0) d = 1;
    if (!store_reduced(n, d)) set_big(mpq_class(get() * o.get()));
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return *this *= o.inverse();
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c;
    if (a.big_ || b.big_) {
      c = cmp(a.get(), b.get());
    } else {
      Wide x = static_cast<Wide>(a.num_) * b.den_;
      Wide y = static_cast<Wide>(b.num_) * a.den_;
      c = (x > y) - (x < y);
    }
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  std::size_t hash() const {
    if (big_) {
      const mpz_class& n = big_->get_num();
      const mpz_class& d = big_->get_den();
      std::size_t h = mpz_size(n.get_mpz_t()) ? mpz_getlimbn(n.get_mpz_t(), 0) : 0;
      h = h * 1000003u ^ static_cast<std::size_t>(sgn(n) + 1);
      return h * 1000003u ^ (mpz_size(d.get_mpz_t()) ? mpz_getlimbn(d.get_mpz_t(), 0) : 0);
    }
    std::size_t h = static_cast<std::size_t>(num_) * 0x9e3779b97f4a7c15ull;
    return h ^ (static_cast<std::size_t>(den_) + 0x7f4a7c15ull + (h << 6) + (h >> 2));
  }

 private:
  using Wide = __int128;
  static constexpr long kMin = std::numeric_limits<long>::min();

  static Wide gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    if (a <= static_cast<Wide>(std::numeric_limits<unsigned long>::max()) &&
        b <= static_cast<Wide>(std::numeric_limits<unsigned long>::max())) {
      return std::gcd(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    }
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static bool fits(Wide v) { return v > kMin && v <= std::numeric_limits<long>::max(); }

  /// Stores n/d (already in lowest terms, d > 0) inline if it fits.
  bool store_reduced(Wide n, Wide d) {
    if (!fits(n) || !fits(d)) return false;
    num_ = static_cast<long>(n);
    den_ = static_cast<long>(d);
    big_.reset();
    return true;
  }

  void assign(Wide n, Wide d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (!store_reduced(n, d)) {
      mpq_class v(static_cast<long>(n), static_cast<unsigned long>(d));
      set_big(std::move(v));
    }
  }

  Rational& add(const Rational& o, bool negate) {
    if (big_ || o.big_) {
      set_big(negate ? mpq_class(get() - o.get()) : mpq_class(get() + o.get()));
      return *this;
    }
    Wide on = negate ? -static_cast<Wide>(o.num_) : static_cast<Wide>(o.num_);
    if (den_ == o.den_) {
      Wide n = static_cast<Wide>(num_) + on;
      Wide d = den_;
      if (d != 1) {
        Wide g = gcd(n, d);
        if (g > 1) {
          n /= g;
          d /= g;
        }
      }
      if (n == 0) d = 1;
      if (!store_reduced(n, d)) set_wide(n, d);
      return *this;
    }
    long g = std::gcd(den_, o.den_);
    Wide n = static_cast<Wide>(num_) * (o.den_ / g) + on * (den_ / g);
    Wide d = static_cast<Wide>(den_) * (o.den_ / g);
    Wide h = gcd(n, d);
    if (h > 1) {
      n /= h;
      d /= h;
    }
    if (n == 0) d = 1;
    if (!store_reduced(n, d)) set_wide(n, d);
    return *this;
  }

  static mpz_class wide_to_mpz(Wide v) {
    bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
  }
  void set_wide(Wide n, Wide d) {
    mpq_class v(wide_to_mpz(n), wide_to_mpz(d));
    set_big(std::move(v));
  }

  /// Stores a canonical GMP value, demoting it to inline storage if it fits.
  void set_big(mpq_class v) {
    if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p() && v.get_num() != kMin) {
      num_ = v.get_num().get_si();
      den_ = v.get_den().get_si();
      big_.reset();
      return;
    }
    big_ = std::make_unique<mpq_class>(std::move(v));
  }

  long num_ = 0;
  long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace eqgb

template <>
struct std::hash<eqgb::Rational> {
  std::size_t operator()(const eqgb::Rational& r) const { return r.hash(); }
};

#endif  // EQGB_RATIONAL_HPP
