#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mls {

// Exact ratio of two 64-bit integers, stored reduced with a positive
// denominator. Comparisons cross-multiply in 128 bits, so checks against
// bound expressions like 2 - 1/m never go through floating point.
class Rational {
 public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  // Strict inverse of str(): "<num>/<den>".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("expected \"<num>/<den>\", got \"" + std::string(text) + "\"");
  const std::string num_part(text.substr(0, slash));
  const std::string den_part(text.substr(slash + 1));
  std::size_t used = 0;
  const std::int64_t num = std::stoll(num_part, &used);
  if (used != num_part.size()) throw std::invalid_argument("bad rational numerator: " + num_part);
  const std::int64_t den = std::stoll(den_part, &used);
  if (used != den_part.size()) throw std::invalid_argument("bad rational denominator: " + den_part);
  return Rational(num, den);
}

}  // namespace mls
