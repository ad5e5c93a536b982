#pragma once

// Exact arithmetic on Z[1/n] using signed, sparse base-n digit expansions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsconf {

  using BigInt = boost::multiprecision::cpp_int;

  // value = numerator / base^exponent with exponent >= 0.
  struct ScaledInteger {
    BigInt numerator;
    int    exponent;
    bool   operator==(ScaledInteger const&) const = default;
  };

  // Leading negative place p(x) and the digit c(x) found there.
  struct FracProfile {
    int           place;
    std::uint32_t digit;
    bool          operator==(FracProfile const&) const = default;
  };

  class NAryNumber {
   public:
    struct Term {
      int           index;
      std::uint32_t digit;
      bool          operator==(Term const&) const = default;
    };

    // Zero in base `base` (base >= 2).
    explicit NAryNumber(std::uint32_t base);

    static NAryNumber from_integer(BigInt const& value, std::uint32_t base);
    static NAryNumber from_fraction(BigInt const& numerator,
                                    BigInt const& denominator,
                                    std::uint32_t base);
    // Builds from explicit terms. Zero digits are dropped; digits >= base or
    // duplicate indices throw ParseError.
    static NAryNumber from_terms(std::uint32_t     base,
                                 int               sign,
                                 std::vector<Term> terms);
    // Textual form: optional sign, digits, optional radix point. For base <= 10
    // digits are characters; above 10 each digit is a decimal number and digits
    // are separated by ':' ("1:12:7.3").
    static NAryNumber parse(std::string_view text, std::uint32_t base);

    std::uint32_t base() const noexcept { return _base; }
    int           sign() const noexcept { return _sign; }
    bool          is_zero() const noexcept { return _sign == 0; }
    bool          is_integer() const noexcept {
      return _terms.empty() || _terms.front().index >= 0;
    }
    // Ascending by index, digits in [1, base-1].
    std::span<Term const> terms() const noexcept { return _terms; }
    std::uint32_t         digit(int index) const noexcept;
    // Smallest / largest index with a nonzero digit; 0 for zero.
    int min_index() const noexcept;
    int max_index() const noexcept;

    FracProfile   frac_profile() const noexcept;
    ScaledInteger to_fraction() const;
    double        to_double() const;
    std::string   to_string() const;

    NAryNumber abs() const;
    NAryNumber operator-() const;

    friend NAryNumber add(NAryNumber const& x, NAryNumber const& y);
    friend NAryNumber sub(NAryNumber const& x, NAryNumber const& y);
    friend NAryNumber shift(NAryNumber const& x, int j);

    bool operator==(NAryNumber const&) const = default;
    // Orders by value; only meaningful for equal bases.
    std::strong_ordering operator<=>(NAryNumber const& other) const;

    std::size_t hash() const noexcept;

   private:
    NAryNumber(std::uint32_t base, int sign, std::vector<Term> terms);

    std::uint32_t     _base;
    int               _sign;
    std::vector<Term> _terms;
  };

  NAryNumber add(NAryNumber const& x, NAryNumber const& y);
  NAryNumber sub(NAryNumber const& x, NAryNumber const& y);
  // Multiplication by base^j, i.e. alpha^j.
  NAryNumber shift(NAryNumber const& x, int j);

  inline NAryNumber operator+(NAryNumber const& x, NAryNumber const& y) {
    return add(x, y);
  }
  inline NAryNumber operator-(NAryNumber const& x, NAryNumber const& y) {
    return sub(x, y);
  }

  struct NAryHash {
    std::size_t operator()(NAryNumber const& x) const noexcept {
      return x.hash();
    }
  };

}  // namespace bsconf
