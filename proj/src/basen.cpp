#include "bsconf/basen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "bsconf/errors.hpp"

namespace bsconf {

  namespace {

    using Terms = std::vector<NAryNumber::Term>;

    void check_base(std::uint32_t base) {
      if (base < 2) {
        throw InvalidBase("base must be at least 2, got "
                          + std::to_string(base));
      }
    }

    void check_same_base(NAryNumber const& x, NAryNumber const& y) {
      if (x.base() != y.base()) {
        throw BaseMismatch("bases " + std::to_string(x.base()) + " and "
                           + std::to_string(y.base()));
      }
    }

    // Magnitude comparison of canonical term lists.
    int cmp_mag(std::span<NAryNumber::Term const> a,
                std::span<NAryNumber::Term const> b) {
      auto ia = a.rbegin();
      auto ib = b.rbegin();
      for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (ia->index != ib->index) {
          return ia->index > ib->index ? 1 : -1;
        }
        if (ia->digit != ib->digit) {
          return ia->digit > ib->digit ? 1 : -1;
        }
      }
      if (ia != a.rend()) {
        return 1;
      }
      if (ib != b.rend()) {
        return -1;
      }
      return 0;
    }

    Terms add_mag(std::span<NAryNumber::Term const> a,
                  std::span<NAryNumber::Term const> b,
                  std::uint32_t                     n) {
      Terms         out;
      std::size_t   i = 0, j = 0;
      std::uint64_t carry = 0;
      int           last  = 0;
      out.reserve(std::max(a.size(), b.size()) + 1);
      while (i < a.size() || j < b.size() || carry != 0) {
        int idx;
        if (carry != 0) {
          idx = last + 1;
        } else if (i < a.size() && j < b.size()) {
          idx = std::min(a[i].index, b[j].index);
        } else {
          idx = i < a.size() ? a[i].index : b[j].index;
        }
        std::uint64_t s = carry;
        if (i < a.size() && a[i].index == idx) {
          s += a[i++].digit;
        }
        if (j < b.size() && b[j].index == idx) {
          s += b[j++].digit;
        }
        carry = s / n;
        if (s % n != 0) {
          out.push_back({idx, static_cast<std::uint32_t>(s % n)});
        }
        last = idx;
      }
      return out;
    }

    // |a| - |b| for |a| >= |b|.
    Terms sub_mag(std::span<NAryNumber::Term const> a,
                  std::span<NAryNumber::Term const> b,
                  std::uint32_t                     n) {
      Terms       out;
      std::size_t i = 0, j = 0;
      int         borrow = 0;
      int         last   = 0;
      out.reserve(a.size() + b.size());
      while (i < a.size() || j < b.size()) {
        int idx;
        if (borrow != 0) {
          idx = last + 1;
        } else if (i < a.size() && j < b.size()) {
          idx = std::min(a[i].index, b[j].index);
        } else {
          idx = i < a.size() ? a[i].index : b[j].index;
        }
        std::int64_t s = -borrow;
        if (i < a.size() && a[i].index == idx) {
          s += a[i++].digit;
        }
        if (j < b.size() && b[j].index == idx) {
          s -= b[j++].digit;
        }
        if (s < 0) {
          s += n;
          borrow = 1;
        } else {
          borrow = 0;
        }
        if (s != 0) {
          out.push_back({idx, static_cast<std::uint32_t>(s)});
        }
        last = idx;
      }
      return out;
    }

    Terms integer_terms(BigInt v, std::uint32_t n, int offset) {
      Terms out;
      int   idx = offset;
      while (v != 0) {
        auto d = static_cast<std::uint32_t>(v % n);
        if (d != 0) {
          out.push_back({idx, d});
        }
        v /= n;
        ++idx;
      }
      return out;
    }

    std::uint32_t parse_digit_list(std::string_view part,
                                   std::uint32_t    base,
                                   std::vector<std::uint32_t>& out) {
      if (part.empty()) {
        return 0;
      }
      if (base <= 10) {
        for (char c : part) {
          if (c < '0' || c > '9') {
            throw ParseError("unexpected character '" + std::string(1, c)
                             + "'");
          }
          out.push_back(static_cast<std::uint32_t>(c - '0'));
        }
      } else {
        std::size_t pos = 0;
        while (pos <= part.size()) {
          auto next = part.find(':', pos);
          auto tok  = part.substr(pos, next == std::string_view::npos
                                           ? std::string_view::npos
                                           : next - pos);
          std::uint32_t d   = 0;
          auto [ptr, ec]    = std::from_chars(tok.data(),
                                            tok.data() + tok.size(), d);
          if (tok.empty() || ec != std::errc{}
              || ptr != tok.data() + tok.size()) {
            throw ParseError("bad digit token '" + std::string(tok) + "'");
          }
          out.push_back(d);
          if (next == std::string_view::npos) {
            break;
          }
          pos = next + 1;
        }
      }
      for (auto d : out) {
        if (d >= base) {
          throw ParseError("digit " + std::to_string(d) + " out of range for base "
                           + std::to_string(base));
        }
      }
      return static_cast<std::uint32_t>(out.size());
    }

  }  // namespace

  NAryNumber::NAryNumber(std::uint32_t base) : _base(base), _sign(0) {
    check_base(base);
  }

  NAryNumber::NAryNumber(std::uint32_t base, int sign, std::vector<Term> terms)
      : _base(base), _sign(terms.empty() ? 0 : sign), _terms(std::move(terms)) {}

  NAryNumber NAryNumber::from_integer(BigInt const& value, std::uint32_t base) {
    check_base(base);
    int sign = value == 0 ? 0 : (value < 0 ? -1 : 1);
    return NAryNumber(base, sign, integer_terms(boost::multiprecision::abs(value), base, 0));
  }

  NAryNumber NAryNumber::from_fraction(BigInt const& numerator,
                                       BigInt const& denominator,
                                       std::uint32_t base) {
    check_base(base);
    if (denominator <= 0) {
      throw DenominatorNotSupported("denominator must be positive");
    }
    BigInt g   = gcd(numerator, denominator);
    BigInt num = numerator / g;
    BigInt den = denominator / g;
    BigInt rest = den;
    while (rest != 1) {
      BigInt h = gcd(rest, BigInt(base));
      if (h == 1) {
        throw DenominatorNotSupported(
            "denominator " + denominator.str()
            + " has a prime factor not dividing " + std::to_string(base));
      }
      rest /= h;
    }
    int    e  = 0;
    BigInt pw = 1;
    while (pw % den != 0) {
      pw *= base;
      ++e;
    }
    BigInt scaled = num * (pw / den);
    int    sign   = scaled == 0 ? 0 : (scaled < 0 ? -1 : 1);
    return NAryNumber(base, sign, integer_terms(boost::multiprecision::abs(scaled), base, -e));
  }

  NAryNumber NAryNumber::from_terms(std::uint32_t     base,
                                    int               sign,
                                    std::vector<Term> terms) {
    check_base(base);
    std::erase_if(terms, [](Term const& t) { return t.digit == 0; });
    std::sort(terms.begin(), terms.end(),
              [](Term const& a, Term const& b) { return a.index < b.index; });
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].digit >= base) {
        throw ParseError("digit out of range");
      }
      if (i > 0 && terms[i].index == terms[i - 1].index) {
        throw ParseError("duplicate digit index "
                         + std::to_string(terms[i].index));
      }
    }
    if (!terms.empty() && sign != 1 && sign != -1) {
      throw ParseError("sign must be +1 or -1 for a nonzero value");
    }
    return NAryNumber(base, sign, std::move(terms));
  }

  NAryNumber NAryNumber::parse(std::string_view text, std::uint32_t base) {
    check_base(base);
    if (text.empty()) {
      throw ParseError("empty number");
    }
    int sign = 1;
    if (text.front() == '-' || text.front() == '+') {
      sign = text.front() == '-' ? -1 : 1;
      text.remove_prefix(1);
    } else if (text.starts_with("\xE2\x88\x92")) {  // U+2212 minus sign
      sign = -1;
      text.remove_prefix(3);
    }
    auto dot = text.find('.');
    auto ip  = text.substr(0, dot);
    auto fp  = dot == std::string_view::npos ? std::string_view{}
                                             : text.substr(dot + 1);
    if (ip.empty() && fp.empty()) {
      throw ParseError("no digits in '" + std::string(text) + "'");
    }
    std::vector<std::uint32_t> idig, fdig;
    parse_digit_list(ip, base, idig);
    parse_digit_list(fp, base, fdig);
    Terms terms;
    for (std::size_t i = 0; i < fdig.size(); ++i) {
      terms.push_back({-static_cast<int>(i) - 1, fdig[i]});
    }
    for (std::size_t i = 0; i < idig.size(); ++i) {
      terms.push_back({static_cast<int>(idig.size() - 1 - i), idig[i]});
    }
    return from_terms(base, sign, std::move(terms));
  }

  std::uint32_t NAryNumber::digit(int index) const noexcept {
    auto it = std::lower_bound(
        _terms.begin(), _terms.end(), index,
        [](Term const& t, int i) { return t.index < i; });
    return it != _terms.end() && it->index == index ? it->digit : 0;
  }

  int NAryNumber::min_index() const noexcept {
    return _terms.empty() ? 0 : _terms.front().index;
  }

  int NAryNumber::max_index() const noexcept {
    return _terms.empty() ? 0 : _terms.back().index;
  }

  FracProfile NAryNumber::frac_profile() const noexcept {
    int p = std::min(0, min_index());
    return {p, digit(p)};
  }

  ScaledInteger NAryNumber::to_fraction() const {
    int    e  = -frac_profile().place;
    BigInt v  = 0;
    BigInt pw = 1;
    int    at = -e;
    for (auto const& t : _terms) {
      for (; at < t.index; ++at) {
        pw *= _base;
      }
      v += pw * t.digit;
    }
    return {_sign < 0 ? BigInt(-v) : v, e};
  }

  double NAryNumber::to_double() const {
    double v = 0;
    for (auto const& t : _terms) {
      v += t.digit * std::pow(static_cast<double>(_base), t.index);
    }
    return _sign * v;
  }

  std::string NAryNumber::to_string() const {
    if (_sign == 0) {
      return "0";
    }
    std::string out = _sign < 0 ? "-" : "";
    bool        colon = _base > 10;
    auto        put   = [&](std::uint32_t d, bool first) {
      if (colon) {
        if (!first) {
          out += ':';
        }
        out += std::to_string(d);
      } else {
        out += static_cast<char>('0' + d);
      }
    };
    int top = std::max(0, max_index());
    for (int i = top; i >= 0; --i) {
      put(digit(i), i == top);
    }
    int low = min_index();
    if (low < 0) {
      out += '.';
      for (int i = -1; i >= low; --i) {
        put(digit(i), i == -1);
      }
    }
    return out;
  }

  NAryNumber NAryNumber::abs() const {
    return NAryNumber(_base, _sign == 0 ? 0 : 1, _terms);
  }

  NAryNumber NAryNumber::operator-() const {
    return NAryNumber(_base, -_sign, _terms);
  }

  NAryNumber add(NAryNumber const& x, NAryNumber const& y) {
    check_same_base(x, y);
    if (x.is_zero()) {
      return y;
    }
    if (y.is_zero()) {
      return x;
    }
    auto n = x.base();
    if (x.sign() == y.sign()) {
      return NAryNumber(n, x.sign(), add_mag(x.terms(), y.terms(), n));
    }
    int c = cmp_mag(x.terms(), y.terms());
    if (c == 0) {
      return NAryNumber(n);
    }
    if (c > 0) {
      return NAryNumber(n, x.sign(), sub_mag(x.terms(), y.terms(), n));
    }
    return NAryNumber(n, y.sign(), sub_mag(y.terms(), x.terms(), n));
  }

  NAryNumber sub(NAryNumber const& x, NAryNumber const& y) {
    return add(x, -y);
  }

  NAryNumber shift(NAryNumber const& x, int j) {
    std::vector<NAryNumber::Term> terms(x.terms().begin(), x.terms().end());
    for (auto& t : terms) {
      t.index += j;
    }
    return NAryNumber(x.base(), x.sign(), std::move(terms));
  }

  std::strong_ordering NAryNumber::operator<=>(NAryNumber const& other) const {
    if (_sign != other._sign) {
      return _sign <=> other._sign;
    }
    int c = cmp_mag(_terms, other._terms);
    if (_sign < 0) {
      c = -c;
    }
    return c <=> 0;
  }

  std::size_t NAryNumber::hash() const noexcept {
    std::size_t h = std::hash<int>{}(_sign) ^ (_base * 0x9e3779b97f4a7c15ULL);
    for (auto const& t : _terms) {
      h ^= (static_cast<std::size_t>(t.index) * 0x100000001b3ULL + t.digit)
           + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace bsconf
