#include "bsconf/factor.hpp"

#include <limits>
#include <utility>
#include <stdexcept>
#include <string>

#include "bsconf/errors.hpp"

namespace bsconf {

  std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n < 2) {
      throw InvalidN("n must be at least 2, got " + std::to_string(n));
    }
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    if (n > 1) {
      out.push_back({n, 1});
    }
    return out;
  }

  std::uint64_t checked_pow(std::uint64_t b, int e) {
    constexpr std::uint64_t limit = std::numeric_limits<std::int64_t>::max() / 2;
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
      if (b != 0 && r > limit / b) {
        throw std::overflow_error(std::to_string(b) + "^" + std::to_string(e)
                                  + " exceeds 62 bits");
      }
      r *= b;
    }
    return r;
  }

  std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
      a %= b;
      std::swap(a, b);
    }
    return a;
  }

  int valuation(std::uint64_t x, std::uint64_t p) {
    int v = 0;
    while (x != 0 && x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }

}  // namespace bsconf
