#pragma once

#include <cstdint>
#include <vector>

namespace bsconf {

  struct PrimePower {
    std::uint64_t p;
    int e;
    bool operator==(PrimePower const&) const = default;
  };

  // Prime factorization of n >= 2 in ascending prime order. Throws InvalidN
  // for n < 2.
  std::vector<PrimePower> factorize(std::uint64_t n);

  // b^e, throwing std::overflow_error if the result does not fit in 63 bits.
  std::uint64_t checked_pow(std::uint64_t b, int e);

  std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

  // Multiplicative valuation: largest v with p^v | x (x != 0).
  int valuation(std::uint64_t x, std::uint64_t p);

}  // namespace bsconf
