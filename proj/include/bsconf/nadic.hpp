#pragma once

// Truncated n-adic integers and the ideal lattice of Z_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsconf/factor.hpp"

namespace bsconf {

  // The class phi_l(a) in Z/n^l. Residue-backed; digits are derived.
  class NAdic {
   public:
    NAdic(std::uint32_t base, int depth, std::uint64_t residue);

    // Builds from digits a_0, a_1, ... (least significant first).
    static NAdic from_digits(std::uint32_t                     base,
                             std::vector<std::uint32_t> const& digits);

    std::uint32_t base() const noexcept { return _base; }
    int           depth() const noexcept { return _depth; }
    std::uint64_t residue() const noexcept { return _residue; }
    std::uint64_t modulus() const noexcept { return _modulus; }

    std::uint32_t              digit(int i) const;
    std::vector<std::uint32_t> digits() const;
    bool                       is_unit() const;

    bool operator==(NAdic const&) const = default;

   private:
    std::uint32_t _base;
    int           _depth;
    std::uint64_t _modulus;
    std::uint64_t _residue;
  };

  // Digitwise carry recursions; agree with residue arithmetic mod n^l.
  NAdic nadic_add(NAdic const& a, NAdic const& b);
  NAdic nadic_mul(NAdic const& a, NAdic const& b);

  // phi_s(a) = a mod n^s for 1 <= s <= depth.
  std::uint64_t partial_sum(NAdic const& a, int s);

  // Component i lives in base p_i^{n_i} with the same depth.
  std::vector<NAdic> crt_split(NAdic const& a);
  NAdic              crt_join(std::vector<NAdic> const& parts, std::uint32_t base);

  // Z_{p^j} -> Z_p at finite depth: depth l becomes depth j*l.
  NAdic digit_expand(NAdic const& a);
  // Inverse of digit_expand: base p, depth j*l -> base p^j, depth l.
  NAdic digit_contract(NAdic const& a, int j);

  struct NAdicDistance {
    // d = n^{-q}; when equal_at_depth is set the inputs agree on all digits
    // and q == depth.
    int  q;
    bool equal_at_depth;
  };

  NAdicDistance metric(NAdic const& a, NAdic const& b);

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  struct IdealComponent {
    bool zero     = false;
    int  exponent = 0;  // p_i^exponent * Z_{p_i^{n_i}} when !zero

    static IdealComponent zero_ideal() { return {true, 0}; }
    static IdealComponent power(int a) { return {false, a}; }
    bool operator==(IdealComponent const&) const = default;
  };

  class IdealSpec {
   public:
    IdealSpec(std::uint64_t n, std::vector<IdealComponent> components);

    static IdealSpec whole(std::uint64_t n);
    static IdealSpec zero(std::uint64_t n);

    std::uint64_t                      n() const noexcept { return _n; }
    std::vector<PrimePower> const&     factors() const noexcept { return _factors; }
    std::vector<IdealComponent> const& components() const noexcept {
      return _components;
    }
    std::size_t size() const noexcept { return _components.size(); }

    bool operator==(IdealSpec const&) const = default;

   private:
    std::uint64_t               _n;
    std::vector<PrimePower>     _factors;
    std::vector<IdealComponent> _components;
  };

  // Full ideal: component i (1-based) is (0) iff bit i-1 of zero_mask is set,
  // otherwise the whole component ring.
  class FullIdeal {
   public:
    FullIdeal(std::uint64_t n, std::uint32_t zero_mask);
    static FullIdeal from_zero_set(std::uint64_t n, std::vector<int> const& zero_set);

    std::uint64_t                  n() const noexcept { return _n; }
    std::vector<PrimePower> const& factors() const noexcept { return _factors; }
    std::uint32_t                  zero_mask() const noexcept { return _mask; }
    std::vector<int>               zero_set() const;
    bool is_zero_component(std::size_t i) const noexcept { return (_mask >> i) & 1U; }
    std::size_t size() const noexcept { return _factors.size(); }

    IdealSpec to_spec() const;

    // Every full ideal of Z_n, ordered by mask.
    static std::vector<FullIdeal> all(std::uint64_t n);

    bool operator==(FullIdeal const&) const = default;

   private:
    std::uint64_t           _n;
    std::vector<PrimePower> _factors;
    std::uint32_t           _mask;
  };

  struct Verdict {
    enum class Kind { In, Out, ConsistentToDepth, NeedDepth };
    Kind kind;
    int  required_depth = 0;  // set for NeedDepth

    bool operator==(Verdict const&) const = default;
  };

  std::string to_string(Verdict const& v);

  Verdict ideal_contains(IdealSpec const& ideal, NAdic const& a);

  struct LeqResult {
    bool               holds;
    std::optional<int> witness_k;
  };

  // a <= b iff n^k a is contained in b for some k.
  LeqResult ideal_leq(IdealSpec const& a, IdealSpec const& b);

  // True iff n^k a is contained in b, checked componentwise.
  bool scaled_contained(IdealSpec const& a, int k, IdealSpec const& b);

  struct Normalized {
    FullIdeal full;
    int       witness_A;
  };

  Normalized full_normalize(IdealSpec const& ideal);

  nlohmann::json to_json(IdealSpec const& ideal);
  nlohmann::json to_json(FullIdeal const& ideal);
  IdealSpec      ideal_from_json(nlohmann::json const& j);

  // Parses "{1,3}" (1-based component indices).
  std::vector<int> parse_zero_set(std::string const& text);

}  // namespace bsconf
