#pragma once

// Membership oracles for confining subsets of H = Z[1/n], a sampled verifier
// of the confining axioms, and extraction of the ideal L(Q).

#include <memory>
#include <optional>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bsconf/basen.hpp"
#include "bsconf/nadic.hpp"

namespace bsconf {

  // Digit window for enumeration: indices -max_frac_depth .. max_int_digits-1.
  // max_nonzero_digits == 0 means no limit.
  struct EnumBound {
    int max_int_digits     = 1;
    int max_frac_depth     = 2;
    int max_nonzero_digits = 0;
  };

  class ConfiningSet;

  struct QPlus {};
  struct QMinus {};
  struct SOfIdeal {
    IdealSpec ideal;
  };
  struct Closure {
    std::shared_ptr<ConfiningSet const> base;
    std::vector<NAryNumber>             extras;  // symmetrized on construction
    int                                 K;       // alpha^K(g) lies in base for every extra
  };
  struct FiniteTruncation {
    std::unordered_set<NAryNumber, NAryHash> elements;
  };

  class ConfiningSet {
   public:
    using Variant = std::variant<QPlus, QMinus, SOfIdeal, Closure, FiniteTruncation>;

    static ConfiningSet q_plus(std::uint32_t n);
    static ConfiningSet q_minus(std::uint32_t n);
    static ConfiningSet s_of(IdealSpec ideal);
    static ConfiningSet s_of(FullIdeal const& ideal);
    // Throws ShapeMismatch if alpha^K(g) is outside base for some extra g.
    static ConfiningSet closure(ConfiningSet base, std::vector<NAryNumber> extras, int K);
    static ConfiningSet finite(std::uint32_t n, std::vector<NAryNumber> const& elements);

    std::uint32_t  n() const noexcept { return _n; }
    Variant const& kind() const noexcept { return _v; }
    std::string    name() const;

   private:
    ConfiningSet(std::uint32_t n, Variant v) : _n(n), _v(std::move(v)) {}
    std::uint32_t _n;
    Variant       _v;
  };

  // Fractional residue R_s(|x|) = sum_{1<=u<=s} x_{-u} n^{s-u}.
  BigInt fractional_residue(NAryNumber const& x, int s);

  bool q_contains(ConfiningSet const& Q, NAryNumber const& x);

  // Every canonical number whose digits lie in the window, in a fixed order
  // (by frac depth, then term count, then |value|, positive first).
  std::vector<NAryNumber> enumerate_window(std::uint32_t n, EnumBound const& bound);
  std::vector<NAryNumber> enumerate(ConfiningSet const& Q, EnumBound const& bound);

  enum class Flavor { Alpha, AlphaInverse };

  struct ConfiningReport {
    Flavor                    flavor;
    std::size_t               sample_size = 0;
    bool                      axiom_a     = false;
    std::optional<NAryNumber> axiom_a_counterexample;
    std::optional<NAryNumber> strict_witness;  // q in Q with beta^{-1}(q) outside Q
    bool                      axiom_b     = false;
    int                       max_landing = 0;
    // Least k >= 0 with beta^k(h) in Q, for the first sampled window points.
    std::vector<std::pair<NAryNumber, int>> landing;
    std::optional<int>        axiom_c_k0;
    int                       k0_bound = 0;

    bool holds() const { return axiom_a && axiom_b && axiom_c_k0.has_value(); }
  };

  nlohmann::json to_json(ConfiningReport const& r);

  ConfiningReport verify_confining(ConfiningSet const& Q,
                                   Flavor              flavor,
                                   EnumBound const&    bound,
                                   int                 k0_bound     = 4,
                                   int                 landing_cap  = 64,
                                   std::size_t         landing_keep = 32);

  // Full ideal L(Q) read off from fractional residues of sampled elements.
  // bound.max_frac_depth is raised to depth if smaller.
  FullIdeal compute_ideal_of(ConfiningSet const& Q, int depth, EnumBound bound);

}  // namespace bsconf
