#pragma once

// Z wr Z = Z[x, 1/x] x| Z: truncations of the confining sets Q^i, their
// structural facts, and the word-length separation between Q^i and Q^j.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bsconf {

  class LaurentPoly {
   public:
    using Term = std::pair<int, std::int64_t>;  // (degree, coefficient)

    LaurentPoly() = default;
    // Zero coefficients are dropped and equal degrees merged.
    explicit LaurentPoly(std::vector<Term> terms);
    static LaurentPoly monomial(std::int64_t c, int d);

    std::vector<Term> const& terms() const noexcept { return _terms; }
    bool                     is_zero() const noexcept { return _terms.empty(); }
    int                      min_degree() const;  // 0 for zero
    int                      max_degree() const;  // 0 for zero
    std::int64_t             max_abs_coeff() const;
    std::int64_t             coeff(int d) const;
    std::string              to_string() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b);
    friend LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b);
    // Multiplication by x^j.
    friend LaurentPoly shift(LaurentPoly const& p, int j);

    bool        operator==(LaurentPoly const&) const = default;
    std::size_t hash() const noexcept;

   private:
    std::vector<Term> _terms;  // ascending degree, nonzero coefficients
  };

  LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b);
  LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b);
  LaurentPoly shift(LaurentPoly const& p, int j);

  struct LaurentHash {
    std::size_t operator()(LaurentPoly const& p) const noexcept { return p.hash(); }
  };

  using PolySet = std::unordered_set<LaurentPoly, LaurentHash>;

  struct QiBounds {
    int          max_degree = 8;
    std::int64_t max_coeff  = 32;
    int          max_terms  = 2;
  };

  struct QiTruncation {
    int                  i = 1;
    QiBounds             bounds;
    std::vector<PolySet> levels;  // levels[r] = Q^i_r within bounds

    bool within_bounds(LaurentPoly const& p) const;
    bool contains(LaurentPoly const& p) const { return levels.back().count(p) > 0; }
  };

  // Level 0 is {+-x^d : 0 <= d <= max_degree}; level r+1 adds x^i (p + q).
  QiTruncation generate_qi(int i, int steps, QiBounds const& bounds);

  struct QiFactsReport {
    int                        i = 0;
    int                        steps = 0;
    QiBounds                   bounds;
    std::vector<std::size_t>   level_sizes;
    std::vector<std::int64_t>  max_coeff;        // per level
    std::vector<bool>          max_attained;     // 2^r reached at level r
    bool                       no_negative_degrees = true;
    bool                       new_degree_bound    = true;
    bool                       coeff_bound         = true;
    bool                       per_degree_bound    = true;
    bool                       symmetric           = true;
    bool                       alpha_closed        = true;
    bool                       one_not_in_alpha    = true;
    std::vector<std::string>   violations;  // first offender per failed fact

    bool           all_hold() const;
    nlohmann::json to_json() const;
  };

  // Checks (i) no negative degrees, (ii) new members of level r have every
  // degree >= r i, (iii) coefficients at level r are <= 2^r, and the
  // per-degree bound 2^{floor(d/i)}. With throw_on_violation the first
  // offender raises FactViolation; otherwise it is recorded in the report.
  QiFactsReport check_qi_facts(QiTruncation const& T, bool throw_on_violation = true);

  struct SeparationBound {
    double k_star;
    double f_min;
    double derivative_at_k_star;
    int    length_lower_bound;
    int    scan_argmin;
  };

  SeparationBound separation_bound(int r, int i, int j);

  struct WreathElement {
    LaurentPoly p;
    int         k = 0;
  };

  // Shortest paths from the identity on {(p, k) : p in window, |k| <= radius}
  // with generators from the last level of T plus t^{+-1}.
  class WreathBFS {
   public:
    WreathBFS(QiTruncation const& T, std::vector<LaurentPoly> window, int radius);

    std::optional<int> distance(WreathElement const& g) const;  // BoundTooSmall outside window
    std::vector<LaurentPoly> const& window() const noexcept { return _window; }

   private:
    std::vector<LaurentPoly> _window;
    int                      _radius;
    std::vector<int>         _dist;
  };

  // All c x^d with 1 <= |c| <= max_abs and min_deg <= d <= max_deg, plus 0.
  std::vector<LaurentPoly> monomial_window(std::int64_t max_abs, int min_deg, int max_deg);

  std::optional<int> wreath_word_length(WreathElement const&            target,
                                        QiTruncation const&             T,
                                        int                             radius,
                                        std::vector<LaurentPoly> const& extra_window = {});

  // Rows "r,length,scan_bound,f_min" for the targets 2^r x^{r i} measured
  // against T (built for index j).
  void write_separation_csv(std::ostream&                   os,
                            int                             i,
                            QiTruncation const&             T,
                            int                             r_max,
                            int                             radius,
                            std::vector<LaurentPoly> const& window);

}  // namespace bsconf
