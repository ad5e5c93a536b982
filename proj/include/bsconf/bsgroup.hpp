#pragma once

// BS(1,n) = H x|_alpha Z: group law, normal forms, word lengths with respect
// to Q u {t, t^-1}, Bass-Serre tree balls, the action on H^2 and the
// abelianization.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bsconf/basen.hpp"
#include "bsconf/confining.hpp"
#include "bsconf/nadic.hpp"

namespace bsconf {

  struct BSElement {
    NAryNumber h;
    int        k = 0;

    static BSElement identity(std::uint32_t n) { return {NAryNumber(n), 0}; }
    static BSElement t(std::uint32_t n, int power = 1) { return {NAryNumber(n), power}; }
    static BSElement a(NAryNumber h) { return {std::move(h), 0}; }

    std::uint32_t base() const noexcept { return h.base(); }
    std::string   to_string() const;
    bool          operator==(BSElement const&) const = default;
  };

  struct BSElementHash {
    std::size_t operator()(BSElement const& g) const noexcept {
      return g.h.hash() * 31 + std::hash<int>{}(g.k);
    }
  };

  BSElement multiply(BSElement const& g1, BSElement const& g2);
  BSElement inverse(BSElement const& g);

  // A word letter is t^{+-1} (stored as +1 / -1) or an element of H.
  struct TLetter {
    int sign = 1;
  };
  using Letter = std::variant<TLetter, NAryNumber>;

  BSElement evaluate(std::vector<Letter> const& word, std::uint32_t n);

  struct NormalForm {
    int        r;  // number of t^-1 pushed left
    NAryNumber x;
    int        s;  // number of t pushed right

    BSElement element() const;
  };

  // t^{-r} x t^{s} with r = #t^-1 and s = #t in the word.
  NormalForm normal_form(std::vector<Letter> const& word, std::uint32_t n);

  // Exact length with respect to S(a) u {t^{+-1}}.
  int word_length_exact(BSElement const& g, FullIdeal const& ideal);
  int word_length_exact(BSElement const& g, IdealSpec const& ideal);

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first search on a window of the Cayley graph
  ////////////////////////////////////////////////////////////////////////

  // Shortest paths from the identity inside the induced subgraph on
  // {(h, k) : h in window, |k| <= radius}. Generator edges join (h, k) and
  // (h', k) when alpha^{-k}(h' - h) lies in Q; t-edges change k by one.
  class WindowBFS {
   public:
    WindowBFS(ConfiningSet const& Q, std::vector<NAryNumber> window, int radius);

    std::vector<NAryNumber> const& window() const noexcept { return _window; }
    int                            radius() const noexcept { return _radius; }

    // Distance to (h, k) or nullopt when unreachable within the radius.
    // Throws BoundTooSmall when (h, k) is outside the window.
    std::optional<int> distance(BSElement const& g) const;

    // Rows "state,parent,depth" for every reached state.
    void write_trace_csv(std::ostream& os) const;

   private:
    std::size_t state(std::size_t hi, int k) const {
      return hi * static_cast<std::size_t>(2 * _radius + 1) + static_cast<std::size_t>(k + _radius);
    }
    std::vector<NAryNumber> _window;
    int                     _radius;
    std::vector<int>        _dist;
    std::vector<long>       _parent;
  };

  // Default window holds 0 and h plus the extras.
  std::optional<int> word_length_bfs(BSElement const&               g,
                                     ConfiningSet const&            Q,
                                     int                            radius,
                                     std::vector<NAryNumber> const& extra_window = {});

  ////////////////////////////////////////////////////////////////////////
  // Bass-Serre tree
  ////////////////////////////////////////////////////////////////////////

  // Canonical representative of the coset g S(a).
  BSElement coset_canonical(BSElement const& g, FullIdeal const& ideal);

  // Distinct classes of S(a) / alpha(S(a)) among candidates a / n^d with
  // 0 <= a < n^{d+1}, d <= frac_depth; deduplicated by membership tests.
  std::vector<NAryNumber> coset_representatives(FullIdeal const& ideal, int frac_depth = 1);

  struct TreeBall {
    FullIdeal                                  ideal;
    int                                        radius = 0;
    std::vector<BSElement>                     vertices;
    std::vector<int>                           depth;
    std::vector<std::pair<int, int>>           edges;
    std::vector<int>                           degree;  // distinct neighbour cosets
    int                                        non_tree_edges = 0;
    std::size_t                                index          = 0;  // [S : alpha S]

    bool is_tree() const;
    std::string    to_dot() const;
    nlohmann::json to_json() const;
  };

  TreeBall tree_ball(FullIdeal const& ideal, int radius);

  ////////////////////////////////////////////////////////////////////////
  // Hyperbolic plane and abelianization
  ////////////////////////////////////////////////////////////////////////

  struct HPoint {
    double x;
    double y;
  };

  // g . z = h + n^k z.
  HPoint h2_apply(BSElement const& g, HPoint z);
  double h2_distance(HPoint a, HPoint b);
  // d(i, g i) from the closed form.
  double h2_displacement(BSElement const& g);

  struct Abelianization {
    long          z;
    std::uint64_t m;  // residue mod n - 1
    bool          operator==(Abelianization const&) const = default;
  };

  Abelianization abelianize(BSElement const& g);

}  // namespace bsconf
