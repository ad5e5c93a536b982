#include "bsconf/bsgroup.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "bsconf/errors.hpp"

namespace bsconf {

  namespace {

    void check_base(std::uint32_t a, std::uint32_t b) {
      if (a != b) {
        throw BaseMismatch("BS(1," + std::to_string(a) + ") vs BS(1," + std::to_string(b)
                           + ")");
      }
    }

    BigInt big_pow(std::uint64_t b, int e) {
      BigInt r = 1;
      for (int i = 0; i < e; ++i) {
        r *= b;
      }
      return r;
    }

    BigInt mod_pos(BigInt const& a, BigInt const& m) {
      BigInt r = a % m;
      if (r < 0) {
        r += m;
      }
      return r;
    }

    BigInt inv_mod(BigInt const& a, BigInt const& m) {
      BigInt t = 0, nt = 1, r = m, nr = mod_pos(a, m);
      while (nr != 0) {
        BigInt q  = r / nr;
        BigInt tt = t - q * nt;
        t         = nt;
        nt        = tt;
        BigInt rr = r - q * nr;
        r         = nr;
        nr        = rr;
      }
      if (r != 1) {
        throw std::domain_error("not invertible");
      }
      return mod_pos(t, m);
    }

    // Canonical element of y + S(A) in [0, 1) scaled.
    NAryNumber canon_mod_s(NAryNumber const& y, FullIdeal const& ideal) {
      auto const n = static_cast<std::uint32_t>(ideal.n());
      int const  s = -y.frac_profile().place;
      if (s == 0) {
        return NAryNumber(n);
      }
      BigInt zero_part = 1;  // prod_{i in A} p_i^{n_i}
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (ideal.is_zero_component(i)) {
          zero_part *= big_pow(ideal.factors()[i].p, ideal.factors()[i].e);
        }
      }
      if (zero_part == 1) {
        return NAryNumber(n);
      }
      BigInt other = BigInt(n) / zero_part;
      BigInt Ms    = big_pow(static_cast<std::uint64_t>(zero_part), s);
      BigInt Os    = big_pow(static_cast<std::uint64_t>(other), s);
      auto   f     = y.to_fraction();  // value = numerator / n^s
      BigInt t     = mod_pos(f.numerator * inv_mod(Os, Ms), Ms);
      return NAryNumber::from_fraction(Os * t, big_pow(n, s), n);
    }

  }  // namespace

  std::string BSElement::to_string() const {
    return "(" + h.to_string() + ", " + std::to_string(k) + ")";
  }

  BSElement multiply(BSElement const& g1, BSElement const& g2) {
    check_base(g1.base(), g2.base());
    return {g1.h + shift(g2.h, g1.k), g1.k + g2.k};
  }

  BSElement inverse(BSElement const& g) {
    return {-shift(g.h, -g.k), -g.k};
  }

  BSElement evaluate(std::vector<Letter> const& word, std::uint32_t n) {
    auto g = BSElement::identity(n);
    for (auto const& l : word) {
      if (auto const* t = std::get_if<TLetter>(&l)) {
        g = multiply(g, BSElement::t(n, t->sign));
      } else {
        g = multiply(g, BSElement::a(std::get<NAryNumber>(l)));
      }
    }
    return g;
  }

  BSElement NormalForm::element() const {
    return {shift(x, -r), s - r};
  }

  NormalForm normal_form(std::vector<Letter> const& word, std::uint32_t n) {
    int r = 0, s = 0;
    for (auto const& l : word) {
      if (auto const* t = std::get_if<TLetter>(&l)) {
        (t->sign > 0 ? s : r) += 1;
      }
    }
    auto g = evaluate(word, n);
    return {r, shift(g.h, r), s};
  }

  int word_length_exact(BSElement const& g, IdealSpec const& ideal) {
    if (g.base() != ideal.n()) {
      throw BaseMismatch("element of BS(1," + std::to_string(g.base())
                         + ") against an ideal of Z_" + std::to_string(ideal.n()));
    }
    if (g.h.is_zero()) {
      return std::abs(g.k);
    }
    auto const S = ConfiningSet::s_of(ideal);
    int        r = std::max(0, -g.k);
    while (!q_contains(S, shift(g.h, r))) {
      ++r;
    }
    return 2 * r + g.k + 1;
  }

  int word_length_exact(BSElement const& g, FullIdeal const& ideal) {
    return word_length_exact(g, ideal.to_spec());
  }

  ////////////////////////////////////////////////////////////////////////
  // WindowBFS
  ////////////////////////////////////////////////////////////////////////

  WindowBFS::WindowBFS(ConfiningSet const& Q, std::vector<NAryNumber> window, int radius)
      : _radius(radius) {
    if (radius < 0) {
      throw BoundTooSmall("negative radius");
    }
    for (auto& h : window) {
      if (h.base() != Q.n()) {
        throw BaseMismatch("window element " + h.to_string());
      }
      if (std::find(_window.begin(), _window.end(), h) == _window.end()) {
        _window.push_back(std::move(h));
      }
    }
    auto zero = std::find(_window.begin(), _window.end(), NAryNumber(Q.n()));
    if (zero == _window.end()) {
      _window.insert(_window.begin(), NAryNumber(Q.n()));
    } else {
      std::rotate(_window.begin(), zero, zero + 1);
    }

    std::size_t const W  = _window.size();
    int const         Kc = 2 * radius + 1;
    // adj[k + radius][i]: window indices j with alpha^{-k}(h_j - h_i) in Q.
    std::vector<std::vector<std::vector<std::size_t>>> adj(
        Kc, std::vector<std::vector<std::size_t>>(W));
    for (std::size_t i = 0; i < W; ++i) {
      for (std::size_t j = i + 1; j < W; ++j) {
        auto d = _window[j] - _window[i];
        for (int k = -radius; k <= radius; ++k) {
          auto x = shift(d, -k);
          if (q_contains(Q, x)) {
            adj[k + radius][i].push_back(j);
          }
          if (q_contains(Q, -x)) {
            adj[k + radius][j].push_back(i);
          }
        }
      }
    }

    _dist.assign(W * Kc, -1);
    _parent.assign(W * Kc, -1);
    std::deque<std::pair<std::size_t, int>> queue;
    _dist[state(0, 0)] = 0;
    queue.emplace_back(0, 0);
    while (!queue.empty()) {
      auto [hi, k] = queue.front();
      queue.pop_front();
      auto const from = state(hi, k);
      int const  d    = _dist[from];
      auto visit      = [&](std::size_t hj, int kj) {
        auto const to = state(hj, kj);
        if (_dist[to] < 0) {
          _dist[to]   = d + 1;
          _parent[to] = static_cast<long>(from);
          queue.emplace_back(hj, kj);
        }
      };
      for (int dk : {-1, 1}) {
        if (std::abs(k + dk) <= radius) {
          visit(hi, k + dk);
        }
      }
      for (auto hj : adj[k + radius][hi]) {
        visit(hj, k);
      }
    }
  }

  std::optional<int> WindowBFS::distance(BSElement const& g) const {
    auto it = std::find(_window.begin(), _window.end(), g.h);
    if (it == _window.end()) {
      throw BoundTooSmall("h = " + g.h.to_string() + " is outside the search window");
    }
    if (std::abs(g.k) > _radius) {
      return std::nullopt;
    }
    int d = _dist[state(static_cast<std::size_t>(it - _window.begin()), g.k)];
    if (d < 0 || d > _radius) {
      return std::nullopt;
    }
    return d;
  }

  void WindowBFS::write_trace_csv(std::ostream& os) const {
    int const Kc    = 2 * _radius + 1;
    auto      label = [&](std::size_t st) {
      return _window[st / Kc].to_string() + "|" + std::to_string(static_cast<int>(st % Kc) - _radius);
    };
    os << "state,parent,depth\n";
    std::vector<std::size_t> order;
    for (std::size_t st = 0; st < _dist.size(); ++st) {
      if (_dist[st] >= 0) {
        order.push_back(st);
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return _dist[a] < _dist[b]; });
    for (auto st : order) {
      os << label(st) << ',' << (_parent[st] < 0 ? std::string() : label(_parent[st])) << ','
         << _dist[st] << '\n';
    }
  }

  std::optional<int> word_length_bfs(BSElement const&               g,
                                     ConfiningSet const&            Q,
                                     int                            radius,
                                     std::vector<NAryNumber> const& extra_window) {
    check_base(g.base(), Q.n());
    if (std::abs(g.k) > radius) {
      return std::nullopt;
    }
    std::vector<NAryNumber> window{NAryNumber(Q.n()), g.h};
    window.insert(window.end(), extra_window.begin(), extra_window.end());
    return WindowBFS(Q, std::move(window), radius).distance(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Bass-Serre tree
  ////////////////////////////////////////////////////////////////////////

  BSElement coset_canonical(BSElement const& g, FullIdeal const& ideal) {
    check_base(g.base(), static_cast<std::uint32_t>(ideal.n()));
    auto y = canon_mod_s(shift(g.h, -g.k), ideal);
    return {shift(y, g.k), g.k};
  }

  std::vector<NAryNumber> coset_representatives(FullIdeal const& ideal, int frac_depth) {
    auto const              n = static_cast<std::uint32_t>(ideal.n());
    auto const              S = ConfiningSet::s_of(ideal);
    std::vector<NAryNumber> reps;
    for (int d = 0; d <= frac_depth; ++d) {
      auto const top = checked_pow(n, d + 1);
      auto const den = checked_pow(n, d);
      for (std::uint64_t a = 0; a < top; ++a) {
        auto x = NAryNumber::from_fraction(BigInt(a), BigInt(den), n);
        if (!q_contains(S, x)) {
          continue;
        }
        bool fresh = std::none_of(reps.begin(), reps.end(), [&](NAryNumber const& y) {
          return q_contains(S, shift(x - y, -1));
        });
        if (fresh) {
          reps.push_back(std::move(x));
        }
      }
    }
    return reps;
  }

  bool TreeBall::is_tree() const {
    return non_tree_edges == 0 && edges.size() + 1 == vertices.size();
  }

  TreeBall tree_ball(FullIdeal const& ideal, int radius) {
    if (radius < 0) {
      throw BoundTooSmall("negative radius");
    }
    auto const n    = static_cast<std::uint32_t>(ideal.n());
    auto const reps = coset_representatives(ideal, 1);

    TreeBall ball{ideal, radius, {}, {}, {}, {}, 0, reps.size()};
    std::unordered_map<BSElement, int, BSElementHash> id;
    std::vector<int>                                  parent;

    auto root = BSElement::identity(n);
    id.emplace(root, 0);
    ball.vertices.push_back(root);
    ball.depth.push_back(0);
    ball.degree.push_back(-1);
    parent.push_back(-1);

    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
      if (ball.depth[v] >= radius) {
        continue;
      }
      auto const g = ball.vertices[v];
      std::vector<BSElement> nbrs;
      for (auto const& x : reps) {
        nbrs.push_back(multiply(multiply(g, BSElement::a(x)), BSElement::t(n, 1)));
      }
      nbrs.push_back(multiply(g, BSElement::t(n, -1)));

      std::vector<int> seen_here;
      for (auto const& w : nbrs) {
        auto c  = coset_canonical(w, ideal);
        auto it = id.find(c);
        int  wi;
        if (it == id.end()) {
          wi = static_cast<int>(ball.vertices.size());
          id.emplace(c, wi);
          ball.vertices.push_back(c);
          ball.depth.push_back(ball.depth[v] + 1);
          ball.degree.push_back(-1);
          parent.push_back(static_cast<int>(v));
          ball.edges.emplace_back(static_cast<int>(v), wi);
        } else {
          wi = it->second;
          if (wi != parent[v] && parent[wi] != static_cast<int>(v)) {
            ++ball.non_tree_edges;
          }
        }
        if (std::find(seen_here.begin(), seen_here.end(), wi) == seen_here.end()) {
          seen_here.push_back(wi);
        }
      }
      ball.degree[v] = static_cast<int>(seen_here.size());
    }
    return ball;
  }

  std::string TreeBall::to_dot() const {
    std::ostringstream os;
    os << "graph tree {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      os << "  v" << v << " [label=\"" << vertices[v].to_string() << "\"];\n";
    }
    for (auto const& [a, b] : edges) {
      os << "  v" << a << " -- v" << b << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  nlohmann::json TreeBall::to_json() const {
    nlohmann::json j;
    j["ideal"]  = bsconf::to_json(ideal);
    j["radius"] = radius;
    j["index"]  = index;
    auto vs     = nlohmann::json::array();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      vs.push_back({{"h", vertices[v].h.to_string()},
                    {"k", vertices[v].k},
                    {"depth", depth[v]},
                    {"degree", degree[v] < 0 ? nlohmann::json(nullptr) : nlohmann::json(degree[v])}});
    }
    j["vertices"]       = std::move(vs);
    j["edges"]          = edges;
    j["non_tree_edges"] = non_tree_edges;
    j["is_tree"]        = is_tree();
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // H^2
  ////////////////////////////////////////////////////////////////////////

  HPoint h2_apply(BSElement const& g, HPoint z) {
    double nk = std::pow(static_cast<double>(g.base()), g.k);
    return {g.h.to_double() + nk * z.x, nk * z.y};
  }

  double h2_distance(HPoint a, HPoint b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * a.y * b.y));
  }

  double h2_displacement(BSElement const& g) {
    double r  = g.h.to_double();
    double nk = std::pow(static_cast<double>(g.base()), g.k);
    return 2.0 * std::asinh(0.5 * std::sqrt((r * r + (nk - 1.0) * (nk - 1.0)) / nk));
  }

  Abelianization abelianize(BSElement const& g) {
    std::uint64_t m = g.base() - 1;
    if (m == 1) {
      return {g.k, 0};
    }
    auto   f = g.h.to_fraction();
    BigInt r = f.numerator % m;
    if (r < 0) {
      r += m;
    }
    return {g.k, static_cast<std::uint64_t>(r)};
  }

}  // namespace bsconf
