#include "bsconf/wreath.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "bsconf/errors.hpp"

namespace bsconf {

  ////////////////////////////////////////////////////////////////////////
  // LaurentPoly
  ////////////////////////////////////////////////////////////////////////

  LaurentPoly::LaurentPoly(std::vector<Term> terms) {
    std::map<int, std::int64_t> m;
    for (auto const& [d, c] : terms) {
      m[d] += c;
    }
    for (auto const& [d, c] : m) {
      if (c != 0) {
        _terms.emplace_back(d, c);
      }
    }
  }

  LaurentPoly LaurentPoly::monomial(std::int64_t c, int d) {
    LaurentPoly p;
    if (c != 0) {
      p._terms.emplace_back(d, c);
    }
    return p;
  }

  int LaurentPoly::min_degree() const {
    return _terms.empty() ? 0 : _terms.front().first;
  }

  int LaurentPoly::max_degree() const {
    return _terms.empty() ? 0 : _terms.back().first;
  }

  std::int64_t LaurentPoly::max_abs_coeff() const {
    std::int64_t m = 0;
    for (auto const& t : _terms) {
      m = std::max(m, std::abs(t.second));
    }
    return m;
  }

  std::int64_t LaurentPoly::coeff(int d) const {
    for (auto const& t : _terms) {
      if (t.first == d) {
        return t.second;
      }
    }
    return 0;
  }

  std::string LaurentPoly::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::string s;
    for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
      auto [d, c] = *it;
      if (s.empty()) {
        s += c < 0 ? "-" : "";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      auto a = std::abs(c);
      if (d == 0) {
        s += std::to_string(a);
        continue;
      }
      if (a != 1) {
        s += std::to_string(a);
      }
      s += "x";
      if (d != 1) {
        s += "^" + std::to_string(d);
      }
    }
    return s;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p._terms) {
      t.second = -t.second;
    }
    return p;
  }

  LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly out;
    auto const& x = a._terms;
    auto const& y = b._terms;
    out._terms.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out._terms.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out._terms.push_back(y[j++]);
      } else {
        auto c = x[i].second + y[j].second;
        if (c != 0) {
          out._terms.emplace_back(x[i].first, c);
        }
        ++i;
        ++j;
      }
    }
    return out;
  }

  LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b) {
    return a + (-b);
  }

  LaurentPoly shift(LaurentPoly const& p, int j) {
    LaurentPoly out = p;
    for (auto& t : out._terms) {
      t.first += j;
    }
    return out;
  }

  std::size_t LaurentPoly::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto const& [d, c] : _terms) {
      h ^= static_cast<std::size_t>(d) * 0x9e3779b97f4a7c15ULL;
      h *= 0x100000001b3ULL;
      h ^= static_cast<std::size_t>(c) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Q^i
  ////////////////////////////////////////////////////////////////////////

  bool QiTruncation::within_bounds(LaurentPoly const& p) const {
    return static_cast<int>(p.terms().size()) <= bounds.max_terms
           && p.max_degree() <= bounds.max_degree && p.max_abs_coeff() <= bounds.max_coeff;
  }

  QiTruncation generate_qi(int i, int steps, QiBounds const& bounds) {
    if (i < 1) {
      throw InvalidPair("index i must be at least 1");
    }
    QiTruncation T;
    T.i      = i;
    T.bounds = bounds;
    PolySet level0;
    for (int d = 0; d <= bounds.max_degree; ++d) {
      level0.insert(LaurentPoly::monomial(1, d));
      level0.insert(LaurentPoly::monomial(-1, d));
    }
    T.levels.push_back(std::move(level0));

    std::vector<LaurentPoly> delta(T.levels[0].begin(), T.levels[0].end());
    for (int r = 0; r < steps; ++r) {
      auto const&              cur = T.levels.back();
      std::vector<LaurentPoly> all(cur.begin(), cur.end());
      PolySet                  next = cur;
      std::vector<LaurentPoly> fresh;
      for (auto const& p : delta) {
        for (auto const& q : all) {
          auto c = shift(p + q, i);
          if (T.within_bounds(c) && !next.count(c)) {
            next.insert(c);
            fresh.push_back(std::move(c));
          }
        }
      }
      T.levels.push_back(std::move(next));
      delta = std::move(fresh);
    }
    return T;
  }

  bool QiFactsReport::all_hold() const {
    return no_negative_degrees && new_degree_bound && coeff_bound && per_degree_bound
           && symmetric && alpha_closed && one_not_in_alpha
           && std::all_of(max_attained.begin(), max_attained.end(), [](bool b) { return b; });
  }

  nlohmann::json QiFactsReport::to_json() const {
    nlohmann::json j;
    j["i"]      = i;
    j["steps"]  = steps;
    j["bounds"] = {{"max_degree", bounds.max_degree},
                   {"max_coeff", bounds.max_coeff},
                   {"max_terms", bounds.max_terms}};
    j["level_sizes"]         = level_sizes;
    j["max_coeff"]           = max_coeff;
    j["max_attained"]        = max_attained;
    j["no_negative_degrees"] = no_negative_degrees;
    j["new_degree_bound"]    = new_degree_bound;
    j["coeff_bound"]         = coeff_bound;
    j["per_degree_bound"]    = per_degree_bound;
    j["symmetric"]           = symmetric;
    j["alpha_closed"]        = alpha_closed;
    j["one_not_in_alpha"]    = one_not_in_alpha;
    j["violations"]          = violations;
    j["all_hold"]            = all_hold();
    return j;
  }

  QiFactsReport check_qi_facts(QiTruncation const& T, bool throw_on_violation) {
    QiFactsReport rep;
    rep.i      = T.i;
    rep.steps  = static_cast<int>(T.levels.size()) - 1;
    rep.bounds = T.bounds;
    auto fail  = [&](bool& flag, std::string const& what, LaurentPoly const& p, std::size_t r) {
      auto msg = what + " at level " + std::to_string(r) + ": " + p.to_string();
      if (throw_on_violation) {
        throw FactViolation(msg);
      }
      if (flag) {
        rep.violations.push_back(msg);
      }
      flag = false;
    };

    for (std::size_t r = 0; r < T.levels.size(); ++r) {
      auto const&  L     = T.levels[r];
      std::int64_t bound = std::int64_t{1} << r;
      std::int64_t top   = 0;
      rep.level_sizes.push_back(L.size());
      for (auto const& p : L) {
        if (!p.is_zero() && p.min_degree() < 0) {
          fail(rep.no_negative_degrees, "negative degree", p, r);
        }
        if (r > 0 && !T.levels[r - 1].count(p) && !p.is_zero()
            && p.min_degree() < static_cast<int>(r) * T.i) {
          fail(rep.new_degree_bound, "new element below degree " + std::to_string(r * T.i), p,
               r);
        }
        top = std::max(top, p.max_abs_coeff());
        for (auto const& [d, c] : p.terms()) {
          if (d >= 0 && std::abs(c) > (std::int64_t{1} << (d / T.i))) {
            fail(rep.per_degree_bound,
                 "coefficient of x^" + std::to_string(d) + " above 2^" + std::to_string(d / T.i),
                 p, r);
            break;
          }
        }
        if (!L.count(-p)) {
          rep.symmetric = false;
        }
        auto ap = shift(p, 1);
        if (T.within_bounds(ap) && !L.count(ap)) {
          rep.alpha_closed = false;
        }
      }
      if (top > bound) {
        for (auto const& p : L) {
          if (p.max_abs_coeff() == top) {
            fail(rep.coeff_bound, "coefficient above 2^" + std::to_string(r), p, r);
            break;
          }
        }
      }
      rep.max_coeff.push_back(top);
      rep.max_attained.push_back(top == bound);
    }
    // 1 is in alpha(Q^i) iff x^{-1} is in Q^i.
    rep.one_not_in_alpha = T.levels.front().count(LaurentPoly::monomial(1, 0)) > 0
                           && !T.levels.back().count(LaurentPoly::monomial(1, -1));
    return rep;
  }

  SeparationBound separation_bound(int r, int i, int j) {
    if (i < 1 || i >= j) {
      throw InvalidPair("need 1 <= i < j, got (" + std::to_string(i) + ", "
                        + std::to_string(j) + ")");
    }
    if (r < 0) {
      throw InvalidPair("r must be nonnegative");
    }
    double const jd = j;
    double const id = i;
    auto         f  = [&](double k) { return 2 * k + std::exp2((1 - id / jd) * r - k / jd); };

    SeparationBound out{};
    out.k_star               = (j - i) * static_cast<double>(r) - jd * std::log2(jd) - jd;
    out.f_min                = f(out.k_star);
    out.derivative_at_k_star = 2 - (1 / jd) * std::exp2((1 - id / jd) * r - out.k_star / jd);

    // min over integers k >= 0 of 2k + 2^{max(0, ceil(((j-i) r - k) / j))}
    long best = -1;
    int  arg  = 0;
    for (int k = 0; best < 0 || 2L * k < best; ++k) {
      long num = static_cast<long>(j - i) * r - k;
      long e   = num > 0 ? (num + j - 1) / j : -((-num) / j);
      e        = std::max(0L, e);
      long v   = 2L * k + (e >= 62 ? (1L << 62) : (1L << e));
      if (best < 0 || v < best) {
        best = v;
        arg  = k;
      }
    }
    out.length_lower_bound = static_cast<int>(best);
    out.scan_argmin        = arg;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // BFS
  ////////////////////////////////////////////////////////////////////////

  WreathBFS::WreathBFS(QiTruncation const& T, std::vector<LaurentPoly> window, int radius)
      : _radius(radius) {
    if (radius < 0) {
      throw BoundTooSmall("negative radius");
    }
    _window.push_back(LaurentPoly());
    for (auto& p : window) {
      if (std::find(_window.begin(), _window.end(), p) == _window.end()) {
        _window.push_back(std::move(p));
      }
    }
    std::size_t const W  = _window.size();
    int const         Kc = 2 * radius + 1;
    std::vector<std::vector<std::vector<std::size_t>>> adj(
        Kc, std::vector<std::vector<std::size_t>>(W));
    for (std::size_t a = 0; a < W; ++a) {
      for (std::size_t b = a + 1; b < W; ++b) {
        auto d = _window[b] - _window[a];
        if (static_cast<int>(d.terms().size()) > T.bounds.max_terms) {
          continue;
        }
        for (int k = -radius; k <= radius; ++k) {
          auto x = shift(d, -k);
          if (T.contains(x)) {
            adj[k + radius][a].push_back(b);
          }
          if (T.contains(-x)) {
            adj[k + radius][b].push_back(a);
          }
        }
      }
    }
    auto state = [&](std::size_t hi, int k) { return hi * Kc + static_cast<std::size_t>(k + radius); };
    _dist.assign(W * Kc, -1);
    std::deque<std::pair<std::size_t, int>> queue{{0, 0}};
    _dist[state(0, 0)] = 0;
    while (!queue.empty()) {
      auto [hi, k] = queue.front();
      queue.pop_front();
      int const d     = _dist[state(hi, k)];
      auto      visit = [&](std::size_t hj, int kj) {
        if (_dist[state(hj, kj)] < 0) {
          _dist[state(hj, kj)] = d + 1;
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

  std::optional<int> WreathBFS::distance(WreathElement const& g) const {
    auto it = std::find(_window.begin(), _window.end(), g.p);
    if (it == _window.end()) {
      throw BoundTooSmall(g.p.to_string() + " is outside the search window");
    }
    if (std::abs(g.k) > _radius) {
      return std::nullopt;
    }
    auto hi = static_cast<std::size_t>(it - _window.begin());
    int  d  = _dist[hi * (2 * _radius + 1) + static_cast<std::size_t>(g.k + _radius)];
    if (d < 0) {
      return std::nullopt;
    }
    return d;
  }

  std::vector<LaurentPoly> monomial_window(std::int64_t max_abs, int min_deg, int max_deg) {
    std::vector<LaurentPoly> out{LaurentPoly()};
    for (int d = min_deg; d <= max_deg; ++d) {
      for (std::int64_t c = 1; c <= max_abs; ++c) {
        out.push_back(LaurentPoly::monomial(c, d));
        out.push_back(LaurentPoly::monomial(-c, d));
      }
    }
    return out;
  }

  std::optional<int> wreath_word_length(WreathElement const&            target,
                                        QiTruncation const&             T,
                                        int                             radius,
                                        std::vector<LaurentPoly> const& extra_window) {
    if (std::abs(target.k) > radius) {
      return std::nullopt;
    }
    std::vector<LaurentPoly> window{target.p};
    window.insert(window.end(), extra_window.begin(), extra_window.end());
    return WreathBFS(T, std::move(window), radius).distance(target);
  }

  void write_separation_csv(std::ostream&                   os,
                            int                             i,
                            QiTruncation const&             T,
                            int                             r_max,
                            int                             radius,
                            std::vector<LaurentPoly> const& window) {
    std::vector<LaurentPoly> w = window;
    for (int r = 1; r <= r_max; ++r) {
      w.push_back(LaurentPoly::monomial(std::int64_t{1} << r, r * i));
    }
    WreathBFS bfs(T, w, radius);
    os << "r,length,scan_bound,f_min\n";
    for (int r = 1; r <= r_max; ++r) {
      auto len = bfs.distance({LaurentPoly::monomial(std::int64_t{1} << r, r * i), 0});
      auto sb  = separation_bound(r, i, T.i);
      os << r << ',' << (len ? std::to_string(*len) : std::string()) << ','
         << sb.length_lower_bound << ',' << sb.f_min << '\n';
    }
  }

}  // namespace bsconf
