#include "doctest.h"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "bsconf/errors.hpp"
#include "bsconf/wreath.hpp"

using namespace bsconf;

namespace {

  using Poly = std::map<int, long>;

  Poly to_map(LaurentPoly const& p) {
    Poly m;
    for (auto const& [d, c] : p.terms()) {
      m[d] = c;
    }
    return m;
  }

  // Naive level construction on coefficient maps.
  std::vector<std::set<Poly>> qi_oracle(int i, int steps, int max_deg, long max_coeff,
                                        std::size_t max_terms) {
    auto ok = [&](Poly const& p) {
      if (p.size() > max_terms) {
        return false;
      }
      for (auto const& [d, c] : p) {
        if (d > max_deg || std::labs(c) > max_coeff) {
          return false;
        }
      }
      return true;
    };
    std::vector<std::set<Poly>> levels(1);
    for (int d = 0; d <= max_deg; ++d) {
      levels[0].insert(Poly{{d, 1}});
      levels[0].insert(Poly{{d, -1}});
    }
    for (int r = 0; r < steps; ++r) {
      auto next = levels.back();
      for (auto const& p : levels.back()) {
        for (auto const& q : levels.back()) {
          Poly s;
          for (auto const& [d, c] : p) {
            s[d + i] += c;
          }
          for (auto const& [d, c] : q) {
            s[d + i] += c;
          }
          std::erase_if(s, [](auto const& kv) { return kv.second == 0; });
          if (ok(s)) {
            next.insert(s);
          }
        }
      }
      levels.push_back(std::move(next));
    }
    return levels;
  }

}  // namespace

TEST_CASE("LaurentPoly basics") {
  LaurentPoly p({{2, 3}, {-1, 1}, {2, -3}, {0, 0}});
  CHECK(p.terms().size() == 1);
  CHECK(p.min_degree() == -1);
  CHECK(p == LaurentPoly::monomial(1, -1));
  auto q = LaurentPoly::monomial(-2, 6) + LaurentPoly::monomial(1, 1);
  CHECK(q.to_string() == "-2x^6 + x");
  CHECK(shift(q, 2).coeff(8) == -2);
  CHECK((q - q).is_zero());
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::monomial(1, 0).to_string() == "1");
  CHECK((-q).max_abs_coeff() == 2);
}

TEST_CASE("generate_qi matches a naive construction") {
  struct Case {
    int      i, steps;
    QiBounds b;
  };
  for (auto c : {Case{1, 2, {4, 8, 2}}, Case{1, 3, {5, 16, 3}}, Case{2, 3, {8, 16, 2}}, Case{3, 2, {9, 8, 2}}}) {
    auto T   = generate_qi(c.i, c.steps, c.b);
    auto ref = qi_oracle(c.i, c.steps, c.b.max_degree, c.b.max_coeff, c.b.max_terms);
    REQUIRE(T.levels.size() == ref.size());
    for (std::size_t r = 0; r < ref.size(); ++r) {
      std::set<Poly> got;
      for (auto const& p : T.levels[r]) {
        got.insert(to_map(p));
      }
      CHECK(got == ref[r]);
    }
  }
  CHECK_THROWS_AS(generate_qi(0, 1, {}), InvalidPair);
}

TEST_CASE("Q^i contains 1, 2x^i, 4x^2i, 8x^3i") {
  for (int i = 1; i <= 3; ++i) {
    auto T = generate_qi(i, 3, {3 * i + 1, 16, 2});
    for (int r = 0; r <= 3; ++r) {
      CHECK(T.levels[r].count(LaurentPoly::monomial(std::int64_t{1} << r, r * i)));
    }
    for (auto const& p : T.levels[0]) {
      CHECK(p.max_abs_coeff() == 1);
    }
  }
}

TEST_CASE("check_qi_facts: i = 2 reaches 8x^6 at level 3") {
  auto T   = generate_qi(2, 3, {11, 32, 2});
  auto rep = check_qi_facts(T, false);
  REQUIRE(rep.max_coeff.size() == 4);
  CHECK(rep.max_coeff[3] == 8);
  CHECK(rep.max_attained[3]);
  CHECK(T.levels[3].count(LaurentPoly::monomial(8, 6)));
  CHECK(rep.coeff_bound);
  CHECK(rep.no_negative_degrees);
  CHECK(rep.per_degree_bound);
}

TEST_CASE("check_qi_facts: confining properties of the truncations") {
  for (int i = 1; i <= 3; ++i) {
    auto rep = check_qi_facts(generate_qi(i, 4, {5 * i + 1, 32, 2}), false);
    CHECK(rep.symmetric);
    CHECK(rep.alpha_closed);
    CHECK(rep.one_not_in_alpha);
    CHECK(rep.no_negative_degrees);
    CHECK(rep.coeff_bound);
    CHECK(rep.per_degree_bound);
    for (std::size_t r = 0; r < rep.max_attained.size(); ++r) {
      CHECK(rep.max_attained[r]);
    }
  }
}

TEST_CASE("check_qi_facts: i = 1, all generated levels pass (i)-(iii)") {
  auto T   = generate_qi(1, 4, {6, 32, 2});
  auto rep = check_qi_facts(T, false);
  CHECK(rep.no_negative_degrees);
  CHECK(rep.new_degree_bound);
  CHECK(rep.coeff_bound);
  CHECK(rep.all_hold());
  CHECK_NOTHROW(check_qi_facts(T));
}

TEST_CASE("new members of level r can have degrees below r i") {
  // 1 is in level 0, -2x^5 = x(-x^4 - x^4) is in level 1, so x(-2x^5 + 1) is new at level 2.
  auto one   = LaurentPoly::monomial(1, 0);
  auto m2x5  = LaurentPoly::monomial(-2, 5);
  auto T     = generate_qi(1, 2, {6, 32, 2});
  auto witness = shift(m2x5 + one, 1);
  CHECK(T.levels[0].count(one));
  CHECK(T.levels[1].count(m2x5));
  CHECK(T.levels[2].count(witness));
  CHECK_FALSE(T.levels[1].count(witness));
  CHECK(witness.min_degree() < 2);
  CHECK_THROWS_AS(check_qi_facts(T), FactViolation);

  auto first_level = [](QiTruncation const& Q, LaurentPoly const& p) {
    for (std::size_t r = 0; r < Q.levels.size(); ++r) {
      if (Q.levels[r].count(p)) {
        return static_cast<int>(r);
      }
    }
    return -1;
  };
  auto T2 = generate_qi(2, 3, {11, 32, 2});
  auto w2 = LaurentPoly::monomial(2, 9) + LaurentPoly::monomial(-1, 3);
  int  r2 = first_level(T2, w2);
  CHECK(r2 >= 1);
  CHECK(w2.min_degree() < 2 * r2);
  auto T3 = generate_qi(3, 3, {16, 32, 2});
  auto w3 = LaurentPoly::monomial(-2, 7) + LaurentPoly::monomial(1, 3);
  int  r3 = first_level(T3, w3);
  CHECK(r3 >= 1);
  CHECK(w3.min_degree() < 3 * r3);
}

TEST_CASE("separation_bound") {
  for (int j = 2; j <= 4; ++j) {
    for (int i = 1; i < j; ++i) {
      for (int r = 0; r <= 20; ++r) {
        auto b = separation_bound(r, i, j);
        CHECK(std::abs(b.derivative_at_k_star) < 1e-9);
        CHECK(b.k_star == doctest::Approx((j - i) * r - j * std::log2(j) - j));
        // direct scan
        long best = -1;
        for (int k = 0; k <= (j - i) * r + 64; ++k) {
          double e = std::max(0.0, std::ceil((1.0 - double(i) / j) * r - double(k) / j - 1e-12));
          long   v = 2L * k + (1L << static_cast<int>(e));
          if (best < 0 || v < best) {
            best = v;
          }
        }
        CHECK(b.length_lower_bound == best);
      }
    }
  }
  CHECK(separation_bound(0, 1, 2).length_lower_bound == 1);
  auto b = separation_bound(10, 1, 2);
  CHECK(b.k_star == doctest::Approx(6.0));
  CHECK(b.f_min == doctest::Approx(16.0));
  CHECK(std::abs(b.f_min - b.length_lower_bound) <= 2);
  CHECK_THROWS_AS(separation_bound(3, 2, 2), InvalidPair);
  CHECK_THROWS_AS(separation_bound(3, 3, 2), InvalidPair);
  CHECK_THROWS_AS(separation_bound(3, 0, 2), InvalidPair);
}

TEST_CASE("wreath word lengths") {
  for (int i = 1; i <= 2; ++i) {
    auto T = generate_qi(i, 4, {4 * i + 1, 16, 2});
    CHECK(wreath_word_length({LaurentPoly(), 0}, T, 2) == 0);
    CHECK(wreath_word_length({LaurentPoly(), 2}, T, 3) == 2);
    for (int r = 0; r <= 4; ++r) {
      CHECK(wreath_word_length({LaurentPoly::monomial(std::int64_t{1} << r, r * i), 0}, T, 2) == 1);
    }
  }
  auto      T = generate_qi(1, 1, {2, 4, 1});
  WreathBFS bfs(T, {LaurentPoly(), LaurentPoly::monomial(1, 0)}, 2);
  CHECK_THROWS_AS(bfs.distance({LaurentPoly::monomial(3, 0), 0}), BoundTooSmall);
}

TEST_CASE("separation: lengths against Q^2 dominate the scan bound") {
  auto T      = generate_qi(2, 5, {10, 32, 2});
  auto window = monomial_window(16, 0, 6);
  int  prev   = 0;
  for (int r = 1; r <= 4; ++r) {
    auto len = wreath_word_length({LaurentPoly::monomial(std::int64_t{1} << r, r), 0}, T, 4, window);
    REQUIRE(len.has_value());
    CHECK(*len >= separation_bound(r, 1, 2).length_lower_bound);
    CHECK(*len >= prev);
    prev = *len;
  }
  std::ostringstream os;
  write_separation_csv(os, 1, T, 2, 4, window);
  CHECK(os.str().rfind("r,length,scan_bound,f_min\n", 0) == 0);
}

TEST_CASE("wreath lengths do not grow with the bounds") {
  auto window = monomial_window(8, 0, 4);
  auto small  = generate_qi(2, 3, {6, 8, 2});
  auto large  = generate_qi(2, 4, {8, 16, 2});
  for (auto const& p : window) {
    for (int k = -1; k <= 1; ++k) {
      auto a = wreath_word_length({p, k}, small, 4, window);
      auto b = wreath_word_length({p, k}, large, 4, window);
      if (a) {
        REQUIRE(b.has_value());
        CHECK(*b <= *a);
      }
    }
  }
}
