#include "bsconf/confining.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bsconf/errors.hpp"

namespace bsconf {

  namespace {

    using u128 = unsigned __int128;

    std::uint64_t pow_mod(std::uint64_t b, int e, std::uint64_t m) {
      std::uint64_t r = 1 % m;
      b %= m;
      while (e > 0) {
        if (e & 1) {
          r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % m);
        }
        b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % m);
        e >>= 1;
      }
      return r;
    }

    // R_s(x) * n^pad mod m.
    std::uint64_t padded_residue_mod(NAryNumber const& x, int s, int pad,
                                     std::uint64_t m) {
      std::uint64_t r = 0;
      for (auto const& t : x.terms()) {
        if (t.index >= 0) {
          break;
        }
        if (t.index < -s) {
          continue;
        }
        auto w = pow_mod(x.base(), s + t.index + pad, m);
        r      = static_cast<std::uint64_t>((static_cast<u128>(t.digit) * w + r) % m);
      }
      return r;
    }

    bool fits_pow(std::uint64_t p, int e) {
      try {
        checked_pow(p, e);
        return true;
      } catch (std::overflow_error const&) {
        return false;
      }
    }

    BigInt big_pow(std::uint64_t p, int e) {
      BigInt r = 1;
      for (int i = 0; i < e; ++i) {
        r *= p;
      }
      return r;
    }

    // x in S(a): the fractional residue, padded by J = max a_i trailing zeros,
    // lies in the image of a at that depth. Padding leaves the zero-component
    // test unchanged and makes every Exp test pass, so equivalent ideals give
    // the same set.
    bool s_contains(IdealSpec const& ideal, NAryNumber const& x) {
      int s = -x.frac_profile().place;
      if (s == 0) {
        return true;
      }
      int J = 0;
      for (auto const& c : ideal.components()) {
        if (!c.zero) {
          J = std::max(J, c.exponent);
        }
      }
      int const sp = s + J;
      std::optional<BigInt> big_r;
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        auto const& f = ideal.factors()[i];
        auto const& c = ideal.components()[i];
        int e = c.zero ? sp * f.e : std::min(c.exponent, sp * f.e);
        if (e == 0) {
          continue;
        }
        if (fits_pow(f.p, e)) {
          if (padded_residue_mod(x, s, J, checked_pow(f.p, e)) != 0) {
            return false;
          }
        } else {
          if (!big_r) {
            big_r = fractional_residue(x, s) * big_pow(x.base(), J);
          }
          if (*big_r % big_pow(f.p, e) != 0) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_shift_of(NAryNumber const& x, NAryNumber const& g) {
      if (x.sign() != g.sign() || x.terms().size() != g.terms().size()) {
        return false;
      }
      if (x.is_zero()) {
        return true;
      }
      int i = x.min_index() - g.min_index();
      return i >= 0 && shift(g, i) == x;
    }

    NAryNumber beta(NAryNumber const& x, Flavor f, int k) {
      return shift(x, f == Flavor::Alpha ? k : -k);
    }

  }  // namespace

  ConfiningSet ConfiningSet::q_plus(std::uint32_t n) {
    factorize(n);
    return ConfiningSet(n, QPlus{});
  }

  ConfiningSet ConfiningSet::q_minus(std::uint32_t n) {
    factorize(n);
    return ConfiningSet(n, QMinus{});
  }

  ConfiningSet ConfiningSet::s_of(IdealSpec ideal) {
    auto n = static_cast<std::uint32_t>(ideal.n());
    return ConfiningSet(n, SOfIdeal{std::move(ideal)});
  }

  ConfiningSet ConfiningSet::s_of(FullIdeal const& ideal) {
    return s_of(ideal.to_spec());
  }

  ConfiningSet ConfiningSet::closure(ConfiningSet            base,
                                     std::vector<NAryNumber> extras,
                                     int                     K) {
    if (K < 0) {
      throw ShapeMismatch("closure constant must be nonnegative");
    }
    std::vector<NAryNumber> sym;
    for (auto const& g : extras) {
      if (g.base() != base.n()) {
        throw BaseMismatch("extra element " + g.to_string());
      }
      if (!q_contains(base, shift(g, K))) {
        throw ShapeMismatch("alpha^" + std::to_string(K) + "(" + g.to_string()
                            + ") is not in the base set");
      }
      for (auto const& v : {g, -g}) {
        if (std::find(sym.begin(), sym.end(), v) == sym.end()) {
          sym.push_back(v);
        }
      }
    }
    auto n = base.n();
    return ConfiningSet(
        n, Closure{std::make_shared<ConfiningSet const>(std::move(base)), std::move(sym), K});
  }

  ConfiningSet ConfiningSet::finite(std::uint32_t n, std::vector<NAryNumber> const& elements) {
    FiniteTruncation f;
    for (auto const& x : elements) {
      if (x.base() != n) {
        throw BaseMismatch("element " + x.to_string());
      }
      f.elements.insert(x);
    }
    return ConfiningSet(n, std::move(f));
  }

  std::string ConfiningSet::name() const {
    struct V {
      std::string operator()(QPlus const&) const { return "QPlus"; }
      std::string operator()(QMinus const&) const { return "QMinus"; }
      std::string operator()(SOfIdeal const& s) const {
        std::string out = "S(";
        for (std::size_t i = 0; i < s.ideal.size(); ++i) {
          auto const& c = s.ideal.components()[i];
          if (i) {
            out += " x ";
          }
          out += std::to_string(s.ideal.factors()[i].p) + "^";
          out += c.zero ? "inf" : std::to_string(c.exponent);
        }
        return out + ")";
      }
      std::string operator()(Closure const& c) const {
        return "Closure(" + c.base->name() + ", " + std::to_string(c.extras.size())
               + " extras, K=" + std::to_string(c.K) + ")";
      }
      std::string operator()(FiniteTruncation const& f) const {
        return "Finite(" + std::to_string(f.elements.size()) + ")";
      }
    };
    return std::visit(V{}, _v);
  }

  BigInt fractional_residue(NAryNumber const& x, int s) {
    BigInt r = 0;
    for (auto const& t : x.terms()) {
      if (t.index >= 0) {
        break;
      }
      if (t.index < -s) {
        continue;
      }
      BigInt w = 1;
      for (int u = 0; u < s + t.index; ++u) {
        w *= x.base();
      }
      r += w * t.digit;
    }
    return r;
  }

  bool q_contains(ConfiningSet const& Q, NAryNumber const& x) {
    if (x.base() != Q.n()) {
      throw BaseMismatch("element of base " + std::to_string(x.base())
                         + " tested against a set over base " + std::to_string(Q.n()));
    }
    struct V {
      NAryNumber const& x;
      bool operator()(QPlus const&) const { return x.is_integer(); }
      bool operator()(QMinus const&) const {
        return x.is_zero() || x.max_index() < 0;
      }
      bool operator()(SOfIdeal const& s) const { return s_contains(s.ideal, x); }
      bool operator()(Closure const& c) const {
        if (q_contains(*c.base, x)) {
          return true;
        }
        return std::any_of(c.extras.begin(), c.extras.end(),
                           [&](NAryNumber const& g) { return is_shift_of(x, g); });
      }
      bool operator()(FiniteTruncation const& f) const {
        return f.elements.count(x) > 0;
      }
    };
    return std::visit(V{x}, Q.kind());
  }

  std::vector<NAryNumber> enumerate_window(std::uint32_t n, EnumBound const& bound) {
    int const D = std::max(0, bound.max_frac_depth);
    int const I = std::max(0, bound.max_int_digits);
    int const P = D + I;
    if (P == 0) {
      return {NAryNumber(n)};
    }
    std::uint64_t total;
    try {
      total = checked_pow(n, P);
    } catch (std::overflow_error const&) {
      throw DepthExceeded("enumeration window of " + std::to_string(P)
                          + " digits is too large");
    }
    struct Entry {
      int           depth;
      int           count;
      std::uint64_t num;
    };
    std::vector<Entry> entries;
    for (std::uint64_t num = 1; num < total; ++num) {
      int           count  = 0;
      int           lowest = -1;
      std::uint64_t v      = num;
      for (int pos = 0; v != 0; ++pos, v /= n) {
        if (v % n != 0) {
          ++count;
          if (lowest < 0) {
            lowest = pos;
          }
        }
      }
      if (bound.max_nonzero_digits > 0 && count > bound.max_nonzero_digits) {
        continue;
      }
      entries.push_back({std::max(0, D - lowest), count, num});
    }
    std::sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) {
      if (a.depth != b.depth) {
        return a.depth < b.depth;
      }
      if (a.count != b.count) {
        return a.count < b.count;
      }
      return a.num < b.num;
    });
    std::vector<NAryNumber> out;
    out.reserve(2 * entries.size() + 1);
    out.emplace_back(n);
    for (auto const& e : entries) {
      std::vector<NAryNumber::Term> terms;
      std::uint64_t                 v = e.num;
      for (int pos = 0; v != 0; ++pos, v /= n) {
        if (v % n != 0) {
          terms.push_back({pos - D, static_cast<std::uint32_t>(v % n)});
        }
      }
      auto x = NAryNumber::from_terms(n, 1, std::move(terms));
      out.push_back(x);
      out.push_back(-x);
    }
    return out;
  }

  std::vector<NAryNumber> enumerate(ConfiningSet const& Q, EnumBound const& bound) {
    if (auto const* f = std::get_if<FiniteTruncation>(&Q.kind())) {
      std::vector<NAryNumber> out(f->elements.begin(), f->elements.end());
      std::sort(out.begin(), out.end(), [](NAryNumber const& a, NAryNumber const& b) {
        auto ca = a.abs() <=> b.abs();
        if (ca != 0) {
          return ca < 0;
        }
        return a.sign() > b.sign();
      });
      return out;
    }
    std::vector<NAryNumber> out;
    for (auto& x : enumerate_window(Q.n(), bound)) {
      if (q_contains(Q, x)) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  nlohmann::json to_json(ConfiningReport const& r) {
    nlohmann::json j;
    j["flavor"]      = r.flavor == Flavor::Alpha ? "alpha" : "alpha_inverse";
    j["sample_size"] = r.sample_size;
    j["axiom_a"]     = r.axiom_a;
    j["axiom_a_counterexample"] =
        r.axiom_a_counterexample ? nlohmann::json(r.axiom_a_counterexample->to_string())
                                 : nlohmann::json(nullptr);
    j["strict_witness"] = r.strict_witness ? nlohmann::json(r.strict_witness->to_string())
                                           : nlohmann::json(nullptr);
    j["axiom_b"]     = r.axiom_b;
    j["max_landing"] = r.max_landing;
    auto landing     = nlohmann::json::array();
    for (auto const& [h, k] : r.landing) {
      landing.push_back({{"h", h.to_string()}, {"k", k}});
    }
    j["landing"]    = std::move(landing);
    j["axiom_c_k0"] = r.axiom_c_k0 ? nlohmann::json(*r.axiom_c_k0) : nlohmann::json(nullptr);
    j["k0_bound"]   = r.k0_bound;
    j["holds"]      = r.holds();
    return j;
  }

  ConfiningReport verify_confining(ConfiningSet const& Q,
                                   Flavor              flavor,
                                   EnumBound const&    bound,
                                   int                 k0_bound,
                                   int                 landing_cap,
                                   std::size_t         landing_keep) {
    ConfiningReport rep;
    rep.flavor   = flavor;
    rep.k0_bound = k0_bound;

    auto sample     = enumerate(Q, bound);
    rep.sample_size = sample.size();
    if (std::none_of(sample.begin(), sample.end(),
                     [](NAryNumber const& x) { return !x.is_zero(); })) {
      throw SampleExhausted("no nonzero element of " + Q.name() + " in the window");
    }

    // (a)
    rep.axiom_a = true;
    for (auto const& q : sample) {
      if (!q_contains(Q, beta(q, flavor, 1))) {
        rep.axiom_a                = false;
        rep.axiom_a_counterexample = q;
        break;
      }
    }
    for (auto const& q : sample) {
      if (!q_contains(Q, beta(q, flavor, -1))) {
        rep.strict_witness = q;
        break;
      }
    }

    // (b)
    rep.axiom_b = true;
    for (auto const& h : enumerate_window(Q.n(), bound)) {
      int k = 0;
      while (k <= landing_cap && !q_contains(Q, beta(h, flavor, k))) {
        ++k;
      }
      if (k > landing_cap) {
        rep.axiom_b = false;
        if (rep.landing.size() < landing_keep) {
          rep.landing.emplace_back(h, -1);
        }
        continue;
      }
      rep.max_landing = std::max(rep.max_landing, k);
      if (rep.landing.size() < landing_keep) {
        rep.landing.emplace_back(h, k);
      }
    }

    // (c)
    for (int k0 = 0; k0 <= k0_bound && !rep.axiom_c_k0; ++k0) {
      bool ok = true;
      for (std::size_t a = 0; a < sample.size() && ok; ++a) {
        for (std::size_t b = a; b < sample.size(); ++b) {
          if (!q_contains(Q, beta(sample[a] + sample[b], flavor, k0))) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        rep.axiom_c_k0 = k0;
      }
    }
    return rep;
  }

  FullIdeal compute_ideal_of(ConfiningSet const& Q, int depth, EnumBound bound) {
    if (depth < 1) {
      throw DepthExceeded("depth must be at least 1");
    }
    bound.max_frac_depth = std::max(bound.max_frac_depth, depth);
    auto const fs        = factorize(Q.n());
    auto const k         = fs.size();

    std::vector<NAryNumber> positive;
    for (auto& x : enumerate(Q, bound)) {
      if (x.sign() > 0) {
        positive.push_back(std::move(x));
      }
    }

    // unit[s][i]: some sampled residue at depth s has a unit p_i-part.
    std::vector<std::vector<bool>> unit(depth + 1, std::vector<bool>(k, false));
    for (auto const& x : positive) {
      int const d = -x.frac_profile().place;
      for (int s = std::max(d, 1); s <= depth; ++s) {
        for (std::size_t i = 0; i < k; ++i) {
          if (!unit[s][i] && padded_residue_mod(x, s, 0, fs[i].p) != 0) {
            unit[s][i] = true;
          }
        }
      }
    }

    auto mask_at = [&](int s) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (!unit[s][i]) {
          mask |= 1U << i;
        }
      }
      return mask;
    };
    auto mask = mask_at(depth);
    if (depth > 1 && mask_at(depth - 1) != mask) {
      throw InconclusiveDepth("residue lattice of " + Q.name() + " changes between depth "
                              + std::to_string(depth - 1) + " and "
                              + std::to_string(depth));
    }
    return FullIdeal(Q.n(), mask);
  }

}  // namespace bsconf
