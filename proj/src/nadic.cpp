#include "bsconf/nadic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bsconf/errors.hpp"

namespace bsconf {

  namespace {

    using u128 = unsigned __int128;

    void check_shape(NAdic const& a, NAdic const& b) {
      if (a.base() != b.base() || a.depth() != b.depth()) {
        throw ShapeMismatch("(" + std::to_string(a.base()) + ", "
                            + std::to_string(a.depth()) + ") vs ("
                            + std::to_string(b.base()) + ", "
                            + std::to_string(b.depth()) + ")");
      }
    }

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
      return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
    }

    // Inverse of a modulo m for gcd(a, m) = 1.
    std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
      __int128 t = 0, new_t = 1;
      __int128 r = m, new_r = a % m;
      while (new_r != 0) {
        __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
      }
      if (r != 1) {
        throw std::domain_error("not invertible");
      }
      if (t < 0) {
        t += m;
      }
      return static_cast<std::uint64_t>(t);
    }

    void check_ideal_pair(IdealSpec const& a, IdealSpec const& b) {
      if (a.n() != b.n()) {
        throw BaseMismatch("ideals of Z_" + std::to_string(a.n()) + " and Z_"
                           + std::to_string(b.n()));
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // NAdic
  ////////////////////////////////////////////////////////////////////////

  NAdic::NAdic(std::uint32_t base, int depth, std::uint64_t residue)
      : _base(base), _depth(depth), _modulus(0), _residue(0) {
    if (base < 2) {
      throw InvalidBase("base must be at least 2");
    }
    if (depth < 1) {
      throw DepthExceeded("depth must be at least 1");
    }
    try {
      _modulus = checked_pow(base, depth);
    } catch (std::overflow_error const& e) {
      throw DepthExceeded(e.what());
    }
    _residue = residue % _modulus;
  }

  NAdic NAdic::from_digits(std::uint32_t                     base,
                           std::vector<std::uint32_t> const& digits) {
    std::uint64_t r  = 0;
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] >= base) {
        throw ParseError("digit " + std::to_string(digits[i])
                         + " out of range");
      }
      r += digits[i] * pw;
      if (i + 1 < digits.size()) {
        pw *= base;
      }
    }
    return NAdic(base, static_cast<int>(std::max<std::size_t>(digits.size(), 1)), r);
  }

  std::uint32_t NAdic::digit(int i) const {
    if (i < 0 || i >= _depth) {
      throw DepthExceeded("digit " + std::to_string(i) + " at depth "
                          + std::to_string(_depth));
    }
    std::uint64_t r = _residue;
    for (int k = 0; k < i; ++k) {
      r /= _base;
    }
    return static_cast<std::uint32_t>(r % _base);
  }

  std::vector<std::uint32_t> NAdic::digits() const {
    std::vector<std::uint32_t> out(_depth);
    std::uint64_t              r = _residue;
    for (int k = 0; k < _depth; ++k) {
      out[k] = static_cast<std::uint32_t>(r % _base);
      r /= _base;
    }
    return out;
  }

  bool NAdic::is_unit() const {
    return gcd_u64(_residue % _base, _base) == 1;
  }

  NAdic nadic_add(NAdic const& a, NAdic const& b) {
    check_shape(a, b);
    auto const    n  = a.base();
    auto const    da = a.digits();
    auto const    db = b.digits();
    std::vector<std::uint32_t> c(da.size());
    std::uint64_t t = 0;  // carry t_{i-1}
    for (std::size_t i = 0; i < da.size(); ++i) {
      std::uint64_t s = da[i] + db[i] + t;
      c[i]            = static_cast<std::uint32_t>(s % n);
      t               = s / n;
    }
    return NAdic(n, a.depth(), NAdic::from_digits(n, c).residue());
  }

  NAdic nadic_mul(NAdic const& a, NAdic const& b) {
    check_shape(a, b);
    auto const    n  = a.base();
    auto const    da = a.digits();
    auto const    db = b.digits();
    std::vector<std::uint32_t> d(da.size());
    std::uint64_t s = 0;  // carry s_{i-1}
    for (std::size_t i = 0; i < da.size(); ++i) {
      std::uint64_t conv = s;
      for (std::size_t j = 0; j <= i; ++j) {
        conv += static_cast<std::uint64_t>(da[j]) * db[i - j];
      }
      d[i] = static_cast<std::uint32_t>(conv % n);
      s    = conv / n;
    }
    return NAdic(n, a.depth(), NAdic::from_digits(n, d).residue());
  }

  std::uint64_t partial_sum(NAdic const& a, int s) {
    if (s < 1 || s > a.depth()) {
      throw DepthExceeded("partial sum " + std::to_string(s) + " of depth-"
                          + std::to_string(a.depth()) + " element");
    }
    return a.residue() % checked_pow(a.base(), s);
  }

  std::vector<NAdic> crt_split(NAdic const& a) {
    std::vector<NAdic> out;
    for (auto const& [p, e] : factorize(a.base())) {
      auto q = checked_pow(p, e);
      out.emplace_back(static_cast<std::uint32_t>(q), a.depth(), a.residue());
    }
    return out;
  }

  NAdic crt_join(std::vector<NAdic> const& parts, std::uint32_t base) {
    auto fs = factorize(base);
    if (fs.size() != parts.size()) {
      throw ShapeMismatch("expected " + std::to_string(fs.size())
                          + " components");
    }
    int           depth = parts.empty() ? 1 : parts.front().depth();
    std::uint64_t x     = 0;
    std::uint64_t M     = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto q = checked_pow(fs[i].p, fs[i].e);
      if (parts[i].base() != q || parts[i].depth() != depth) {
        throw ShapeMismatch("component " + std::to_string(i + 1)
                            + " has the wrong base or depth");
      }
      auto m  = parts[i].modulus();
      auto r  = parts[i].residue();
      auto xm = x % m;
      auto t  = mulmod((r + m - xm) % m, invmod(M % m, m), m);
      x += M * t;
      M *= m;
    }
    return NAdic(base, depth, x);
  }

  NAdic digit_expand(NAdic const& a) {
    auto fs = factorize(a.base());
    if (fs.size() != 1) {
      throw BaseNotPrimePower("base " + std::to_string(a.base()));
    }
    return NAdic(static_cast<std::uint32_t>(fs[0].p), a.depth() * fs[0].e,
                 a.residue());
  }

  NAdic digit_contract(NAdic const& a, int j) {
    auto fs = factorize(a.base());
    if (fs.size() != 1 || fs[0].e != 1) {
      throw BaseNotPrimePower("contraction needs a prime base, got "
                              + std::to_string(a.base()));
    }
    if (j < 1 || a.depth() % j != 0) {
      throw ShapeMismatch("depth " + std::to_string(a.depth())
                          + " is not a multiple of " + std::to_string(j));
    }
    return NAdic(static_cast<std::uint32_t>(checked_pow(fs[0].p, j)),
                 a.depth() / j, a.residue());
  }

  NAdicDistance metric(NAdic const& a, NAdic const& b) {
    check_shape(a, b);
    auto diff = (a.residue() + a.modulus() - b.residue()) % a.modulus();
    if (diff == 0) {
      return {a.depth(), true};
    }
    int q = 0;
    while (diff % a.base() == 0) {
      diff /= a.base();
      ++q;
    }
    return {q, false};
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  IdealSpec::IdealSpec(std::uint64_t n, std::vector<IdealComponent> components)
      : _n(n), _factors(factorize(n)), _components(std::move(components)) {
    if (_components.size() != _factors.size()) {
      throw ShapeMismatch("Z_" + std::to_string(n) + " has "
                          + std::to_string(_factors.size())
                          + " prime components, got "
                          + std::to_string(_components.size()));
    }
    for (auto const& c : _components) {
      if (!c.zero && c.exponent < 0) {
        throw ShapeMismatch("negative ideal exponent");
      }
    }
  }

  IdealSpec IdealSpec::whole(std::uint64_t n) {
    return IdealSpec(n, std::vector<IdealComponent>(factorize(n).size(),
                                                    IdealComponent::power(0)));
  }

  IdealSpec IdealSpec::zero(std::uint64_t n) {
    return IdealSpec(n, std::vector<IdealComponent>(factorize(n).size(),
                                                    IdealComponent::zero_ideal()));
  }

  FullIdeal::FullIdeal(std::uint64_t n, std::uint32_t zero_mask)
      : _n(n), _factors(factorize(n)), _mask(zero_mask) {
    if (_factors.size() < 32 && (zero_mask >> _factors.size()) != 0) {
      throw ShapeMismatch("zero set mentions a component beyond "
                          + std::to_string(_factors.size()));
    }
  }

  FullIdeal FullIdeal::from_zero_set(std::uint64_t n, std::vector<int> const& zero_set) {
    auto          k    = factorize(n).size();
    std::uint32_t mask = 0;
    for (int i : zero_set) {
      if (i < 1 || static_cast<std::size_t>(i) > k) {
        throw ShapeMismatch("component index " + std::to_string(i)
                            + " out of range 1.." + std::to_string(k));
      }
      mask |= 1U << (i - 1);
    }
    return FullIdeal(n, mask);
  }

  std::vector<int> FullIdeal::zero_set() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      if (is_zero_component(i)) {
        out.push_back(static_cast<int>(i) + 1);
      }
    }
    return out;
  }

  IdealSpec FullIdeal::to_spec() const {
    std::vector<IdealComponent> comps;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      comps.push_back(is_zero_component(i) ? IdealComponent::zero_ideal()
                                           : IdealComponent::power(0));
    }
    return IdealSpec(_n, std::move(comps));
  }

  std::vector<FullIdeal> FullIdeal::all(std::uint64_t n) {
    auto                   k = factorize(n).size();
    std::vector<FullIdeal> out;
    for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
      out.emplace_back(n, mask);
    }
    return out;
  }

  std::string to_string(Verdict const& v) {
    switch (v.kind) {
      case Verdict::Kind::In:
        return "In";
      case Verdict::Kind::Out:
        return "Out";
      case Verdict::Kind::ConsistentToDepth:
        return "ConsistentToDepth";
      case Verdict::Kind::NeedDepth:
        return "NeedDepth(" + std::to_string(v.required_depth) + ")";
    }
    return "?";
  }

  Verdict ideal_contains(IdealSpec const& ideal, NAdic const& a) {
    if (a.base() != ideal.n()) {
      throw BaseMismatch("element of Z_" + std::to_string(a.base())
                         + " tested against an ideal of Z_"
                         + std::to_string(ideal.n()));
    }
    bool any_zero  = false;
    int  need      = 0;
    auto const& fs = ideal.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto const& c        = ideal.components()[i];
      int         avail    = a.depth() * fs[i].e;  // p-adic digits known
      auto        comp_mod = checked_pow(fs[i].p, avail);
      auto        r        = a.residue() % comp_mod;
      if (c.zero) {
        if (r != 0) {
          return {Verdict::Kind::Out};
        }
        any_zero = true;
        continue;
      }
      auto m = checked_pow(fs[i].p, std::min(c.exponent, avail));
      if (r % m != 0) {
        return {Verdict::Kind::Out};
      }
      if (avail < c.exponent) {
        // L_i = ceil(a_i / n_i)
        need = std::max(need, (c.exponent + fs[i].e - 1) / fs[i].e);
      }
    }
    if (need > 0) {
      return {Verdict::Kind::NeedDepth, need};
    }
    return {any_zero ? Verdict::Kind::ConsistentToDepth : Verdict::Kind::In};
  }

  bool scaled_contained(IdealSpec const& a, int k, IdealSpec const& b) {
    check_ideal_pair(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto const& ca = a.components()[i];
      auto const& cb = b.components()[i];
      if (ca.zero) {
        continue;
      }
      if (cb.zero) {
        return false;
      }
      if (ca.exponent + k * a.factors()[i].e < cb.exponent) {
        return false;
      }
    }
    return true;
  }

  LeqResult ideal_leq(IdealSpec const& a, IdealSpec const& b) {
    check_ideal_pair(a, b);
    int k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto const& ca = a.components()[i];
      auto const& cb = b.components()[i];
      if (ca.zero) {
        continue;
      }
      if (cb.zero) {
        return {false, std::nullopt};
      }
      int gap = std::max(0, cb.exponent - ca.exponent);
      int ni  = a.factors()[i].e;
      k       = std::max(k, (gap + ni - 1) / ni);
    }
    if (!scaled_contained(a, k, b)) {
      throw std::logic_error("ideal_leq witness failed re-check");
    }
    return {true, k};
  }

  Normalized full_normalize(IdealSpec const& ideal) {
    std::uint32_t mask = 0;
    int           A    = 0;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      auto const& c = ideal.components()[i];
      if (c.zero) {
        mask |= 1U << i;
      } else {
        A = std::max(A, c.exponent);
      }
    }
    return {FullIdeal(ideal.n(), mask), A};
  }

  nlohmann::json to_json(IdealSpec const& ideal) {
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      auto const&    c = ideal.components()[i];
      nlohmann::json jc;
      jc["p"] = ideal.factors()[i].p;
      jc["e"] = ideal.factors()[i].e;
      if (c.zero) {
        jc["ideal"] = "zero";
      } else {
        jc["ideal"] = {{"exp", c.exponent}};
      }
      comps.push_back(std::move(jc));
    }
    return {{"n", ideal.n()}, {"components", std::move(comps)}};
  }

  nlohmann::json to_json(FullIdeal const& ideal) {
    return to_json(ideal.to_spec());
  }

  IdealSpec ideal_from_json(nlohmann::json const& j) {
    try {
      auto n  = j.at("n").get<std::uint64_t>();
      auto fs = factorize(n);
      auto const& jc = j.at("components");
      if (!jc.is_array() || jc.size() != fs.size()) {
        throw ParseError("components must list one entry per prime of n");
      }
      std::vector<IdealComponent> comps;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        auto const& c = jc[i];
        if (c.at("p").get<std::uint64_t>() != fs[i].p
            || c.at("e").get<int>() != fs[i].e) {
          throw ParseError("component " + std::to_string(i + 1)
                           + " does not match the factorization of n");
        }
        auto const& id = c.at("ideal");
        if (id.is_string() && id.get<std::string>() == "zero") {
          comps.push_back(IdealComponent::zero_ideal());
        } else {
          comps.push_back(IdealComponent::power(id.at("exp").get<int>()));
        }
      }
      return IdealSpec(n, std::move(comps));
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(e.what());
    }
  }

  std::vector<int> parse_zero_set(std::string const& text) {
    std::string s;
    for (char c : text) {
      if (c != '{' && c != '}' && c != ' ') {
        s += c;
      }
    }
    std::vector<int> out;
    std::size_t      pos = 0;
    while (pos < s.size()) {
      auto next = s.find(',', pos);
      auto tok  = s.substr(pos, next == std::string::npos ? std::string::npos
                                                         : next - pos);
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) {
          throw ParseError("bad zero-set entry '" + tok + "'");
        }
      } catch (std::logic_error const&) {
        throw ParseError("bad zero-set entry '" + tok + "'");
      }
      if (next == std::string::npos) {
        break;
      }
      pos = next + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace bsconf
