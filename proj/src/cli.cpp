#include "bsconf/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bsconf/basen.hpp"
#include "bsconf/bsgroup.hpp"
#include "bsconf/confining.hpp"
#include "bsconf/errors.hpp"
#include "bsconf/nadic.hpp"
#include "bsconf/poset.hpp"
#include "bsconf/wreath.hpp"

namespace bsconf::cli {

  namespace {

    using nlohmann::json;

    struct Spec {
      std::string              name;
      std::string              help;
      std::vector<std::string> flags;
    };

    std::vector<Spec> const& specs() {
      static std::vector<Spec> const s = {
          {"poset", "build and export the poset of hyperbolic structures", {"n"}},
          {"ideal-contains",
           "membership verdict of an n-adic residue in an ideal",
           {"n", "ideal", "exps", "ideal-json", "residue", "depth"}},
          {"ideal-normalize", "full ideal in the class of an ideal", {"n", "ideal", "exps", "ideal-json"}},
          {"confining-verify",
           "check the confining axioms on a finite sample",
           {"n", "set", "ideal", "exps", "flavor", "depth", "int-digits", "max-nonzero", "k0-bound"}},
          {"ideal-of",
           "read the full ideal L(Q) off a confining set",
           {"n", "set", "ideal", "exps", "depth", "int-digits", "max-nonzero"}},
          {"word-length",
           "word length of (h, k) with respect to S(a) and t",
           {"n", "h", "k", "ideal", "exps", "method", "radius"}},
          {"tree-ball", "ball in the Bass-Serre tree of S(a)", {"n", "ideal", "exps", "radius"}},
          {"h2", "displacement of (h, k) acting on the upper half-plane", {"n", "h", "k"}},
          {"wreath-qi",
           "generate Q^i truncations and check their facts",
           {"i", "steps", "max-degree", "max-coeff", "max-terms"}},
          {"wreath-separation",
           "word lengths of 2^r x^{ri} against Q^j with the separation bound",
           {"i", "j", "r", "r-max", "steps", "max-degree", "max-coeff", "max-terms", "radius",
            "window-coeff"}},
          {"nadic-arith",
           "truncated n-adic arithmetic",
           {"n", "depth", "a", "b", "op", "s"}},
      };
      return s;
    }

    std::string const* find(Command const& c, std::string const& key) {
      auto it = c.params.find(key);
      return it == c.params.end() ? nullptr : &it->second;
    }

    std::string get(Command const& c, std::string const& key) {
      if (auto const* v = find(c, key)) {
        return *v;
      }
      throw UsageError("missing required flag --" + key);
    }

    std::string get_or(Command const& c, std::string const& key, std::string def) {
      auto const* v = find(c, key);
      return v ? *v : def;
    }

    long long to_int(std::string const& key, std::string const& s) {
      try {
        std::size_t used = 0;
        auto        v    = std::stoll(s, &used);
        if (used == s.size()) {
          return v;
        }
      } catch (std::logic_error const&) {
      }
      throw UsageError("--" + key + " expects an integer, got '" + s + "'");
    }

    long long get_int(Command const& c, std::string const& key) {
      return to_int(key, get(c, key));
    }

    long long get_int_or(Command const& c, std::string const& key, long long def) {
      auto const* v = find(c, key);
      return v ? to_int(key, *v) : def;
    }

    std::uint32_t get_n(Command const& c) {
      auto n = get_int(c, "n");
      if (n < 2 || n > 0xffffffffLL) {
        throw InvalidN("n must be at least 2, got " + std::to_string(n));
      }
      return static_cast<std::uint32_t>(n);
    }

    IdealSpec get_ideal(Command const& c, std::uint64_t n) {
      if (auto const* j = find(c, "ideal-json")) {
        try {
          auto spec = ideal_from_json(json::parse(*j));
          if (spec.n() != n) {
            throw BaseMismatch("ideal is over Z_" + std::to_string(spec.n()));
          }
          return spec;
        } catch (json::exception const& e) {
          throw ParseError(e.what());
        }
      }
      if (auto const* e = find(c, "exps")) {
        std::vector<IdealComponent> comps;
        std::stringstream           ss(*e);
        std::string                 tok;
        while (std::getline(ss, tok, ',')) {
          if (tok == "zero" || tok == "z" || tok == "inf") {
            comps.push_back(IdealComponent::zero_ideal());
          } else {
            comps.push_back(IdealComponent::power(static_cast<int>(to_int("exps", tok))));
          }
        }
        return IdealSpec(n, std::move(comps));
      }
      if (auto const* z = find(c, "ideal")) {
        return FullIdeal::from_zero_set(n, parse_zero_set(*z)).to_spec();
      }
      throw UsageError("one of --ideal, --exps or --ideal-json is required");
    }

    ConfiningSet get_set(Command const& c, std::uint32_t n) {
      auto s = get_or(c, "set", "s");
      if (s == "qplus") {
        return ConfiningSet::q_plus(n);
      }
      if (s == "qminus") {
        return ConfiningSet::q_minus(n);
      }
      if (s == "s") {
        return ConfiningSet::s_of(get_ideal(c, n));
      }
      throw UsageError("--set must be qplus, qminus or s, got '" + s + "'");
    }

    EnumBound get_bound(Command const& c) {
      EnumBound b;
      b.max_frac_depth     = static_cast<int>(get_int_or(c, "depth", 4));
      b.max_int_digits     = static_cast<int>(get_int_or(c, "int-digits", 1));
      b.max_nonzero_digits = static_cast<int>(get_int_or(c, "max-nonzero", 2));
      return b;
    }

    QiBounds get_qi_bounds(Command const& c, int i, int steps) {
      QiBounds b;
      b.max_degree = static_cast<int>(get_int_or(c, "max-degree", steps * i + 1));
      b.max_coeff  = get_int_or(c, "max-coeff", std::int64_t{1} << std::min(steps, 30));
      b.max_terms  = static_cast<int>(get_int_or(c, "max-terms", 2));
      return b;
    }

    void check_format(Command const& c, std::initializer_list<char const*> allowed) {
      for (auto const* a : allowed) {
        if (c.format == a) {
          return;
        }
      }
      throw UsageError("--format " + c.format + " is not supported by " + c.name);
    }

    std::string fmt_double(double d) {
      std::ostringstream os;
      os << std::setprecision(17) << d;
      return os.str();
    }

    void emit(std::ostream& out, json const& j) { out << j.dump(2) << '\n'; }

    ////////////////////////////////////////////////////////////////////////

    int cmd_poset(Command const& c, std::ostream& out) {
      check_format(c, {"json", "dot", "text"});
      auto P = build_poset(static_cast<std::uint64_t>(get_int(c, "n")));
      if (c.format == "dot") {
        out << P.to_dot();
      } else if (c.format == "text") {
        for (auto const& e : P.elements()) {
          out << e.id() << ' ' << e.label() << '\n';
        }
        for (auto const& [a, b] : P.covers()) {
          out << P.elements()[a].id() << " < " << P.elements()[b].id() << '\n';
        }
      } else {
        emit(out, P.to_json());
      }
      return 0;
    }

    int cmd_ideal_contains(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text"});
      auto n     = get_n(c);
      auto ideal = get_ideal(c, n);
      auto depth = static_cast<int>(get_int(c, "depth"));
      auto res   = get_int(c, "residue");
      if (res < 0) {
        throw UsageError("--residue must be nonnegative");
      }
      NAdic a(n, depth, static_cast<std::uint64_t>(res));
      auto  v = ideal_contains(ideal, a);
      if (c.format == "text") {
        out << to_string(v) << '\n';
      } else {
        json j{{"ideal", to_json(ideal)}, {"residue", a.residue()}, {"depth", depth},
               {"verdict", to_string(v)}};
        if (v.kind == Verdict::Kind::NeedDepth) {
          j["required_depth"] = v.required_depth;
        }
        emit(out, j);
      }
      return 0;
    }

    int cmd_ideal_normalize(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text"});
      auto n     = get_n(c);
      auto ideal = get_ideal(c, n);
      auto norm  = full_normalize(ideal);
      auto fwd   = ideal_leq(ideal, norm.full.to_spec());
      auto bwd   = ideal_leq(norm.full.to_spec(), ideal);
      if (c.format == "text") {
        out << "zero_set {";
        auto zs = norm.full.zero_set();
        for (std::size_t i = 0; i < zs.size(); ++i) {
          out << (i ? "," : "") << zs[i];
        }
        out << "} A=" << norm.witness_A << '\n';
        return 0;
      }
      auto wit = [](LeqResult const& r) {
        return r.holds ? json(*r.witness_k) : json(nullptr);
      };
      emit(out, {{"input", to_json(ideal)},
                 {"full", to_json(norm.full)},
                 {"zero_set", norm.full.zero_set()},
                 {"witness_A", norm.witness_A},
                 {"input_leq_full_k", wit(fwd)},
                 {"full_leq_input_k", wit(bwd)}});
      return 0;
    }

    int cmd_confining_verify(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text"});
      auto n      = get_n(c);
      auto Q      = get_set(c, n);
      auto fl     = get_or(c, "flavor", "alpha");
      Flavor flavor;
      if (fl == "alpha") {
        flavor = Flavor::Alpha;
      } else if (fl == "inverse" || fl == "alpha-inverse") {
        flavor = Flavor::AlphaInverse;
      } else {
        throw UsageError("--flavor must be alpha or inverse, got '" + fl + "'");
      }
      auto rep = verify_confining(Q, flavor, get_bound(c), static_cast<int>(get_int_or(c, "k0-bound", 4)));
      if (c.format == "text") {
        out << Q.name() << (rep.holds() ? " holds" : " fails");
        if (rep.axiom_c_k0) {
          out << " k0=" << *rep.axiom_c_k0;
        }
        if (rep.strict_witness) {
          out << " strict=" << rep.strict_witness->to_string();
        }
        out << '\n';
        return 0;
      }
      auto j   = to_json(rep);
      j["set"] = Q.name();
      j["n"]   = n;
      emit(out, j);
      return 0;
    }

    int cmd_ideal_of(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text"});
      auto n     = get_n(c);
      auto Q     = get_set(c, n);
      auto depth = static_cast<int>(get_int_or(c, "depth", 4));
      auto b     = get_bound(c);
      b.max_int_digits     = static_cast<int>(get_int_or(c, "int-digits", 0));
      b.max_nonzero_digits = static_cast<int>(get_int_or(c, "max-nonzero", 0));
      auto L               = compute_ideal_of(Q, depth, b);
      if (c.format == "text") {
        out << "zero_set {";
        auto zs = L.zero_set();
        for (std::size_t i = 0; i < zs.size(); ++i) {
          out << (i ? "," : "") << zs[i];
        }
        out << "}\n";
        return 0;
      }
      emit(out, {{"set", Q.name()}, {"depth", depth}, {"ideal", to_json(L)}, {"zero_set", L.zero_set()}});
      return 0;
    }

    int cmd_word_length(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text", "csv"});
      auto n      = get_n(c);
      auto ideal  = get_ideal(c, n);
      BSElement g{NAryNumber::parse(get(c, "h"), n), static_cast<int>(get_int_or(c, "k", 0))};
      auto method = get_or(c, "method", c.format == "csv" ? "bfs" : "exact");
      if (method != "exact" && method != "bfs" && method != "both") {
        throw UsageError("--method must be exact, bfs or both, got '" + method + "'");
      }
      auto Q      = ConfiningSet::s_of(ideal);
      int  radius = static_cast<int>(get_int_or(c, "radius", 8));
      if (c.format == "csv") {
        WindowBFS bfs(Q, {NAryNumber(n), g.h}, radius);
        bfs.write_trace_csv(out);
        return 0;
      }
      json j{{"g", g.to_string()}, {"ideal", to_json(ideal)}};
      std::optional<int> exact, bfs;
      if (method != "bfs") {
        exact      = word_length_exact(g, ideal);
        j["exact"] = *exact;
      }
      if (method != "exact") {
        bfs          = word_length_bfs(g, Q, radius);
        j["bfs"]     = bfs ? json(*bfs) : json(nullptr);
        j["radius"]  = radius;
      }
      if (c.format == "text") {
        if (exact) {
          out << *exact;
        } else {
          out << (bfs ? std::to_string(*bfs) : std::string("none"));
        }
        out << '\n';
      } else {
        emit(out, j);
      }
      return 0;
    }

    int cmd_tree_ball(Command const& c, std::ostream& out) {
      check_format(c, {"json", "dot"});
      auto n      = get_n(c);
      auto norm   = full_normalize(get_ideal(c, n));
      auto radius = static_cast<int>(get_int_or(c, "radius", 2));
      if (radius > 6) {
        throw BoundTooSmall("radius " + std::to_string(radius) + " exceeds the supported 6");
      }
      auto ball = tree_ball(norm.full, radius);
      if (c.format == "dot") {
        out << ball.to_dot();
      } else {
        emit(out, ball.to_json());
      }
      return 0;
    }

    int cmd_h2(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text"});
      auto      n = get_n(c);
      BSElement g{NAryNumber::parse(get_or(c, "h", "0"), n), static_cast<int>(get_int_or(c, "k", 0))};
      double    d = h2_displacement(g);
      if (c.format == "text") {
        out << fmt_double(d) << '\n';
      } else {
        auto gi = h2_apply(g, {0.0, 1.0});
        emit(out, {{"g", g.to_string()},
                   {"displacement", d},
                   {"image_of_i", {gi.x, gi.y}},
                   {"distance_check", h2_distance({0.0, 1.0}, gi)}});
      }
      return 0;
    }

    int cmd_wreath_qi(Command const& c, std::ostream& out) {
      check_format(c, {"json", "csv"});
      auto i     = static_cast<int>(get_int_or(c, "i", 1));
      auto steps = static_cast<int>(get_int_or(c, "steps", 3));
      if (steps < 0 || steps > 8) {
        throw BoundTooSmall("steps must be in 0..8");
      }
      auto T   = generate_qi(i, steps, get_qi_bounds(c, i, steps));
      auto rep = check_qi_facts(T, false);
      if (c.format == "csv") {
        out << "level,size,max_coeff,attained\n";
        for (std::size_t r = 0; r < rep.level_sizes.size(); ++r) {
          out << r << ',' << rep.level_sizes[r] << ',' << rep.max_coeff[r] << ','
              << (rep.max_attained[r] ? 1 : 0) << '\n';
        }
      } else {
        emit(out, rep.to_json());
      }
      return 0;
    }

    int cmd_wreath_separation(Command const& c, std::ostream& out) {
      check_format(c, {"json", "csv"});
      auto i = static_cast<int>(get_int_or(c, "i", 1));
      auto j = static_cast<int>(get_int_or(c, "j", 2));
      if (auto const* r = find(c, "r")) {
        auto sb = separation_bound(static_cast<int>(to_int("r", *r)), i, j);
        if (c.format == "csv") {
          out << "r,k_star,f_min,scan_bound,scan_argmin\n"
              << *r << ',' << fmt_double(sb.k_star) << ',' << fmt_double(sb.f_min) << ','
              << sb.length_lower_bound << ',' << sb.scan_argmin << '\n';
        } else {
          emit(out, {{"r", to_int("r", *r)},
                     {"i", i},
                     {"j", j},
                     {"k_star", sb.k_star},
                     {"f_min", sb.f_min},
                     {"derivative_at_k_star", sb.derivative_at_k_star},
                     {"length_lower_bound", sb.length_lower_bound},
                     {"scan_argmin", sb.scan_argmin}});
        }
        return 0;
      }
      separation_bound(0, i, j);  // validates the pair
      auto r_max  = static_cast<int>(get_int_or(c, "r-max", 4));
      auto steps  = static_cast<int>(get_int_or(c, "steps", 5));
      auto radius = static_cast<int>(get_int_or(c, "radius", 4));
      auto wc     = get_int_or(c, "window-coeff", std::int64_t{1} << r_max);
      auto T      = generate_qi(j, steps, get_qi_bounds(c, j, steps));
      auto window = monomial_window(wc, 0, r_max * i + 2);
      if (c.format == "csv") {
        write_separation_csv(out, i, T, r_max, radius, window);
        return 0;
      }
      for (int r = 1; r <= r_max; ++r) {
        window.push_back(LaurentPoly::monomial(std::int64_t{1} << r, r * i));
      }
      WreathBFS bfs(T, window, radius);
      json      rows = json::array();
      for (int r = 1; r <= r_max; ++r) {
        auto len = bfs.distance({LaurentPoly::monomial(std::int64_t{1} << r, r * i), 0});
        auto sb  = separation_bound(r, i, j);
        rows.push_back({{"r", r},
                        {"length", len ? json(*len) : json(nullptr)},
                        {"scan_bound", sb.length_lower_bound},
                        {"f_min", sb.f_min},
                        {"k_star", sb.k_star}});
      }
      emit(out, {{"i", i}, {"j", j}, {"radius", radius}, {"rows", rows}});
      return 0;
    }

    int cmd_nadic_arith(Command const& c, std::ostream& out) {
      check_format(c, {"json", "text"});
      auto n     = get_n(c);
      auto depth = static_cast<int>(get_int(c, "depth"));
      auto op    = get(c, "op");
      auto num   = [&](std::string const& key) {
        auto v = get_int(c, key);
        if (v < 0) {
          throw UsageError("--" + key + " must be nonnegative");
        }
        return NAdic(n, depth, static_cast<std::uint64_t>(v));
      };
      auto a = num("a");
      json j{{"n", n}, {"depth", depth}, {"op", op}, {"a", a.residue()}};
      std::string text;
      if (op == "add" || op == "mul") {
        auto b   = num("b");
        auto r   = op == "add" ? nadic_add(a, b) : nadic_mul(a, b);
        j["b"]      = b.residue();
        j["result"] = r.residue();
        j["digits"] = r.digits();
        text        = std::to_string(r.residue());
      } else if (op == "metric") {
        auto b  = num("b");
        auto d  = metric(a, b);
        j["b"]  = b.residue();
        j["q"]  = d.q;
        j["equal_at_depth"] = d.equal_at_depth;
        text    = "n^-" + std::to_string(d.q) + (d.equal_at_depth ? " (at depth)" : "");
      } else if (op == "split") {
        json parts = json::array();
        for (auto const& p : crt_split(a)) {
          parts.push_back({{"base", p.base()}, {"residue", p.residue()}});
          text += (text.empty() ? "" : " ") + std::to_string(p.residue());
        }
        j["components"] = parts;
      } else if (op == "expand") {
        auto e      = digit_expand(a);
        j["base"]   = e.base();
        j["digits"] = e.digits();
        for (auto d : e.digits()) {
          text += std::to_string(d);
        }
      } else if (op == "partial") {
        auto s      = static_cast<int>(get_int(c, "s"));
        j["s"]      = s;
        j["result"] = partial_sum(a, s);
        text        = std::to_string(partial_sum(a, s));
      } else if (op == "unit") {
        j["unit"] = a.is_unit();
        text      = a.is_unit() ? "true" : "false";
      } else {
        throw UsageError("--op must be add, mul, metric, split, expand, partial or unit");
      }
      if (c.format == "text") {
        out << text << '\n';
      } else {
        emit(out, j);
      }
      return 0;
    }

    void merge_config(Command& c, std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
      }
      std::string line;
      int         lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
          line.erase(hash);
        }
        auto trim = [](std::string s) {
          auto b = s.find_first_not_of(" \t\r");
          auto e = s.find_last_not_of(" \t\r");
          return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line.front() == '[') {
          continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
          throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        auto key = trim(line.substr(0, eq));
        auto val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"') {
          val = val.substr(1, val.size() - 2);
        }
        std::replace(key.begin(), key.end(), '_', '-');
        if (key == "format") {
          continue;
        }
        c.params.emplace(key, val);  // command-line values win
      }
    }

  }  // namespace

  std::string usage() {
    std::ostringstream os;
    os << "usage: bsconf <subcommand> [flags] [--format json|dot|csv|text] [--config FILE] "
          "[--meta]\n\nsubcommands:\n";
    for (auto const& s : specs()) {
      os << "  " << std::left << std::setw(18) << s.name << s.help << "\n";
      os << "  " << std::setw(18) << "" << "flags:";
      for (auto const& f : s.flags) {
        os << " --" << f;
      }
      os << "\n";
    }
    return os.str();
  }

  Command parse(std::vector<std::string> const& argv) {
    if (argv.empty()) {
      throw UsageError("no subcommand given\n" + usage());
    }
    CLI::App app{"bsconf"};
    app.require_subcommand(1, 1);
    app.set_help_flag();

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::string>                         formats, configs;
    std::map<std::string, bool>                                metas;
    for (auto const& s : specs()) {
      auto* sub   = app.add_subcommand(s.name, s.help);
      auto& store = values[s.name];
      for (auto const& f : s.flags) {
        sub->add_option("--" + f, store[f]);
      }
      formats[s.name] = "json";
      sub->add_option("--format", formats[s.name]);
      sub->add_option("--config", configs[s.name]);
      metas[s.name] = false;
      sub->add_flag("--meta", metas[s.name]);
    }

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      throw UsageError(std::string(e.what()) + "\n" + usage());
    }

    auto* sub = app.get_subcommands().front();
    Command c;
    c.name   = sub->get_name();
    c.format = formats[c.name];
    c.meta   = metas[c.name];
    for (auto const& f : specs()) {
      if (f.name != c.name) {
        continue;
      }
      for (auto const& flag : f.flags) {
        if (sub->count("--" + flag) > 0) {
          c.params[flag] = values[c.name][flag];
        }
      }
    }
    if (c.format != "json" && c.format != "dot" && c.format != "csv" && c.format != "text") {
      throw UsageError("--format must be json, dot, csv or text, got '" + c.format + "'");
    }
    if (sub->count("--config") > 0) {
      merge_config(c, configs[c.name]);
      auto const& allowed = std::find_if(specs().begin(), specs().end(),
                                         [&](Spec const& s) { return s.name == c.name; })
                                ->flags;
      for (auto it = c.params.begin(); it != c.params.end();) {
        // Config files may hold keys for other subcommands.
        if (std::find(allowed.begin(), allowed.end(), it->first) == allowed.end()) {
          it = c.params.erase(it);
        } else {
          ++it;
        }
      }
    }
    return c;
  }

  int execute(Command const& c, std::ostream& out, std::ostream& err) {
    try {
      int rc;
      if (c.name == "poset") {
        rc = cmd_poset(c, out);
      } else if (c.name == "ideal-contains") {
        rc = cmd_ideal_contains(c, out);
      } else if (c.name == "ideal-normalize") {
        rc = cmd_ideal_normalize(c, out);
      } else if (c.name == "confining-verify") {
        rc = cmd_confining_verify(c, out);
      } else if (c.name == "ideal-of") {
        rc = cmd_ideal_of(c, out);
      } else if (c.name == "word-length") {
        rc = cmd_word_length(c, out);
      } else if (c.name == "tree-ball") {
        rc = cmd_tree_ball(c, out);
      } else if (c.name == "h2") {
        rc = cmd_h2(c, out);
      } else if (c.name == "wreath-qi") {
        rc = cmd_wreath_qi(c, out);
      } else if (c.name == "wreath-separation") {
        rc = cmd_wreath_separation(c, out);
      } else if (c.name == "nadic-arith") {
        rc = cmd_nadic_arith(c, out);
      } else {
        throw UsageError("unknown subcommand '" + c.name + "'");
      }
      if (c.meta) {
        auto now = std::chrono::system_clock::now();
        auto secs =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
        err << json{{"subcommand", c.name}, {"params", c.params}, {"unix_time", secs}}.dump()
            << '\n';
      }
      return rc;
    } catch (UsageError const& e) {
      err << e.what() << '\n';
      return 2;
    } catch (Error const& e) {
      err << e.what() << '\n';
      return 1;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }

  int run(std::vector<std::string> const& argv, std::ostream& out, std::ostream& err) {
    Command c;
    try {
      c = parse(argv);
    } catch (UsageError const& e) {
      err << e.what() << '\n';
      return 2;
    }
    return execute(c, out, err);
  }

}  // namespace bsconf::cli
