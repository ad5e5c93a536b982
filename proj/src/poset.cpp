#include "bsconf/poset.hpp"

#include <algorithm>
#include <sstream>

#include "bsconf/errors.hpp"

namespace bsconf {

  namespace {

    constexpr std::size_t kMaxPrimes = 12;

    // Strict order on structures of the same n.
    bool structure_less(HypStructure const& a, HypStructure const& b) {
      using K = HypStructure::Kind;
      if (a == b) {
        return false;
      }
      if (a.kind == K::Elliptic) {
        return true;
      }
      if (b.kind == K::Elliptic) {
        return false;
      }
      if (a.kind == K::Lineal) {
        return true;
      }
      if (b.kind == K::Lineal) {
        return false;
      }
      if (a.kind == K::Tree && b.kind == K::Tree) {
        // A < B iff the zero set of A is a proper subset of that of B.
        return (a.zero_mask & b.zero_mask) == a.zero_mask;
      }
      return false;
    }

  }  // namespace

  std::string HypStructure::id() const {
    switch (kind) {
      case Kind::Elliptic:
        return "elliptic";
      case Kind::Lineal:
        return "lineal";
      case Kind::Plane:
        return "plane";
      case Kind::Tree:
        return "tree_" + std::to_string(zero_mask);
    }
    return "?";
  }

  std::string HypStructure::label() const {
    switch (kind) {
      case Kind::Elliptic:
        return "point";
      case Kind::Lineal:
        return "line";
      case Kind::Plane:
        return "H2";
      case Kind::Tree: {
        std::string s = "T{";
        bool        first = true;
        for (int i = 0; i < 32; ++i) {
          if ((zero_mask >> i) & 1U) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
          }
        }
        return s + "}";
      }
    }
    return "?";
  }

  HypStructure structure_from_id(std::string const& id) {
    if (id == "elliptic") {
      return HypStructure::elliptic();
    }
    if (id == "lineal") {
      return HypStructure::lineal();
    }
    if (id == "plane") {
      return HypStructure::plane();
    }
    if (id.rfind("tree_", 0) == 0) {
      try {
        std::size_t used = 0;
        auto        mask = std::stoul(id.substr(5), &used);
        if (used == id.size() - 5 && mask != 0) {
          return HypStructure::tree(static_cast<std::uint32_t>(mask));
        }
      } catch (std::logic_error const&) {
      }
    }
    throw UnknownElement("'" + id + "'");
  }

  std::string to_string(Relation r) {
    switch (r) {
      case Relation::LessThan:
        return "LessThan";
      case Relation::GreaterThan:
        return "GreaterThan";
      case Relation::Equal:
        return "Equal";
      case Relation::Incomparable:
        return "Incomparable";
    }
    return "?";
  }

  HypPoset build_poset(std::uint64_t n) {
    HypPoset P;
    P._n       = n;
    P._factors = factorize(n);
    auto k     = P._factors.size();
    if (k > kMaxPrimes) {
      throw InvalidN(std::to_string(n) + " has more than " + std::to_string(kMaxPrimes)
                     + " prime factors");
    }
    P._elements = {HypStructure::elliptic(), HypStructure::lineal(), HypStructure::plane()};
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      P._elements.push_back(HypStructure::tree(mask));
    }
    auto N = P._elements.size();
    P._less.assign(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        P._less[i][j] = structure_less(P._elements[i], P._elements[j]);
      }
    }
    return P;
  }

  std::size_t HypPoset::index_of(HypStructure const& s) const {
    auto it = std::find(_elements.begin(), _elements.end(), s);
    if (it == _elements.end()) {
      throw UnknownElement(s.id() + " is not in H(BS(1," + std::to_string(_n) + "))");
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  Relation HypPoset::compare(HypStructure const& a, HypStructure const& b) const {
    auto i = index_of(a);
    auto j = index_of(b);
    if (i == j) {
      return Relation::Equal;
    }
    if (_less[i][j]) {
      return Relation::LessThan;
    }
    if (_less[j][i]) {
      return Relation::GreaterThan;
    }
    return Relation::Incomparable;
  }

  Relation compare(HypPoset const& P, HypStructure const& a, HypStructure const& b) {
    return P.compare(a, b);
  }

  std::vector<std::pair<std::size_t, std::size_t>> HypPoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto const                                       N = _elements.size();
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        if (!_less[i][j]) {
          continue;
        }
        bool cover = true;
        for (std::size_t m = 0; m < N && cover; ++m) {
          if (_less[i][m] && _less[m][j]) {
            cover = false;
          }
        }
        if (cover) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  std::string HypPoset::to_dot() const {
    std::ostringstream os;
    os << "digraph H {\n  rankdir=BT;\n  node [shape=box];\n";
    for (auto const& e : _elements) {
      os << "  " << e.id() << " [label=\"" << e.label() << "\"];\n";
    }
    for (auto const& [i, j] : covers()) {
      os << "  " << _elements[i].id() << " -> " << _elements[j].id() << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  nlohmann::json HypPoset::to_json() const {
    nlohmann::json j;
    j["n"]        = _n;
    auto elements = nlohmann::json::array();
    for (auto const& e : _elements) {
      elements.push_back(e.id());
    }
    j["elements"] = std::move(elements);
    auto covs     = nlohmann::json::array();
    for (auto const& [a, b] : covers()) {
      covs.push_back({a, b});
    }
    j["covers"] = std::move(covs);
    return j;
  }

  HypPoset HypPoset::from_json(nlohmann::json const& j) {
    HypPoset P;
    try {
      P._n       = j.at("n").get<std::uint64_t>();
      P._factors = factorize(P._n);
      for (auto const& e : j.at("elements")) {
        P._elements.push_back(structure_from_id(e.get<std::string>()));
      }
      auto const N = P._elements.size();
      P._less.assign(N, std::vector<bool>(N, false));
      for (auto const& c : j.at("covers")) {
        auto a = c.at(0).get<std::size_t>();
        auto b = c.at(1).get<std::size_t>();
        if (a >= N || b >= N) {
          throw ParseError("cover index out of range");
        }
        P._less[a][b] = true;
      }
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(e.what());
    }
    // Transitive closure of the cover relation.
    auto const N = P._elements.size();
    for (std::size_t m = 0; m < N; ++m) {
      for (std::size_t i = 0; i < N; ++i) {
        if (!P._less[i][m]) {
          continue;
        }
        for (std::size_t k = 0; k < N; ++k) {
          if (P._less[m][k]) {
            P._less[i][k] = true;
          }
        }
      }
    }
    return P;
  }

}  // namespace bsconf
