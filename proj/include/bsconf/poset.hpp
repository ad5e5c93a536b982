#pragma once

// The poset of hyperbolic structures on BS(1,n).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "bsconf/factor.hpp"

namespace bsconf {

  struct HypStructure {
    enum class Kind { Elliptic, Lineal, Plane, Tree };
    Kind          kind;
    std::uint32_t zero_mask = 0;  // Tree only: bit i-1 set iff i is in A

    static HypStructure elliptic() { return {Kind::Elliptic, 0}; }
    static HypStructure lineal() { return {Kind::Lineal, 0}; }
    static HypStructure plane() { return {Kind::Plane, 0}; }
    static HypStructure tree(std::uint32_t mask) { return {Kind::Tree, mask}; }

    bool        quasi_parabolic() const { return kind == Kind::Plane || kind == Kind::Tree; }
    std::string id() const;     // "elliptic", "lineal", "plane", "tree_<mask>"
    std::string label() const;  // "T{1,2}" style

    bool operator==(HypStructure const&) const = default;
  };

  // Inverse of HypStructure::id; throws UnknownElement.
  HypStructure structure_from_id(std::string const& id);

  enum class Relation { LessThan, GreaterThan, Equal, Incomparable };
  std::string to_string(Relation r);

  class HypPoset {
   public:
    std::uint64_t                     n() const noexcept { return _n; }
    std::vector<PrimePower> const&    factors() const noexcept { return _factors; }
    std::vector<HypStructure> const&  elements() const noexcept { return _elements; }
    // less(i, j): elements[i] < elements[j].
    bool                              less(std::size_t i, std::size_t j) const {
      return _less[i][j];
    }
    std::size_t index_of(HypStructure const& s) const;  // throws UnknownElement

    Relation compare(HypStructure const& a, HypStructure const& b) const;

    // Covering pairs (i, j) with elements[i] < elements[j], sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    std::string    to_dot() const;
    nlohmann::json to_json() const;
    static HypPoset from_json(nlohmann::json const& j);

    bool operator==(HypPoset const&) const = default;

    friend HypPoset build_poset(std::uint64_t n);

   private:
    std::uint64_t                  _n = 0;
    std::vector<PrimePower>        _factors;
    std::vector<HypStructure>      _elements;
    std::vector<std::vector<bool>> _less;
  };

  HypPoset build_poset(std::uint64_t n);

  Relation compare(HypPoset const& P, HypStructure const& a, HypStructure const& b);

}  // namespace bsconf
