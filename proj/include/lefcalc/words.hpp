#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lefcalc/homology.hpp"

namespace lefcalc {

struct Curve {
  std::string name;
  HomologyClass cls;
  SurfaceSig surface;

  bool operator==(const Curve&) const = default;
};

// Named curve system on a fixed surface, with a symmetric set of pairs
// declared geometrically disjoint. Words are always relative to one system;
// cross-system composition is rejected, never coerced.
struct GeneratorSystem {
  std::string id;
  SurfaceSig surface;
  std::map<std::string, Curve> curves;
  std::set<std::pair<std::string, std::string>> disjoint_pairs;  // normalized

  const Curve& curve(const std::string& name) const;
  bool has_curve(const std::string& name) const;
  bool disjoint(const std::string& a, const std::string& b) const;
  void add_disjoint(const std::string& a, const std::string& b);

  bool operator==(const GeneratorSystem&) const = default;
};

struct TwistLetter {
  std::string curve;
  int exponent = +1;  // +1 or -1

  bool operator==(const TwistLetter&) const = default;
};

struct TwistWord {
  std::string system;  // id of the ambient GeneratorSystem
  std::vector<TwistLetter> letters;

  bool operator==(const TwistWord&) const = default;
};

// Two-curve torus system {a, b} with classes (1,0), (0,1).
GeneratorSystem torus_system();

// Humphries system a1..ag, b1..bg, c1, c2 (plus d when with_boundary) for
// g >= 2. The classes of c1, c2 default to b1+b2 and b_{g-1}+b_g; callers
// may override because the curves' picture fixes them only up to convention.
// [d] = 0: the boundary-parallel twist acts trivially on homology.
GeneratorSystem humphries_system(
    int g, bool with_boundary,
    const std::optional<HomologyClass>& c1_class = std::nullopt,
    const std::optional<HomologyClass>& c2_class = std::nullopt);

// Deletes adjacent inverse pairs until none remain.
TwistWord free_reduce(const TwistWord& w);

TwistWord word_inverse(const TwistWord& w);
TwistWord word_concat(const TwistWord& u, const TwistWord& w);

// Product M_n ... M_2 M_1 of transvections, leftmost letter acting first
// (leftmost letter = rightmost matrix factor).
SympMatrix homology_action(const TwistWord& w, const GeneratorSystem& sys);

// Swaps letters i and i+1; legal only for curves declared disjoint (or the
// same curve). The mapping class is unchanged.
TwistWord commute_disjoint(const TwistWord& w, std::size_t i,
                           const GeneratorSystem& sys);

struct BoundaryPrefix {
  long long k = 0;  // net exponent of the boundary twist
  TwistWord psi;    // w with all d-letters deleted
};

// Pulls every d-letter to the front (d is disjoint from everything) and
// returns the net boundary exponent together with the d-free remainder.
BoundaryPrefix extract_boundary_prefix(const TwistWord& w,
                                       const GeneratorSystem& sys);

}  // namespace lefcalc
