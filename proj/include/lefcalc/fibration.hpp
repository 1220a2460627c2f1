#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefcalc/words.hpp"

namespace lefcalc {

enum class Base { Disk, Sphere };

enum class GompfStatus { Satisfied, Unknown };

// Positive monodromy factorization: ordered vanishing cycles, each a
// positive Dehn twist, over a Disk or Sphere base. Cycle order is the
// counterclockwise order of the (implicit) critical values.
struct LefschetzData {
  Base base = Base::Disk;
  SurfaceSig fiber;
  GeneratorSystem system;  // ambient curve system; moved cycles may leave it
  std::vector<Curve> cycles;
  std::string label;
};

// Checks the structural invariants and returns the data unchanged.
// Sphere base forces a closed fiber and a nonempty factorization.
LefschetzData make_fibration(Base base, SurfaceSig fiber, GeneratorSystem sys,
                             std::vector<Curve> cycles, std::string label);

struct ValidationReport {
  struct Failure {
    std::size_t index;
    std::string reason;
  };
  bool simplified = true;
  std::vector<Failure> failures;
  bool closure_checked = false;   // Sphere base only
  bool closure_identity = false;
  std::optional<SympMatrix> closure_defect;  // total monodromy when not Id
  GompfStatus gompf_necessary = GompfStatus::Unknown;
};

// Reports, never throws, on mathematical failures: inessential or
// non-primitive cycles, closure defect over the Sphere. The Gompf verdict
// is a necessary-condition heuristic only.
ValidationReport validate(const LefschetzData& lf);

// Product of the positive transvections in listed order, leftmost first.
SympMatrix total_monodromy(const LefschetzData& lf);

// Sphere base: 2*chi(F) + n; Disk base: chi(F) + n.
long long euler_characteristic(const LefschetzData& lf);

enum class HurwitzDir { Left, Right };

// Elementary Hurwitz move at index i. Left sends (c_i, c_{i+1}) to
// (c_{i+1}, c_i') with [c_i'] = [c_i] + <c_i,c_{i+1}>[c_{i+1}]; Right sends
// it to (c_{i+1}'', c_i) with [c_{i+1}''] = [c_{i+1}] - <c_{i+1},c_i>[c_i].
// Signs are forced by the leftmost-acts-first composition order; total
// monodromy is unchanged exactly, and right after left at the same index
// restores the original classes. Moved cycles get a generated name and
// lose disjointness data.
LefschetzData hurwitz_move(const LefschetzData& lf, std::size_t i,
                           HurwitzDir dir);

}  // namespace lefcalc
