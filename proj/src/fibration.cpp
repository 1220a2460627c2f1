#include "lefcalc/fibration.hpp"

namespace lefcalc {

LefschetzData make_fibration(Base base, SurfaceSig fiber, GeneratorSystem sys,
                             std::vector<Curve> cycles, std::string label) {
  if (base == Base::Sphere && fiber.boundary_components != 0) {
    throw MathError("open-fiber-over-sphere",
                    "a Sphere-base fibration needs a closed fiber");
  }
  if (base == Base::Sphere && cycles.empty()) {
    throw MathError("empty-factorization",
                    "a Sphere-base fibration needs at least one cycle");
  }
  const std::size_t n = 2 * static_cast<std::size_t>(fiber.genus);
  for (const Curve& c : cycles) {
    if (c.cls.size() != n) {
      throw std::invalid_argument("cycle '" + c.name +
                                  "' class length does not match fiber genus");
    }
  }
  return LefschetzData{base, fiber, std::move(sys), std::move(cycles),
                       std::move(label)};
}

SympMatrix total_monodromy(const LefschetzData& lf) {
  const std::size_t n = 2 * static_cast<std::size_t>(lf.fiber.genus);
  SympMatrix m = SympMatrix::identity(n);
  for (const Curve& c : lf.cycles) {
    m = transvection(c.cls, +1) * m;
  }
  return m;
}

ValidationReport validate(const LefschetzData& lf) {
  ValidationReport report;
  bool all_essential = true;
  for (std::size_t i = 0; i < lf.cycles.size(); ++i) {
    const HomologyClass& cls = lf.cycles[i].cls;
    bool zero = true;
    for (const Int& v : cls) {
      if (v != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      report.failures.push_back({i, "inessential"});
      all_essential = false;
    } else if (!is_primitive(cls)) {
      report.failures.push_back({i, "non-primitive"});
      all_essential = false;
    }
  }
  report.simplified = report.failures.empty();

  if (lf.base == Base::Sphere) {
    report.closure_checked = true;
    SympMatrix m = total_monodromy(lf);
    report.closure_identity = m.is_identity();
    if (!report.closure_identity) report.closure_defect = std::move(m);
  }

  report.gompf_necessary = (lf.fiber.genus >= 1 && all_essential)
                               ? GompfStatus::Satisfied
                               : GompfStatus::Unknown;
  return report;
}

long long euler_characteristic(const LefschetzData& lf) {
  long long chi_f =
      2 - 2 * static_cast<long long>(lf.fiber.genus) - lf.fiber.boundary_components;
  long long n = static_cast<long long>(lf.cycles.size());
  return (lf.base == Base::Sphere) ? 2 * chi_f + n : chi_f + n;
}

LefschetzData hurwitz_move(const LefschetzData& lf, std::size_t i,
                           HurwitzDir dir) {
  if (i + 1 >= lf.cycles.size()) {
    throw std::out_of_range("hurwitz_move: index " + std::to_string(i) +
                            " out of range");
  }
  LefschetzData out = lf;
  const Curve& ci = lf.cycles[i];
  const Curve& cj = lf.cycles[i + 1];
  Int pairing = intersection_number(ci.cls, cj.cls);
  if (dir == HurwitzDir::Left) {
    // (c_i, c_{i+1}) -> (c_{i+1}, c_i + <c_i, c_{i+1}> c_{i+1})
    Curve moved = ci;
    moved.name = ci.name + "'";
    for (std::size_t k = 0; k < moved.cls.size(); ++k) {
      moved.cls[k] += pairing * cj.cls[k];
    }
    out.cycles[i] = cj;
    out.cycles[i + 1] = std::move(moved);
  } else {
    // (c_i, c_{i+1}) -> (c_{i+1} - <c_{i+1}, c_i> c_i, c_i)
    Curve moved = cj;
    moved.name = cj.name + "'";
    for (std::size_t k = 0; k < moved.cls.size(); ++k) {
      moved.cls[k] += pairing * ci.cls[k];  // -<c_{i+1},c_i> = +<c_i,c_{i+1}>
    }
    out.cycles[i] = std::move(moved);
    out.cycles[i + 1] = ci;
  }
  return out;
}

}  // namespace lefcalc
