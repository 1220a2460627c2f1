#include "lefcalc/planner.hpp"

namespace lefcalc {

TargetModel closed_pencil_target(int g,
                                 const std::optional<HomologyClass>& reference) {
  if (g < 1) throw MathError("unsupported-genus", "closed target needs g >= 1");
  TargetModel t;
  t.kind = TargetKind::ClosedPencil;
  t.fiber = make_surface(g, 0);
  t.conjugatable = (g == 1) ? torus_system() : humphries_system(g, false);
  HomologyClass ref(2 * static_cast<std::size_t>(g), 0);
  ref[0] = 1;  // [a1]
  if (reference) ref = *reference;
  if (ref.size() != 2 * static_cast<std::size_t>(g) || !is_primitive(ref)) {
    throw MathError("bad-reference", "reference class must be primitive of length 2g");
  }
  t.reference_cycle = Curve{"ref", ref, t.fiber};
  return t;
}

TargetModel weinstein_dl3_target(int g) {
  if (g < 2) throw MathError("unsupported-genus", "DL(-3) target needs g >= 2");
  TargetModel t;
  t.kind = TargetKind::WeinsteinDL3;
  t.fiber = make_surface(g, 1);
  GeneratorSystem full = humphries_system(g, true);
  // conjugatable subset: c1, c2, a1, b1, ..., a_{g-1}, b_{g-1}, a_g
  GeneratorSystem sub;
  sub.id = full.id + "-dl3";
  sub.surface = full.surface;
  auto take = [&](const std::string& name) {
    sub.curves[name] = full.curve(name);
  };
  take("c1");
  take("c2");
  for (int i = 1; i < g; ++i) {
    take("a" + std::to_string(i));
    take("b" + std::to_string(i));
  }
  take("a" + std::to_string(g));
  t.conjugatable = std::move(sub);
  t.reference_cycle = full.curve("a1");
  return t;
}

LefschetzData torus22_model() {
  GeneratorSystem sys = torus_system();
  std::vector<Curve> cycles;
  for (int rep = 0; rep < 6; ++rep) {
    cycles.push_back(sys.curve("a"));
    cycles.push_back(sys.curve("b"));
  }
  return make_fibration(Base::Sphere, sys.surface, sys, std::move(cycles),
                        "torus22");
}

LefschetzData genus2_chain_model() {
  GeneratorSystem sys;
  sys.id = "chain-g2";
  sys.surface = make_surface(2, 0);
  const std::vector<std::pair<std::string, HomologyClass>> chain = {
      {"c1", {1, 0, 0, 0}},  // a1
      {"c2", {0, 1, 0, 0}},  // b1
      {"c3", {1, 0, 1, 0}},  // a1 + a2
      {"c4", {0, 0, 0, 1}},  // b2
      {"c5", {0, 0, 1, 0}},  // a2
  };
  for (const auto& [name, cls] : chain) {
    sys.curves[name] = Curve{name, cls, sys.surface};
  }
  std::vector<Curve> cycles;
  for (int rep = 0; rep < 6; ++rep) {
    for (const auto& [name, cls] : chain) cycles.push_back(sys.curve(name));
  }
  return make_fibration(Base::Sphere, sys.surface, sys, std::move(cycles),
                        "genus2-chain");
}

LefschetzData dl3_model(int g) {
  if (g < 2) throw MathError("unsupported-genus", "dl3_model needs g >= 2");
  GeneratorSystem sys = humphries_system(g, true);
  std::vector<Curve> cycles;
  cycles.push_back(sys.curve("c1"));
  cycles.push_back(sys.curve("c2"));
  for (int i = 1; i < g; ++i) {
    cycles.push_back(sys.curve("a" + std::to_string(i)));
    cycles.push_back(sys.curve("b" + std::to_string(i)));
  }
  cycles.push_back(sys.curve("a" + std::to_string(g)));
  return make_fibration(Base::Disk, sys.surface, sys, std::move(cycles),
                        "dl3-g" + std::to_string(g));
}

FlexibilityReport flexibility_witness(const TargetModel& target,
                                      const std::vector<unsigned>& primes,
                                      std::uint64_t cap) {
  std::vector<SympMatrix> gens;
  for (const auto& [name, curve] : target.conjugatable.curves) {
    gens.push_back(transvection(curve.cls, +1));
  }
  FlexibilityReport report;
  report.all_full = true;
  for (unsigned p : primes) {
    FlexibilityEntry entry;
    entry.prime = p;
    entry.expected_order = sp_group_order(target.fiber.genus, p);
    entry.result = subgroup_order_mod_p(gens, p, cap);
    report.all_full = report.all_full && entry.result.full;
    report.any_inconclusive =
        report.any_inconclusive || entry.result.inconclusive;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

// U_i = R * map_primitive_to_e1([nu_i]) with R a fixed symplectic carrying
// e1 to the reference class.
SympMatrix conjugator_onto(const HomologyClass& cycle,
                           const HomologyClass& reference) {
  SympMatrix to_e1 = map_primitive_to_e1(cycle);
  SympMatrix ref_to_e1 = map_primitive_to_e1(reference);
  return symplectic_inverse(ref_to_e1) * to_e1;
}

void require_simplified(const ValidationReport& report) {
  if (!report.simplified) {
    throw MathError("not-simplified",
                    "cycle " + std::to_string(report.failures.front().index) +
                        ": " + report.failures.front().reason);
  }
}

std::vector<CertificateEntry> build_entries(const LefschetzData& lf,
                                            const HomologyClass& reference) {
  std::vector<CertificateEntry> entries;
  entries.reserve(lf.cycles.size());
  for (std::size_t i = 0; i < lf.cycles.size(); ++i) {
    CertificateEntry e;
    e.index = i;
    e.cycle_class = lf.cycles[i].cls;
    e.conjugator = conjugator_onto(e.cycle_class, reference);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

EmbeddingCertificate plan_closed_embedding(const LefschetzData& lf) {
  if (lf.base != Base::Sphere) {
    throw MathError("wrong-base", "closed planner needs a Sphere base");
  }
  if (lf.fiber.boundary_components != 0) {
    throw MathError("wrong-fiber", "closed planner needs a closed fiber");
  }
  if (lf.fiber.genus < 2) {
    throw MathError("genus-too-small", "genus >= 2 required");
  }
  ValidationReport report = validate(lf);
  require_simplified(report);
  if (!report.closure_identity) {
    throw MathError("not-a-closed-fibration",
                    "total monodromy is not the identity");
  }

  EmbeddingCertificate cert;
  cert.target = closed_pencil_target(lf.fiber.genus);
  cert.entries = build_entries(lf, cert.target.reference_cycle.cls);
  cert.closure_identity = true;
  cert.fiber_genus = lf.fiber.genus;
  cert.flexibility = flexibility_witness(cert.target, {2});
  return cert;
}

EmbeddingCertificate plan_weinstein_embedding(
    const LefschetzData& lf, const std::vector<TwistWord>& identification_words) {
  if (lf.base != Base::Disk) {
    throw MathError("wrong-base", "Weinstein planner needs a Disk base");
  }
  if (lf.fiber.boundary_components != 1) {
    throw MathError("wrong-fiber",
                    "Weinstein planner needs a fiber with one boundary "
                    "component");
  }
  if (lf.fiber.genus < 2) {
    throw MathError("genus-too-small", "genus >= 2 required");
  }
  ValidationReport report = validate(lf);
  require_simplified(report);

  // Identification words must be expressible without the boundary twist.
  GeneratorSystem boundary_sys = humphries_system(lf.fiber.genus, true);
  for (const TwistWord& w : identification_words) {
    BoundaryPrefix bp = extract_boundary_prefix(w, boundary_sys);
    if (bp.k != 0 || bp.psi.letters.size() != w.letters.size()) {
      throw MathError("d-letters-present",
                      "identification word contains boundary twists");
    }
  }

  EmbeddingCertificate cert;
  cert.target = weinstein_dl3_target(lf.fiber.genus);
  cert.entries = build_entries(lf, cert.target.reference_cycle.cls);
  cert.closure_identity = false;
  cert.fiber_genus = lf.fiber.genus;
  cert.genus_warning = (lf.fiber.genus == 2);
  cert.flexibility = flexibility_witness(cert.target, {2});
  return cert;
}

bool verify_certificate(const EmbeddingCertificate& cert, std::string* why) {
  const HomologyClass& ref = cert.target.reference_cycle.cls;
  for (const CertificateEntry& e : cert.entries) {
    if (e.conjugator.size() != ref.size() || e.cycle_class.size() != ref.size()) {
      if (why) *why = "entry " + std::to_string(e.index) + ": size mismatch";
      return false;
    }
    if (!is_symplectic(e.conjugator)) {
      if (why) {
        *why = "entry " + std::to_string(e.index) +
               ": conjugator is not symplectic";
      }
      return false;
    }
    if (e.conjugator.apply(e.cycle_class) != ref) {
      if (why) {
        *why = "entry " + std::to_string(e.index) +
               ": conjugator does not carry the cycle class to the reference";
      }
      return false;
    }
    if (e.word) {
      SympMatrix action = homology_action(*e.word, cert.target.conjugatable);
      if (!(action == e.conjugator)) {
        if (why) {
          *why = "entry " + std::to_string(e.index) +
                 ": word realization does not match the conjugator";
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace lefcalc
