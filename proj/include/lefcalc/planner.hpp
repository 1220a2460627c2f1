#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefcalc/fibration.hpp"

namespace lefcalc {

enum class TargetKind { ClosedPencil, WeinsteinDL3 };

// Embedding target at homology level: the fiber, the reference vanishing
// cycle every input cycle is conjugated to, and the curve system whose
// twists the ambient model makes conjugatable.
struct TargetModel {
  TargetKind kind = TargetKind::ClosedPencil;
  SurfaceSig fiber;
  Curve reference_cycle;
  GeneratorSystem conjugatable;
};

// Closed-pencil target of genus g; the reference class defaults to [a1]
// and is configurable. g = 1 uses the torus system.
TargetModel closed_pencil_target(
    int g, const std::optional<HomologyClass>& reference = std::nullopt);

// Disk-bundle target: one boundary component, conjugatable curves exactly
// c1, c2, a1, b1, ..., a_{g-1}, b_{g-1}, a_g, reference cycle a1.
TargetModel weinstein_dl3_target(int g);

// Genus-1 Sphere-base factorization (a, b) repeated six times.
LefschetzData torus22_model();

// Genus-2 Sphere-base chain factorization (c1..c5)^6 with chain classes
// a1, b1, a1+a2, b2, a2.
LefschetzData genus2_chain_model();

// Disk-base factorization of the disk bundle of degree -3 over the sphere:
// fiber of genus g with one boundary component, cycles
// c1, c2, a1, b1, ..., a_{g-1}, b_{g-1}, a_g.
LefschetzData dl3_model(int g);

struct FlexibilityEntry {
  unsigned prime = 2;
  SubgroupOrder result;
  Int expected_order;  // |Sp(2g, F_p)|
};

// Mod-p generation check for the conjugatable twists. Fullness for every
// tested prime is a necessary condition for generation over Z, never a
// proof; reports carry that caveat verbatim.
struct FlexibilityReport {
  std::vector<FlexibilityEntry> entries;
  bool all_full = false;
  bool any_inconclusive = false;
  std::string caveat = "necessary condition";
};

FlexibilityReport flexibility_witness(const TargetModel& target,
                                      const std::vector<unsigned>& primes,
                                      std::uint64_t cap = kDefaultBfsCap);

struct CertificateEntry {
  std::size_t index = 0;
  HomologyClass cycle_class;
  SympMatrix conjugator;  // U with U * class = reference class
  std::optional<TwistWord> word;  // reserved for exact torus-case words
};

// Machine-checkable shadow of the embedding construction: one symplectic
// conjugator per critical point plus the global checks. Carries matrices,
// not isotopies; the fidelity field says so.
struct EmbeddingCertificate {
  TargetModel target;
  std::vector<CertificateEntry> entries;
  bool closure_identity = false;  // meaningful for the closed case
  int fiber_genus = 0;
  bool genus_warning = false;  // Weinstein case with genus exactly 2
  FlexibilityReport flexibility;
  std::string fidelity = "homology-level";
};

// Closed case: Sphere base, closed fiber of genus >= 2, simplified, total
// monodromy the identity. Every cycle gets a conjugator onto the reference
// class. Deterministic.
EmbeddingCertificate plan_closed_embedding(const LefschetzData& lf);

// Disk case: one boundary component, genus >= 2 (warn at 2). Optional
// identification words are certified d-free via the boundary-prefix
// extraction before planning.
EmbeddingCertificate plan_weinstein_embedding(
    const LefschetzData& lf,
    const std::vector<TwistWord>& identification_words = {});

// Re-derives every certificate postcondition from the certificate alone:
// each conjugator is symplectic and carries its cycle class to the
// reference class. On failure `why` names the first failing entry.
bool verify_certificate(const EmbeddingCertificate& cert,
                        std::string* why = nullptr);

}  // namespace lefcalc
