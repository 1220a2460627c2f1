#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "lefcalc/errors.hpp"

namespace lefcalc {

// Matrix entries are arbitrary precision: a product of ~30 transvections
// already overflows 64-bit entries.
using Int = boost::multiprecision::cpp_int;

// Fiber surface: closed (boundary_components = 0) or with one boundary
// component. Nothing else occurs.
struct SurfaceSig {
  int genus = 0;
  int boundary_components = 0;

  bool operator==(const SurfaceSig&) const = default;
};

SurfaceSig make_surface(int genus, int boundary_components);

// Element of H_1 of the fiber in the ordered basis (a1, b1, ..., ag, bg).
using HomologyClass = std::vector<Int>;

// Dense square integer matrix. Used both for symplectic matrices (checked
// via is_symplectic) and for candidates under test.
class SympMatrix {
 public:
  SympMatrix() = default;
  explicit SympMatrix(std::size_t n) : n_(n), e_(n * n) {}
  static SympMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  SympMatrix operator*(const SympMatrix& rhs) const;
  HomologyClass apply(const HomologyClass& v) const;
  SympMatrix transposed() const;
  bool is_identity() const;

  bool operator==(const SympMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Int> e_;
};

// Matrix over F_p, entries reduced to [0, p). Finite witness arithmetic.
struct ModPMatrix {
  unsigned p = 2;
  std::size_t n = 0;
  std::vector<std::uint8_t> e;

  static ModPMatrix reduce(const SympMatrix& m, unsigned p);
  ModPMatrix operator*(const ModPMatrix& rhs) const;
  bool preserves_form() const;  // M^T J M = J mod p

  bool operator==(const ModPMatrix&) const = default;
};

// Algebraic intersection pairing: sum_i (x_ai * y_bi - x_bi * y_ai).
Int intersection_number(const HomologyClass& x, const HomologyClass& y);

// Picard-Lefschetz transvection of the class c: x -> x + sign*<x,c>*c.
// Positive sign is the homological action of a positive (left-handed)
// Dehn twist in the convention fixed here once and for all.
SympMatrix transvection(const HomologyClass& c, int sign = +1);

// M^T J M = J with J block-diagonal in the (a_i, b_i) ordering.
bool is_symplectic(const SympMatrix& m);

// Inverse of a symplectic matrix via M^{-1} = -J M^T J. Only valid for
// symplectic input.
SympMatrix symplectic_inverse(const SympMatrix& m);

// gcd of entries is 1. The zero vector is not primitive.
bool is_primitive(const HomologyClass& x);

// Deterministic symplectic U with U*v = e1 = [a1], built from per-block
// SL2 reduction followed by cross-block gcd merging. Throws MathError on
// non-primitive input. Returns the identity for v = e1.
SympMatrix map_primitive_to_e1(const HomologyClass& v);

// |Sp(2g, F_p)| = p^{g^2} * prod_{i=1..g} (p^{2i} - 1).
Int sp_group_order(int g, unsigned p);

struct SubgroupOrder {
  std::uint64_t order = 0;
  bool full = false;
  bool inconclusive = false;  // BFS cap exceeded; order is a partial count
};

inline constexpr std::uint64_t kDefaultBfsCap = 5'000'000;  // covers Sp(6,F2)

// Exhaustive BFS closure of the generators reduced mod p. Deterministic
// order count; `full` compares against sp_group_order. When the closure
// exceeds `cap` the result is flagged inconclusive, never silently cut.
SubgroupOrder subgroup_order_mod_p(const std::vector<SympMatrix>& gens,
                                   unsigned p,
                                   std::uint64_t cap = kDefaultBfsCap);

}  // namespace lefcalc
