#include "lefcalc/homology.hpp"

#include <deque>
#include <string>
#include <unordered_set>
#include <utility>

namespace lefcalc {

namespace {

void require_even(std::size_t n) {
  if (n % 2 != 0) {
    throw std::invalid_argument("homology class length must be even, got " +
                                std::to_string(n));
  }
}

}  // namespace

SurfaceSig make_surface(int genus, int boundary_components) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  if (boundary_components != 0 && boundary_components != 1) {
    throw std::invalid_argument("boundary_components must be 0 or 1");
  }
  return SurfaceSig{genus, boundary_components};
}

SympMatrix SympMatrix::identity(std::size_t n) {
  SympMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SympMatrix SympMatrix::operator*(const SympMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
  SympMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

HomologyClass SympMatrix::apply(const HomologyClass& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector size mismatch");
  HomologyClass out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

SympMatrix SympMatrix::transposed() const {
  SympMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool SympMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Int intersection_number(const HomologyClass& x, const HomologyClass& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("intersection_number: length mismatch " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
  require_even(x.size());
  Int s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    s += x[i] * y[i + 1] - x[i + 1] * y[i];
  }
  return s;
}

SympMatrix transvection(const HomologyClass& c, int sign) {
  require_even(c.size());
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("transvection sign must be +1 or -1");
  }
  const std::size_t n = c.size();
  SympMatrix m = SympMatrix::identity(n);
  // column j of the map x -> x + sign*<x,c>*c is e_j + sign*<e_j,c>*c
  for (std::size_t j = 0; j < n; ++j) {
    // <e_j, c> is +c[j+1] on an a-coordinate, -c[j-1] on a b-coordinate
    Int pairing = (j % 2 == 0) ? c[j + 1] : -c[j - 1];
    if (pairing == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, j) += sign * pairing * c[i];
    }
  }
  return m;
}

namespace {

// <col_i, col_j> under the standard form, computed from matrix columns.
Int column_pairing(const SympMatrix& m, std::size_t i, std::size_t j) {
  Int s = 0;
  for (std::size_t k = 0; k + 1 < m.size(); k += 2) {
    s += m.at(k, i) * m.at(k + 1, j) - m.at(k + 1, i) * m.at(k, j);
  }
  return s;
}

}  // namespace

bool is_symplectic(const SympMatrix& m) {
  if (m.size() == 0 || m.size() % 2 != 0) return false;
  // M^T J M = J holds iff columns pair like the basis does.
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Int expect = (j == i + 1 && i % 2 == 0) ? 1 : 0;
      if (column_pairing(m, i, j) != expect) return false;
    }
  }
  return true;
}

SympMatrix symplectic_inverse(const SympMatrix& m) {
  const std::size_t n = m.size();
  // -J M^T J, with J the block matrix of [[0,1],[-1,0]] blocks.
  // (J x)_{a_i} = x_{b_i}, (J x)_{b_i} = -x_{a_i}.
  SympMatrix out(n);
  auto sgn = [](std::size_t k) { return k % 2 == 0 ? 1 : -1; };
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ip = (i % 2 == 0) ? i + 1 : i - 1;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t jp = (j % 2 == 0) ? j + 1 : j - 1;
      out.at(i, j) = Int(sgn(i)) * sgn(j) * m.at(jp, ip);
    }
  }
  return out;
}

bool is_primitive(const HomologyClass& x) {
  Int g = 0;
  for (const Int& v : x) g = boost::multiprecision::gcd(g, v);
  return g == 1;
}

namespace {

// Extended gcd: returns (d, p, q) with p*x + q*y = d, d >= 0.
struct ExtGcd {
  Int d, p, q;
};

ExtGcd ext_gcd(Int x, Int y) {
  Int old_r = x, r = y;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp;
    tmp = old_r - quot * r; old_r = r; r = tmp;
    tmp = old_s - quot * s; old_s = s; s = tmp;
    tmp = old_t - quot * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

// det-1 2x2 matrix A with A*(x,y)^T = (gcd(x,y), 0)^T; identity for (0,0).
struct Mat2 {
  Int a, b, c, d;
};

Mat2 gcd_reduce_2(const Int& x, const Int& y) {
  if (x == 0 && y == 0) return {1, 0, 0, 1};
  ExtGcd g = ext_gcd(x, y);
  return {g.p, g.q, -y / g.d, x / g.d};
}

}  // namespace

SympMatrix map_primitive_to_e1(const HomologyClass& v) {
  require_even(v.size());
  if (!is_primitive(v)) {
    throw MathError("non-primitive",
                    "map_primitive_to_e1 requires a primitive class");
  }
  const std::size_t n = v.size();
  const std::size_t g = n / 2;
  SympMatrix u = SympMatrix::identity(n);
  HomologyClass w = v;

  // Per-block SL2 reduction: (w_ai, w_bi) -> (gcd, 0). An SL2 block acting
  // on one (a_i, b_i) pair is symplectic.
  for (std::size_t i = 0; i < g; ++i) {
    Mat2 a = gcd_reduce_2(w[2 * i], w[2 * i + 1]);
    SympMatrix f = SympMatrix::identity(n);
    f.at(2 * i, 2 * i) = a.a;
    f.at(2 * i, 2 * i + 1) = a.b;
    f.at(2 * i + 1, 2 * i) = a.c;
    f.at(2 * i + 1, 2 * i + 1) = a.d;
    w = f.apply(w);
    u = f * u;
  }

  // Cross-block merge on the a-coordinates. A acting on (a_1, a_i) with
  // A^{-T} on (b_1, b_i) preserves the form; the b-coordinates are zero
  // here, so only the a-part moves w.
  for (std::size_t i = 1; i < g; ++i) {
    if (w[2 * i] == 0) continue;
    Mat2 a = gcd_reduce_2(w[0], w[2 * i]);
    SympMatrix f = SympMatrix::identity(n);
    f.at(0, 0) = a.a;
    f.at(0, 2 * i) = a.b;
    f.at(2 * i, 0) = a.c;
    f.at(2 * i, 2 * i) = a.d;
    // A^{-T} = [[d, -c], [-b, a]] for det 1
    f.at(1, 1) = a.d;
    f.at(1, 2 * i + 1) = -a.c;
    f.at(2 * i + 1, 1) = -a.b;
    f.at(2 * i + 1, 2 * i + 1) = a.a;
    w = f.apply(w);
    u = f * u;
  }

  // gcd of a primitive vector is 1, so w is exactly e1 now.
  return u;
}

Int sp_group_order(int g, unsigned p) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  Int order = boost::multiprecision::pow(Int(p), g * g);
  for (int i = 1; i <= g; ++i) {
    order *= boost::multiprecision::pow(Int(p), 2 * i) - 1;
  }
  return order;
}

ModPMatrix ModPMatrix::reduce(const SympMatrix& m, unsigned p) {
  ModPMatrix out;
  out.p = p;
  out.n = m.size();
  out.e.resize(out.n * out.n);
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = 0; j < out.n; ++j) {
      Int r = m.at(i, j) % p;
      if (r < 0) r += p;
      out.e[i * out.n + j] = static_cast<std::uint8_t>(r);
    }
  }
  return out;
}

ModPMatrix ModPMatrix::operator*(const ModPMatrix& rhs) const {
  ModPMatrix out;
  out.p = p;
  out.n = n;
  out.e.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      unsigned aik = e[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out.e[i * n + j] = static_cast<std::uint8_t>(
            (out.e[i * n + j] + aik * rhs.e[k * n + j]) % p);
      }
    }
  }
  return out;
}

bool ModPMatrix::preserves_form() const {
  auto pairing = [&](std::size_t i, std::size_t j) {
    unsigned s = 0;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
      s = (s + e[k * n + i] * e[(k + 1) * n + j]) % p;
      s = (s + p - (e[(k + 1) * n + i] * e[k * n + j]) % p) % p;
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      unsigned expect = (j == i + 1 && i % 2 == 0) ? 1 % p : 0;
      if (pairing(i, j) != expect) return false;
    }
  }
  return true;
}

namespace {

bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct KeyHash {
  std::size_t operator()(const std::string& k) const {
    return std::hash<std::string>{}(k);
  }
};

std::string key_of(const ModPMatrix& m) {
  return std::string(m.e.begin(), m.e.end());
}

}  // namespace

SubgroupOrder subgroup_order_mod_p(const std::vector<SympMatrix>& gens,
                                   unsigned p, std::uint64_t cap) {
  if (!is_small_prime(p)) {
    throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  }
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t n = gens.front().size();
  std::vector<ModPMatrix> g;
  for (const SympMatrix& m : gens) {
    if (m.size() != n) throw std::invalid_argument("generator size mismatch");
    if (!is_symplectic(m)) {
      throw std::invalid_argument("generator is not symplectic");
    }
    g.push_back(ModPMatrix::reduce(m, p));
  }

  // Monoid closure under the generators: finite, hence equals the group
  // they generate.
  ModPMatrix id = ModPMatrix::reduce(SympMatrix::identity(n), p);
  std::unordered_set<std::string, KeyHash> seen;
  std::deque<ModPMatrix> queue;
  seen.insert(key_of(id));
  queue.push_back(id);
  while (!queue.empty()) {
    ModPMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const ModPMatrix& gen : g) {
      ModPMatrix next = gen * cur;
      if (seen.insert(key_of(next)).second) {
        if (seen.size() > cap) {
          return {seen.size(), false, true};
        }
        queue.push_back(std::move(next));
      }
    }
  }
  SubgroupOrder out;
  out.order = seen.size();
  out.full = (Int(out.order) == sp_group_order(static_cast<int>(n / 2), p));
  out.inconclusive = false;
  return out;
}

}  // namespace lefcalc
