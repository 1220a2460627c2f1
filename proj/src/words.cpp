#include "lefcalc/words.hpp"

#include <algorithm>

namespace lefcalc {

namespace {

std::pair<std::string, std::string> norm_pair(const std::string& a,
                                              const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void check_system(const TwistWord& w, const GeneratorSystem& sys) {
  if (w.system != sys.id) {
    throw MathError("system-mismatch", "word over system '" + w.system +
                                           "' used with system '" + sys.id +
                                           "'");
  }
}

}  // namespace

const Curve& GeneratorSystem::curve(const std::string& name) const {
  auto it = curves.find(name);
  if (it == curves.end()) {
    throw MathError("unknown-curve",
                    "curve '" + name + "' not in system '" + id + "'");
  }
  return it->second;
}

bool GeneratorSystem::has_curve(const std::string& name) const {
  return curves.count(name) != 0;
}

bool GeneratorSystem::disjoint(const std::string& a,
                               const std::string& b) const {
  return disjoint_pairs.count(norm_pair(a, b)) != 0;
}

void GeneratorSystem::add_disjoint(const std::string& a,
                                   const std::string& b) {
  if (a == b) throw std::invalid_argument("curve paired with itself: " + a);
  if (!has_curve(a) || !has_curve(b)) {
    throw std::invalid_argument("disjoint pair names unknown curve");
  }
  disjoint_pairs.insert(norm_pair(a, b));
}

GeneratorSystem torus_system() {
  GeneratorSystem sys;
  sys.id = "torus";
  sys.surface = make_surface(1, 0);
  sys.curves["a"] = Curve{"a", {1, 0}, sys.surface};
  sys.curves["b"] = Curve{"b", {0, 1}, sys.surface};
  return sys;
}

GeneratorSystem humphries_system(int g, bool with_boundary,
                                 const std::optional<HomologyClass>& c1_class,
                                 const std::optional<HomologyClass>& c2_class) {
  if (g < 2) {
    throw MathError("unsupported-genus",
                    "humphries_system needs genus >= 2; use torus_system() "
                    "for genus 1");
  }
  GeneratorSystem sys;
  sys.id = "humphries-g" + std::to_string(g) + (with_boundary ? "-b" : "");
  sys.surface = make_surface(g, with_boundary ? 1 : 0);
  const std::size_t n = 2 * static_cast<std::size_t>(g);

  auto basis = [n](std::size_t k) {
    HomologyClass v(n, 0);
    v[k] = 1;
    return v;
  };
  std::vector<std::string> a_names, b_names;
  for (int i = 1; i <= g; ++i) {
    std::string an = "a" + std::to_string(i);
    std::string bn = "b" + std::to_string(i);
    sys.curves[an] = Curve{an, basis(2 * (i - 1)), sys.surface};
    sys.curves[bn] = Curve{bn, basis(2 * (i - 1) + 1), sys.surface};
    a_names.push_back(an);
    b_names.push_back(bn);
  }

  HomologyClass c1(n, 0), c2(n, 0);
  c1[1] = 1;
  c1[3] = 1;  // b1 + b2
  c2[2 * (g - 2) + 1] = 1;
  c2[2 * (g - 1) + 1] = 1;  // b_{g-1} + b_g
  if (c1_class) c1 = *c1_class;
  if (c2_class) c2 = *c2_class;
  if (c1.size() != n || c2.size() != n) {
    throw std::invalid_argument("c1/c2 class length mismatch");
  }
  sys.curves["c1"] = Curve{"c1", c1, sys.surface};
  sys.curves["c2"] = Curve{"c2", c2, sys.surface};

  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (i != j) {
        sys.add_disjoint(a_names[i], a_names[j]);
        sys.add_disjoint(a_names[i], b_names[j]);
        if (i < j) sys.add_disjoint(b_names[i], b_names[j]);
      }
    }
  }

  if (with_boundary) {
    sys.curves["d"] = Curve{"d", HomologyClass(n, 0), sys.surface};
    for (const auto& [name, curve] : sys.curves) {
      if (name != "d") sys.add_disjoint("d", name);
    }
  }
  return sys;
}

TwistWord free_reduce(const TwistWord& w) {
  TwistWord out;
  out.system = w.system;
  for (const TwistLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().curve == l.curve &&
        out.letters.back().exponent == -l.exponent) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

TwistWord word_inverse(const TwistWord& w) {
  TwistWord out;
  out.system = w.system;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back({it->curve, -it->exponent});
  }
  return out;
}

TwistWord word_concat(const TwistWord& u, const TwistWord& w) {
  if (u.system != w.system) {
    throw MathError("system-mismatch", "cannot concatenate words over '" +
                                           u.system + "' and '" + w.system +
                                           "'");
  }
  TwistWord out = u;
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

SympMatrix homology_action(const TwistWord& w, const GeneratorSystem& sys) {
  check_system(w, sys);
  const std::size_t n = 2 * static_cast<std::size_t>(sys.surface.genus);
  SympMatrix m = SympMatrix::identity(n);
  for (const TwistLetter& l : w.letters) {
    m = transvection(sys.curve(l.curve).cls, l.exponent) * m;
  }
  return m;
}

TwistWord commute_disjoint(const TwistWord& w, std::size_t i,
                           const GeneratorSystem& sys) {
  check_system(w, sys);
  if (i + 1 >= w.letters.size()) {
    throw std::out_of_range("commute_disjoint: index " + std::to_string(i) +
                            " out of range");
  }
  const std::string& ca = w.letters[i].curve;
  const std::string& cb = w.letters[i + 1].curve;
  sys.curve(ca);
  sys.curve(cb);
  // same curve commutes with itself trivially
  if (ca != cb && !sys.disjoint(ca, cb)) {
    throw MathError("illegal-move", "curves '" + ca + "' and '" + cb +
                                        "' are not declared disjoint");
  }
  TwistWord out = w;
  std::swap(out.letters[i], out.letters[i + 1]);
  return out;
}

BoundaryPrefix extract_boundary_prefix(const TwistWord& w,
                                       const GeneratorSystem& sys) {
  check_system(w, sys);
  if (!sys.has_curve("d")) {
    throw MathError("not-a-boundary-system",
                    "system '" + sys.id + "' has no boundary curve d");
  }
  BoundaryPrefix out;
  out.psi.system = w.system;
  for (const TwistLetter& l : w.letters) {
    sys.curve(l.curve);
    if (l.curve == "d") {
      out.k += l.exponent;
    } else {
      out.psi.letters.push_back(l);
    }
  }
  return out;
}

}  // namespace lefcalc
