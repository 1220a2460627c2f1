#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lefcalc/fibration.hpp"
#include "lefcalc/planner.hpp"

using namespace lefcalc;

namespace {

// Independent brute-force oracle: transvection product with plain int64
// arithmetic, written without the library's matrix code.
using OracleMat = std::vector<std::vector<long long>>;

OracleMat oracle_product(const std::vector<std::vector<long long>>& classes) {
  const std::size_t n = classes.front().size();
  auto pair = [n](const std::vector<long long>& x,
                  const std::vector<long long>& y) {
    long long s = 0;
    for (std::size_t i = 0; i + 1 < n; i += 2)
      s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
  };
  OracleMat acc(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1;
  for (const auto& c : classes) {  // leftmost acts first
    OracleMat t(n, std::vector<long long>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long long> e(n, 0);
      e[j] = 1;
      long long p = pair(e, c);
      for (std::size_t i = 0; i < n; ++i) t[i][j] = e[i] + p * c[i];
    }
    OracleMat next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
          next[i][j] += t[i][k] * acc[k][j];
    acc = std::move(next);
  }
  return acc;
}

bool matches(const OracleMat& o, const SympMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (Int(o[i][j]) != m.at(i, j)) return false;
  return true;
}

LefschetzData random_fibration(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> genus_d(1, 3);
  std::uniform_int_distribution<int> len_d(2, 10);
  std::uniform_int_distribution<int> coef(-5, 5);
  int g = genus_d(rng);
  GeneratorSystem sys;
  sys.id = "random";
  sys.surface = make_surface(g, 1);  // Disk base, no closure constraint
  std::vector<Curve> cycles;
  int len = len_d(rng);
  for (int i = 0; i < len; ++i) {
    HomologyClass cls(2 * static_cast<std::size_t>(g));
    for (auto& x : cls) x = coef(rng);
    cycles.push_back(Curve{"v" + std::to_string(i), cls, sys.surface});
  }
  return make_fibration(Base::Disk, sys.surface, sys, std::move(cycles), "rnd");
}

}  // namespace

TEST_CASE("structural invariants") {
  GeneratorSystem sys = torus_system();
  CHECK_THROWS_AS(make_fibration(Base::Sphere, make_surface(1, 1), sys,
                                 {sys.curve("a")}, ""),
                  MathError);
  CHECK_THROWS_AS(make_fibration(Base::Sphere, make_surface(1, 0), sys, {}, ""),
                  MathError);
}

TEST_CASE("torus22 validation") {
  LefschetzData lf = torus22_model();
  ValidationReport r = validate(lf);
  CHECK(r.simplified);
  CHECK(r.closure_checked);
  CHECK(r.closure_identity);
  CHECK(r.gompf_necessary == GompfStatus::Satisfied);
}

TEST_CASE("inessential cycle flagged, never thrown") {
  GeneratorSystem sys = torus_system();
  std::vector<Curve> cycles = {sys.curve("a"),
                               Curve{"z", {0, 0}, sys.surface},
                               Curve{"w", {2, 4}, sys.surface}};
  LefschetzData lf =
      make_fibration(Base::Disk, make_surface(1, 0), sys, cycles, "");
  ValidationReport r = validate(lf);
  CHECK_FALSE(r.simplified);
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].index == 1);
  CHECK(r.failures[0].reason == "inessential");
  CHECK(r.failures[1].reason == "non-primitive");
  CHECK(r.gompf_necessary == GompfStatus::Unknown);
}

TEST_CASE("genus-2 chain closure against the brute-force oracle") {
  std::vector<std::vector<long long>> chain = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  std::vector<std::vector<long long>> word;
  for (int rep = 0; rep < 6; ++rep)
    word.insert(word.end(), chain.begin(), chain.end());
  OracleMat expect = oracle_product(word);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(expect[i][j] == (i == j ? 1 : 0));

  LefschetzData lf = genus2_chain_model();
  SympMatrix m = total_monodromy(lf);
  CHECK(matches(expect, m));
  CHECK(m.is_identity());
  CHECK(validate(lf).closure_identity);
}

TEST_CASE("total monodromy small cases") {
  GeneratorSystem sys = torus_system();
  LefschetzData empty =
      make_fibration(Base::Disk, sys.surface, sys, {}, "empty");
  CHECK(total_monodromy(empty) == SympMatrix::identity(2));

  LefschetzData ab = make_fibration(Base::Disk, sys.surface, sys,
                                    {sys.curve("a"), sys.curve("b")}, "");
  SympMatrix m = total_monodromy(ab);
  CHECK(matches(oracle_product({{1, 0}, {0, 1}}), m));
  SympMatrix p = SympMatrix::identity(2);
  for (int k = 0; k < 6; ++k) p = m * p;
  CHECK(p.is_identity());
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(torus22_model()) == 12);
  CHECK(euler_characteristic(genus2_chain_model()) == 26);

  GeneratorSystem sys;
  sys.id = "empty-g3";
  sys.surface = make_surface(3, 1);
  LefschetzData disk = make_fibration(Base::Disk, sys.surface, sys, {}, "");
  CHECK(euler_characteristic(disk) == -5);
}

TEST_CASE("hurwitz move on the torus pair") {
  LefschetzData lf = torus22_model();
  SympMatrix before = total_monodromy(lf);

  LefschetzData left = hurwitz_move(lf, 0, HurwitzDir::Left);
  CHECK(left.cycles[0].cls == HomologyClass{0, 1});           // b
  CHECK(left.cycles[1].cls == HomologyClass{1, 1});           // a + <a,b>b
  CHECK(total_monodromy(left) == before);

  LefschetzData back = hurwitz_move(left, 0, HurwitzDir::Right);
  CHECK(back.cycles[0].cls == lf.cycles[0].cls);
  CHECK(back.cycles[1].cls == lf.cycles[1].cls);

  CHECK_THROWS_AS(hurwitz_move(lf, 11, HurwitzDir::Left), std::out_of_range);
}

TEST_CASE("hurwitz move on a disjoint pair is a plain swap") {
  GeneratorSystem sys = humphries_system(2, false);
  LefschetzData lf = make_fibration(Base::Disk, sys.surface, sys,
                                    {sys.curve("a1"), sys.curve("a2")}, "");
  LefschetzData moved = hurwitz_move(lf, 0, HurwitzDir::Left);
  CHECK(moved.cycles[0].cls == sys.curve("a2").cls);
  CHECK(moved.cycles[1].cls == sys.curve("a1").cls);
}

TEST_CASE("hurwitz properties on random factorizations") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    LefschetzData lf = random_fibration(rng);
    std::uniform_int_distribution<std::size_t> idx(0, lf.cycles.size() - 2);
    std::size_t i = idx(rng);
    HurwitzDir dir = (t % 2) ? HurwitzDir::Left : HurwitzDir::Right;

    LefschetzData moved = hurwitz_move(lf, i, dir);
    CHECK(total_monodromy(moved) == total_monodromy(lf));
    CHECK(euler_characteristic(moved) == euler_characteristic(lf));

    LefschetzData back = hurwitz_move(hurwitz_move(lf, i, HurwitzDir::Left), i,
                                      HurwitzDir::Right);
    for (std::size_t k = 0; k < lf.cycles.size(); ++k) {
      CHECK(back.cycles[k].cls == lf.cycles[k].cls);
    }
  }
}

TEST_CASE("primitivity is stable under hurwitz moves") {
  // gcd is invariant under the unimodular transvection action
  std::mt19937_64 rng(47);
  for (int t = 0; t < 100; ++t) {
    LefschetzData lf = random_fibration(rng);
    if (!validate(lf).simplified) continue;
    std::uniform_int_distribution<std::size_t> idx(0, lf.cycles.size() - 2);
    LefschetzData moved =
        hurwitz_move(lf, idx(rng), (t % 2) ? HurwitzDir::Left : HurwitzDir::Right);
    CHECK(validate(moved).simplified);
  }
}
