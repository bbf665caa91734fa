#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mlift/lifting.hpp"

using namespace mlift;

namespace {

constexpr auto U = VertexClass::Unfrozen;
constexpr auto S = VertexClass::SemiFrozen;
constexpr auto H = VertexClass::HighlyFrozen;

Seed running_example() {
  return new_seed({"1", "2", "3"}, {U, U, H}, {{0, -1}, {1, 0}, {0, 1}});
}

LiftingConfig running_nu() { return {{"d"}, {{1, 2, 3}}}; }

bool same_core(const Seed& a, const Seed& b) {
  if (a.verts != b.verts || a.cls != b.cls || a.B != b.B) return false;
  for (size_t i = 0; i < a.cluster.size(); ++i)
    if (a.cluster[i] != b.cluster[i]) return false;
  return true;
}

Seed random_base(std::mt19937& rng, int n_uf, int n_frozen, int smax = 2) {
  std::uniform_int_distribution<int> entry(-smax, smax), frozen_entry(-3, 3), dsym(1, 2),
      coin(0, 1);
  std::vector<std::string> verts;
  std::vector<VertexClass> cls;
  for (int i = 0; i < n_uf; ++i) {
    verts.push_back("u" + std::to_string(i + 1));
    cls.push_back(U);
  }
  for (int i = 0; i < n_frozen; ++i) {
    verts.push_back("f" + std::to_string(i + 1));
    cls.push_back(coin(rng) ? S : H);
  }
  std::vector<std::vector<long long>> B(n_uf + n_frozen, std::vector<long long>(n_uf, 0));
  std::vector<int> d(n_uf);
  for (auto& x : d) x = dsym(rng);
  for (int i = 0; i < n_uf; ++i)
    for (int j = i + 1; j < n_uf; ++j) {
      const int s = entry(rng);
      B[i][j] = d[i] * s;
      B[j][i] = d[j] * -s;
    }
  for (int i = 0; i < n_frozen; ++i)
    for (int j = 0; j < n_uf; ++j) B[n_uf + i][j] = frozen_entry(rng);
  return new_seed(verts, cls, B);
}

LiftingConfig random_nu(std::mt19937& rng, int nd, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  LiftingConfig nu;
  for (int d = 0; d < nd; ++d) {
    nu.D.push_back("d" + std::to_string(d + 1));
    nu.nu.emplace_back(n);
    for (auto& x : nu.nu.back()) x = entry(rng);
  }
  return nu;
}

// Grading of the base-extended symbol frame: base symbols carry degree
// zero, each appended symbol a unit vector, so the homogeneous degree of
// an expansion is its literal D-exponent vector.
DegreeConfig d_exponent_grading(int base_size, int nd) {
  DegreeConfig deg{nd, {}};
  for (int i = 0; i < base_size; ++i) deg.sigma.emplace_back(nd, 0);
  for (int d = 0; d < nd; ++d) {
    deg.sigma.emplace_back(nd, 0);
    deg.sigma.back()[d] = 1;
  }
  return deg;
}

}  // namespace

TEST_CASE("lift_seed worked example") {
  const LiftedSeed L = lift_seed(running_example(), running_nu());
  const Seed& s = L.seed;
  CHECK(s.verts == std::vector<std::string>{"1", "2", "3", "d"});
  CHECK(s.cls == std::vector<VertexClass>{U, U, H, S});
  CHECK(s.B == std::vector<std::vector<long long>>{{0, -1}, {1, 0}, {0, 1}, {-2, -2}});
  CHECK(s.cluster[0] == LaurentPoly::monomial(s.verts, {1, 0, 0, 1}, 1));
  CHECK(s.cluster[1] == LaurentPoly::monomial(s.verts, {0, 1, 0, 2}, 1));
  CHECK(s.cluster[2] == LaurentPoly::monomial(s.verts, {0, 0, 1, 3}, 1));
  CHECK(s.cluster[3] == LaurentPoly::variable(s.verts, "d"));
  REQUIRE(s.degree.has_value());
  CHECK(s.degree->m == 1);
  CHECK(s.degree->sigma == std::vector<std::vector<long long>>{{1}, {2}, {3}, {1}});
  CHECK(L.base_size == 3);

  CHECK_THROWS_AS(lift_seed(running_example(), LiftingConfig{{"2"}, {{0, 0, 0}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lift_seed(running_example(), LiftingConfig{{"d"}, {{1, 2}}}),
                  std::invalid_argument);
}

TEST_CASE("lift_seed degenerate configurations") {
  const Seed t = running_example();

  const LiftedSeed zero = lift_seed(t, {{"d"}, {{0, 0, 0}}});
  CHECK(zero.seed.B == std::vector<std::vector<long long>>{{0, -1}, {1, 0}, {0, 1}, {0, 0}});
  for (int i = 0; i < 3; ++i)
    CHECK(zero.seed.cluster[i] == LaurentPoly::variable(zero.seed.verts, t.verts[i]));

  const LiftedSeed empty = lift_seed(t, {{}, {}});
  CHECK(same_core(empty.seed, t));
  REQUIRE(empty.seed.degree.has_value());
  CHECK(empty.seed.degree->m == 0);
}

TEST_CASE("mutate_lifting_matrix") {
  const Seed t = running_example();
  const LiftingConfig nu = running_nu();

  const LiftingConfig m0 = mutate_lifting_matrix(nu, t, 0);
  CHECK(m0.nu == std::vector<std::vector<long long>>{{1, 2, 3}});
  const LiftingConfig m1 = mutate_lifting_matrix(nu, t, 1);
  CHECK(m1.nu == std::vector<std::vector<long long>>{{1, 1, 3}});

  const LiftingConfig z{{"d"}, {{0, 0, 0}}};
  CHECK(mutate_lifting_matrix(z, t, 0).nu == z.nu);
  CHECK_THROWS_AS(mutate_lifting_matrix(nu, t, 2), std::invalid_argument);

  // Oracle: the D-degree of the mutated lifted variable equals the
  // mutated configuration column.
  const LiftedSeed L = lift_seed(t, nu);
  const Seed mutated = mutate(L.seed, 1);
  const auto deg = homogeneous_degree(d_exponent_grading(3, 1), mutated.cluster[1]);
  REQUIRE(deg.has_value());
  CHECK(*deg == std::vector<long long>{m1.nu[0][1]});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Seed b = random_base(rng, 2 + (int)(rng() % 2), (int)(rng() % 3));
    const LiftingConfig v = random_nu(rng, 1 + (int)(rng() % 3), b.size());
    const auto uf = b.unfrozen();
    const int k = uf[rng() % uf.size()];
    const LiftingConfig once = mutate_lifting_matrix(v, b, k);
    const LiftingConfig twice = mutate_lifting_matrix(once, mutate(b, k), k);
    CHECK(twice.nu == v.nu);
  }
}

TEST_CASE("lift_degree_config") {
  // Base grading must satisfy the grading condition: sigma = (a,0,a).
  const Seed t = new_seed({"1", "2", "3"}, {U, U, H}, {{0, -1}, {1, 0}, {0, 1}},
                          DegreeConfig{1, {{1}, {0}, {1}}});
  const DegreeConfig lifted = lift_degree_config(*t.degree, running_nu());
  CHECK(lifted.m == 2);
  CHECK(lifted.sigma ==
        std::vector<std::vector<long long>>{{1, 1}, {2, 0}, {3, 1}, {1, 0}});

  // The lifted seed of a graded base carries exactly this grading, and
  // it passes seed validation.
  const LiftedSeed L = lift_seed(t, running_nu());
  REQUIRE(L.seed.degree.has_value());
  CHECK(L.seed.degree->sigma == lifted.sigma);
  CHECK_NOTHROW(new_seed(L.seed.verts, L.seed.cls, L.seed.B, L.seed.degree));
}

TEST_CASE("homogeneous_degree") {
  const std::vector<std::string> vars{"x", "y"};
  const DegreeConfig deg{1, {{1}, {2}}};
  CHECK(homogeneous_degree(deg, parse_poly(vars, "x^2 + y")) == std::vector<long long>{2});
  CHECK_FALSE(homogeneous_degree(deg, parse_poly(vars, "x + y")).has_value());
  CHECK_FALSE(homogeneous_degree(deg, LaurentPoly(vars)).has_value());
}

TEST_CASE("commuting square on the worked example") {
  for (const std::vector<int>& word :
       {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{1, 0, 1}}) {
    const auto reports = verify_lift_mutation_square(running_example(), running_nu(), word);
    CHECK(reports.size() == word.size() + 1);
    for (const auto& r : reports) {
      CHECK(r.b_match);
      CHECK(r.x_match);
      CHECK(r.degree_match);
      CHECK(r.deletion_ok);
    }
  }
}

TEST_CASE("commuting square randomized") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const int n_uf = 2 + (int)(rng() % 3);
    const Seed t = random_base(rng, n_uf, (int)(rng() % 3));
    const LiftingConfig nu = random_nu(rng, 1 + (int)(rng() % 3), t.size());
    const auto uf = t.unfrozen();
    const std::vector<int> word{uf[rng() % uf.size()]};
    for (const auto& r : verify_lift_mutation_square(t, nu, word)) CHECK(r.ok());
  }
}

TEST_CASE("commuting square with graded base") {
  const Seed t = new_seed({"1", "2", "3"}, {U, U, H}, {{0, -1}, {1, 0}, {0, 1}},
                          DegreeConfig{1, {{2}, {0}, {2}}});
  for (const auto& r : verify_lift_mutation_square(t, running_nu(), {0, 1, 0}))
    CHECK(r.ok());
}

TEST_CASE("rank 2 path independence") {
  // Alternating words from both ends meet at the same seed; the
  // mutated configurations must then agree exactly.
  const struct {
    long long b, c;
    int period;
  } cases[] = {{1, 1, 5}, {1, 2, 6}, {1, 3, 8}};
  std::mt19937 rng(5);
  for (const auto& cs : cases) {
    const Seed t = new_seed({"x1", "x2"}, {U, U}, {{0, cs.b}, {-cs.c, 0}});
    const LiftingConfig nu = random_nu(rng, 2, 2);

    std::vector<int> w1, w2;
    for (int i = 0; i < cs.period; ++i) {
      w1.push_back(i % 2);
      w2.push_back(1 - i % 2);
    }
    Seed a = t, b = t;
    LiftingConfig na = nu, nb = nu;
    for (int k : w1) {
      na = mutate_lifting_matrix(na, a, k);
      a = mutate(a, k);
    }
    for (int k : w2) {
      nb = mutate_lifting_matrix(nb, b, k);
      b = mutate(b, k);
    }
    REQUIRE(a.B == b.B);
    for (int i = 0; i < 2; ++i) REQUIRE(a.cluster[i] == b.cluster[i]);
    CHECK(na.nu == nb.nu);
  }
}

TEST_CASE("lift in steps") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    const Seed t = random_base(rng, 2, (int)(rng() % 2));
    const LiftingConfig nu = random_nu(rng, 2, t.size());

    const Seed whole = lift_seed(t, nu).seed;

    const LiftingConfig first{{nu.D[0]}, {nu.nu[0]}};
    const Seed step1 = lift_seed(t, first).seed;
    LiftingConfig second{{nu.D[1]}, {nu.nu[1]}};
    second.nu[0].push_back(0);  // zero column for the new vertex d1
    const Seed step2 = lift_seed(step1, second).seed;

    CHECK(same_core(step2, whole));
  }
}

TEST_CASE("lifted cluster variables are homogeneous") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Seed t = random_base(rng, 2, (int)(rng() % 2), 1);
    const LiftingConfig nu = random_nu(rng, 2, t.size());
    const DegreeConfig deg = d_exponent_grading(t.size(), 2);

    Seed lifted = lift_seed(t, nu).seed;
    Seed base = t;
    LiftingConfig conf = nu;
    for (int step = 0; step < 3; ++step) {
      const auto uf = base.unfrozen();
      const int k = uf[rng() % uf.size()];
      conf = mutate_lifting_matrix(conf, base, k);
      base = mutate(base, k);
      lifted = mutate(lifted, k);
      for (int i = 0; i < t.size(); ++i) {
        const auto d = homogeneous_degree(deg, lifted.cluster[i]);
        REQUIRE(d.has_value());
        std::vector<long long> expect;
        for (size_t r = 0; r < conf.D.size(); ++r) expect.push_back(conf.nu[r][i]);
        CHECK(*d == expect);
      }
    }
  }
}
