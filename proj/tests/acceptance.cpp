// Acceptance checks: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mlift/branching.hpp"
#include "mlift/minor_oracle.hpp"
#include "mlift/seedio.hpp"

using namespace mlift;

namespace {

constexpr auto U = VertexClass::Unfrozen;
constexpr auto H = VertexClass::HighlyFrozen;

using Grid = std::vector<std::vector<long long>>;
using Names = std::vector<std::string>;

const WeylWord kHive{1, 2, 1, 3, 2, 1};
const WeylWord kG2Word{2, 1, 2, 1, 2, 1};

Rat const_val(const TPoly& p) { return p.is_zero() ? Rat(0) : p.coeff(0); }

Rat eval_at(const LaurentPoly& f, const std::map<std::string, Rat>& vals) {
  Rat sum(0);
  for (const auto& [exp, coef] : f.terms()) {
    Rat term(coef);
    for (size_t i = 0; i < exp.size(); ++i) {
      const int e = exp[i];
      if (e == 0) continue;
      const Rat& base = vals.at(f.vars()[i]);
      Rat p(1);
      for (int j = 0; j < (e < 0 ? -e : e); ++j) p *= base;
      if (e < 0)
        term /= p;
      else
        term *= p;
    }
    sum += term;
  }
  return sum;
}

WeylWord cat(const WeylWord& a, const WeylWord& b) {
  WeylWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Rat nonzero_rational(std::mt19937& rng) {
  for (;;) {
    const Rat r = random_rational(rng);
    if (r != 0) return r;
  }
}

RatLaurentMatrix random_torus(int n, std::mt19937& rng) {
  RatLaurentMatrix h = RatLaurentMatrix::identity(n);
  for (int i = 1; i < n; ++i) h = h * coroot(n, i, TPoly(nonzero_rational(rng)));
  return h;
}

Seed random_base(std::mt19937& rng, int n_uf, int n_frozen) {
  std::uniform_int_distribution<int> entry(-1, 1), frozen_entry(-3, 3), dsym(1, 3), coin(0, 1);
  Names verts;
  std::vector<VertexClass> cls;
  for (int i = 0; i < n_uf; ++i) {
    verts.push_back("u" + std::to_string(i + 1));
    cls.push_back(VertexClass::Unfrozen);
  }
  for (int i = 0; i < n_frozen; ++i) {
    verts.push_back("f" + std::to_string(i + 1));
    cls.push_back(coin(rng) ? VertexClass::SemiFrozen : VertexClass::HighlyFrozen);
  }
  Grid B(n_uf + n_frozen, std::vector<long long>(n_uf, 0));
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

// Base symbols graded to zero, lifting symbols to unit vectors, so the
// degree of an expansion is its literal D-exponent vector.
DegreeConfig d_exponent_grading(int base_size, int nd) {
  DegreeConfig deg{nd, {}};
  for (int i = 0; i < base_size; ++i) deg.sigma.emplace_back(nd, 0);
  for (int d = 0; d < nd; ++d) {
    deg.sigma.emplace_back(nd, 0);
    deg.sigma.back()[d] = 1;
  }
  return deg;
}

const std::vector<CartanData>& sweep_types() {
  static const std::vector<CartanData> types = {
      cartan('A', 1), cartan('A', 2), cartan('A', 3), cartan('A', 4), cartan('B', 2),
      cartan('B', 3), cartan('C', 3), cartan('D', 4), cartan('G', 2)};
  return types;
}

bool golden_lift() {
  const Seed t = new_seed({"x1", "x2", "x3"}, {U, U, H}, {{0, -1}, {1, 0}, {0, 1}});
  LiftingConfig nu;
  nu.D = {"d"};
  nu.nu = {{1, 2, 3}};
  const LiftedSeed l = lift_seed(t, nu);
  const Grid want = {{0, -1}, {1, 0}, {0, 1}, {-2, -2}};
  if (l.seed.B != want) return false;
  const Names& v = l.seed.verts;
  if (v != Names{"x1", "x2", "x3", "d"}) return false;
  const std::vector<LaurentPoly> wantx = {
      LaurentPoly::monomial(v, {1, 0, 0, 1}), LaurentPoly::monomial(v, {0, 1, 0, 2}),
      LaurentPoly::monomial(v, {0, 0, 1, 3}), LaurentPoly::monomial(v, {0, 0, 0, 1})};
  return l.seed.cluster == wantx;
}

bool ice_hive() {
  const CartanData a3 = cartan('A', 3);
  const LiftingConfig nu = tensor_nu(a3, kHive);
  const Grid want = {{1, 0, 1, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0},
                     {1, 1, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  if (nu.nu != want) return false;
  const LiftedSeed lh = lift_seed(uw_seed(a3, kHive).seed, nu);
  const std::vector<QuiverArrow> arrows = {
      {0, 2, 1, 1},  {0, 7, 1, 1}, {0, 9, 1, 1}, {1, 0, 1, 1},  {1, 4, 1, 1},
      {1, 8, 1, 1},  {2, 1, 1, 1}, {2, 5, 1, 1}, {2, 10, 1, 1}, {3, 1, 1, 1},
      {4, 2, 1, 1},  {6, 0, 1, 1}, {7, 1, 1, 1}, {10, 0, 1, 1}, {11, 2, 1, 1}};
  return quiver_arrows(lh.seed) == arrows;
}

bool g2_golden() {
  const CartanData g2 = cartan('G', 2);
  const BranchingSeed t = uw_seed(g2, kG2Word);
  const Grid wantB = {{0, -1, 1, 0}, {3, 0, -3, 1}, {-1, 1, 0, -1},
                      {0, -1, 3, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}};
  if (t.seed.B != wantB) return false;
  const LiftingConfig nu = tensor_nu(g2, kG2Word);
  const Grid wantnu = {{0, 1, 0, 1, 0, 1}, {1, 0, 1, 0, 1, 0},
                       {0, 0, 0, 0, 0, 1}, {1, 1, 2, 1, 1, 0}};
  if (nu.nu != wantnu) return false;
  const LiftedSeed lg = lift_seed(t.seed, nu);
  if (lg.seed.B[6] != std::vector<long long>{-3, 1, 0, 0}) return false;
  std::vector<long long> d;
  for (int letter : kG2Word.letters) d.push_back(g2.d[letter - 1]);
  d.resize(lg.seed.size(), 0);
  const std::vector<QuiverArrow> arrows = {
      {0, 2, 1, 1}, {0, 6, 3, 3}, {0, 9, 1, 1}, {1, 0, 3, 1}, {1, 3, 1, 1},
      {2, 1, 1, 3}, {2, 4, 1, 1}, {3, 2, 3, 1}, {3, 5, 1, 1}, {4, 3, 1, 3},
      {6, 1, 1, 1}, {7, 0, 1, 1}, {8, 3, 1, 1}};
  return quiver_arrows(lg.seed, d) == arrows;
}

bool sl3_minors(std::mt19937& rng) {
  const CartanData a2 = cartan('A', 2);
  const BranchingSeed t = uw_seed(a2, WeylWord({1, 2, 1}));
  const Seed m = mutate(t.seed, 0);
  const LaurentPoly expect = LaurentPoly::monomial(t.seed.verts, {-1, 1, 0}) +
                             LaurentPoly::monomial(t.seed.verts, {-1, 0, 1});
  if (m.cluster[0] != expect) return false;
  for (int trial = 0; trial < 20; ++trial) {
    RatLaurentMatrix u = random_upper_unitriangular(3, rng);
    while (const_val(u.a[0][1]) == 0) u = random_upper_unitriangular(3, rng);
    const Rat a = const_val(u.a[0][1]), b = const_val(u.a[0][2]), c = const_val(u.a[1][2]);
    const Rat x1 = const_val(generalized_minor(1, WeylWord{}, t.word.prefix(1), u));
    const Rat x2 = const_val(generalized_minor(2, WeylWord{}, t.word.prefix(2), u));
    const Rat x3 = const_val(generalized_minor(1, WeylWord{}, t.word.prefix(3), u));
    if (x1 != a || x2 != a * c - b || x3 != b) return false;
    const std::map<std::string, Rat> vals = {
        {t.seed.verts[0], x1}, {t.seed.verts[1], x2}, {t.seed.verts[2], x3}};
    if (eval_at(m.cluster[0], vals) != c) return false;
  }
  return true;
}

bool commuting_square(std::mt19937& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    const Seed t = random_base(rng, 2 + (int)(rng() % 3), (int)(rng() % 3));
    const LiftingConfig nu = random_nu(rng, 1 + (int)(rng() % 3), t.size());
    const auto uf = t.unfrozen();
    const int k = uf[rng() % uf.size()];
    for (const SquareReport& r : verify_lift_mutation_square(t, nu, {k}))
      if (!r.ok()) return false;
  }

  // Two alternating length-5 paths on an A2 seed land on the same seed;
  // the carried configurations must then agree exactly.
  {
    const Seed t = new_seed({"x1", "x2"}, {U, U}, {{0, 1}, {-1, 0}});
    LiftingConfig nu;
    nu.D = {"d1", "d2"};
    nu.nu = {{2, -1}, {1, 3}};
    Seed sa = t, sb = t;
    LiftingConfig na = nu, nb = nu;
    for (int step = 0; step < 5; ++step) {
      const int ka = step % 2, kb = 1 - step % 2;
      na = mutate_lifting_matrix(na, sa, ka);
      sa = mutate(sa, ka);
      nb = mutate_lifting_matrix(nb, sb, kb);
      sb = mutate(sb, kb);
    }
    if (sa.B != sb.B || sa.cluster != sb.cluster || na.nu != nb.nu) return false;
  }

  const std::vector<std::pair<char, int>> rank2 = {{'B', 6}, {'G', 8}};
  for (const auto& [family, period] : rank2) {
    const CartanData c = cartan(family, 2);
    const BranchingSeed t = uw_seed(c, WeylWord({1, 2, 1, 2}));
    Seed s = t.seed;
    LiftingConfig nu = family == 'B' ? tensor_nu(c, t.word) : levi_nu(c, t.word);
    const Grid B0 = s.B;
    const Grid nu0 = nu.nu;
    for (int step = 0; step < period; ++step) {
      nu = mutate_lifting_matrix(nu, s, step % 2);
      s = mutate(s, step % 2);
    }
    if (s.B != B0 || nu.nu != nu0) return false;
  }
  return true;
}

bool fz_identity(std::mt19937& rng) {
  for (int n : {3, 4, 5}) {
    const CartanData c = cartan('A', n - 1);
    std::uniform_int_distribution<int> letter(1, n - 1), len(0, 3);
    int done = 0;
    while (done < 50) {
      WeylWord v, w;
      for (int j = len(rng); j > 0; --j) v.letters.push_back(letter(rng));
      for (int j = len(rng); j > 0; --j) w.letters.push_back(letter(rng));
      const int alpha = letter(rng);
      WeylWord va = v, wa = w;
      va.letters.push_back(alpha);
      wa.letters.push_back(alpha);
      if (!is_reduced(c, va) || !is_reduced(c, wa)) continue;
      if (!fz_identity_check(alpha, v, w, random_unimodular(n, rng))) return false;
      ++done;
    }
  }
  return true;
}

bool chart_valuations(std::mt19937& rng) {
  const CartanData a2 = cartan('A', 2);
  for (const std::vector<int>& levi :
       {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{2}}) {
    const WeylWord z = levi_word(a2, levi);
    const LiftingConfig nu = levi_nu(a2, z);
    for (int alpha = 1; alpha <= 2; ++alpha)
      for (int k = 1; k <= (int)z.size(); ++k)
        if (chart_valuation(Chart::Levi, 3, z, alpha, k, rng) != nu.nu[alpha - 1][k - 1])
          return false;
  }

  for (const WeylWord& w : {WeylWord({1, 2, 1}), WeylWord({2, 1, 2})}) {
    const LiftingConfig nu = tensor_nu(a2, w);
    for (int alpha = 1; alpha <= 2; ++alpha)
      for (int k = 1; k <= 3; ++k) {
        if (chart_valuation(Chart::TensorLeft, 3, w, alpha, k, rng) != nu.nu[alpha - 1][k - 1])
          return false;
        if (chart_valuation(Chart::TensorRight, 3, w, alpha, k, rng) !=
            nu.nu[2 + alpha - 1][k - 1])
          return false;
      }
  }

  const CartanData a3 = cartan('A', 3);
  const std::vector<WeylWord> words = reduced_words_of_longest(a3, 100);
  if (words.size() != 16) return false;
  for (const WeylWord& w : words) {
    const LiftingConfig nu = tensor_nu(a3, w);
    for (int alpha = 1; alpha <= 3; ++alpha)
      for (int k = 1; k <= 6; ++k) {
        if (chart_valuation(Chart::TensorLeft, 4, w, alpha, k, rng) != nu.nu[alpha - 1][k - 1])
          return false;
        if (chart_valuation(Chart::TensorRight, 4, w, alpha, k, rng) !=
            nu.nu[3 + alpha - 1][k - 1])
          return false;
      }
  }
  return true;
}

bool degree_configurations() {
  for (const CartanData& c : sweep_types()) {
    for (const WeylWord& w : reduced_words_of_longest(c, 200)) {
      const BranchingSeed t = uw_seed(c, w);
      const auto& sig = t.seed.degree->sigma;
      for (int k : t.seed.unfrozen()) {
        const int col = t.seed.uf_col(k);
        std::vector<long long> sum(sig.empty() ? 0 : sig[0].size(), 0);
        for (int i = 0; i < t.seed.size(); ++i)
          for (size_t comp = 0; comp < sum.size(); ++comp)
            sum[comp] += t.seed.B[i][col] * sig[i][comp];
        for (long long x : sum)
          if (x != 0) return false;
      }
    }
  }
  const BranchingSeed t = uw_seed(cartan('A', 3), WeylWord({2, 1, 3, 2}));
  const auto& sig = t.seed.degree->sigma;
  return add(sig[1], sig[2]) == sig[3];
}

bool prv_triples() {
  for (const CartanData& c : sweep_types()) {
    const WeylWord w0 = longest_word(c);
    for (const WeylWord& w : reduced_words_of_longest(c, 200)) {
      const BranchingSeed t = uw_seed(c, w);
      for (int k = 1; k <= (int)w.size(); ++k) {
        const WeightTriple tr = tensor_variable_weight(t, k);
        if (!prv_check(c, tr.lambda, tr.mu, tr.nu, cat(w0, w.prefix(k).reversed())))
          return false;
      }
    }
  }
  return true;
}

bool inclusion_witness(std::mt19937& rng) {
  const CartanData a2 = cartan('A', 2);
  const DoubleCell dc = double_cell_seed(a2, WeylWord({1, 2, 1}), WeylWord({1, 2, 1}));
  const LiftedSeed lifted = lift_seed(dc.seed, dc.nu);

  const int a1pos = lifted.seed.index_of("a1");
  const int a2pos = lifted.seed.index_of("a2");
  if (a1pos < 0 || a2pos < 0) return false;

  // The element whose product with the a1 variable is the exchange
  // binomial of the two x1 vertices.
  const auto& verts = lifted.seed.verts;
  std::vector<int> e1(verts.size(), 0), e2(verts.size(), 0);
  e1[lifted.seed.index_of("x1'")] = 1;
  e1[lifted.seed.index_of("x1")] = 1;
  e1[a1pos] = -1;
  e2[a2pos] = 1;
  e2[a1pos] = -1;
  const LaurentPoly f = LaurentPoly::monomial(verts, e1) + LaurentPoly::monomial(verts, e2);

  if (cluster_valuation(lifted.seed, f, a1pos) != -1) return false;
  if (!in_upper_bound(f, lifted.seed)) return false;
  if (in_upper_bound(f, highly_freeze(lifted.seed, {a1pos, a2pos}))) return false;

  // Along a curve entering the divisor where the a1 variable vanishes,
  // the witness stays finite: its order in t is zero while the a1
  // variable vanishes to order one.
  const int n = 3;
  const RatLaurentMatrix lo = random_lower_unitriangular(n, rng);
  const RatLaurentMatrix h = random_torus(n, rng);
  const RatLaurentMatrix up = random_upper_unitriangular(n, rng);
  const RatLaurentMatrix g = lo * h * sbar_inv(n, 1) * x_minus(n, 1, TPoly::term(1, 1)) * up;
  if (leading_minor(g, 1).order() != 1) return false;
  return generalized_minor(1, WeylWord({1}), WeylWord({1}), g).order() == 0;
}

bool positive_walk(const Seed& s, int last, int depth) {
  for (const auto& x : s.cluster)
    for (const auto& [e, co] : x.terms())
      if (co <= 0) return false;
  if (depth == 0) return true;
  for (int k : s.unfrozen()) {
    if (k == last) continue;
    if (!positive_walk(mutate(s, k), k, depth - 1)) return false;
  }
  return true;
}

bool laurent_positivity() {
  const Seed s3 = uw_seed(cartan('A', 2), WeylWord({1, 2, 1})).seed;
  const Seed s4 = uw_seed(cartan('A', 3), kHive).seed;
  return positive_walk(s3, -1, 6) && positive_walk(s4, -1, 6);
}

bool deletion_homogeneity(std::mt19937& rng) {
  const std::vector<std::pair<CartanData, WeylWord>> cases = {
      {cartan('A', 2), WeylWord({1, 2, 1})}, {cartan('A', 3), kHive}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [c, word] = cases[trial % cases.size()];
    const BranchingSeed t = uw_seed(c, word);
    const LiftingConfig nu = tensor_nu(c, word);
    const auto uf = t.seed.unfrozen();
    std::vector<int> path;
    for (size_t step = rng() % 6; step > 0; --step) path.push_back(uf[rng() % uf.size()]);

    for (const SquareReport& r : verify_lift_mutation_square(t.seed, nu, path))
      if (!r.ok()) return false;

    Seed s = t.seed;
    LiftingConfig nuw = nu;
    for (int k : path) {
      nuw = mutate_lifting_matrix(nuw, s, k);
      s = mutate(s, k);
    }
    const LiftedSeed lifted = lift_seed(s, nuw);
    const DegreeConfig grading = d_exponent_grading(s.size(), (int)nu.D.size());
    for (int i = 0; i < s.size(); ++i) {
      const auto deg = homogeneous_degree(grading, lifted.seed.cluster[i]);
      std::vector<long long> want;
      for (size_t d = 0; d < nuw.D.size(); ++d) want.push_back(nuw.nu[d][i]);
      if (!deg || *deg != want) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  const auto line = [&failures](int id, const char* name, bool pass) {
    std::printf("%2d %-24s %s\n", id, name, pass ? "pass" : "FAIL");
    if (!pass) ++failures;
  };
  const auto guard = [](auto&& fn) {
    try {
      return fn();
    } catch (const std::exception&) {
      return false;
    }
  };

  std::mt19937 r4(41), r5(53), r6(67), r7(79), r10(71), r12(101);
  line(1, "golden-lift", guard([] { return golden_lift(); }));
  line(2, "ice-hive", guard([] { return ice_hive(); }));
  line(3, "g2-golden", guard([] { return g2_golden(); }));
  line(4, "sl3-minors", guard([&] { return sl3_minors(r4); }));
  line(5, "commuting-square", guard([&] { return commuting_square(r5); }));
  line(6, "fz-identity", guard([&] { return fz_identity(r6); }));
  line(7, "chart-valuations", guard([&] { return chart_valuations(r7); }));
  line(8, "degree-configurations", guard([] { return degree_configurations(); }));
  line(9, "prv-triples", guard([] { return prv_triples(); }));
  line(10, "inclusion-witness", guard([&] { return inclusion_witness(r10); }));
  line(11, "laurent-positivity", guard([] { return laurent_positivity(); }));
  line(12, "deletion-homogeneity", guard([&] { return deletion_homogeneity(r12); }));
  return failures == 0 ? 0 : 1;
}
