#include "mlift/lifting.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace mlift {

namespace {

long long pos(long long x) { return x > 0 ? x : 0; }
long long neg(long long x) { return x < 0 ? -x : 0; }

void check_shape(const LiftingConfig& nu, int base_size) {
  if (nu.nu.size() != nu.D.size())
    throw std::invalid_argument("lifting: one matrix row per D-name required");
  for (const auto& row : nu.nu)
    if ((int)row.size() != base_size)
      throw std::invalid_argument("lifting: one matrix column per vertex required");
}

}  // namespace

DegreeConfig canonical_lift_degree(const LiftingConfig& nu, int base_size) {
  check_shape(nu, base_size);
  const int nd = (int)nu.D.size();
  DegreeConfig deg;
  deg.m = nd;
  for (int i = 0; i < base_size; ++i) {
    std::vector<long long> col(nd);
    for (int d = 0; d < nd; ++d) col[d] = nu.nu[d][i];
    deg.sigma.push_back(std::move(col));
  }
  for (int d = 0; d < nd; ++d) {
    std::vector<long long> unit(nd, 0);
    unit[d] = 1;
    deg.sigma.push_back(std::move(unit));
  }
  return deg;
}

DegreeConfig lift_degree_config(const DegreeConfig& sigma, const LiftingConfig& nu) {
  const int base_size = (int)sigma.sigma.size();
  DegreeConfig out = canonical_lift_degree(nu, base_size);
  out.m += sigma.m;
  for (int i = 0; i < base_size; ++i)
    out.sigma[i].insert(out.sigma[i].end(), sigma.sigma[i].begin(), sigma.sigma[i].end());
  for (size_t d = base_size; d < out.sigma.size(); ++d) out.sigma[d].resize(out.m, 0);
  return out;
}

LiftedSeed lift_seed(const Seed& t, const LiftingConfig& nu) {
  check_shape(nu, t.size());
  std::set<std::string> names(t.verts.begin(), t.verts.end());
  for (const auto& d : nu.D)
    if (!names.insert(d).second)
      throw std::invalid_argument("lift_seed: D-name '" + d + "' clashes with a vertex");

  const int n = t.size(), nd = (int)nu.D.size();
  const auto uf = t.unfrozen();

  Seed s;
  s.verts = t.verts;
  s.verts.insert(s.verts.end(), nu.D.begin(), nu.D.end());
  s.cls = t.cls;
  s.cls.insert(s.cls.end(), nd, VertexClass::SemiFrozen);

  s.B = t.B;
  for (int d = 0; d < nd; ++d) {
    std::vector<long long> row(uf.size(), 0);
    for (size_t j = 0; j < uf.size(); ++j) {
      long long acc = 0;
      for (int i = 0; i < n; ++i) acc += nu.nu[d][i] * t.B[i][j];
      row[j] = -acc;
    }
    s.B.push_back(std::move(row));
  }

  // Cluster expansions live over the base symbols extended by D: the
  // lift multiplies each entry by its D-monomial.
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n + nd, 0);
    for (int d = 0; d < nd; ++d) e[n + d] = (int)nu.nu[d][i];
    s.cluster.push_back(t.cluster[i].extended_to(s.verts) *
                        LaurentPoly::monomial(s.verts, e, 1));
  }
  for (int d = 0; d < nd; ++d)
    s.cluster.push_back(LaurentPoly::variable(s.verts, nu.D[d]));

  s.degree = t.degree ? lift_degree_config(*t.degree, nu) : canonical_lift_degree(nu, n);

  LiftedSeed out;
  out.seed = std::move(s);
  out.nu = nu;
  out.base_size = n;
  return out;
}

LiftingConfig mutate_lifting_matrix(const LiftingConfig& nu, const Seed& t, int k) {
  check_shape(nu, t.size());
  const int c = t.uf_col(k);
  if (c < 0) throw std::invalid_argument("mutate_lifting_matrix: vertex is not unfrozen");
  LiftingConfig out = nu;
  for (size_t d = 0; d < nu.D.size(); ++d) {
    long long vplus = 0, vminus = 0;
    for (int i = 0; i < t.size(); ++i) {
      vplus += nu.nu[d][i] * pos(t.B[i][c]);
      vminus += nu.nu[d][i] * neg(t.B[i][c]);
    }
    out.nu[d][k] = std::max(vplus, vminus) - nu.nu[d][k];
  }
  return out;
}

std::optional<std::vector<long long>> homogeneous_degree(const DegreeConfig& deg,
                                                         const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  if (f.vars().size() != deg.sigma.size())
    throw std::invalid_argument("homogeneous_degree: variable/sigma mismatch");
  std::optional<std::vector<long long>> found;
  for (const auto& [e, c] : f.terms()) {
    std::vector<long long> acc(deg.m, 0);
    for (size_t j = 0; j < e.size(); ++j)
      for (int t = 0; t < deg.m; ++t) acc[t] += (long long)e[j] * deg.sigma[j][t];
    if (!found)
      found = std::move(acc);
    else if (*found != acc)
      return std::nullopt;
  }
  return found;
}

std::vector<SquareReport> verify_lift_mutation_square(const Seed& t, const LiftingConfig& nu,
                                                      const std::vector<int>& word) {
  std::vector<SquareReport> reports;

  Seed base = t;
  LiftingConfig conf = nu;
  Seed lifted = lift_seed(t, nu).seed;

  auto compare = [&](size_t prefix) {
    SquareReport r;
    r.prefix = prefix;
    const Seed relift = lift_seed(base, conf).seed;
    r.b_match = relift.B == lifted.B && relift.verts == lifted.verts && relift.cls == lifted.cls;
    r.x_match = true;
    for (int i = 0; i < relift.size() && r.x_match; ++i)
      if (relift.cluster[i] != lifted.cluster[i]) r.x_match = false;
    r.degree_match = relift.degree.has_value() == lifted.degree.has_value() &&
                     (!relift.degree || (relift.degree->m == lifted.degree->m &&
                                         relift.degree->sigma == lifted.degree->sigma));

    std::map<std::string, LaurentPoly> kill;
    for (int i = 0; i < base.size(); ++i)
      kill[base.verts[i]] = LaurentPoly::variable(base.verts, base.verts[i]);
    for (const auto& d : conf.D) kill[d] = LaurentPoly::constant(base.verts, 1);
    r.deletion_ok = true;
    for (int i = 0; i < base.size() && r.deletion_ok; ++i)
      if (substitute(lifted.cluster[i], kill) != base.cluster[i]) r.deletion_ok = false;
    return r;
  };

  reports.push_back(compare(0));
  for (size_t p = 0; p < word.size(); ++p) {
    const int k = word[p];
    conf = mutate_lifting_matrix(conf, base, k);
    base = mutate(base, k);
    lifted = mutate(lifted, k);
    reports.push_back(compare(p + 1));
  }
  return reports;
}

}  // namespace mlift
