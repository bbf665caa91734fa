#include "mlift/seedcore.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mlift {

namespace {

long long pos(long long x) { return x > 0 ? x : 0; }
long long neg(long long x) { return x < 0 ? -x : 0; }

// Embed a poly whose varset is exactly src_names into merged at offset.
LaurentPoly embed(const LaurentPoly& f, const std::vector<std::string>& merged,
                  size_t offset, size_t src_size) {
  LaurentPoly out(merged);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> ee(merged.size(), 0);
    for (size_t i = 0; i < src_size; ++i) ee[offset + i] = e[i];
    out += LaurentPoly::monomial(merged, ee, c);
  }
  return out;
}

}  // namespace

std::vector<int> Seed::unfrozen() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cls[i] == VertexClass::Unfrozen) out.push_back(i);
  return out;
}

int Seed::uf_col(int v) const {
  if (v < 0 || v >= size() || cls[v] != VertexClass::Unfrozen) return -1;
  int col = 0;
  for (int i = 0; i < v; ++i)
    if (cls[i] == VertexClass::Unfrozen) ++col;
  return col;
}

int Seed::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (verts[i] == name) return i;
  return -1;
}

bool is_skew_symmetrizable(const std::vector<std::vector<long long>>& M) {
  const int n = (int)M.size();
  for (int i = 0; i < n; ++i) {
    if ((int)M[i].size() != n) return false;
    if (M[i][i] != 0) return false;
    for (int j = 0; j < n; ++j)
      if ((M[i][j] > 0) != (M[j][i] < 0)) return false;
  }
  // Propagate symmetrizers d_i > 0 with d_i*M[i][j] == -d_j*M[j][i]
  // over each connected component; any cycle must be consistent.
  std::vector<mpq_class> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (M[i][j] == 0) continue;
        mpq_class forced = d[i] * mpq_class((long)M[i][j]) / mpq_class((long)-M[j][i]);
        if (d[j] == 0) {
          d[j] = forced;
          stack.push_back(j);
        } else if (d[j] != forced) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void validate_degree(const Seed& s, const DegreeConfig& deg) {
  if ((int)deg.sigma.size() != s.size())
    throw std::invalid_argument("degree: one vector per vertex required");
  for (const auto& row : deg.sigma)
    if ((int)row.size() != deg.m)
      throw std::invalid_argument("degree: vector length must equal m");
  for (int v : s.unfrozen()) {
    const int c = s.uf_col(v);
    for (int t = 0; t < deg.m; ++t) {
      long long acc = 0;
      for (int i = 0; i < s.size(); ++i) acc += s.B[i][c] * deg.sigma[i][t];
      if (acc != 0) throw std::invalid_argument("degree: grading condition fails at " + s.verts[v]);
    }
  }
}

}  // namespace

Seed new_seed(std::vector<std::string> verts, std::vector<VertexClass> cls,
              std::vector<std::vector<long long>> B,
              std::optional<DegreeConfig> degree) {
  Seed s;
  s.verts = std::move(verts);
  s.cls = std::move(cls);
  s.B = std::move(B);
  if (s.verts.size() != s.cls.size())
    throw std::invalid_argument("new_seed: class per vertex required");
  std::set<std::string> names(s.verts.begin(), s.verts.end());
  if (names.size() != s.verts.size() || names.count(""))
    throw std::invalid_argument("new_seed: vertex names must be distinct and nonempty");

  const auto uf = s.unfrozen();
  if (s.B.size() != s.verts.size())
    throw std::invalid_argument("new_seed: B needs one row per vertex");
  for (const auto& row : s.B)
    if (row.size() != uf.size())
      throw std::invalid_argument("new_seed: B needs one column per unfrozen vertex");

  std::vector<std::vector<long long>> principal(uf.size(), std::vector<long long>(uf.size()));
  for (size_t a = 0; a < uf.size(); ++a)
    for (size_t b = 0; b < uf.size(); ++b) principal[a][b] = s.B[uf[a]][b];
  if (!is_skew_symmetrizable(principal))
    throw std::invalid_argument("new_seed: principal part is not skew-symmetrizable");

  for (const auto& name : s.verts) s.cluster.push_back(LaurentPoly::variable(s.verts, name));
  if (degree) {
    validate_degree(s, *degree);
    s.degree = std::move(degree);
  }
  return s;
}

DegreeConfig mutate_degree(const Seed& s, int k) {
  if (!s.degree) throw std::invalid_argument("mutate_degree: seed carries no degree");
  const int c = s.uf_col(k);
  if (c < 0) throw std::invalid_argument("mutate_degree: vertex is not unfrozen");
  DegreeConfig out = *s.degree;
  std::vector<long long> acc(out.m, 0);
  for (int i = 0; i < s.size(); ++i)
    for (int t = 0; t < out.m; ++t) acc[t] += pos(s.B[i][c]) * out.sigma[i][t];
  for (int t = 0; t < out.m; ++t) out.sigma[k][t] = acc[t] - out.sigma[k][t];
  return out;
}

Seed mutate(const Seed& s, int k) {
  const int c = s.uf_col(k);
  if (c < 0) throw std::invalid_argument("mutate: vertex is not unfrozen");
  const auto uf = s.unfrozen();

  Seed out = s;
  for (int i = 0; i < s.size(); ++i) {
    for (size_t j = 0; j < uf.size(); ++j) {
      if (i == k || uf[j] == k)
        out.B[i][j] = -s.B[i][j];
      else
        out.B[i][j] = s.B[i][j] + pos(s.B[i][c]) * pos(s.B[k][j]) - neg(s.B[i][c]) * neg(s.B[k][j]);
    }
  }

  LaurentPoly mplus = LaurentPoly::constant(s.cluster[k].vars(), 1);
  LaurentPoly mminus = mplus;
  for (int i = 0; i < s.size(); ++i) {
    if (s.B[i][c] > 0) mplus *= pow(s.cluster[i], (unsigned long)s.B[i][c]);
    if (s.B[i][c] < 0) mminus *= pow(s.cluster[i], (unsigned long)-s.B[i][c]);
  }
  auto q = exact_div(mplus + mminus, s.cluster[k]);
  if (!q) throw std::logic_error("mutate: exchange relation failed to divide");
  out.cluster[k] = std::move(*q);

  if (s.degree) out.degree = mutate_degree(s, k);
  return out;
}

namespace {

Seed reclassify(const Seed& s, const std::vector<int>& F, VertexClass from, VertexClass to,
                const char* what) {
  Seed out = s;
  for (int v : F) {
    if (v < 0 || v >= s.size()) throw std::invalid_argument(std::string(what) + ": bad vertex index");
    if (out.cls[v] != from)
      throw std::invalid_argument(std::string(what) + ": vertex " + s.verts[v] + " has the wrong class");
    out.cls[v] = to;
  }
  return out;
}

}  // namespace

Seed semi_freeze(const Seed& s, const std::vector<int>& F) {
  return reclassify(s, F, VertexClass::HighlyFrozen, VertexClass::SemiFrozen, "semi_freeze");
}

Seed highly_freeze(const Seed& s, const std::vector<int>& F) {
  return reclassify(s, F, VertexClass::SemiFrozen, VertexClass::HighlyFrozen, "highly_freeze");
}

Seed disjoint_union(const Seed& a, const Seed& b) {
  std::set<std::string> taken(a.verts.begin(), a.verts.end());
  std::vector<std::string> bnames;
  for (const auto& name : b.verts) {
    std::string fresh = name;
    while (taken.count(fresh)) fresh += "'";
    taken.insert(fresh);
    bnames.push_back(fresh);
  }

  Seed out;
  out.verts = a.verts;
  out.verts.insert(out.verts.end(), bnames.begin(), bnames.end());
  out.cls = a.cls;
  out.cls.insert(out.cls.end(), b.cls.begin(), b.cls.end());

  const size_t ufa = a.unfrozen().size(), ufb = b.unfrozen().size();
  out.B.assign(out.verts.size(), std::vector<long long>(ufa + ufb, 0));
  for (int i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < ufa; ++j) out.B[i][j] = a.B[i][j];
  for (int i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < ufb; ++j) out.B[a.size() + i][ufa + j] = b.B[i][j];

  for (int i = 0; i < a.size(); ++i)
    out.cluster.push_back(embed(a.cluster[i], out.verts, 0, a.verts.size()));
  for (int i = 0; i < b.size(); ++i)
    out.cluster.push_back(embed(b.cluster[i], out.verts, a.verts.size(), b.verts.size()));

  if (a.degree && b.degree) {
    DegreeConfig deg;
    deg.m = a.degree->m + b.degree->m;
    for (const auto& row : a.degree->sigma) {
      auto padded = row;
      padded.resize(deg.m, 0);
      deg.sigma.push_back(std::move(padded));
    }
    for (const auto& row : b.degree->sigma) {
      std::vector<long long> padded(a.degree->m, 0);
      padded.insert(padded.end(), row.begin(), row.end());
      deg.sigma.push_back(std::move(padded));
    }
    out.degree = std::move(deg);
  }
  return out;
}

int cluster_valuation(const Seed& s, const LaurentPoly& f, int d) {
  if (d < 0 || d >= s.size() || !s.is_frozen(d))
    throw std::invalid_argument("cluster_valuation: vertex is not frozen");
  if (f.is_zero()) throw std::invalid_argument("cluster_valuation: zero polynomial");
  return var_valuation(f, s.verts[d]);
}

bool in_upper_bound(const LaurentPoly& f, const Seed& s) {
  if (f.is_zero()) return true;
  for (int h = 0; h < s.size(); ++h) {
    if (s.cls[h] != VertexClass::HighlyFrozen) continue;
    if (var_valuation(f, s.verts[h]) < 0) return false;
  }
  for (int k : s.unfrozen()) {
    if (var_valuation(f, s.verts[k]) >= 0) continue;
    const int c = s.uf_col(k);

    std::string fresh = s.verts[k] + "'";
    while (s.index_of(fresh) >= 0) fresh += "'";
    std::vector<std::string> vars = s.verts;
    vars.push_back(fresh);

    // Exchange rewrite x_k = (M+ + M-) / x_k'.
    std::vector<int> eplus(vars.size(), 0), eminus(vars.size(), 0);
    for (int i = 0; i < s.size(); ++i) {
      eplus[i] = (int)pos(s.B[i][c]);
      eminus[i] = (int)neg(s.B[i][c]);
    }
    eplus.back() = -1;
    eminus.back() = -1;
    const LaurentPoly image = LaurentPoly::monomial(vars, eplus, 1) + LaurentPoly::monomial(vars, eminus, 1);

    std::map<std::string, LaurentPoly> images;
    images[s.verts[k]] = image;
    for (int i = 0; i < s.size(); ++i)
      if (i != k) images[s.verts[i]] = LaurentPoly::variable(vars, s.verts[i]);

    LaurentPoly g;
    try {
      g = substitute(f, images);
    } catch (const std::invalid_argument&) {
      return false;
    }
    for (int h = 0; h < s.size(); ++h) {
      if (s.cls[h] != VertexClass::HighlyFrozen) continue;
      if (var_valuation(g, s.verts[h]) < 0) return false;
    }
  }
  return true;
}

bool is_maximal_rank(const Seed& s) {
  const size_t cols = s.unfrozen().size();
  std::vector<std::vector<mpq_class>> M(s.size(), std::vector<mpq_class>(cols));
  for (int i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < cols; ++j) M[i][j] = (long)s.B[i][j];

  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < M.size(); ++col) {
    size_t pivot = rank;
    while (pivot < M.size() && M[pivot][col] == 0) ++pivot;
    if (pivot == M.size()) continue;
    std::swap(M[pivot], M[rank]);
    for (size_t i = 0; i < M.size(); ++i) {
      if (i == rank || M[i][col] == 0) continue;
      const mpq_class factor = M[i][col] / M[rank][col];
      for (size_t j = col; j < cols; ++j) M[i][j] -= factor * M[rank][j];
    }
    ++rank;
  }
  return rank == cols;
}

std::vector<int> isolated_unfrozen(const Seed& s) {
  std::vector<int> out;
  for (int k : s.unfrozen()) {
    const int c = s.uf_col(k);
    bool touched = false;
    for (int i = 0; i < s.size() && !touched; ++i)
      if (s.B[i][c] != 0) touched = true;
    for (size_t j = 0; j < s.B[k].size() && !touched; ++j)
      if (s.B[k][j] != 0) touched = true;
    if (!touched) out.push_back(k);
  }
  return out;
}

}  // namespace mlift
