#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlift/laurent.hpp"

namespace mlift {

enum class VertexClass { Unfrozen, SemiFrozen, HighlyFrozen };

// Integer grading: one vector of length m per vertex, subject to
// sum_i max(b_{i,k},0)*sigma_i == sum_i max(-b_{i,k},0)*sigma_i for
// every unfrozen k.
struct DegreeConfig {
  int m = 0;
  std::vector<std::vector<long long>> sigma;
};

// Exchange matrix B has one row per vertex and one column per unfrozen
// vertex (in vertex order).  Cluster entries are Laurent expansions in
// the reference variables, which are named by the vertices; highly
// frozen vertices never acquire negative exponents under mutation.
struct Seed {
  std::vector<std::string> verts;
  std::vector<VertexClass> cls;
  std::vector<std::vector<long long>> B;
  std::vector<LaurentPoly> cluster;
  std::optional<DegreeConfig> degree;

  int size() const { return (int)verts.size(); }
  std::vector<int> unfrozen() const;
  int uf_col(int v) const;  // column of unfrozen vertex v, -1 otherwise
  int index_of(const std::string& name) const;
  bool is_frozen(int v) const { return cls[v] != VertexClass::Unfrozen; }
};

// Validates the partition, skew-symmetrizability of the unfrozen block,
// and the grading condition; installs the identity cluster.
Seed new_seed(std::vector<std::string> verts, std::vector<VertexClass> cls,
              std::vector<std::vector<long long>> B,
              std::optional<DegreeConfig> degree = std::nullopt);

bool is_skew_symmetrizable(const std::vector<std::vector<long long>>& M);

// Mutation at the unfrozen vertex with index k (position in verts).
Seed mutate(const Seed& s, int k);
DegreeConfig mutate_degree(const Seed& s, int k);

// Reclassification only; B and cluster are untouched.  semi_freeze
// moves highly frozen vertices to semi-frozen, highly_freeze the
// reverse.  The two maps are mutually inverse.
Seed semi_freeze(const Seed& s, const std::vector<int>& F);
Seed highly_freeze(const Seed& s, const std::vector<int>& F);

// Block-diagonal union; vertex names of b are primed until distinct
// from those of a.
Seed disjoint_union(const Seed& a, const Seed& b);

// Minimum exponent of the frozen vertex d across the terms of f, where
// f is read in the cluster coordinates of s.
int cluster_valuation(const Seed& s, const LaurentPoly& f, int d);

// Membership of f (written in the cluster coordinates of s) in the
// intersection of the Laurent rings of s and of its one-step mutations:
// Laurent everywhere, polynomial in every highly frozen variable.
bool in_upper_bound(const LaurentPoly& f, const Seed& s);

// Rank of B over the rationals equals the number of unfrozen vertices.
bool is_maximal_rank(const Seed& s);

// Unfrozen vertices with no incident exchange arrows at all; some
// structural results assume there are none, so callers may warn.
std::vector<int> isolated_unfrozen(const Seed& s);

}  // namespace mlift
