#pragma once

#include <optional>

#include "mlift/seedcore.hpp"

namespace mlift {

// D-indexed lifting matrix for a seed with vertex set I; D and I are
// disjoint.  nu has one row per D-name and one column per vertex of
// the target seed.
struct LiftingConfig {
  std::vector<std::string> D;
  std::vector<std::vector<long long>> nu;
};

// A lifted seed remembers the configuration that produced it and the
// size of the base vertex block (D-vertices sit at the end).
struct LiftedSeed {
  Seed seed;
  LiftingConfig nu;
  int base_size = 0;
};

// Canonical grading of a lifted seed: vertex i gets column i of nu,
// vertex d gets the unit vector e_d.
DegreeConfig canonical_lift_degree(const LiftingConfig& nu, int base_size);

// Grading carried through a lift: the canonical block first, then the
// original sigma on base vertices (zero on D).
DegreeConfig lift_degree_config(const DegreeConfig& sigma, const LiftingConfig& nu);

// New vertices D are appended semi-frozen; the exchange matrix gains
// rows -nu*B; cluster variable i is multiplied by the D-monomial with
// exponents nu_{.,i}.  The canonical grading (or the lift of the base
// grading, when present) is attached.
LiftedSeed lift_seed(const Seed& t, const LiftingConfig& nu);

// nu'_{d,k} = max((nu B+)_{d,k}, (nu B-)_{d,k}) - nu_{d,k}; other
// columns unchanged.
LiftingConfig mutate_lifting_matrix(const LiftingConfig& nu, const Seed& t, int k);

// Common degree of all terms of f under deg (positional against
// f.vars()), or nullopt if f is inhomogeneous or zero.
std::optional<std::vector<long long>> homogeneous_degree(const DegreeConfig& deg,
                                                         const LaurentPoly& f);

// Exact comparison, per prefix of the mutation word, of
// lift(mutate(t)) against mutate(lift(t)), plus recovery of the base
// cluster under the deletion map x_d -> 1.
struct SquareReport {
  size_t prefix = 0;
  bool b_match = false;
  bool x_match = false;
  bool degree_match = false;
  bool deletion_ok = false;
  bool ok() const { return b_match && x_match && degree_match && deletion_ok; }
};
std::vector<SquareReport> verify_lift_mutation_square(const Seed& t, const LiftingConfig& nu,
                                                      const std::vector<int>& word);

}  // namespace mlift
