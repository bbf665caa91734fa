#pragma once

#include <cstddef>
#include <vector>

#include "mlift/lifting.hpp"
#include "mlift/rootsys.hpp"
#include "mlift/seedcore.hpp"

namespace mlift {

// Identifies a cluster variable as the minor of weight varpi_alpha
// twisted on the left by v and on the right by w (empty word = e).
struct MinorTag {
  int alpha = 0;
  WeylWord v;
  WeylWord w;
  bool operator==(const MinorTag&) const = default;
};

// Seed on the unipotent cell of a reduced word.  Vertex k is tagged
// (i_k, e, prefix_k); its degree is prefix_k(varpi_{i_k}) - varpi_{i_k};
// the last occurrence of each letter is highly frozen.
struct BranchingSeed {
  CartanData cartan;
  WeylWord word;
  Seed seed;  // degree always installed
  std::vector<MinorTag> tags;
};

BranchingSeed uw_seed(const CartanData& c, const WeylWord& word);

// Reduced word spelling w_{0,I} w_0, the inverse of w_0 w_{0,I}, where
// w_{0,I} is the longest element of the subsystem on the given letters.
// The subset must be proper.
WeylWord levi_word(const CartanData& c, const std::vector<int>& levi);

// Lifting rows over D = {a1..ar}: row alpha is the indicator of the
// positions with letter alpha.
LiftingConfig levi_nu(const CartanData& c, const WeylWord& word);

// Lifting rows over D = {a1_l..ar_l, a1_r..ar_r} for a reduced word of
// the longest element: left rows indicate the letter; right row alpha
// at column k is the alpha-th coordinate of the negative part of
// prefix_k(varpi_{i_k}).  left_rows_only keeps only the left block.
LiftingConfig tensor_nu(const CartanData& c, const WeylWord& word,
                        bool left_rows_only = false);

struct WeightTriple {
  Weight lambda;
  Weight mu;
  Weight nu;
};

// Dominant triple (varpi_{i_k}, negative part, positive part) of
// prefix_k(varpi_{i_k}) for a full-length word; k is 1-based.
WeightTriple tensor_variable_weight(const BranchingSeed& t, int k);

// Tests w0(lambda) + v(mu) == v(nu); the weights must be dominant, v
// may be any word.
bool prv_check(const CartanData& c, const Weight& lambda, const Weight& mu,
               const Weight& nu, const WeylWord& v);

// Union of the transposed cell seed of ip (primed names, tags
// (i'_j, prefix'_j, e)) followed by the cell seed of i (tags
// (i_j, e, prefix_j)), with indicator lifting rows over D = {a1..ar}.
struct DoubleCell {
  Seed seed;
  LiftingConfig nu;
  std::vector<MinorTag> tags;
};
DoubleCell double_cell_seed(const CartanData& c, const WeylWord& ip,
                            const WeylWord& i);

enum class BranchingCase { Levi, Tensor };

// Degree of the k-th lifted cluster variable: exponents over D plus the
// character of the residual torus.  k is 1-based.
struct LiftedDegree {
  std::vector<long long> lifting;
  Weight restricted;
};
LiftedDegree lifted_variable_degree(const BranchingSeed& t, BranchingCase bc, int k);

// Reduced words of the longest element in ascending-letter depth-first
// order, truncated at cap.
std::vector<WeylWord> reduced_words_of_longest(const CartanData& c, std::size_t cap);

}  // namespace mlift
