#pragma once

#include <map>
#include <string>
#include <vector>

namespace mlift {

// Finite root-system datum.  A[i][j] is the pairing of the j-th simple
// root against the i-th simple coroot; d holds positive symmetrizers
// with d[i]*A[i][j] == d[j]*A[j][i].
struct CartanData {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> A;
  std::vector<int> d;
};

// Families A..G with Bourbaki numbering; products via cartan_product or
// labels like "A2xA1".
CartanData cartan(char family, int rank);
CartanData cartan_product(const std::vector<CartanData>& parts);
CartanData parse_cartan(const std::string& label);

// Weights in fundamental-weight coordinates (coordinate i is the
// pairing against the i-th simple coroot); roots in simple-root
// coordinates.  Simple indices are 1-based throughout.
using Weight = std::vector<long long>;
using RootVec = std::vector<long long>;

Weight fundamental_weight(const CartanData& c, int i);
Weight zero_weight(const CartanData& c);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
bool is_dominant(const Weight& w);

RootVec simple_root(const CartanData& c, int i);
bool is_positive_root_vec(const RootVec& r);
Weight root_to_weight(const CartanData& c, const RootVec& r);

Weight simple_reflect_weight(const CartanData& c, int i, Weight w);
RootVec simple_reflect_root(const CartanData& c, int i, RootVec r);

// Sequence of simple-reflection indices.  A word acts as the
// left-to-right product of its letters, rightmost letter first, so the
// prefix (i_1,...,i_k) acts by s_{i_1}...s_{i_k}.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}
  WeylWord(std::initializer_list<int> l) : letters(l) {}
  size_t size() const { return letters.size(); }
  WeylWord prefix(size_t k) const {
    return WeylWord(std::vector<int>(letters.begin(), letters.begin() + k));
  }
  WeylWord reversed() const {
    return WeylWord(std::vector<int>(letters.rbegin(), letters.rend()));
  }
  bool operator==(const WeylWord&) const = default;
};

Weight word_act(const CartanData& c, const WeylWord& w, Weight lambda);
RootVec word_act_root(const CartanData& c, const WeylWord& w, RootVec gamma);

bool is_reduced(const CartanData& c, const WeylWord& w);

// Inversion roots in reflection order: the k-th entry is the image of
// the k-th letter's simple root under the length-(k-1) prefix.
// Requires a reduced word.
std::vector<RootVec> inversions(const CartanData& c, const WeylWord& w);

// Deterministic reduced word for the longest element: repeatedly append
// the smallest index that keeps the word reduced.
WeylWord longest_word(const CartanData& c);

// Canonical reduced word for the element spelled by an arbitrary word,
// peeling the smallest left descent first.
WeylWord reduced_word(const CartanData& c, const WeylWord& w);

size_t positive_root_count(const CartanData& c);

// Index combinatorics of a reduced word: next/previous positions with
// the same letter (sentinels l+1 and 0), first/last position per letter,
// and, per simple root alpha in the inversion set, the first k whose
// length-k suffix-product prefix sends alpha negative.
struct WordStats {
  std::vector<int> kplus;   // size l, values in [2..l+1]
  std::vector<int> kminus;  // size l, values in [0..l-1]
  std::map<int, int> alpha_min;
  std::map<int, int> alpha_max;
  std::map<int, int> alpha_minus;
};
WordStats word_stats(const CartanData& c, const WeylWord& w);

// Componentwise positive and negative parts, both dominant, with
// lambda = plus - minus.
std::pair<Weight, Weight> dominant_split(const Weight& lambda);

}  // namespace mlift
