#include "mlift/branching.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace mlift {

namespace {

void check_letters(const CartanData& c, const WeylWord& w, const char* who) {
  for (int i : w.letters)
    if (i < 1 || i > c.rank)
      throw std::invalid_argument(std::string(who) + ": letter out of range");
}

void check_full_length(const CartanData& c, const WeylWord& w, const char* who) {
  check_letters(c, w, who);
  if (!is_reduced(c, w) || w.size() != positive_root_count(c))
    throw std::invalid_argument(std::string(who) +
                                ": word must be a reduced word of the longest element");
}

}  // namespace

BranchingSeed uw_seed(const CartanData& c, const WeylWord& word) {
  check_letters(c, word, "uw_seed");
  if (!is_reduced(c, word)) throw std::invalid_argument("uw_seed: word is not reduced");
  const int l = (int)word.size();
  const WordStats st = word_stats(c, word);

  std::vector<std::string> verts(l);
  std::vector<VertexClass> cls(l, VertexClass::Unfrozen);
  std::vector<int> cols;  // unfrozen positions, 1-based
  for (int k = 1; k <= l; ++k) {
    verts[k - 1] = "x" + std::to_string(k);
    if (st.kplus[k - 1] == l + 1)
      cls[k - 1] = VertexClass::HighlyFrozen;
    else
      cols.push_back(k);
  }

  std::vector<std::vector<long long>> B(l, std::vector<long long>((int)cols.size(), 0));
  for (int ck = 0; ck < (int)cols.size(); ++ck) {
    const int k = cols[ck];
    const int ik = word.letters[k - 1];
    const int kp = st.kplus[k - 1];
    for (int j = 1; j <= l; ++j) {
      if (j == k) continue;
      const int ij = word.letters[j - 1];
      const int jp = st.kplus[j - 1];
      long long b = 0;
      if (j == st.kminus[k - 1])
        b = 1;
      else if (j == kp)
        b = -1;
      else if (j < k && k < jp && jp < kp)
        b = c.A[ij - 1][ik - 1];
      else if (k < j && j < kp && kp < jp)
        b = -c.A[ij - 1][ik - 1];
      B[j - 1][ck] = b;
    }
  }

  DegreeConfig deg;
  deg.m = c.rank;
  deg.sigma.resize(l);
  BranchingSeed out;
  out.tags.resize(l);
  for (int k = 1; k <= l; ++k) {
    const Weight wk = fundamental_weight(c, word.letters[k - 1]);
    deg.sigma[k - 1] = sub(word_act(c, word.prefix(k), wk), wk);
    out.tags[k - 1] = MinorTag{word.letters[k - 1], WeylWord{}, word.prefix(k)};
  }

  out.cartan = c;
  out.word = word;
  out.seed = new_seed(std::move(verts), std::move(cls), std::move(B), std::move(deg));
  return out;
}

WeylWord levi_word(const CartanData& c, const std::vector<int>& levi) {
  std::set<int> I(levi.begin(), levi.end());
  for (int i : I)
    if (i < 1 || i > c.rank) throw std::invalid_argument("levi_word: index out of range");
  if ((int)I.size() == c.rank) throw std::invalid_argument("levi_word: subset must be proper");

  WeylWord w0I;
  for (;;) {
    bool extended = false;
    for (int i : I) {
      w0I.letters.push_back(i);
      if (is_reduced(c, w0I)) {
        extended = true;
        break;
      }
      w0I.letters.pop_back();
    }
    if (!extended) break;
  }

  WeylWord cat = w0I;
  const WeylWord w0 = longest_word(c);
  cat.letters.insert(cat.letters.end(), w0.letters.begin(), w0.letters.end());
  WeylWord z = reduced_word(c, cat);
  if (z.size() != positive_root_count(c) - w0I.size())
    throw std::logic_error("levi_word: unexpected length");
  return z;
}

LiftingConfig levi_nu(const CartanData& c, const WeylWord& word) {
  check_letters(c, word, "levi_nu");
  LiftingConfig nu;
  for (int a = 1; a <= c.rank; ++a) {
    nu.D.push_back("a" + std::to_string(a));
    std::vector<long long> row(word.size(), 0);
    for (size_t k = 0; k < word.size(); ++k) row[k] = word.letters[k] == a ? 1 : 0;
    nu.nu.push_back(std::move(row));
  }
  return nu;
}

LiftingConfig tensor_nu(const CartanData& c, const WeylWord& word, bool left_rows_only) {
  check_full_length(c, word, "tensor_nu");
  const int l = (int)word.size();
  LiftingConfig nu;
  for (int a = 1; a <= c.rank; ++a) nu.D.push_back("a" + std::to_string(a) + "_l");
  if (!left_rows_only)
    for (int a = 1; a <= c.rank; ++a) nu.D.push_back("a" + std::to_string(a) + "_r");
  nu.nu.assign(nu.D.size(), std::vector<long long>(l, 0));
  for (int k = 1; k <= l; ++k) {
    const int ik = word.letters[k - 1];
    nu.nu[ik - 1][k - 1] = 1;
    if (left_rows_only) continue;
    const Weight lam = word_act(c, word.prefix(k), fundamental_weight(c, ik));
    for (int a = 1; a <= c.rank; ++a)
      nu.nu[c.rank + a - 1][k - 1] = std::max(0LL, -lam[a - 1]);
  }
  return nu;
}

WeightTriple tensor_variable_weight(const BranchingSeed& t, int k) {
  if (k < 1 || k > (int)t.word.size())
    throw std::out_of_range("tensor_variable_weight: index out of range");
  const int ik = t.word.letters[k - 1];
  const Weight lam = word_act(t.cartan, t.word.prefix(k), fundamental_weight(t.cartan, ik));
  const auto parts = dominant_split(lam);
  return WeightTriple{fundamental_weight(t.cartan, ik), parts.second, parts.first};
}

bool prv_check(const CartanData& c, const Weight& lambda, const Weight& mu,
               const Weight& nu, const WeylWord& v) {
  if (!is_dominant(lambda) || !is_dominant(mu) || !is_dominant(nu))
    throw std::invalid_argument("prv_check: weights must be dominant");
  check_letters(c, v, "prv_check");
  const Weight lhs = add(word_act(c, longest_word(c), lambda), word_act(c, v, mu));
  return lhs == word_act(c, v, nu);
}

DoubleCell double_cell_seed(const CartanData& c, const WeylWord& ip, const WeylWord& i) {
  check_full_length(c, ip, "double_cell_seed");
  check_full_length(c, i, "double_cell_seed");
  const int l = (int)ip.size();

  const BranchingSeed left = uw_seed(c, ip);
  const BranchingSeed plain = uw_seed(c, i);

  std::vector<std::string> pnames = left.seed.verts;
  for (auto& nm : pnames) nm += "'";
  const Seed tminus = new_seed(std::move(pnames), left.seed.cls, left.seed.B);
  const Seed tplain = new_seed(plain.seed.verts, plain.seed.cls, plain.seed.B);

  DoubleCell out;
  out.seed = disjoint_union(tminus, tplain);
  for (int a = 1; a <= c.rank; ++a) out.nu.D.push_back("a" + std::to_string(a));
  out.nu.nu.assign(c.rank, std::vector<long long>(2 * l, 0));
  for (int j = 1; j <= l; ++j) {
    out.nu.nu[ip.letters[j - 1] - 1][j - 1] = 1;
    out.nu.nu[i.letters[j - 1] - 1][l + j - 1] = 1;
    out.tags.push_back(MinorTag{ip.letters[j - 1], ip.prefix(j), WeylWord{}});
  }
  for (int j = 1; j <= l; ++j)
    out.tags.push_back(MinorTag{i.letters[j - 1], WeylWord{}, i.prefix(j)});
  return out;
}

LiftedDegree lifted_variable_degree(const BranchingSeed& t, BranchingCase bc, int k) {
  if (k < 1 || k > (int)t.word.size())
    throw std::out_of_range("lifted_variable_degree: index out of range");
  const LiftingConfig nu =
      bc == BranchingCase::Levi ? levi_nu(t.cartan, t.word) : tensor_nu(t.cartan, t.word);
  LiftedDegree out;
  out.lifting.resize(nu.D.size());
  Weight w = t.seed.degree->sigma[k - 1];
  for (size_t d = 0; d < nu.D.size(); ++d) {
    out.lifting[d] = nu.nu[d][k - 1];
    w[d % (size_t)t.cartan.rank] += out.lifting[d];
  }
  out.restricted = std::move(w);
  return out;
}

std::vector<WeylWord> reduced_words_of_longest(const CartanData& c, std::size_t cap) {
  const size_t n = positive_root_count(c);
  std::vector<WeylWord> out;
  if (cap == 0) return out;
  WeylWord cur;
  std::function<bool()> dfs = [&]() -> bool {
    if (cur.size() == n) {
      out.push_back(cur);
      return out.size() >= cap;
    }
    for (int i = 1; i <= c.rank; ++i) {
      cur.letters.push_back(i);
      if (is_reduced(c, cur) && dfs()) return true;
      cur.letters.pop_back();
    }
    return false;
  };
  dfs();
  return out;
}

}  // namespace mlift
