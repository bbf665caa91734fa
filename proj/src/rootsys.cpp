#include "mlift/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlift {

namespace {

std::vector<std::vector<int>> chain_matrix(int n) {
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    A[i][i] = 2;
    if (i + 1 < n) {
      A[i][i + 1] = -1;
      A[i + 1][i] = -1;
    }
  }
  return A;
}

void validate(const CartanData& c) {
  if (c.rank <= 0 || (int)c.A.size() != c.rank || (int)c.d.size() != c.rank)
    throw std::invalid_argument("cartan: malformed data for " + c.label);
  for (int i = 0; i < c.rank; ++i) {
    if ((int)c.A[i].size() != c.rank)
      throw std::invalid_argument("cartan: ragged matrix for " + c.label);
    if (c.A[i][i] != 2) throw std::invalid_argument("cartan: diagonal must be 2");
    if (c.d[i] <= 0) throw std::invalid_argument("cartan: symmetrizers must be positive");
    for (int j = 0; j < c.rank; ++j) {
      if (i != j && c.A[i][j] > 0)
        throw std::invalid_argument("cartan: off-diagonal entries must be nonpositive");
      if ((c.A[i][j] == 0) != (c.A[j][i] == 0))
        throw std::invalid_argument("cartan: zero pattern must be symmetric");
      if ((long long)c.d[i] * c.A[i][j] != (long long)c.d[j] * c.A[j][i])
        throw std::invalid_argument("cartan: not symmetrizable");
    }
  }
}

// Matrix of s_i acting on simple-root coordinates: identity except
// row i, which becomes e_i - (Cartan row i).
using ActMat = std::vector<std::vector<long long>>;

ActMat identity_mat(int n) {
  ActMat M(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  return M;
}

// M <- M * S_i, i 1-based: M[j][k] -= M[j][i-1] * A[i-1][k].
void right_mul_reflection(const CartanData& c, ActMat& M, int i) {
  const int n = c.rank;
  for (int j = 0; j < n; ++j) {
    const long long coef = M[j][i - 1];
    if (coef == 0) continue;
    for (int k = 0; k < n; ++k) M[j][k] -= coef * c.A[i - 1][k];
  }
}

RootVec column(const ActMat& M, int i) {
  RootVec v(M.size());
  for (size_t j = 0; j < M.size(); ++j) v[j] = M[j][i - 1];
  return v;
}

void check_letters(const CartanData& c, const WeylWord& w) {
  for (int i : w.letters)
    if (i < 1 || i > c.rank) throw std::invalid_argument("word letter out of range");
}

}  // namespace

CartanData cartan(char family, int rank) {
  CartanData c;
  c.label = std::string(1, family) + std::to_string(rank);
  c.rank = rank;
  switch (family) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("cartan: A requires rank >= 1");
      c.A = chain_matrix(rank);
      c.d.assign(rank, 1);
      break;
    case 'B':
      if (rank < 2) throw std::invalid_argument("cartan: B requires rank >= 2");
      c.A = chain_matrix(rank);
      c.A[rank - 1][rank - 2] = -2;
      c.d.assign(rank, 2);
      c.d[rank - 1] = 1;
      break;
    case 'C':
      if (rank < 2) throw std::invalid_argument("cartan: C requires rank >= 2");
      c.A = chain_matrix(rank);
      c.A[rank - 2][rank - 1] = -2;
      c.d.assign(rank, 1);
      c.d[rank - 1] = 2;
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("cartan: D requires rank >= 3");
      c.A = chain_matrix(rank);
      c.A[rank - 1][rank - 2] = 0;
      c.A[rank - 2][rank - 1] = 0;
      c.A[rank - 1][rank - 3] = -1;
      c.A[rank - 3][rank - 1] = -1;
      c.d.assign(rank, 1);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("cartan: E requires rank 6..8");
      // Node 2 hangs off node 4 of the chain 1-3-4-5-...-rank.
      c.A = std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) c.A[i][i] = 2;
      auto bond = [&](int i, int j) {
        c.A[i - 1][j - 1] = -1;
        c.A[j - 1][i - 1] = -1;
      };
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < rank; ++i) bond(i, i + 1);
      c.d.assign(rank, 1);
      break;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("cartan: F requires rank 4");
      c.A = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      c.d = {2, 2, 1, 1};
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("cartan: G requires rank 2");
      c.A = {{2, -3}, {-1, 2}};
      c.d = {1, 3};
      break;
    default:
      throw std::invalid_argument(std::string("cartan: unsupported family '") + family + "'");
  }
  validate(c);
  return c;
}

CartanData cartan_product(const std::vector<CartanData>& parts) {
  if (parts.empty()) throw std::invalid_argument("cartan_product: empty product");
  CartanData c;
  c.rank = 0;
  for (const auto& p : parts) {
    if (!c.label.empty()) c.label += "x";
    c.label += p.label;
    c.rank += p.rank;
  }
  c.A = std::vector<std::vector<int>>(c.rank, std::vector<int>(c.rank, 0));
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rank; ++i) {
      for (int j = 0; j < p.rank; ++j) c.A[off + i][off + j] = p.A[i][j];
      c.d.push_back(p.d[i]);
    }
    off += p.rank;
  }
  validate(c);
  return c;
}

CartanData parse_cartan(const std::string& label) {
  std::vector<CartanData> parts;
  size_t pos = 0;
  while (pos < label.size()) {
    size_t end = label.find('x', pos);
    if (end == std::string::npos) end = label.size();
    const std::string piece = label.substr(pos, end - pos);
    if (piece.size() < 2)
      throw std::invalid_argument("parse_cartan: bad factor '" + piece + "'");
    const char fam = piece[0];
    int rank = 0;
    for (size_t i = 1; i < piece.size(); ++i) {
      if (piece[i] < '0' || piece[i] > '9')
        throw std::invalid_argument("parse_cartan: bad rank in '" + piece + "'");
      rank = rank * 10 + (piece[i] - '0');
    }
    parts.push_back(cartan(fam, rank));
    pos = end + 1;
  }
  if (parts.empty()) throw std::invalid_argument("parse_cartan: empty label");
  return parts.size() == 1 ? parts[0] : cartan_product(parts);
}

Weight fundamental_weight(const CartanData& c, int i) {
  if (i < 1 || i > c.rank) throw std::invalid_argument("fundamental_weight: index out of range");
  Weight w(c.rank, 0);
  w[i - 1] = 1;
  return w;
}

Weight zero_weight(const CartanData& c) { return Weight(c.rank, 0); }

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](long long x) { return x >= 0; });
}

RootVec simple_root(const CartanData& c, int i) {
  if (i < 1 || i > c.rank) throw std::invalid_argument("simple_root: index out of range");
  RootVec r(c.rank, 0);
  r[i - 1] = 1;
  return r;
}

bool is_positive_root_vec(const RootVec& r) {
  bool nonzero = false;
  for (long long x : r) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

Weight root_to_weight(const CartanData& c, const RootVec& r) {
  if ((int)r.size() != c.rank) throw std::invalid_argument("root rank mismatch");
  Weight w(c.rank, 0);
  for (int j = 0; j < c.rank; ++j)
    for (int k = 0; k < c.rank; ++k) w[j] += (long long)c.A[j][k] * r[k];
  return w;
}

Weight simple_reflect_weight(const CartanData& c, int i, Weight w) {
  if (i < 1 || i > c.rank || (int)w.size() != c.rank)
    throw std::invalid_argument("simple_reflect_weight: rank mismatch");
  const long long pairing = w[i - 1];
  for (int j = 0; j < c.rank; ++j) w[j] -= pairing * c.A[j][i - 1];
  return w;
}

RootVec simple_reflect_root(const CartanData& c, int i, RootVec r) {
  if (i < 1 || i > c.rank || (int)r.size() != c.rank)
    throw std::invalid_argument("simple_reflect_root: rank mismatch");
  long long s = 0;
  for (int j = 0; j < c.rank; ++j) s += (long long)c.A[i - 1][j] * r[j];
  r[i - 1] -= s;
  return r;
}

Weight word_act(const CartanData& c, const WeylWord& w, Weight lambda) {
  check_letters(c, w);
  if ((int)lambda.size() != c.rank) throw std::invalid_argument("word_act: rank mismatch");
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    lambda = simple_reflect_weight(c, *it, std::move(lambda));
  return lambda;
}

RootVec word_act_root(const CartanData& c, const WeylWord& w, RootVec gamma) {
  check_letters(c, w);
  if ((int)gamma.size() != c.rank) throw std::invalid_argument("word_act_root: rank mismatch");
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    gamma = simple_reflect_root(c, *it, std::move(gamma));
  return gamma;
}

bool is_reduced(const CartanData& c, const WeylWord& w) {
  check_letters(c, w);
  ActMat M = identity_mat(c.rank);
  for (int i : w.letters) {
    if (!is_positive_root_vec(column(M, i))) return false;
    right_mul_reflection(c, M, i);
  }
  return true;
}

std::vector<RootVec> inversions(const CartanData& c, const WeylWord& w) {
  check_letters(c, w);
  std::vector<RootVec> betas;
  ActMat M = identity_mat(c.rank);
  for (int i : w.letters) {
    RootVec beta = column(M, i);
    if (!is_positive_root_vec(beta)) throw std::invalid_argument("inversions: word is not reduced");
    betas.push_back(std::move(beta));
    right_mul_reflection(c, M, i);
  }
  return betas;
}

WeylWord longest_word(const CartanData& c) {
  WeylWord w;
  ActMat M = identity_mat(c.rank);
  for (;;) {
    int next = 0;
    for (int i = 1; i <= c.rank; ++i) {
      if (is_positive_root_vec(column(M, i))) {
        next = i;
        break;
      }
    }
    if (next == 0) return w;
    w.letters.push_back(next);
    right_mul_reflection(c, M, next);
  }
}

size_t positive_root_count(const CartanData& c) { return longest_word(c).size(); }

WeylWord reduced_word(const CartanData& c, const WeylWord& w) {
  check_letters(c, w);
  // Track v = elem(w)^{-1}; the smallest i with v(alpha_i) negative is a
  // right descent of v, hence the next letter of elem(w).
  ActMat M = identity_mat(c.rank);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    right_mul_reflection(c, M, *it);
  WeylWord out;
  for (size_t guard = 0; guard <= w.size(); ++guard) {
    int next = 0;
    for (int i = 1; i <= c.rank; ++i) {
      if (!is_positive_root_vec(column(M, i))) {
        next = i;
        break;
      }
    }
    if (next == 0) return out;
    out.letters.push_back(next);
    right_mul_reflection(c, M, next);
  }
  throw std::logic_error("reduced_word: peel did not terminate");
}

WordStats word_stats(const CartanData& c, const WeylWord& w) {
  check_letters(c, w);
  const int l = (int)w.size();
  WordStats st;
  st.kplus.assign(l, l + 1);
  st.kminus.assign(l, 0);
  for (int k = 0; k < l; ++k) {
    for (int j = k + 1; j < l; ++j) {
      if (w.letters[j] == w.letters[k]) {
        st.kplus[k] = j + 1;
        break;
      }
    }
    for (int j = k - 1; j >= 0; --j) {
      if (w.letters[j] == w.letters[k]) {
        st.kminus[k] = j + 1;
        break;
      }
    }
    const int letter = w.letters[k];
    if (!st.alpha_min.count(letter)) st.alpha_min[letter] = k + 1;
    st.alpha_max[letter] = k + 1;
  }
  // gamma_k = s_{i_k} ... s_{i_1} (alpha); first negative step, if any.
  for (int a = 1; a <= c.rank; ++a) {
    RootVec gamma = simple_root(c, a);
    for (int k = 0; k < l; ++k) {
      gamma = simple_reflect_root(c, w.letters[k], std::move(gamma));
      if (!is_positive_root_vec(gamma)) {
        st.alpha_minus[a] = k + 1;
        break;
      }
    }
  }
  return st;
}

std::pair<Weight, Weight> dominant_split(const Weight& lambda) {
  Weight plus(lambda.size(), 0), minus(lambda.size(), 0);
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > 0)
      plus[i] = lambda[i];
    else
      minus[i] = -lambda[i];
  }
  return {plus, minus};
}

}  // namespace mlift
