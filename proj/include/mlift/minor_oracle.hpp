#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mlift/rootsys.hpp"

namespace mlift {

using Rat = mpq_class;

// Univariate Laurent polynomial in a formal parameter t over exact
// rationals.  Invariant: no zero coefficients are stored.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long c);
  TPoly(const Rat& c);

  static TPoly term(int k, const Rat& c);  // c * t^k

  bool is_zero() const { return c_.empty(); }
  bool is_term() const { return c_.size() == 1; }
  int order() const;   // minimal exponent, throws on zero
  int degree() const;  // maximal exponent, throws on zero
  Rat coeff(int k) const;
  const std::map<int, Rat>& terms() const { return c_; }

  // Reciprocal of a single-term polynomial; throws otherwise.
  TPoly unit_inverse() const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) {
    a += b;
    return a;
  }
  friend TPoly operator-(TPoly a, const TPoly& b) {
    a -= b;
    return a;
  }
  friend TPoly operator*(const TPoly& a, const TPoly& b);

  bool operator==(const TPoly& o) const { return c_ == o.c_; }
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<int, Rat> c_;
};

TPoly pow(const TPoly& f, unsigned long e);

// Square matrix over TPoly entries.
struct RatLaurentMatrix {
  int n = 0;
  std::vector<std::vector<TPoly>> a;

  static RatLaurentMatrix identity(int n);
  static RatLaurentMatrix zero(int n);

  bool operator==(const RatLaurentMatrix& o) const { return n == o.n && a == o.a; }
  bool operator!=(const RatLaurentMatrix& o) const { return !(*this == o); }
};

RatLaurentMatrix operator*(const RatLaurentMatrix& x, const RatLaurentMatrix& y);
RatLaurentMatrix transpose(const RatLaurentMatrix& m);
TPoly det(const RatLaurentMatrix& m);
TPoly leading_minor(const RatLaurentMatrix& m, int k);
// Adjugate inverse; requires the determinant to be a single Laurent term.
RatLaurentMatrix inverse(const RatLaurentMatrix& m);

// Elementary SL_n generators, 1-based simple index i in [1, n-1].
RatLaurentMatrix x_plus(int n, int i, const TPoly& c);   // I + c E_{i,i+1}
RatLaurentMatrix x_minus(int n, int i, const TPoly& c);  // I + c E_{i+1,i}
RatLaurentMatrix coroot(int n, int i, const TPoly& c);   // diag(c, c^{-1}) at i
RatLaurentMatrix sbar(int n, int i);
RatLaurentMatrix sbar_inv(int n, int i);

// Representative of the element spelled by a reduced word: the product
// of sbar factors in written order.  Independent of the chosen reduced
// word; throws on a non-reduced word.
RatLaurentMatrix rep(int n, const WeylWord& w);
RatLaurentMatrix rep_inv(int n, const WeylWord& w);

// Leading principal k x k minor of rep(v)^{-1} * g * rep(w).
TPoly generalized_minor(int k, const WeylWord& v, const WeylWord& w,
                        const RatLaurentMatrix& g);

// Exchange identity among minors at weight w_alpha: checks
//   M(v,w) M(va,wa) == M(va,w) M(v,wa) + prod_{b != alpha} M_b(v,w)^{-A[b][alpha]}
// where va, wa append the letter alpha.  Requires both appended words to
// stay reduced.
bool fz_identity_check(int alpha, const WeylWord& v, const WeylWord& w,
                       const RatLaurentMatrix& g);

// Point of the unipotent subgroup attached to a reduced word: ordered
// product of root-group elements over the reflection-ordered inversion
// roots, one parameter each.
RatLaurentMatrix uw_point(int n, const WeylWord& w, const std::vector<TPoly>& params);

// One-parameter degeneration chart used to read off lifting exponents.
enum class Chart { Levi, TensorLeft, TensorRight };

// Order of the pole in t of the k-th cluster minor along the alpha-curve
// of the chart, at a random rational point of the word's unipotent
// group.  k and alpha are 1-based; retries a few times if the random
// point degenerates.
long long chart_valuation(Chart chart, int n, const WeylWord& word, int alpha, int k,
                          std::mt19937& rng);

enum class Side { Right, Left };

// Behaviour of M(v,w) under g -> g * x_beta(t) (Right) or
// g -> x_beta(t) * g (Left) at a random rational point: either the value
// ignores t, or it is polynomial of degree <= bound with constant
// coefficient M(v,w)(g) and top coefficient given by the reflected
// subscript.
struct ExpansionReport {
  bool t_dependent = false;
  long long bound = 0;
  bool degree_ok = false;
  bool constant_ok = false;
  bool top_ok = false;
  bool ok() const { return degree_ok && constant_ok && top_ok; }
};
ExpansionReport expansion_check(int n, int alpha, int beta, const WeylWord& v,
                                const WeylWord& w, Side side, std::mt19937& rng);

// Reproducible rational samples with numerator and denominator below a
// thousand.
Rat random_rational(std::mt19937& rng);
RatLaurentMatrix random_upper_unitriangular(int n, std::mt19937& rng);
RatLaurentMatrix random_lower_unitriangular(int n, std::mt19937& rng);
RatLaurentMatrix random_unimodular(int n, std::mt19937& rng);

}  // namespace mlift
