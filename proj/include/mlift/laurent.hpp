#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mlift {

using Int = mpz_class;

// Sentinel returned by var_valuation on the zero polynomial.
inline constexpr int val_infinity = 1 << 30;

// Graded-lexicographic order on exponent vectors: total degree first,
// then lexicographic.  Canonical everywhere: term storage, division,
// serialization.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Exact multivariate Laurent polynomial over arbitrary-precision
// integers.  Exponents are indexed by a named, ordered variable set.
// Invariant: no zero coefficients are stored and every exponent vector
// has length vars().size().
class LaurentPoly {
 public:
  using Terms = std::map<std::vector<int>, Int, GrlexLess>;

  LaurentPoly();
  explicit LaurentPoly(std::vector<std::string> vars);

  static LaurentPoly constant(std::vector<std::string> vars, Int c);
  static LaurentPoly monomial(std::vector<std::string> vars,
                              std::vector<int> exp, Int c = Int(1));
  static LaurentPoly variable(std::vector<std::string> vars,
                              const std::string& name);

  const std::vector<std::string>& vars() const { return *vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Monomial with coefficient +1 or -1, hence invertible over the integers.
  bool is_unit_monomial() const;

  int var_index(const std::string& name) const;  // -1 if absent

  // Reindexes onto a superset variable list.  Every current variable
  // must occur in target.
  LaurentPoly extended_to(const std::vector<std::string>& target) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void add_term(const std::vector<int>& exp, const Int& c);

  std::shared_ptr<const std::vector<std::string>> vars_;
  Terms terms_;

  friend LaurentPoly mul_by_monomial(const LaurentPoly& f,
                                     const std::vector<int>& exp,
                                     const Int& c);
  friend std::optional<LaurentPoly> exact_div(const LaurentPoly& f,
                                              const LaurentPoly& g);
};

LaurentPoly pow(const LaurentPoly& f, unsigned long e);

// Deterministic union: vars of a, then vars of b not already present.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Quotient f/g when it exists in the integer Laurent ring, nullopt
// otherwise.  Throws on g = 0.
std::optional<LaurentPoly> exact_div(const LaurentPoly& f,
                                     const LaurentPoly& g);

// Substitutes images for every variable occurring in f.  A variable
// occurring with a negative exponent needs a unit-monomial image or an
// image that divides exactly; otherwise throws naming the variable.
LaurentPoly substitute(const LaurentPoly& f,
                       const std::map<std::string, LaurentPoly>& images);

// Minimal exponent of var over the terms of f; val_infinity for f = 0.
int var_valuation(const LaurentPoly& f, const std::string& var);

// Parses the output of str() (terms joined by " + "/" - ", factors by
// "*", exponents by "^") relative to the given variable set.
LaurentPoly parse_poly(const std::vector<std::string>& vars,
                       const std::string& text);

}  // namespace mlift
