#include "mlift/minor_oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace mlift {

namespace {

void strip(std::map<int, Rat>& c) {
  for (auto it = c.begin(); it != c.end();) {
    if (it->second == 0)
      it = c.erase(it);
    else
      ++it;
  }
}

CartanData type_a(int n) {
  if (n < 2) throw std::invalid_argument("matrix size must be at least 2");
  return cartan('A', n - 1);
}

void check_simple_index(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("simple index out of range");
}

}  // namespace

TPoly::TPoly(long c) {
  if (c != 0) c_[0] = Rat(c);
}

TPoly::TPoly(const Rat& c) {
  if (c != 0) c_[0] = c;
}

TPoly TPoly::term(int k, const Rat& c) {
  TPoly p;
  if (c != 0) p.c_[k] = c;
  return p;
}

int TPoly::order() const {
  if (c_.empty()) throw std::logic_error("order of the zero polynomial");
  return c_.begin()->first;
}

int TPoly::degree() const {
  if (c_.empty()) throw std::logic_error("degree of the zero polynomial");
  return c_.rbegin()->first;
}

Rat TPoly::coeff(int k) const {
  const auto it = c_.find(k);
  return it == c_.end() ? Rat(0) : it->second;
}

TPoly TPoly::unit_inverse() const {
  if (!is_term()) throw std::invalid_argument("reciprocal of a non-unit");
  const auto& [k, c] = *c_.begin();
  return term(-k, 1 / c);
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& [k, c] : r.c_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [k, c] : o.c_) c_[k] += c;
  strip(c_);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [k, c] : o.c_) c_[k] -= c;
  strip(c_);
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_) r.c_[ka + kb] += ca * cb;
  strip(r.c_);
  return r;
}

std::string TPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : c_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    const Rat ac = abs(c);
    if (ac != 1 || k == 0) out << ac.get_str();
    if (k != 0) {
      if (ac != 1) out << "*";
      out << "t";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

TPoly pow(const TPoly& f, unsigned long e) {
  TPoly r(1);
  for (unsigned long i = 0; i < e; ++i) r = r * f;
  return r;
}

RatLaurentMatrix RatLaurentMatrix::identity(int n) {
  RatLaurentMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.a[i][i] = TPoly(1);
  return m;
}

RatLaurentMatrix RatLaurentMatrix::zero(int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  RatLaurentMatrix m;
  m.n = n;
  m.a.assign(n, std::vector<TPoly>(n));
  return m;
}

RatLaurentMatrix operator*(const RatLaurentMatrix& x, const RatLaurentMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
  RatLaurentMatrix r = RatLaurentMatrix::zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (x.a[i][k].is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (y.a[k][j].is_zero()) continue;
        r.a[i][j] += x.a[i][k] * y.a[k][j];
      }
    }
  return r;
}

RatLaurentMatrix transpose(const RatLaurentMatrix& m) {
  RatLaurentMatrix r = RatLaurentMatrix::zero(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r.a[j][i] = m.a[i][j];
  return r;
}

namespace {

TPoly det_impl(const std::vector<std::vector<TPoly>>& m) {
  const int n = (int)m.size();
  if (n == 1) return m[0][0];
  TPoly r;
  for (int i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<TPoly>> sub;
    sub.reserve(n - 1);
    for (int p = 0; p < n; ++p) {
      if (p == i) continue;
      sub.emplace_back(m[p].begin() + 1, m[p].end());
    }
    const TPoly cof = m[i][0] * det_impl(sub);
    if (i % 2 == 0)
      r += cof;
    else
      r -= cof;
  }
  return r;
}

}  // namespace

TPoly det(const RatLaurentMatrix& m) { return det_impl(m.a); }

TPoly leading_minor(const RatLaurentMatrix& m, int k) {
  if (k < 1 || k > m.n) throw std::invalid_argument("minor size out of range");
  std::vector<std::vector<TPoly>> sub(k);
  for (int i = 0; i < k; ++i) sub[i].assign(m.a[i].begin(), m.a[i].begin() + k);
  return det_impl(sub);
}

RatLaurentMatrix inverse(const RatLaurentMatrix& m) {
  const TPoly d = det(m);
  if (d.is_zero()) throw std::invalid_argument("inverse of a singular matrix");
  if (!d.is_term()) throw std::invalid_argument("inverse needs a unit determinant");
  const TPoly dinv = d.unit_inverse();
  RatLaurentMatrix r = RatLaurentMatrix::zero(m.n);
  if (m.n == 1) {
    r.a[0][0] = dinv;
    return r;
  }
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      std::vector<std::vector<TPoly>> sub;
      sub.reserve(m.n - 1);
      for (int p = 0; p < m.n; ++p) {
        if (p == i) continue;
        std::vector<TPoly> row;
        row.reserve(m.n - 1);
        for (int q = 0; q < m.n; ++q)
          if (q != j) row.push_back(m.a[p][q]);
        sub.push_back(std::move(row));
      }
      TPoly cof = det_impl(sub) * dinv;
      if ((i + j) % 2 == 1) cof = -cof;
      r.a[j][i] = std::move(cof);
    }
  return r;
}

RatLaurentMatrix x_plus(int n, int i, const TPoly& c) {
  check_simple_index(n, i);
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  m.a[i - 1][i] = c;
  return m;
}

RatLaurentMatrix x_minus(int n, int i, const TPoly& c) {
  check_simple_index(n, i);
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  m.a[i][i - 1] = c;
  return m;
}

RatLaurentMatrix coroot(int n, int i, const TPoly& c) {
  check_simple_index(n, i);
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  m.a[i - 1][i - 1] = c;
  m.a[i][i] = c.unit_inverse();
  return m;
}

RatLaurentMatrix sbar(int n, int i) {
  check_simple_index(n, i);
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  m.a[i - 1][i - 1] = TPoly();
  m.a[i][i] = TPoly();
  m.a[i - 1][i] = TPoly(-1);
  m.a[i][i - 1] = TPoly(1);
  return m;
}

RatLaurentMatrix sbar_inv(int n, int i) {
  RatLaurentMatrix m = sbar(n, i);
  m.a[i - 1][i] = TPoly(1);
  m.a[i][i - 1] = TPoly(-1);
  return m;
}

RatLaurentMatrix rep(int n, const WeylWord& w) {
  if (!is_reduced(type_a(n), w)) throw std::invalid_argument("rep: word is not reduced");
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  for (int i : w.letters) m = m * sbar(n, i);
  return m;
}

RatLaurentMatrix rep_inv(int n, const WeylWord& w) {
  if (!is_reduced(type_a(n), w)) throw std::invalid_argument("rep_inv: word is not reduced");
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    m = m * sbar_inv(n, *it);
  return m;
}

TPoly generalized_minor(int k, const WeylWord& v, const WeylWord& w,
                        const RatLaurentMatrix& g) {
  if (k < 1 || k > g.n - 1) throw std::invalid_argument("weight index out of range");
  return leading_minor(rep_inv(g.n, v) * g * rep(g.n, w), k);
}

bool fz_identity_check(int alpha, const WeylWord& v, const WeylWord& w,
                       const RatLaurentMatrix& g) {
  const int n = g.n;
  const CartanData ca = type_a(n);
  check_simple_index(n, alpha);
  WeylWord va = v, wa = w;
  va.letters.push_back(alpha);
  wa.letters.push_back(alpha);
  if (!is_reduced(ca, va) || !is_reduced(ca, wa))
    throw std::invalid_argument("fz_identity_check: appended word is not reduced");

  const TPoly lhs = generalized_minor(alpha, v, w, g) * generalized_minor(alpha, va, wa, g);
  TPoly rhs = generalized_minor(alpha, va, w, g) * generalized_minor(alpha, v, wa, g);
  TPoly prod(1);
  for (int b = 1; b <= n - 1; ++b) {
    if (b == alpha) continue;
    const int e = -ca.A[b - 1][alpha - 1];
    if (e > 0) prod = prod * pow(generalized_minor(b, v, w, g), (unsigned long)e);
  }
  rhs += prod;
  return lhs == rhs;
}

RatLaurentMatrix uw_point(int n, const WeylWord& w, const std::vector<TPoly>& params) {
  const CartanData ca = type_a(n);
  const auto roots = inversions(ca, w);
  if (params.size() != roots.size()) throw std::invalid_argument("uw_point: arity mismatch");
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  for (size_t j = 0; j < roots.size(); ++j) {
    int p = 0, q = 0;
    for (int i = 0; i < ca.rank; ++i) {
      if (roots[j][i] != 0) {
        if (p == 0) p = i + 1;
        q = i + 2;
      }
    }
    RatLaurentMatrix e = RatLaurentMatrix::identity(n);
    e.a[p - 1][q - 1] = params[j];
    m = m * e;
  }
  return m;
}

Rat random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-999, 999), den(1, 999);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

RatLaurentMatrix random_upper_unitriangular(int n, std::mt19937& rng) {
  RatLaurentMatrix m = RatLaurentMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.a[i][j] = TPoly(random_rational(rng));
  return m;
}

RatLaurentMatrix random_lower_unitriangular(int n, std::mt19937& rng) {
  return transpose(random_upper_unitriangular(n, rng));
}

RatLaurentMatrix random_unimodular(int n, std::mt19937& rng) {
  RatLaurentMatrix m = random_lower_unitriangular(n, rng) * random_upper_unitriangular(n, rng);
  for (int i = 1; i <= n - 1; ++i) {
    Rat c = random_rational(rng);
    while (c == 0) c = random_rational(rng);
    m = m * coroot(n, i, TPoly(c));
  }
  return m;
}

long long chart_valuation(Chart chart, int n, const WeylWord& word, int alpha, int k,
                          std::mt19937& rng) {
  const CartanData ca = type_a(n);
  check_simple_index(n, alpha);
  if (k < 1 || k > (int)word.size()) throw std::invalid_argument("chart_valuation: k out of range");
  const auto roots = inversions(ca, word);
  if (chart != Chart::Levi && roots.size() != positive_root_count(ca))
    throw std::invalid_argument("chart_valuation: tensor charts need a longest word");

  const RatLaurentMatrix curve = x_plus(n, alpha, TPoly::term(-1, 1));
  const RootVec alpha_root = simple_root(ca, alpha);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<TPoly> params;
    for (const RootVec& r : roots) {
      // In the Levi chart, a simple inversion root alpha means the curve
      // direction lies inside the group; the point must avoid it.
      const bool zeroed = chart == Chart::Levi && r == alpha_root;
      params.push_back(zeroed ? TPoly() : TPoly(random_rational(rng)));
    }
    const RatLaurentMatrix y = uw_point(n, word, params);
    const RatLaurentMatrix g = chart == Chart::TensorRight ? y * curve : curve * y;
    const TPoly minor = generalized_minor(word.letters[k - 1], WeylWord{}, word.prefix(k), g);
    if (!minor.is_zero()) return -(long long)minor.order();
  }
  throw std::runtime_error("chart_valuation: degenerate point persisted");
}

ExpansionReport expansion_check(int n, int alpha, int beta, const WeylWord& v,
                                const WeylWord& w, Side side, std::mt19937& rng) {
  const CartanData ca = type_a(n);
  check_simple_index(n, alpha);
  check_simple_index(n, beta);
  if (!is_reduced(ca, v) || !is_reduced(ca, w))
    throw std::invalid_argument("expansion_check: words must be reduced");

  const RatLaurentMatrix g = random_unimodular(n, rng);
  const RatLaurentMatrix xb = x_plus(n, beta, TPoly::term(1, 1));
  const TPoly base = generalized_minor(alpha, v, w, g);
  const RootVec beta_root = simple_root(ca, beta);

  ExpansionReport report;
  TPoly expanded;
  WeylWord reflected;
  if (side == Side::Right) {
    report.t_dependent = !is_positive_root_vec(word_act_root(ca, w.reversed(), beta_root));
    report.bound = -word_act(ca, w, fundamental_weight(ca, alpha))[beta - 1];
    expanded = generalized_minor(alpha, v, w, g * xb);
    reflected = w;
  } else {
    report.t_dependent = is_positive_root_vec(word_act_root(ca, v.reversed(), beta_root));
    report.bound = word_act(ca, v, fundamental_weight(ca, alpha))[beta - 1];
    expanded = generalized_minor(alpha, v, w, xb * g);
    reflected = v;
  }

  if (!report.t_dependent) {
    report.bound = 0;
    report.degree_ok = expanded == base;
    report.constant_ok = report.degree_ok;
    report.top_ok = report.degree_ok;
    return report;
  }

  reflected.letters.insert(reflected.letters.begin(), beta);
  reflected = reduced_word(ca, reflected);
  const TPoly top = side == Side::Right ? generalized_minor(alpha, v, reflected, g)
                                        : generalized_minor(alpha, reflected, w, g);
  report.degree_ok =
      expanded.is_zero() || (expanded.order() >= 0 && expanded.degree() <= report.bound);
  report.constant_ok = TPoly(expanded.coeff(0)) == base;
  report.top_ok = TPoly(expanded.coeff((int)report.bound)) == top;
  return report;
}

}  // namespace mlift
