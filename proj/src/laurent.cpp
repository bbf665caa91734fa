#include "mlift/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mlift {

bool GrlexLess::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  long long da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_vars() {
  static const auto v =
      std::make_shared<const std::vector<std::string>>();
  return v;
}
}  // namespace

LaurentPoly::LaurentPoly() : vars_(empty_vars()) {}

LaurentPoly::LaurentPoly(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(
          std::move(vars))) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Int c) {
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(std::vector<int>(p.vars().size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars,
                                  std::vector<int> exp, Int c) {
  if (exp.size() != vars.size())
    throw std::invalid_argument("monomial: exponent arity mismatch");
  LaurentPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(std::move(exp), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars,
                                  const std::string& name) {
  LaurentPoly p(std::move(vars));
  auto it = std::find(p.vars().begin(), p.vars().end(), name);
  if (it == p.vars().end())
    throw std::invalid_argument("variable '" + name + "' not in varset");
  std::vector<int> e(p.vars().size(), 0);
  e[it - p.vars().begin()] = 1;
  p.terms_.emplace(std::move(e), Int(1));
  return p;
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

int LaurentPoly::var_index(const std::string& name) const {
  auto it = std::find(vars().begin(), vars().end(), name);
  return it == vars().end() ? -1 : int(it - vars().begin());
}

LaurentPoly LaurentPoly::extended_to(
    const std::vector<std::string>& target) const {
  if (*vars_ == target) return *this;
  std::vector<int> pos(vars().size());
  for (size_t i = 0; i < vars().size(); ++i) {
    auto it = std::find(target.begin(), target.end(), vars()[i]);
    if (it == target.end())
      throw std::invalid_argument("extended_to: variable '" + vars()[i] +
                                  "' missing from target varset");
    pos[i] = int(it - target.begin());
  }
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void LaurentPoly::add_term(const std::vector<int>& exp, const Int& c) {
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (*vars_ != *o.vars_) {
    auto u = merge_vars(vars(), o.vars());
    *this = extended_to(u);
    LaurentPoly oe = o.extended_to(u);
    for (const auto& [e, c] : oe.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  *this += -o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (*a.vars_ != *b.vars_) {
    auto u = merge_vars(a.vars(), b.vars());
    return a.extended_to(u) * b.extended_to(u);
  }
  LaurentPoly out(a.vars());
  std::vector<int> e(a.vars().size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (*vars_ == *o.vars_) return terms_ == o.terms_;
  auto u = merge_vars(vars(), o.vars());
  return extended_to(u).terms_ == o.extended_to(u).terms_;
}

LaurentPoly pow(const LaurentPoly& f, unsigned long e) {
  LaurentPoly acc = LaurentPoly::constant(f.vars(), 1);
  LaurentPoly base = f;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

LaurentPoly mul_by_monomial(const LaurentPoly& f, const std::vector<int>& exp,
                            const Int& c) {
  LaurentPoly out(f.vars());
  for (const auto& [e, k] : f.terms_) {
    std::vector<int> ne(e);
    for (size_t i = 0; i < ne.size(); ++i) ne[i] += exp[i];
    out.terms_.emplace(std::move(ne), k * c);
  }
  return out;
}

namespace {
// Componentwise minimum exponent over the terms; zero vector for 0.
std::vector<int> min_exponent(const LaurentPoly& f) {
  std::vector<int> m(f.vars().size(), 0);
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

std::vector<int> negate_vec(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}
}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& f,
                                     const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  if (f.is_zero()) return LaurentPoly::constant(f.vars(), 0);
  auto u = merge_vars(f.vars(), g.vars());
  LaurentPoly rem = f.extended_to(u);
  LaurentPoly gg = g.extended_to(u);

  // Shift both to honest polynomials; the quotient then shifts back by
  // the difference of the monomial contents.
  std::vector<int> mf = min_exponent(rem), mg = min_exponent(gg);
  rem = mul_by_monomial(rem, negate_vec(mf), 1);
  gg = mul_by_monomial(gg, negate_vec(mg), 1);

  const auto& lg = *gg.terms_.rbegin();
  LaurentPoly q(u);
  while (!rem.is_zero()) {
    const auto& lr = *rem.terms_.rbegin();
    std::vector<int> de(lr.first);
    for (size_t i = 0; i < de.size(); ++i) {
      de[i] -= lg.first[i];
      if (de[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(lr.second.get_mpz_t(), lg.second.get_mpz_t()))
      return std::nullopt;
    Int qc = lr.second / lg.second;
    q.add_term(de, qc);
    rem -= mul_by_monomial(gg, de, qc);
  }
  std::vector<int> shift(mf);
  for (size_t i = 0; i < shift.size(); ++i) shift[i] -= mg[i];
  return mul_by_monomial(q, shift, 1);
}

LaurentPoly substitute(const LaurentPoly& f,
                       const std::map<std::string, LaurentPoly>& images) {
  const auto& vars = f.vars();
  size_t n = vars.size();

  // Only variables that actually occur need images.
  std::vector<bool> occurs(n, false);
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < n; ++i)
      if (e[i] != 0) occurs[i] = true;

  std::vector<const LaurentPoly*> img(n, nullptr);
  std::vector<std::string> out_vars;
  for (size_t i = 0; i < n; ++i) {
    if (!occurs[i]) continue;
    auto it = images.find(vars[i]);
    if (it == images.end())
      throw std::invalid_argument("substitute: no image for '" + vars[i] +
                                  "'");
    img[i] = &it->second;
    out_vars = merge_vars(out_vars, it->second.vars());
  }
  if (out_vars.empty()) out_vars = {};

  // Clip negative exponents away for non-invertible images; divide the
  // shift back out at the end.
  std::vector<int> shift(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (!occurs[i] || img[i]->is_unit_monomial()) continue;
    int m = var_valuation(f, vars[i]);
    if (m < 0) shift[i] = -m;
  }

  LaurentPoly acc(out_vars);
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = LaurentPoly::constant(out_vars, c);
    for (size_t i = 0; i < n; ++i) {
      if (e[i] + shift[i] == 0) continue;
      int k = e[i] + shift[i];
      if (k > 0) {
        term *= pow(*img[i], (unsigned long)k);
      } else {
        // Unit monomial image: negate exponents, invert the sign.
        const auto& [me, mc] = *img[i]->terms().begin();
        LaurentPoly inv =
            LaurentPoly::monomial(img[i]->vars(), negate_vec(me), mc);
        term *= pow(inv, (unsigned long)(-k));
      }
    }
    acc += term;
  }

  for (size_t i = 0; i < n; ++i) {
    if (shift[i] == 0) continue;
    auto q = exact_div(acc, pow(*img[i], (unsigned long)shift[i]));
    if (!q)
      throw std::invalid_argument(
          "substitute: negative power of non-invertible image for '" +
          vars[i] + "'");
    acc = std::move(*q);
  }
  return acc;
}

int var_valuation(const LaurentPoly& f, const std::string& var) {
  if (f.is_zero()) return val_infinity;
  int idx = f.var_index(var);
  if (idx < 0) return 0;
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first) {
      m = e[idx];
      first = false;
    } else {
      m = std::min(m, e[idx]);
    }
  }
  return m;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any_var = false;
    for (int x : e)
      if (x != 0) any_var = true;
    if (!any_var || a != 1) os << a.get_str();
    bool lead = !any_var || a != 1;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (lead) os << "*";
      lead = true;
      os << vars()[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {
size_t find_var(const std::vector<std::string>& vars, const std::string& v) {
  auto it = std::find(vars.begin(), vars.end(), v);
  if (it == vars.end())
    throw std::invalid_argument("parse_poly: unknown variable '" + v + "'");
  return size_t(it - vars.begin());
}
}  // namespace

LaurentPoly parse_poly(const std::vector<std::string>& vars,
                       const std::string& text) {
  LaurentPoly out = LaurentPoly::constant(vars, 0);
  size_t i = 0, n = text.size();
  auto skip_ws = [&] {
    while (i < n && text[i] == ' ') ++i;
  };
  skip_ws();
  if (i < n && text.compare(i, 1, "0") == 0 && i + 1 == n) return out;
  int sign = 1;
  if (i < n && text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (i < n) {
    skip_ws();
    Int coef(sign);
    std::vector<int> e(vars.size(), 0);
    bool saw_coef = false;
    if (i < n && (isdigit(text[i]))) {
      size_t j = i;
      while (j < n && isdigit(text[j])) ++j;
      coef = Int(text.substr(i, j - i)) * sign;
      i = j;
      saw_coef = true;
    }
    bool saw_var = false;
    while (i < n) {
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (text[i] == ' ' || text[i] == '+' || text[i] == '-') break;
      size_t j = i;
      while (j < n && text[j] != '*' && text[j] != '^' && text[j] != ' ' &&
             text[j] != '+' && text[j] != '-')
        ++j;
      std::string v = text.substr(i, j - i);
      i = j;
      int ex = 1;
      if (i < n && text[i] == '^') {
        ++i;
        int s2 = 1;
        if (i < n && text[i] == '-') {
          s2 = -1;
          ++i;
        }
        size_t k = i;
        while (k < n && isdigit(text[k])) ++k;
        ex = s2 * std::stoi(text.substr(i, k - i));
        i = k;
      }
      e[find_var(vars, v)] += ex;
      saw_var = true;
    }
    if (!saw_coef && !saw_var)
      throw std::invalid_argument("parse_poly: empty term in '" + text + "'");
    out += LaurentPoly::monomial(vars, e, coef);
    skip_ws();
    if (i >= n) break;
    if (text[i] == '+') {
      sign = 1;
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    } else {
      throw std::invalid_argument("parse_poly: expected term separator in '" +
                                  text + "'");
    }
    skip_ws();
  }
  return out;
}

}  // namespace mlift
