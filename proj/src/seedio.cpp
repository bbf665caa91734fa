#include "mlift/seedio.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace mlift {

namespace {

std::string join_int(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_word(const WeylWord& w) {
  if (w.letters.empty()) return ".";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

char class_mark(VertexClass c) {
  switch (c) {
    case VertexClass::Unfrozen: return 'u';
    case VertexClass::SemiFrozen: return 's';
    default: return 'h';
  }
}

// Line-cursor over the document; every syntax error names the last
// examined line.
struct Reader {
  std::vector<std::string> lines;
  size_t at = 0;
  size_t err = 0;

  explicit Reader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("seed file line " + std::to_string(err + 1) + ": " + msg);
  }
  bool done() const { return at >= lines.size(); }
  const std::string& peek() {
    if (done()) throw std::invalid_argument("seed file: unexpected end of input");
    err = at;
    return lines[at];
  }
  std::string next() {
    const std::string s = peek();
    ++at;
    return s;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(Reader& r, const std::string& tok) {
  try {
    size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) r.fail("bad integer '" + tok + "'");
    return v;
  } catch (const std::invalid_argument&) {
    r.fail("bad integer '" + tok + "'");
  } catch (const std::out_of_range&) {
    r.fail("integer out of range '" + tok + "'");
  }
}

WeylWord parse_word_field(Reader& r, const std::string& tok) {
  WeylWord w;
  if (tok == ".") return w;
  std::istringstream in(tok);
  std::string part;
  while (std::getline(in, part, ','))
    w.letters.push_back((int)parse_int(r, part));
  if (w.letters.empty()) r.fail("bad word '" + tok + "'");
  return w;
}

std::vector<long long> parse_row(Reader& r, const std::vector<std::string>& toks,
                                 size_t from, size_t want) {
  if (toks.size() - from != want)
    r.fail("expected " + std::to_string(want) + " entries, got " +
           std::to_string(toks.size() - from));
  std::vector<long long> row;
  for (size_t i = from; i < toks.size(); ++i) row.push_back(parse_int(r, toks[i]));
  return row;
}

// "key n [m]" headers; returns the counts when the current line starts
// with key.
bool section(Reader& r, const std::string& key, std::vector<long long>& counts,
             size_t n_counts) {
  if (r.done()) return false;
  const auto toks = split_ws(r.peek());
  if (toks.empty() || toks[0] != key) return false;
  if (toks.size() != 1 + n_counts) r.fail("'" + key + "' header needs " +
                                          std::to_string(n_counts) + " counts");
  counts.clear();
  for (size_t i = 1; i < toks.size(); ++i) counts.push_back(parse_int(r, toks[i]));
  for (long long c : counts)
    if (c < 0) r.fail("negative count in '" + key + "' header");
  r.next();
  return true;
}

void write_nu_body(std::ostringstream& os, const LiftingConfig& nu) {
  const size_t cols = nu.nu.empty() ? 0 : nu.nu[0].size();
  os << "nu " << nu.D.size() << ' ' << cols << '\n';
  for (size_t d = 0; d < nu.D.size(); ++d)
    os << nu.D[d] << ' ' << join_int(nu.nu[d]) << '\n';
}

LiftingConfig parse_nu_body(Reader& r, const std::vector<long long>& counts) {
  LiftingConfig nu;
  for (long long d = 0; d < counts[0]; ++d) {
    const auto toks = split_ws(r.next());
    if (toks.empty()) r.fail("empty lifting row");
    nu.D.push_back(toks[0]);
    nu.nu.push_back(parse_row(r, toks, 1, (size_t)counts[1]));
  }
  return nu;
}

}  // namespace

bool SeedFile::operator==(const SeedFile& o) const {
  const bool deg_eq =
      seed.degree.has_value() == o.seed.degree.has_value() &&
      (!seed.degree || (seed.degree->m == o.seed.degree->m &&
                        seed.degree->sigma == o.seed.degree->sigma));
  const bool nu_eq = nu.has_value() == o.nu.has_value() &&
                     (!nu || (nu->D == o.nu->D && nu->nu == o.nu->nu));
  return cartan_label == o.cartan_label && word == o.word && seed.verts == o.seed.verts &&
         seed.cls == o.seed.cls && seed.B == o.seed.B && seed.cluster == o.seed.cluster &&
         deg_eq && nu_eq && tags == o.tags && base_size == o.base_size;
}

std::string write_seed_file(const SeedFile& f) {
  std::ostringstream os;
  os << "mlift-seed 1\n";
  if (f.cartan_label) os << "cartan " << *f.cartan_label << '\n';
  if (f.word) os << "word " << join_word(*f.word) << '\n';
  if (f.base_size) os << "base " << *f.base_size << '\n';
  os << "verts " << f.seed.size() << '\n';
  for (int v = 0; v < f.seed.size(); ++v)
    os << f.seed.verts[v] << ' ' << class_mark(f.seed.cls[v]) << '\n';
  const size_t cols = f.seed.B.empty() ? 0 : f.seed.B[0].size();
  os << "B " << f.seed.B.size() << ' ' << cols << '\n';
  for (const auto& row : f.seed.B) os << join_int(row) << '\n';
  if (f.seed.degree) {
    os << "sigma " << f.seed.degree->sigma.size() << ' ' << f.seed.degree->m << '\n';
    for (const auto& row : f.seed.degree->sigma) os << join_int(row) << '\n';
  }
  if (f.nu) write_nu_body(os, *f.nu);
  if (!f.tags.empty()) {
    os << "tags " << f.tags.size() << '\n';
    for (const auto& t : f.tags)
      os << t.alpha << ' ' << join_word(t.v) << ' ' << join_word(t.w) << '\n';
  }
  os << "cluster " << f.seed.cluster.size() << '\n';
  for (const auto& x : f.seed.cluster) os << x.str() << '\n';
  os << "end\n";
  return os.str();
}

SeedFile parse_seed_file(const std::string& text) {
  Reader r(text);
  if (r.done() || r.next() != "mlift-seed 1")
    throw std::invalid_argument("seed file line 1: expected 'mlift-seed 1'");

  SeedFile f;
  {
    const auto toks = split_ws(r.peek());
    if (toks.size() == 2 && toks[0] == "cartan") {
      f.cartan_label = toks[1];
      r.next();
    }
  }
  {
    const auto toks = split_ws(r.peek());
    if (toks.size() == 2 && toks[0] == "word") {
      f.word = parse_word_field(r, toks[1]);
      r.next();
    }
  }
  std::vector<long long> counts;
  if (section(r, "base", counts, 1)) f.base_size = (int)counts[0];

  if (!section(r, "verts", counts, 1)) r.fail("expected 'verts' section");
  const int n = (int)counts[0];
  std::vector<std::string> verts;
  std::vector<VertexClass> cls;
  for (int v = 0; v < n; ++v) {
    const auto toks = split_ws(r.next());
    if (toks.size() != 2) r.fail("vertex line needs a name and a class mark");
    verts.push_back(toks[0]);
    if (toks[1] == "u")
      cls.push_back(VertexClass::Unfrozen);
    else if (toks[1] == "s")
      cls.push_back(VertexClass::SemiFrozen);
    else if (toks[1] == "h")
      cls.push_back(VertexClass::HighlyFrozen);
    else
      r.fail("unknown class mark '" + toks[1] + "'");
  }

  if (!section(r, "B", counts, 2)) r.fail("expected 'B' section");
  if (counts[0] != n) r.fail("B row count does not match the vertex count");
  std::vector<std::vector<long long>> B;
  for (int v = 0; v < n; ++v) B.push_back(parse_row(r, split_ws(r.next()), 0, (size_t)counts[1]));

  std::optional<DegreeConfig> degree;
  if (section(r, "sigma", counts, 2)) {
    if (counts[0] != n) r.fail("sigma row count does not match the vertex count");
    DegreeConfig deg;
    deg.m = (int)counts[1];
    for (int v = 0; v < n; ++v)
      deg.sigma.push_back(parse_row(r, split_ws(r.next()), 0, (size_t)counts[1]));
    degree = std::move(deg);
  }

  if (section(r, "nu", counts, 2)) {
    const long long want = f.base_size ? *f.base_size : n;
    if (counts[1] != want) r.fail("lifting matrix must have one column per base vertex");
    f.nu = parse_nu_body(r, counts);
  }

  if (section(r, "tags", counts, 1)) {
    for (long long t = 0; t < counts[0]; ++t) {
      const auto toks = split_ws(r.next());
      if (toks.size() != 3) r.fail("tag line needs three fields");
      MinorTag tag;
      tag.alpha = (int)parse_int(r, toks[0]);
      tag.v = parse_word_field(r, toks[1]);
      tag.w = parse_word_field(r, toks[2]);
      f.tags.push_back(std::move(tag));
    }
  }

  std::vector<LaurentPoly> cluster;
  if (section(r, "cluster", counts, 1)) {
    if (counts[0] != n) r.fail("cluster count does not match the vertex count");
    for (int v = 0; v < n; ++v) {
      const std::string line = r.next();
      try {
        cluster.push_back(parse_poly(verts, line));
      } catch (const std::invalid_argument& e) {
        r.fail(e.what());
      }
    }
  }

  if (r.done() || r.next() != "end") r.fail("expected 'end'");
  if (!r.done()) r.fail("trailing content after 'end'");

  f.seed = new_seed(std::move(verts), std::move(cls), std::move(B), std::move(degree));
  if (!cluster.empty()) f.seed.cluster = std::move(cluster);
  return f;
}

std::string write_nu_file(const LiftingConfig& nu) {
  std::ostringstream os;
  os << "mlift-nu 1\n";
  write_nu_body(os, nu);
  os << "end\n";
  return os.str();
}

LiftingConfig parse_nu_file(const std::string& text) {
  Reader r(text);
  if (r.done() || r.next() != "mlift-nu 1")
    throw std::invalid_argument("seed file line 1: expected 'mlift-nu 1'");
  std::vector<long long> counts;
  if (!section(r, "nu", counts, 2)) r.fail("expected 'nu' section");
  LiftingConfig nu = parse_nu_body(r, counts);
  if (r.done() || r.next() != "end") r.fail("expected 'end'");
  if (!r.done()) r.fail("trailing content after 'end'");
  return nu;
}

std::vector<QuiverArrow> quiver_arrows(const Seed& s, const std::vector<long long>& d) {
  const auto dval = [&](int v) -> long long { return v < (int)d.size() ? d[v] : 0; };
  std::vector<QuiverArrow> out;
  for (int j = 0; j < s.size(); ++j)
    for (int k = 0; k < s.size(); ++k) {
      if (j == k) continue;
      const int cj = s.uf_col(j);
      const int ck = s.uf_col(k);
      if (ck >= 0 && s.B[j][ck] > 0) {
        const long long v1 = s.B[j][ck];
        long long v2 = v1;
        if (cj >= 0)
          v2 = -s.B[k][cj];
        else if (dval(j) > 0 && dval(k) > 0 && (dval(j) * v1) % dval(k) == 0)
          v2 = dval(j) * v1 / dval(k);
        out.push_back({j, k, v1, v2});
      } else if (ck < 0 && cj >= 0 && s.B[k][cj] < 0) {
        const long long v2 = -s.B[k][cj];
        long long v1 = v2;
        if (dval(j) > 0 && dval(k) > 0 && (dval(k) * v2) % dval(j) == 0)
          v1 = dval(k) * v2 / dval(j);
        out.push_back({j, k, v1, v2});
      }
    }
  return out;
}

std::string render_quiver_dot(const Seed& s, const std::vector<long long>& d) {
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  for (int v = 0; v < s.size(); ++v) {
    os << "  \"" << s.verts[v] << "\" [shape=";
    switch (s.cls[v]) {
      case VertexClass::Unfrozen: os << "circle"; break;
      case VertexClass::SemiFrozen: os << "box"; break;
      default: os << "box, style=filled, fillcolor=gray"; break;
    }
    os << "];\n";
  }
  for (const QuiverArrow& a : quiver_arrows(s, d)) {
    const int copies = (a.v1 == a.v2 && a.v1 > 1) ? (int)a.v1 : 1;
    for (int c = 0; c < copies; ++c) {
      os << "  \"" << s.verts[a.from] << "\" -> \"" << s.verts[a.to] << "\"";
      if (a.v1 != a.v2) os << " [label=\"" << a.v1 << "," << a.v2 << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_quiver_text(const Seed& s, const std::vector<long long>& d) {
  std::ostringstream os;
  for (int v = 0; v < s.size(); ++v) {
    switch (s.cls[v]) {
      case VertexClass::Unfrozen: os << "o  "; break;
      case VertexClass::SemiFrozen: os << "[] "; break;
      default: os << "#  "; break;
    }
    os << s.verts[v] << '\n';
  }
  for (const QuiverArrow& a : quiver_arrows(s, d)) {
    os << s.verts[a.from] << " -> " << s.verts[a.to];
    if (a.v1 == a.v2 && a.v1 > 1)
      os << " *" << a.v1;
    else if (a.v1 != a.v2)
      os << " [" << a.v1 << "," << a.v2 << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace mlift
