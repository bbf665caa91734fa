#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlift/branching.hpp"
#include "mlift/lifting.hpp"
#include "mlift/seedcore.hpp"

namespace mlift {

// Text document around a seed: optionally the Cartan label and word it
// was built from, a lifting matrix (one row per D-name, one column per
// base vertex), minor tags, and the base block size when the seed is a
// lift.  Serialization is canonical, so write(parse(text)) == text for
// any text produced by write.
struct SeedFile {
  std::optional<std::string> cartan_label;
  std::optional<WeylWord> word;
  Seed seed;
  std::optional<LiftingConfig> nu;
  std::vector<MinorTag> tags;
  std::optional<int> base_size;

  bool operator==(const SeedFile& o) const;
};

std::string write_seed_file(const SeedFile& f);
SeedFile parse_seed_file(const std::string& text);

std::string write_nu_file(const LiftingConfig& nu);
LiftingConfig parse_nu_file(const std::string& text);

// Arrow j -> k of the quiver drawing, one per exchange pair with
// b_{jk} > 0, labeled by the pair (b_{jk}, -b_{kj}).
struct QuiverArrow {
  int from = 0;
  int to = 0;
  long long v1 = 0;
  long long v2 = 0;
  bool operator==(const QuiverArrow&) const = default;
};

// Arrows of a seed.  Exchange pairs between two unfrozen vertices carry
// both entries; a pair with a frozen end has only one stored entry, and
// the other is completed from d: with d[j] > 0 and d[k] > 0 through
// d_j b_{jk} = -d_k b_{kj} when that divides exactly, otherwise (and
// whenever either value is 0 or d is empty) by repeating the stored
// entry.  Arrows are listed by (from, to).
std::vector<QuiverArrow> quiver_arrows(const Seed& s,
                                       const std::vector<long long>& d = {});

// DOT drawing: circle for unfrozen, box for semi-frozen, filled box for
// highly frozen; a (1,1) pair is one plain edge, (m,m) is m parallel
// edges, anything else one edge labeled "v1,v2".
std::string render_quiver_dot(const Seed& s, const std::vector<long long>& d = {});

// Same content line-oriented: one vertex line each ("o"/"[]"/"#" class
// marks), then one arrow line each.
std::string render_quiver_text(const Seed& s, const std::vector<long long>& d = {});

}  // namespace mlift
