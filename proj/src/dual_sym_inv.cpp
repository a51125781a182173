#include "irk/dual_sym_inv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "irk/union_find.hpp"

namespace irk {

namespace {

// Flat code: for each (D, R) pair in canonical order, the ascending points
// of D, a 0 terminator, the ascending points of R, a 0 terminator. Pairs are
// ordered by domain block, which for disjoint blocks is least-element order,
// so the block containing 1 always comes first.
std::vector<std::int32_t> encode(DualSymInverseAlgebra::BlockList blocks) {
  for (auto& [d, r] : blocks) {
    std::sort(d.begin(), d.end());
    std::sort(r.begin(), r.end());
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<std::int32_t> code;
  for (const auto& [d, r] : blocks) {
    code.insert(code.end(), d.begin(), d.end());
    code.push_back(0);
    code.insert(code.end(), r.begin(), r.end());
    code.push_back(0);
  }
  return code;
}

DualSymInverseAlgebra::BlockList decode(const Element& a) {
  DualSymInverseAlgebra::BlockList blocks;
  std::vector<int> current;
  bool in_domain = true;
  for (std::int32_t v : a.code()) {
    if (v != 0) {
      current.push_back(v);
      continue;
    }
    if (in_domain) {
      blocks.emplace_back(std::move(current), std::vector<int>{});
    } else {
      blocks.back().second = std::move(current);
    }
    current.clear();
    in_domain = !in_domain;
  }
  return blocks;
}

}  // namespace

DualSymInverseAlgebra::DualSymInverseAlgebra(int n)
    : InverseAlgebra({Family::dual_sym, n}) {
  if (n < 1) throw InputError("dual-sym(n): n must be positive");
  std::vector<int> all;
  for (int x = 1; x <= n; ++x) all.push_back(x);
  zero_ = Element(id(), encode({{all, all}}));
  BlockList singletons;
  for (int x = 1; x <= n; ++x) singletons.push_back({{x}, {x}});
  identity_ = Element(id(), encode(std::move(singletons)));
}

Element DualSymInverseAlgebra::make(BlockList blocks) const {
  std::vector<char> dom_seen(static_cast<std::size_t>(n()) + 1, 0);
  std::vector<char> ran_seen(static_cast<std::size_t>(n()) + 1, 0);
  for (const auto& [d, r] : blocks) {
    if (d.empty() || r.empty()) {
      throw InputError("block bijection: blocks must be non-empty");
    }
    for (int x : d) {
      if (x < 1 || x > n()) {
        throw InputError("block bijection: point " + std::to_string(x) +
                         " out of range 1.." + std::to_string(n()));
      }
      if (dom_seen[static_cast<std::size_t>(x)]++) {
        throw InputError("block bijection: point " + std::to_string(x) +
                         " repeated in domain blocks");
      }
    }
    for (int y : r) {
      if (y < 1 || y > n()) {
        throw InputError("block bijection: point " + std::to_string(y) +
                         " out of range 1.." + std::to_string(n()));
      }
      if (ran_seen[static_cast<std::size_t>(y)]++) {
        throw InputError("block bijection: point " + std::to_string(y) +
                         " repeated in range blocks");
      }
    }
  }
  for (int x = 1; x <= n(); ++x) {
    if (!dom_seen[static_cast<std::size_t>(x)] ||
        !ran_seen[static_cast<std::size_t>(x)]) {
      throw InputError("block bijection: blocks do not partition 1.." +
                       std::to_string(n()) + " (missing " + std::to_string(x) +
                       ")");
    }
  }
  return Element(id(), encode(std::move(blocks)));
}

DualSymInverseAlgebra::BlockList DualSymInverseAlgebra::blocks_of(
    const Element& a) const {
  require_owned(a);
  return decode(a);
}

Element DualSymInverseAlgebra::compose(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
  BlockList lhs = decode(a);
  BlockList rhs = decode(b);
  // Join the middle partitions: range blocks of a with domain blocks of b.
  UnionFind uf(n() + 1);
  for (const auto& [d, r] : lhs) {
    for (std::size_t i = 1; i < r.size(); ++i) uf.unite(r[0], r[i]);
  }
  for (const auto& [d, r] : rhs) {
    for (std::size_t i = 1; i < d.size(); ++i) uf.unite(d[0], d[i]);
  }
  std::map<int, BlockPair> by_class;
  for (const auto& [d, r] : lhs) {
    auto& [dom, ran] = by_class[uf.find(r[0])];
    dom.insert(dom.end(), d.begin(), d.end());
  }
  for (const auto& [d, r] : rhs) {
    auto& [dom, ran] = by_class[uf.find(d[0])];
    ran.insert(ran.end(), r.begin(), r.end());
  }
  BlockList blocks;
  blocks.reserve(by_class.size());
  for (auto& [root, pair] : by_class) blocks.push_back(std::move(pair));
  return Element(id(), encode(std::move(blocks)));
}

Element DualSymInverseAlgebra::inverse(const Element& a) const {
  require_owned(a);
  BlockList blocks = decode(a);
  for (auto& [d, r] : blocks) std::swap(d, r);
  return Element(id(), encode(std::move(blocks)));
}

bool DualSymInverseAlgebra::is_idempotent(const Element& a) const {
  require_owned(a);
  for (const auto& [d, r] : decode(a)) {
    if (d != r) return false;
  }
  return true;
}

Element DualSymInverseAlgebra::idempotent_sup(std::span<const Element> es) const {
  if (es.empty()) return zero();
  // Supremum in reverse-refinement order = common refinement: points are in
  // the same block iff every input keeps them together.
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n()) + 1);
  for (const Element& e : es) {
    require_owned(e);
    if (!is_idempotent(e)) {
      throw InputError("idempotent_sup: " + print(e) + " is not idempotent");
    }
    BlockList blocks = decode(e);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (int x : blocks[i].first) {
        label[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
      }
    }
  }
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int x = 1; x <= n(); ++x) {
    groups[label[static_cast<std::size_t>(x)]].push_back(x);
  }
  BlockList blocks;
  for (auto& [key, points] : groups) blocks.push_back({points, points});
  return Element(id(), encode(std::move(blocks)));
}

std::vector<Element> DualSymInverseAlgebra::atoms_below(const Element& a) const {
  require_owned(a);
  BlockList blocks = decode(a);
  const std::size_t k = blocks.size();
  std::vector<Element> atoms;
  if (k < 2) return atoms;
  // Splits {J, complement} of the block index set, identified with their
  // complements by keeping the first block (the one containing 1) in J.
  const unsigned full = (1u << k) - 1u;
  for (unsigned mask = 1; mask < full; mask += 2) {
    BlockPair in, out;
    for (std::size_t i = 0; i < k; ++i) {
      BlockPair& side = (mask >> i) & 1u ? in : out;
      side.first.insert(side.first.end(), blocks[i].first.begin(),
                        blocks[i].first.end());
      side.second.insert(side.second.end(), blocks[i].second.begin(),
                         blocks[i].second.end());
    }
    atoms.push_back(Element(id(), encode({std::move(in), std::move(out)})));
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<Element> DualSymInverseAlgebra::all_atoms() const {
  std::vector<Element> atoms;
  const unsigned full = (1u << n()) - 1u;
  auto mask_points = [&](unsigned mask) {
    std::vector<int> points;
    for (int x = 1; x <= n(); ++x) {
      if (mask & (1u << (x - 1))) points.push_back(x);
    }
    return points;
  };
  // Domain dichotomy {D, D^c} with 1 in D; range dichotomy {R, R^c} with the
  // two possible pairings realized by letting R run over all proper masks.
  for (unsigned dmask = 1; dmask < full; dmask += 2) {
    for (unsigned rmask = 1; rmask < full; ++rmask) {
      atoms.push_back(Element(
          id(), encode({{mask_points(dmask), mask_points(rmask)},
                        {mask_points(full & ~dmask), mask_points(full & ~rmask)}})));
    }
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<Element> DualSymInverseAlgebra::primitive_idempotents() const {
  std::vector<Element> ps;
  const unsigned full = (1u << n()) - 1u;
  for (unsigned mask = 1; mask < full; mask += 2) {
    std::vector<int> in, out;
    for (int x = 1; x <= n(); ++x) {
      ((mask >> (x - 1)) & 1u ? in : out).push_back(x);
    }
    ps.push_back(Element(id(), encode({{in, in}, {out, out}})));
  }
  std::sort(ps.begin(), ps.end());
  return ps;
}

std::optional<Element> DualSymInverseAlgebra::bounded_sup(
    std::span<const Element> xs) const {
  if (xs.empty()) return zero();
  // Viewing block bijections as relations (union of D x R rectangles), the
  // natural order is reverse containment, so the candidate supremum is the
  // intersection of the relations. It exists iff the blockwise-intersection
  // pieces match up: the set of domain index tuples must equal the set of
  // range index tuples.
  const std::size_t m = xs.size();
  std::vector<std::vector<int>> dom_label(static_cast<std::size_t>(n()) + 1,
                                          std::vector<int>(m, -1));
  std::vector<std::vector<int>> ran_label(static_cast<std::size_t>(n()) + 1,
                                          std::vector<int>(m, -1));
  for (std::size_t j = 0; j < m; ++j) {
    require_owned(xs[j]);
    BlockList blocks = decode(xs[j]);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (int x : blocks[i].first) {
        dom_label[static_cast<std::size_t>(x)][j] = static_cast<int>(i);
      }
      for (int y : blocks[i].second) {
        ran_label[static_cast<std::size_t>(y)][j] = static_cast<int>(i);
      }
    }
  }
  std::map<std::vector<int>, BlockPair> pieces;
  for (int x = 1; x <= n(); ++x) {
    pieces[dom_label[static_cast<std::size_t>(x)]].first.push_back(x);
  }
  for (int y = 1; y <= n(); ++y) {
    auto it = pieces.find(ran_label[static_cast<std::size_t>(y)]);
    if (it == pieces.end()) return std::nullopt;
    it->second.second.push_back(y);
  }
  BlockList blocks;
  for (auto& [key, pair] : pieces) {
    if (pair.second.empty()) return std::nullopt;
    blocks.push_back(std::move(pair));
  }
  return Element(id(), encode(std::move(blocks)));
}

std::vector<Element> DualSymInverseAlgebra::monoid_generators() const {
  if (n() == 1) return {zero()};
  auto unit = [&](auto&& image_of) {
    BlockList blocks;
    for (int x = 1; x <= n(); ++x) blocks.push_back({{x}, {image_of(x)}});
    return Element(id(), encode(std::move(blocks)));
  };
  std::vector<Element> gens;
  gens.push_back(unit([&](int x) { return x == 1 ? 2 : x == 2 ? 1 : x; }));
  if (n() == 2) {
    gens.push_back(zero());
    return gens;
  }
  gens.push_back(unit([&](int x) { return x % n() + 1; }));
  // The non-uniform shift (12->1|3->23|4|...|n); together with the units it
  // reaches the whole monoid (the uniform part alone, units and merges,
  // does not).
  BlockList shift;
  shift.push_back({{1, 2}, {1}});
  shift.push_back({{3}, {2, 3}});
  for (int x = 4; x <= n(); ++x) shift.push_back({{x}, {x}});
  gens.push_back(Element(id(), encode(std::move(shift))));
  return gens;
}

std::string DualSymInverseAlgebra::print(const Element& a) const {
  require_owned(a);
  auto block_text = [&](const std::vector<int>& block) {
    std::ostringstream out;
    if (n() <= 9) {
      for (int x : block) out << x;
    } else {
      out << '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) out << ',';
        out << block[i];
      }
      out << '}';
    }
    return out.str();
  };
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [d, r] : decode(a)) {
    if (!first) out << '|';
    first = false;
    out << block_text(d);
    if (d != r) out << "->" << block_text(r);
  }
  out << ')';
  return out.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("column " + std::to_string(pos + 1) + ": " + what);
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail("expected a number");
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
    return value;
  }
  bool digit_ahead() {
    skip_ws();
    return pos < text.size() && text[pos] >= '0' && text[pos] <= '9';
  }
};

std::vector<int> parse_block(Cursor& cur) {
  std::vector<int> points;
  if (cur.eat('{')) {
    points.push_back(cur.integer());
    while (cur.eat(',')) points.push_back(cur.integer());
    if (!cur.eat('}')) cur.fail("expected '}'");
    return points;
  }
  cur.skip_ws();
  if (!cur.digit_ahead()) cur.fail("expected a block");
  while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '1' &&
         cur.text[cur.pos] <= '9') {
    points.push_back(cur.text[cur.pos] - '0');
    ++cur.pos;
  }
  if (points.empty()) cur.fail("expected a block");
  return points;
}

}  // namespace

Element DualSymInverseAlgebra::parse(std::string_view text) const {
  Cursor cur{text};
  if (!cur.eat('(')) cur.fail("expected '('");
  BlockList blocks;
  while (true) {
    std::vector<int> dom = parse_block(cur);
    std::vector<int> ran;
    if (cur.eat('-')) {
      if (!cur.eat('>')) cur.fail("expected '->'");
      ran = parse_block(cur);
    } else {
      ran = dom;
    }
    blocks.push_back({std::move(dom), std::move(ran)});
    if (cur.eat(')')) break;
    if (!cur.eat('|')) cur.fail("expected '|' or ')'");
  }
  cur.skip_ws();
  if (cur.pos != cur.text.size()) cur.fail("trailing characters");
  return make(std::move(blocks));
}

std::vector<Element> DualSymInverseAlgebra::enumerate_carrier() const {
  // Partitions of {1..n} via restricted growth strings; blocks come out
  // ordered by least element.
  std::vector<std::vector<std::vector<int>>> partitions;
  std::vector<int> rgs(static_cast<std::size_t>(n()), 0);
  auto emit = [&] {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int x = 1; x <= n(); ++x) {
      blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x - 1)])]
          .push_back(x);
    }
    partitions.push_back(std::move(blocks));
  };
  auto recurse = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n()) {
      emit();
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, std::max(max_used, v));
    }
  };
  recurse(recurse, 1, 0);  // point 1 is pinned to block 0

  std::vector<Element> out;
  for (const auto& dom : partitions) {
    for (const auto& ran : partitions) {
      if (dom.size() != ran.size()) continue;
      std::vector<int> perm(ran.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        BlockList blocks;
        blocks.reserve(dom.size());
        for (std::size_t i = 0; i < dom.size(); ++i) {
          blocks.push_back({dom[i], ran[static_cast<std::size_t>(perm[i])]});
        }
        out.push_back(Element(id(), encode(std::move(blocks))));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

namespace {

std::mutex g_dual_cache_mutex;
std::map<int, std::weak_ptr<const InverseAlgebra>> g_dual_cache;

}  // namespace

AlgebraPtr dual_sym_inv_algebra(int n) {
  if (n < 1 || n > DualSymInverseAlgebra::kSizeGuard) {
    throw InputError("dual-sym(n): size guard requires 1 <= n <= " +
                     std::to_string(DualSymInverseAlgebra::kSizeGuard));
  }
  std::lock_guard<std::mutex> lock(g_dual_cache_mutex);
  if (auto hit = g_dual_cache[n].lock()) return hit;
  auto fresh = std::make_shared<const DualSymInverseAlgebra>(n);
  g_dual_cache[n] = fresh;
  return fresh;
}

Element parse_two_line(std::string_view text, int n) {
  return dual_sym_inv_algebra(n)->parse(text);
}

}  // namespace irk
