#include "irk/sym_inv.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace irk {

namespace {

std::vector<std::int32_t> encode(SymInverseAlgebra::PairList pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::int32_t> code;
  code.reserve(pairs.size() * 2);
  for (auto [x, y] : pairs) {
    code.push_back(x);
    code.push_back(y);
  }
  return code;
}

}  // namespace

SymInverseAlgebra::SymInverseAlgebra(int n) : InverseAlgebra({Family::sym, n}) {
  if (n < 1) throw InputError("sym(n): n must be positive");
  zero_ = Element(id(), {});
  PairList id_pairs;
  for (int x = 1; x <= n; ++x) id_pairs.emplace_back(x, x);
  identity_ = Element(id(), encode(std::move(id_pairs)));
}

Element SymInverseAlgebra::make(PairList pairs) const {
  std::vector<char> src_seen(static_cast<std::size_t>(n()) + 1, 0);
  std::vector<char> tgt_seen(static_cast<std::size_t>(n()) + 1, 0);
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n() || y < 1 || y > n()) {
      throw InputError("partial injection: point out of range 1.." +
                       std::to_string(n()));
    }
    if (src_seen[static_cast<std::size_t>(x)]++)
      throw InputError("partial injection: repeated source " + std::to_string(x));
    if (tgt_seen[static_cast<std::size_t>(y)]++)
      throw InputError("partial injection: repeated target " + std::to_string(y));
  }
  return Element(id(), encode(std::move(pairs)));
}

SymInverseAlgebra::PairList SymInverseAlgebra::pairs_of(const Element& a) const {
  require_owned(a);
  PairList pairs;
  pairs.reserve(a.code().size() / 2);
  for (std::size_t i = 0; i + 1 < a.code().size(); i += 2) {
    pairs.emplace_back(a.code()[i], a.code()[i + 1]);
  }
  return pairs;
}

Element SymInverseAlgebra::compose(const Element& a, const Element& b) const {
  require_owned(a);
  require_owned(b);
  std::vector<int> to(static_cast<std::size_t>(n()) + 1, 0);
  for (std::size_t i = 0; i + 1 < b.code().size(); i += 2) {
    to[static_cast<std::size_t>(b.code()[i])] = b.code()[i + 1];
  }
  PairList pairs;
  for (std::size_t i = 0; i + 1 < a.code().size(); i += 2) {
    int y = a.code()[i + 1];
    if (to[static_cast<std::size_t>(y)] != 0) {
      pairs.emplace_back(a.code()[i], to[static_cast<std::size_t>(y)]);
    }
  }
  return Element(id(), encode(std::move(pairs)));
}

Element SymInverseAlgebra::inverse(const Element& a) const {
  require_owned(a);
  PairList pairs = pairs_of(a);
  for (auto& [x, y] : pairs) std::swap(x, y);
  return Element(id(), encode(std::move(pairs)));
}

bool SymInverseAlgebra::is_idempotent(const Element& a) const {
  require_owned(a);
  for (std::size_t i = 0; i + 1 < a.code().size(); i += 2) {
    if (a.code()[i] != a.code()[i + 1]) return false;
  }
  return true;
}

Element SymInverseAlgebra::idempotent_sup(std::span<const Element> es) const {
  std::vector<char> in(static_cast<std::size_t>(n()) + 1, 0);
  for (const Element& e : es) {
    require_owned(e);
    if (!is_idempotent(e)) {
      throw InputError("idempotent_sup: " + print(e) + " is not idempotent");
    }
    for (std::size_t i = 0; i < e.code().size(); i += 2) {
      in[static_cast<std::size_t>(e.code()[i])] = 1;
    }
  }
  PairList pairs;
  for (int x = 1; x <= n(); ++x) {
    if (in[static_cast<std::size_t>(x)]) pairs.emplace_back(x, x);
  }
  return Element(id(), encode(std::move(pairs)));
}

std::vector<Element> SymInverseAlgebra::atoms_below(const Element& a) const {
  require_owned(a);
  std::vector<Element> atoms;
  atoms.reserve(a.code().size() / 2);
  for (std::size_t i = 0; i + 1 < a.code().size(); i += 2) {
    atoms.push_back(Element(id(), {a.code()[i], a.code()[i + 1]}));
  }
  return atoms;
}

std::vector<Element> SymInverseAlgebra::all_atoms() const {
  std::vector<Element> atoms;
  atoms.reserve(static_cast<std::size_t>(n()) * static_cast<std::size_t>(n()));
  for (int x = 1; x <= n(); ++x) {
    for (int y = 1; y <= n(); ++y) atoms.push_back(Element(id(), {x, y}));
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<Element> SymInverseAlgebra::primitive_idempotents() const {
  std::vector<Element> ps;
  ps.reserve(static_cast<std::size_t>(n()));
  for (int x = 1; x <= n(); ++x) ps.push_back(Element(id(), {x, x}));
  return ps;
}

std::optional<Element> SymInverseAlgebra::bounded_sup(
    std::span<const Element> xs) const {
  // A set of partial injections is bounded iff the union of their graphs is
  // again a partial injection, and then the union is the supremum.
  std::vector<int> to(static_cast<std::size_t>(n()) + 1, 0);
  std::vector<char> hit(static_cast<std::size_t>(n()) + 1, 0);
  for (const Element& x : xs) {
    require_owned(x);
    for (std::size_t i = 0; i + 1 < x.code().size(); i += 2) {
      int s = x.code()[i], t = x.code()[i + 1];
      int& slot = to[static_cast<std::size_t>(s)];
      if (slot != 0 && slot != t) return std::nullopt;
      if (slot == 0) {
        if (hit[static_cast<std::size_t>(t)]) return std::nullopt;
        slot = t;
        hit[static_cast<std::size_t>(t)] = 1;
      }
    }
  }
  PairList pairs;
  for (int s = 1; s <= n(); ++s) {
    if (to[static_cast<std::size_t>(s)] != 0) {
      pairs.emplace_back(s, to[static_cast<std::size_t>(s)]);
    }
  }
  return Element(id(), encode(std::move(pairs)));
}

std::vector<Element> SymInverseAlgebra::monoid_generators() const {
  if (n() == 1) return {identity(), zero()};
  PairList swap01;
  swap01.emplace_back(1, 2);
  swap01.emplace_back(2, 1);
  for (int x = 3; x <= n(); ++x) swap01.emplace_back(x, x);
  PairList cycle;
  for (int x = 1; x <= n(); ++x) cycle.emplace_back(x, x % n() + 1);
  PairList drop_last;
  for (int x = 1; x < n(); ++x) drop_last.emplace_back(x, x);
  std::vector<Element> gens;
  gens.push_back(Element(id(), encode(std::move(swap01))));
  if (n() > 2) gens.push_back(Element(id(), encode(std::move(cycle))));
  gens.push_back(Element(id(), encode(std::move(drop_last))));
  return gens;
}

std::string SymInverseAlgebra::print(const Element& a) const {
  require_owned(a);
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i + 1 < a.code().size(); i += 2) {
    if (i > 0) out << ", ";
    out << a.code()[i] << "->" << a.code()[i + 1];
  }
  out << ']';
  return out.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
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
  bool done() {
    skip_ws();
    return pos == text.size();
  }
};

}  // namespace

Element SymInverseAlgebra::parse(std::string_view text) const {
  Cursor cur{text};
  if (!cur.eat('[')) cur.fail("expected '['");
  PairList pairs;
  cur.skip_ws();
  if (!cur.eat(']')) {
    while (true) {
      int x = cur.integer();
      if (!cur.eat('-') || !cur.eat('>')) cur.fail("expected '->'");
      int y = cur.integer();
      pairs.emplace_back(x, y);
      if (cur.eat(']')) break;
      if (!cur.eat(',')) cur.fail("expected ',' or ']'");
    }
  }
  if (!cur.done()) cur.fail("trailing characters");
  return make(std::move(pairs));
}

std::vector<Element> SymInverseAlgebra::enumerate_carrier() const {
  if (n() > kCarrierGuard) {
    throw InputError("sym(" + std::to_string(n()) +
                     "): carrier enumeration guard is n <= " +
                     std::to_string(kCarrierGuard));
  }
  std::vector<Element> out;
  std::vector<int> domain, range;
  const int full = (1 << n()) - 1;
  for (int dom_mask = 0; dom_mask <= full; ++dom_mask) {
    domain.clear();
    for (int x = 1; x <= n(); ++x) {
      if (dom_mask & (1 << (x - 1))) domain.push_back(x);
    }
    for (int ran_mask = 0; ran_mask <= full; ++ran_mask) {
      if (__builtin_popcount(static_cast<unsigned>(ran_mask)) !=
          static_cast<int>(domain.size()))
        continue;
      range.clear();
      for (int y = 1; y <= n(); ++y) {
        if (ran_mask & (1 << (y - 1))) range.push_back(y);
      }
      std::sort(range.begin(), range.end());
      do {
        PairList pairs;
        for (std::size_t i = 0; i < domain.size(); ++i) {
          pairs.emplace_back(domain[i], range[i]);
        }
        out.push_back(Element(id(), encode(std::move(pairs))));
      } while (std::next_permutation(range.begin(), range.end()));
    }
  }
  return out;
}

namespace {

std::mutex g_sym_cache_mutex;
std::map<int, std::weak_ptr<const InverseAlgebra>> g_sym_cache;

AlgebraPtr cached_sym(int n) {
  std::lock_guard<std::mutex> lock(g_sym_cache_mutex);
  if (auto hit = g_sym_cache[n].lock()) return hit;
  auto fresh = std::make_shared<const SymInverseAlgebra>(n);
  g_sym_cache[n] = fresh;
  return fresh;
}

}  // namespace

AlgebraPtr sym_inv_algebra(int n) {
  if (n < 1 || n > SymInverseAlgebra::kCarrierGuard) {
    throw InputError("sym(n): size guard requires 1 <= n <= " +
                     std::to_string(SymInverseAlgebra::kCarrierGuard));
  }
  return cached_sym(n);
}

namespace detail {

AlgebraPtr sym_inv_algebra_unchecked(int n) { return cached_sym(n); }

}  // namespace detail

}  // namespace irk
