#include "irk/embed_degree.hpp"

#include <algorithm>

#include "irk/dual_sym_inv.hpp"
#include "irk/sym_inv.hpp"

namespace irk {

Element hat_embed(const Element& beta) {
  if (beta.owner().family != Family::dual_sym) {
    throw InputError("hat_embed: expected a block bijection");
  }
  const int n = beta.owner().n;
  if (n > 5) {
    throw InputError("hat_embed: size guard requires n <= 5 (ground set 2^n-2)");
  }
  auto source = dual_sym_inv_algebra(n);
  const auto& D = static_cast<const DualSymInverseAlgebra&>(*source);
  DualSymInverseAlgebra::BlockList blocks = D.blocks_of(beta);

  auto target = detail::sym_inv_algebra_unchecked((1 << n) - 2);
  const auto& T = static_cast<const SymInverseAlgebra&>(*target);
  auto mask_of = [](const std::vector<int>& points) {
    int mask = 0;
    for (int x : points) mask |= 1 << (x - 1);
    return mask;
  };
  std::vector<int> dom_masks, ran_masks;
  for (const auto& [d, r] : blocks) {
    dom_masks.push_back(mask_of(d));
    ran_masks.push_back(mask_of(r));
  }
  SymInverseAlgebra::PairList pairs;
  const std::size_t k = blocks.size();
  if (k >= 2) {
    const unsigned full = (1u << k) - 1u;
    for (unsigned subset = 1; subset < full; ++subset) {
      int dom = 0, ran = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if ((subset >> i) & 1u) {
          dom |= dom_masks[i];
          ran |= ran_masks[i];
        }
      }
      pairs.emplace_back(dom, ran);
    }
  }
  return T.make(std::move(pairs));
}

Element adjoin_zero_embed(const Element& f) {
  if (f.owner().family != Family::sym) {
    throw InputError("adjoin_zero_embed: expected a partial injection");
  }
  const int n = f.owner().n;
  if (n > 5) throw InputError("adjoin_zero_embed: size guard requires n <= 5");
  auto source = sym_inv_algebra(n);
  const auto& S = static_cast<const SymInverseAlgebra&>(*source);
  auto target = dual_sym_inv_algebra(n + 1);
  const auto& D = static_cast<const DualSymInverseAlgebra&>(*target);

  std::vector<char> in_dom(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> in_ran(static_cast<std::size_t>(n) + 1, 0);
  DualSymInverseAlgebra::BlockList blocks;
  for (auto [x, y] : S.pairs_of(f)) {
    blocks.push_back({{x}, {y}});
    in_dom[static_cast<std::size_t>(x)] = 1;
    in_ran[static_cast<std::size_t>(y)] = 1;
  }
  std::vector<int> lump_dom, lump_ran;
  for (int x = 1; x <= n; ++x) {
    if (!in_dom[static_cast<std::size_t>(x)]) lump_dom.push_back(x);
    if (!in_ran[static_cast<std::size_t>(x)]) lump_ran.push_back(x);
  }
  lump_dom.push_back(n + 1);
  lump_ran.push_back(n + 1);
  blocks.push_back({std::move(lump_dom), std::move(lump_ran)});
  return D.make(std::move(blocks));
}

namespace {

struct TableInvariants {
  std::vector<char> idempotent;
  std::vector<std::pair<int, int>> monogenic;  // (index, period)
  std::vector<int> downset;
  std::vector<int> idempotents_below;
};

TableInvariants table_invariants(const CayleyTable& t) {
  const int n = t.size();
  auto prod = [&](int i, int j) {
    return t.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  TableInvariants inv;
  inv.idempotent.resize(static_cast<std::size_t>(n));
  inv.monogenic.resize(static_cast<std::size_t>(n));
  inv.downset.assign(static_cast<std::size_t>(n), 0);
  inv.idempotents_below.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    inv.idempotent[static_cast<std::size_t>(i)] = prod(i, i) == i;
    std::vector<int> powers{i};
    for (;;) {
      int next = prod(powers.back(), i);
      auto it = std::find(powers.begin(), powers.end(), next);
      if (it != powers.end()) {
        inv.monogenic[static_cast<std::size_t>(i)] = {
            static_cast<int>(it - powers.begin()) + 1,
            static_cast<int>(powers.end() - it)};
        break;
      }
      powers.push_back(next);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      // a <= b in the natural order iff a = (a a^-1) b.
      int aa = prod(a, t.inverse[static_cast<std::size_t>(a)]);
      if (prod(aa, b) == a) {
        ++inv.downset[static_cast<std::size_t>(b)];
        if (inv.idempotent[static_cast<std::size_t>(a)]) {
          ++inv.idempotents_below[static_cast<std::size_t>(b)];
        }
      }
    }
  }
  return inv;
}

struct CarrierInvariants {
  std::vector<char> idempotent;
  std::vector<std::pair<int, int>> monogenic;
  std::vector<int> downset;
  std::vector<int> idempotents_below;
};

CarrierInvariants carrier_invariants(const InverseAlgebra& A) {
  const std::vector<Element>& all = A.carrier();
  CarrierInvariants inv;
  const std::size_t m = all.size();
  inv.idempotent.resize(m);
  inv.monogenic.resize(m);
  inv.downset.assign(m, 0);
  inv.idempotents_below.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    inv.idempotent[i] = A.is_idempotent(all[i]);
    std::vector<Element> powers{all[i]};
    for (;;) {
      Element next = A.compose(powers.back(), all[i]);
      auto it = std::find(powers.begin(), powers.end(), next);
      if (it != powers.end()) {
        inv.monogenic[i] = {static_cast<int>(it - powers.begin()) + 1,
                            static_cast<int>(powers.end() - it)};
        break;
      }
      powers.push_back(std::move(next));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    Element aa = A.compose(all[a], A.inverse(all[a]));
    for (std::size_t b = 0; b < m; ++b) {
      if (A.compose(aa, all[b]) == all[a]) {
        ++inv.downset[b];
        if (inv.idempotent[a]) ++inv.idempotents_below[b];
      }
    }
  }
  return inv;
}

// Greedy generating set: scan elements in order, adding any not generated
// by the current set.
std::vector<int> generating_set(const CayleyTable& t) {
  const int n = t.size();
  auto closure_of = [&](const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    auto push = [&](int x) {
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        queue.push_back(x);
      }
    };
    for (int g : gens) {
      push(g);
      push(t.inverse[static_cast<std::size_t>(g)]);
    }
    for (std::size_t next = 0; next < queue.size(); ++next) {
      for (std::size_t i = 0; i <= next; ++i) {
        push(t.product[static_cast<std::size_t>(queue[next])][static_cast<std::size_t>(queue[i])]);
        push(t.product[static_cast<std::size_t>(queue[i])][static_cast<std::size_t>(queue[next])]);
      }
    }
    return in;
  };
  std::vector<int> gens;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (!covered[static_cast<std::size_t>(i)]) {
      gens.push_back(i);
      covered = closure_of(gens);
    }
  }
  return gens;
}

// Closure of the first k generators inside the table.
std::vector<int> prefix_closure(const CayleyTable& t, const std::vector<int>& gens,
                                std::size_t k) {
  const int n = t.size();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  auto push = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      queue.push_back(x);
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    push(gens[i]);
    push(t.inverse[static_cast<std::size_t>(gens[i])]);
  }
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (std::size_t i = 0; i <= next; ++i) {
      push(t.product[static_cast<std::size_t>(queue[next])][static_cast<std::size_t>(queue[i])]);
      push(t.product[static_cast<std::size_t>(queue[i])][static_cast<std::size_t>(queue[next])]);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// Tries to extend the generator images to a consistent injective partial
// homomorphism on the given closed subset of the table.
bool consistent_on(const CayleyTable& t, const InverseAlgebra& A,
                   const std::vector<int>& closed,
                   const std::vector<int>& gens,
                   const std::vector<Element>& images,
                   std::vector<std::optional<Element>>& rho) {
  rho.assign(static_cast<std::size_t>(t.size()), std::nullopt);
  for (std::size_t i = 0; i < images.size(); ++i) {
    rho[static_cast<std::size_t>(gens[i])] = images[i];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a : closed) {
      if (!rho[static_cast<std::size_t>(a)]) continue;
      const int v = t.inverse[static_cast<std::size_t>(a)];
      Element image = A.inverse(*rho[static_cast<std::size_t>(a)]);
      if (!rho[static_cast<std::size_t>(v)]) {
        rho[static_cast<std::size_t>(v)] = std::move(image);
        changed = true;
      } else if (*rho[static_cast<std::size_t>(v)] != image) {
        return false;
      }
      for (int b : closed) {
        if (!rho[static_cast<std::size_t>(b)]) continue;
        const int p = t.product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        Element prod = A.compose(*rho[static_cast<std::size_t>(a)],
                                 *rho[static_cast<std::size_t>(b)]);
        if (!rho[static_cast<std::size_t>(p)]) {
          rho[static_cast<std::size_t>(p)] = std::move(prod);
          changed = true;
        } else if (*rho[static_cast<std::size_t>(p)] != prod) {
          return false;
        }
      }
    }
  }
  // Injectivity on the part assigned so far.
  std::vector<Element> seen;
  for (int a : closed) {
    if (rho[static_cast<std::size_t>(a)]) seen.push_back(*rho[static_cast<std::size_t>(a)]);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace

DegreeSearch degree_search(const CayleyTable& table, Family family, int n_max,
                           long long budget) {
  if (table.size() > 8) {
    throw InputError("degree_search: size guard requires |table| <= 8");
  }
  const int guard = family == Family::sym ? 5 : 4;
  if (n_max < 1 || n_max > guard) {
    throw InputError("degree_search: size guard requires 1 <= n_max <= " +
                     std::to_string(guard) + " for " + family_name(family));
  }
  TableReport report = verify_inverse_semigroup(table);
  if (!report.valid) {
    throw InputError("degree_search: table is not an inverse semigroup: " +
                     report.violation);
  }

  DegreeSearch result;
  result.family = family;
  result.n_max = n_max;

  const std::vector<int> gens = generating_set(table);
  const TableInvariants tinv = table_invariants(table);
  std::vector<std::vector<int>> closures;
  for (std::size_t k = 1; k <= gens.size(); ++k) {
    closures.push_back(prefix_closure(table, gens, k));
  }

  for (int n = 1; n <= n_max; ++n) {
    AlgebraPtr algebra = family == Family::sym ? sym_inv_algebra(n)
                                               : dual_sym_inv_algebra(n);
    const InverseAlgebra& A = *algebra;
    if (A.carrier().size() < static_cast<std::size_t>(table.size())) continue;
    const CarrierInvariants cinv = carrier_invariants(A);

    std::vector<std::vector<Element>> pools;
    bool feasible = true;
    for (int g : gens) {
      std::vector<Element> pool;
      for (std::size_t i = 0; i < A.carrier().size(); ++i) {
        if (cinv.idempotent[i] != static_cast<bool>(tinv.idempotent[static_cast<std::size_t>(g)])) continue;
        if (cinv.monogenic[i] != tinv.monogenic[static_cast<std::size_t>(g)]) continue;
        if (cinv.downset[i] < tinv.downset[static_cast<std::size_t>(g)]) continue;
        if (cinv.idempotents_below[i] < tinv.idempotents_below[static_cast<std::size_t>(g)]) continue;
        pool.push_back(A.carrier()[i]);
      }
      if (pool.empty()) {
        feasible = false;
        break;
      }
      pools.push_back(std::move(pool));
    }
    if (!feasible) continue;

    std::vector<Element> images;
    std::vector<std::optional<Element>> rho;
    bool exhausted = false;
    auto backtrack = [&](auto&& self, std::size_t pos) -> bool {
      if (pos == gens.size()) return true;
      for (const Element& candidate : pools[pos]) {
        if (++result.nodes > budget) {
          exhausted = true;
          return false;
        }
        images.push_back(candidate);
        if (consistent_on(table, A, closures[pos], gens, images, rho) &&
            self(self, pos + 1)) {
          return true;
        }
        images.pop_back();
        if (exhausted) return false;
      }
      return false;
    };
    if (backtrack(backtrack, 0)) {
      std::map<std::string, Element> witness;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        witness[table.labels[static_cast<std::size_t>(gens[i])]] = images[i];
      }
      Subsemigroup verified = image_of(algebra, table, witness);
      if (!verified.source() || !verified.source()->injective) {
        throw InternalError("degree_search: witness failed re-verification");
      }
      result.outcome = SearchOutcome::found;
      result.degree = n;
      result.witness = std::move(witness);
      result.witness_algebra = algebra;
      return result;
    }
    if (exhausted) {
      result.outcome = SearchOutcome::budget_exhausted;
      result.degree = n;
      return result;
    }
  }
  result.outcome = SearchOutcome::not_found;
  return result;
}

DegreeResult degree_result(const CayleyTable& table, int n_max_sym, int n_max_dual,
                           long long budget) {
  return {degree_search(table, Family::sym, n_max_sym, budget),
          degree_search(table, Family::dual_sym, n_max_dual, budget)};
}

DegreeBounds check_degree_bounds(const DegreeResult& r) {
  DegreeBounds bounds;
  if (r.sym.outcome != SearchOutcome::found ||
      r.dual.outcome != SearchOutcome::found) {
    return bounds;
  }
  bounds.applicable = true;
  bounds.deg = r.sym.degree;
  bounds.deg_star = r.dual.degree;
  const long long pow2 = 1LL << bounds.deg_star;
  bounds.log_lower = bounds.deg + 2 <= pow2;
  bounds.plus_one_upper = bounds.deg_star <= bounds.deg + 1;
  bounds.hat_upper = bounds.deg <= pow2 - 2;
  return bounds;
}

}  // namespace irk
