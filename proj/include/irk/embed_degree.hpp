#ifndef IRK_EMBED_DEGREE_HPP
#define IRK_EMBED_DEGREE_HPP

#include <map>
#include <string>

#include "irk/subsemigroup.hpp"

namespace irk {

/// Hat embedding of a block bijection on {1..n} into the partial
/// injections on the proper non-trivial subsets of {1..n}: a union of
/// domain blocks maps to the union of the matched range blocks. Subsets
/// are encoded as bitmask integers 1..2^n-2, so the result lives in
/// sym(2^n - 2). Guarded to n <= 5 (ground set up to 30 points).
Element hat_embed(const Element& beta);

/// Embedding of a partial injection on {1..n} into the block bijections
/// on {1..n+1}: singleton blocks {x} -> {f(x)} on the domain, and one
/// block joining the unused points with the added point n+1 on each side.
/// Guarded to n <= 5.
Element adjoin_zero_embed(const Element& f);

enum class SearchOutcome { found, not_found, budget_exhausted };

struct DegreeSearch {
  Family family = Family::sym;
  SearchOutcome outcome = SearchOutcome::not_found;
  int n_max = 0;
  int degree = -1;                         // smallest n admitting an embedding
  std::map<std::string, Element> witness;  // generator label -> image
  AlgebraPtr witness_algebra;
  long long nodes = 0;  // candidate assignments tried
};

/// Smallest n <= n_max such that the table embeds in sym(n) or
/// dual-sym(n): generator-by-generator backtracking over candidate images,
/// pruned by idempotency, monogenic signature and down-set counts, with
/// partial-closure consistency after every assignment. A found witness is
/// re-verified through image_of. Budget exhaustion is reported as its own
/// outcome, distinct from nonexistence.
DegreeSearch degree_search(const CayleyTable& table, Family family, int n_max,
                           long long budget = 50'000'000);

struct DegreeResult {
  DegreeSearch sym;
  DegreeSearch dual;
};

DegreeResult degree_result(const CayleyTable& table, int n_max_sym, int n_max_dual,
                           long long budget = 50'000'000);

/// The degree bound chain, evaluated integer-exactly:
///   deg + 2 <= 2^deg*   (equivalently log2(deg + 2) <= deg*),
///   deg* <= deg + 1,
///   deg <= 2^deg* - 2.
struct DegreeBounds {
  bool applicable = false;  // both degrees resolved
  int deg = -1;
  int deg_star = -1;
  bool log_lower = false;
  bool plus_one_upper = false;
  bool hat_upper = false;

  bool all_hold() const { return log_lower && plus_one_upper && hat_upper; }
};

DegreeBounds check_degree_bounds(const DegreeResult& r);

}  // namespace irk

#endif  // IRK_EMBED_DEGREE_HPP
