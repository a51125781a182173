#include "irk/schein.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "irk/zero_direct.hpp"

namespace irk {

BoundedTuple BoundedTuple::certify(AlgebraPtr algebra, std::vector<Element> entries,
                                   Element bound) {
  algebra->require_owned(bound);
  for (const Element& t : entries) {
    if (!natural_leq(*algebra, t, bound)) {
      throw InputError("bounded tuple: entry " + algebra->print(t) +
                       " is not below the bound " + algebra->print(bound));
    }
  }
  return BoundedTuple(std::move(algebra), std::move(entries), std::move(bound));
}

BoundedTuple BoundedTuple::times(const BoundedTuple& rhs) const {
  if (entries_.size() != rhs.entries_.size()) {
    throw InputError("bounded tuple: mismatched index sets");
  }
  std::vector<Element> entries;
  entries.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries.push_back(algebra_->compose(entries_[i], rhs.entries_[i]));
  }
  return certify(algebra_, std::move(entries),
                 algebra_->compose(bound_, rhs.bound_));
}

BoundedTuple BoundedTuple::inverted() const {
  std::vector<Element> entries;
  entries.reserve(entries_.size());
  for (const Element& t : entries_) entries.push_back(algebra_->inverse(t));
  return certify(algebra_, std::move(entries), algebra_->inverse(bound_));
}

Element omega(const BoundedTuple& t) {
  return ehresmann_sup(t.algebra(), t.entries(), t.bound());
}

namespace {

std::string pair_text(const InverseAlgebra& A, const Element& a, const Element& b) {
  return "(" + A.print(a) + ", " + A.print(b) + ")";
}

// Shared verdict computation over a tuple table.
void certify_table(AlgebraPtr algebra, ScheinCertificate& cert) {
  const InverseAlgebra& A = *algebra;
  const std::size_t m = cert.roster.size();

  for (std::size_t i = 0; i < m && cert.bounded; ++i) {
    for (const Element& entry : cert.tuple_table[i]) {
      if (!natural_leq(A, entry, cert.roster[i])) {
        cert.bounded = false;
        cert.bounded_witness = "entry " + A.print(entry) + " of the tuple of " +
                               A.print(cert.roster[i]) + " is not below it";
        break;
      }
    }
  }

  for (std::size_t i = 0; i < m && cert.injective; ++i) {
    for (std::size_t j = i + 1; j < m && cert.injective; ++j) {
      if (cert.tuple_table[i] == cert.tuple_table[j]) {
        cert.injective = false;
        cert.injective_witness =
            "elements " + pair_text(A, cert.roster[i], cert.roster[j]) +
            " share one tuple";
      }
    }
  }

  if (!cert.bounded) {
    cert.homomorphism = false;
    cert.recovery = false;
    return;
  }

  std::vector<BoundedTuple> tuples;
  std::vector<Element> sups;
  tuples.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    tuples.push_back(BoundedTuple::certify(algebra, cert.tuple_table[i],
                                           cert.roster[i]));
    sups.push_back(omega(tuples.back()));
  }

  for (std::size_t i = 0; i < m && cert.recovery; ++i) {
    if (sups[i] != cert.roster[i]) {
      cert.recovery = false;
      cert.recovery_witness = "omega of the tuple of " + A.print(cert.roster[i]) +
                              " is " + A.print(sups[i]);
    }
  }

  for (std::size_t i = 0; i < m && cert.homomorphism; ++i) {
    for (std::size_t j = 0; j < m && cert.homomorphism; ++j) {
      Element lhs = omega(tuples[i].times(tuples[j]));
      Element rhs = A.compose(sups[i], sups[j]);
      if (lhs != rhs) {
        cert.homomorphism = false;
        cert.homomorphism_witness =
            "omega is not multiplicative at " +
            pair_text(A, cert.roster[i], cert.roster[j]);
      }
    }
  }
}

}  // namespace

ScheinCertificate certify_schein(const Subsemigroup& S, const OrbitDecomposition& d) {
  if (d.S.elements() != S.elements() || d.S.algebra().id() != S.algebra().id()) {
    throw InputError("certify_schein: decomposition was not built from this "
                     "subsemigroup");
  }
  const InverseAlgebra& A = S.algebra();
  ScheinCertificate cert;
  cert.roster = S.elements();
  cert.tuple_table.resize(cert.roster.size());
  for (std::size_t i = 0; i < cert.roster.size(); ++i) {
    for (const OrbitFactor& factor : d.factors) {
      cert.tuple_table[i].push_back(factor.phi[i]);
    }
  }
  certify_table(S.algebra_ptr(), cert);

  for (std::size_t a = 0; a < d.factors.size() && cert.orthogonal; ++a) {
    for (std::size_t b = 0; b < d.factors.size() && cert.orthogonal; ++b) {
      if (a == b) continue;
      for (const Element& x : d.factors[a].image) {
        for (const Element& y : d.factors[b].image) {
          if (!A.is_zero(A.compose(x, y))) {
            cert.orthogonal = false;
            cert.orthogonal_witness = "S_" + std::to_string(a + 1) + " S_" +
                                      std::to_string(b + 1) +
                                      " contains the nonzero product " +
                                      A.print(A.compose(x, y)) + " = " +
                                      pair_text(A, x, y);
            break;
          }
        }
        if (!cert.orthogonal) break;
      }
    }
  }
  return cert;
}

ScheinCertificate zero_direct_sigma(const std::vector<Subsemigroup>& summands) {
  if (summands.empty()) {
    throw InputError("zero_direct_sigma: need at least one summand");
  }
  AlgebraPtr algebra = summands.front().algebra_ptr();
  const InverseAlgebra& A = *algebra;
  for (const Subsemigroup& t : summands) {
    if (t.algebra().id() != A.id()) {
      throw InputError("zero_direct_sigma: summands from different algebras");
    }
  }
  std::vector<std::vector<Element>> stars;
  stars.reserve(summands.size());
  for (const Subsemigroup& t : summands) stars.push_back(t.nonzero_elements());

  for (std::size_t a = 0; a < stars.size(); ++a) {
    for (std::size_t b = 0; b < stars.size(); ++b) {
      if (a == b) continue;
      for (const Element& x : stars[a]) {
        for (const Element& y : stars[b]) {
          Element xy = A.compose(x, y);
          if (!A.is_zero(xy)) {
            throw InputError("zero_direct_sigma: summand-product violation: " +
                             A.print(x) + " * " + A.print(y) + " = " +
                             A.print(xy) + " is nonzero");
          }
        }
      }
    }
  }

  ScheinCertificate cert;
  std::set<Element> roster;
  roster.insert(A.zero());
  for (const auto& part : stars) roster.insert(part.begin(), part.end());
  cert.roster.assign(roster.begin(), roster.end());
  for (const Element& t : cert.roster) {
    std::vector<Element> entries;
    entries.reserve(stars.size());
    for (const auto& part : stars) {
      bool inside = std::binary_search(part.begin(), part.end(), t);
      entries.push_back(inside ? t : A.zero());
    }
    cert.tuple_table.push_back(std::move(entries));
  }
  certify_table(algebra, cert);
  // The coordinate images are the summands themselves; orthogonality was
  // established by the precondition scan above.
  cert.orthogonal = true;
  return cert;
}

Theorem theorem_from_name(const std::string& name) {
  if (name == "T1") return Theorem::T1;
  if (name == "T2") return Theorem::T2;
  if (name == "T3") return Theorem::T3;
  if (name == "T4") return Theorem::T4;
  throw InputError("unknown theorem '" + name + "' (expected T1|T2|T3|T4)");
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
  }
  return "?";
}

namespace {

// Violations concentrate on primitive idempotents when they exist at all,
// so scan those triples first and only fall back to the full confirmation
// sweep when the prescan stays clean.
bool distributivity_violation_on_primitives(const InverseAlgebra& A) {
  const std::vector<Element> primitives = A.primitive_idempotents();
  for (std::size_t i = 0; i < primitives.size(); ++i) {
    for (std::size_t j = i + 1; j < primitives.size(); ++j) {
      std::vector<Element> pair = {primitives[i], primitives[j]};
      std::optional<Element> sup = A.bounded_sup(pair);
      if (!sup) continue;
      for (const Element& x : primitives) {
        std::vector<Element> products = {A.compose(x, primitives[i]),
                                         A.compose(x, primitives[j])};
        std::optional<Element> rhs = A.bounded_sup(products);
        if (rhs && A.compose(x, *sup) != *rhs) return true;
      }
    }
  }
  return false;
}

bool completely_distributive(const InverseAlgebra& A) {
  static std::mutex mutex;
  static std::map<AlgebraId, bool> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(A.id());
    if (it != cache.end()) return it->second;
  }
  bool value = !distributivity_violation_on_primitives(A) &&
               !find_distributivity_violation(A, 2).has_value();
  std::lock_guard<std::mutex> lock(mutex);
  cache[A.id()] = value;
  return value;
}

bool set_is_closed(const InverseAlgebra& A, const std::vector<Element>& sorted_set) {
  for (const Element& x : sorted_set) {
    if (!std::binary_search(sorted_set.begin(), sorted_set.end(), A.inverse(x))) {
      return false;
    }
    for (const Element& y : sorted_set) {
      if (!std::binary_search(sorted_set.begin(), sorted_set.end(),
                              A.compose(x, y))) {
        return false;
      }
    }
  }
  return true;
}

// All partitions of {0..k-1} as lists of groups, via restricted growth
// strings.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t k) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  if (k == 0) return out;
  std::vector<int> rgs(k, 0);
  auto emit = [&] {
    int groups = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<std::size_t>> partition(static_cast<std::size_t>(groups));
    for (std::size_t i = 0; i < k; ++i) {
      partition[static_cast<std::size_t>(rgs[i])].push_back(i);
    }
    out.push_back(std::move(partition));
  };
  auto recurse = [&](auto&& self, std::size_t pos, int max_used) -> void {
    if (pos == k) {
      emit();
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, std::max(max_used, v));
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

struct CandidateFamily {
  std::vector<std::pair<Element, std::vector<Element>>> factors;  // (f, U) sorted
  bool valid = false;
  std::string reason;
};

// Projection family for one grouping of the orbit classes: f_G = sup of the
// grouped local identities, U_G = f_G S f_G.
CandidateFamily grouped_family(const OrbitDecomposition& d,
                               const std::vector<std::vector<std::size_t>>& groups) {
  const InverseAlgebra& A = d.S.algebra();
  CandidateFamily family;
  std::vector<Element> sups;
  for (const auto& group : groups) {
    std::vector<Element> identities;
    for (std::size_t i : group) identities.push_back(d.factors[i].local_identity);
    Element f = A.idempotent_sup(identities);
    std::vector<Element> image;
    image.reserve(d.S.size());
    for (const Element& s : d.S.elements()) {
      image.push_back(A.compose(A.compose(f, s), f));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    family.factors.emplace_back(std::move(f), std::move(image));
  }
  std::sort(family.factors.begin(), family.factors.end());

  for (const auto& [f, image] : family.factors) {
    if (!set_is_closed(A, image)) {
      family.reason = "projection by " + A.print(f) + " is not closed";
      return family;
    }
    Subsemigroup u(d.S.algebra_ptr(), image);
    if (!classify_in_local(u, f).weakly_transitive) {
      family.reason = "factor at " + A.print(f) + " is not weakly transitive";
      return family;
    }
  }
  for (const Element& s : d.S.elements()) {
    std::vector<Element> entries;
    entries.reserve(family.factors.size());
    for (const auto& [f, image] : family.factors) {
      entries.push_back(A.compose(A.compose(f, s), f));
    }
    if (ehresmann_sup(A, entries, s) != s) {
      family.reason = "family does not recover " + A.print(s);
      return family;
    }
  }
  family.valid = true;
  return family;
}

TheoremClause clause(std::string name, bool holds, std::string detail = "") {
  return TheoremClause{std::move(name), holds, std::move(detail)};
}

}  // namespace

TheoremVerdict verify_theorem(const Subsemigroup& S, Theorem which,
                              const std::vector<Element>* alternative_identities) {
  const InverseAlgebra& A = S.algebra();
  TheoremVerdict verdict;
  verdict.which = which;

  if (which == Theorem::T1) {
    ZeroDirectDecomposition zd = decompose_zero_direct(S);
    bool irreducible = true, weakly_effective = true;
    for (const ZeroDirectSummand& summand : zd.summands) {
      irreducible = irreducible && summand.irreducible;
      weakly_effective = weakly_effective && summand.weakly_effective;
    }
    verdict.clauses.push_back(clause("summands_irreducible", irreducible));
    verdict.clauses.push_back(clause("summands_weakly_effective", weakly_effective));
    bool sigma_ok = true;
    std::string sigma_detail;
    try {
      std::vector<Subsemigroup> parts;
      for (const ZeroDirectSummand& summand : zd.summands) {
        std::vector<Element> with_zero = summand.elements;
        with_zero.push_back(A.zero());
        parts.emplace_back(S.algebra_ptr(), std::move(with_zero));
      }
      if (!parts.empty()) {
        ScheinCertificate cert = zero_direct_sigma(parts);
        sigma_ok = cert.injective && cert.schein_sum() && cert.recovery;
        if (!sigma_ok) sigma_detail = "sigma certificate has a failing verdict";
      }
    } catch (const InputError& error) {
      sigma_ok = false;
      sigma_detail = error.what();
    }
    verdict.clauses.push_back(
        clause("sigma_injective_schein", sigma_ok, sigma_detail));
    verdict.holds = irreducible && weakly_effective && sigma_ok;
    return verdict;
  }

  OrbitDecomposition d = decompose(S);

  if (which == Theorem::T3 && !d.flags.disperse) {
    verdict.applicable = false;
    verdict.not_applicable_reason = "S is not disperse";
    return verdict;
  }
  if (which == Theorem::T4) {
    if (!completely_distributive(A)) {
      verdict.applicable = false;
      verdict.not_applicable_reason =
          A.name() + " is not completely distributive";
      return verdict;
    }
    if (!d.flags.effective) {
      verdict.applicable = false;
      verdict.not_applicable_reason = "S is not effective";
      return verdict;
    }
  }

  ScheinCertificate cert = certify_schein(S, d);
  std::vector<FactorFlags> factor_flags;
  factor_flags.reserve(d.factors.size());
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    factor_flags.push_back(factor_properties(d, i));
  }
  auto all_factors = [&](auto&& pick) {
    return std::all_of(factor_flags.begin(), factor_flags.end(), pick);
  };

  verdict.clauses.push_back(clause(
      "factors_weakly_effective",
      all_factors([](const FactorFlags& f) { return f.weakly_effective; })));
  verdict.clauses.push_back(clause("bounded_product", cert.bounded,
                                   cert.bounded_witness.value_or("")));
  verdict.clauses.push_back(clause("omega_homomorphism", cert.homomorphism,
                                   cert.homomorphism_witness.value_or("")));
  verdict.clauses.push_back(clause("recovery_weak_equivalence", cert.recovery,
                                   cert.recovery_witness.value_or("")));

  if (which == Theorem::T3) {
    verdict.clauses.push_back(clause(
        "factors_weakly_transitive",
        all_factors([](const FactorFlags& f) { return f.weakly_transitive; })));
    bool conditional = !d.flags.effective ||
                       all_factors([](const FactorFlags& f) { return f.transitive; });
    verdict.clauses.push_back(
        clause("effective_implies_factors_transitive", conditional,
               d.flags.effective ? "" : "vacuous: S is not effective"));
  }

  if (which == Theorem::T4) {
    verdict.clauses.push_back(clause(
        "factors_transitive",
        all_factors([](const FactorFlags& f) { return f.transitive; })));
    verdict.clauses.push_back(clause("orthogonal", cert.orthogonal,
                                     cert.orthogonal_witness.value_or("")));

    std::vector<std::pair<Element, std::vector<Element>>> canonical;
    for (const OrbitFactor& factor : d.factors) {
      canonical.emplace_back(factor.local_identity, factor.image);
    }
    std::sort(canonical.begin(), canonical.end());

    bool unique = true;
    std::string unique_detail;
    if (alternative_identities != nullptr) {
      CandidateFamily family;
      for (const Element& f : *alternative_identities) {
        A.require_owned(f);
        std::vector<Element> image;
        for (const Element& s : S.elements()) {
          image.push_back(A.compose(A.compose(f, s), f));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        family.factors.emplace_back(f, std::move(image));
      }
      std::sort(family.factors.begin(), family.factors.end());
      bool family_valid = true;
      std::string invalid_reason;
      for (const auto& [f, image] : family.factors) {
        if (!set_is_closed(A, image)) {
          family_valid = false;
          invalid_reason = "projection by " + A.print(f) + " is not closed";
          break;
        }
        Subsemigroup u(S.algebra_ptr(), image);
        if (!classify_in_local(u, f).weakly_transitive) {
          family_valid = false;
          invalid_reason = "factor at " + A.print(f) + " is not weakly transitive";
          break;
        }
      }
      if (family_valid) {
        for (const Element& s : S.elements()) {
          std::vector<Element> entries;
          for (const auto& [f, image] : family.factors) {
            entries.push_back(A.compose(A.compose(f, s), f));
          }
          if (ehresmann_sup(A, entries, s) != s) {
            family_valid = false;
            invalid_reason = "family does not recover " + A.print(s);
            break;
          }
        }
      }
      if (!family_valid) {
        unique_detail = "supplied alternative is not a valid decomposition (" +
                        invalid_reason + ")";
      } else if (family.factors != canonical) {
        unique = false;
        unique_detail = "supplied alternative is a valid decomposition with a "
                        "different factor set";
      } else {
        unique_detail = "supplied alternative matches the canonical factors";
      }
    } else {
      std::size_t valid_count = 0, enumerated = 0;
      for (const auto& partition : set_partitions(d.factors.size())) {
        ++enumerated;
        CandidateFamily family = grouped_family(d, partition);
        if (!family.valid) continue;
        ++valid_count;
        if (family.factors != canonical) {
          unique = false;
          unique_detail = "grouping produced a valid decomposition with a "
                          "different factor set";
          break;
        }
      }
      if (unique) {
        unique_detail = std::to_string(valid_count) + " of " +
                        std::to_string(enumerated) +
                        " enumerated groupings are valid; all match the "
                        "canonical factors";
      }
    }
    verdict.clauses.push_back(clause("uniqueness", unique, unique_detail));
  }

  verdict.holds = std::all_of(verdict.clauses.begin(), verdict.clauses.end(),
                              [](const TheoremClause& c) { return c.holds; });
  return verdict;
}

// ---------------------------------------------------------------------------
// Equivalence of representations.
// ---------------------------------------------------------------------------

namespace {

struct ElementProfile {
  bool idempotent;
  int monogenic_index;
  int monogenic_period;
  std::size_t downset;
  std::size_t idempotents_below;

  friend bool operator==(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> profiles_of(const InverseAlgebra& A) {
  const std::vector<Element>& all = A.carrier();
  std::vector<ElementProfile> out;
  out.reserve(all.size());
  for (const Element& x : all) {
    ElementProfile profile{};
    profile.idempotent = A.is_idempotent(x);
    std::vector<Element> powers{x};
    for (;;) {
      Element next = A.compose(powers.back(), x);
      auto it = std::find(powers.begin(), powers.end(), next);
      if (it != powers.end()) {
        profile.monogenic_index = static_cast<int>(it - powers.begin()) + 1;
        profile.monogenic_period = static_cast<int>(powers.end() - it);
        break;
      }
      powers.push_back(std::move(next));
    }
    for (const Element& y : all) {
      if (natural_leq(A, y, x)) {
        ++profile.downset;
        if (A.is_idempotent(y)) ++profile.idempotents_below;
      }
    }
    out.push_back(profile);
  }
  return out;
}

// Extends generator images to a full isomorphism by right-multiplication
// closure; returns false on any conflict.
bool extend_isomorphism(const InverseAlgebra& A1, const InverseAlgebra& A2,
                        const std::vector<Element>& gens,
                        const std::vector<Element>& images,
                        std::map<Element, Element>& map) {
  std::map<Element, Element> reverse;
  std::vector<const Element*> queue;
  map.clear();
  auto assign = [&](const Element& x, const Element& y) {
    auto [it, inserted] = map.emplace(x, y);
    if (!inserted) return it->second == y;
    auto [rit, rinserted] = reverse.emplace(y, x);
    if (!rinserted) return false;  // not injective
    queue.push_back(&it->first);
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!assign(gens[i], images[i])) return false;
  }
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const Element x = *queue[next];
    const Element img = map.at(x);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!assign(A1.compose(x, gens[i]), A2.compose(img, images[i]))) {
        return false;
      }
    }
  }
  return map.size() == A1.carrier().size() &&
         reverse.size() == A2.carrier().size();
}

void require_iso_guard(const InverseAlgebra& A) {
  if (A.n() > 4) {
    throw InputError("isomorphism search: size guard requires n <= 4, got " +
                     A.name());
  }
}

}  // namespace

std::vector<std::vector<Element>> enumerate_isomorphisms(const InverseAlgebra& A1,
                                                         const InverseAlgebra& A2) {
  require_iso_guard(A1);
  require_iso_guard(A2);
  std::vector<std::vector<Element>> found;
  if (A1.carrier().size() != A2.carrier().size()) return found;

  std::vector<Element> gens = A1.monoid_generators();
  std::vector<ElementProfile> profiles1 = profiles_of(A1);
  std::vector<ElementProfile> profiles2 = profiles_of(A2);
  auto profile1_of = [&](const Element& x) {
    auto it = std::lower_bound(A1.carrier().begin(), A1.carrier().end(), x);
    return profiles1[static_cast<std::size_t>(it - A1.carrier().begin())];
  };

  std::vector<std::vector<Element>> candidates;
  for (const Element& g : gens) {
    ElementProfile want = profile1_of(g);
    std::vector<Element> pool;
    for (std::size_t i = 0; i < A2.carrier().size(); ++i) {
      if (profiles2[i] == want) pool.push_back(A2.carrier()[i]);
    }
    if (pool.empty()) return found;
    candidates.push_back(std::move(pool));
  }

  std::vector<Element> images;
  std::map<Element, Element> map;
  auto backtrack = [&](auto&& self, std::size_t pos) -> void {
    if (pos == gens.size()) {
      if (extend_isomorphism(A1, A2, gens, images, map)) found.push_back(images);
      return;
    }
    for (const Element& candidate : candidates[pos]) {
      images.push_back(candidate);
      self(self, pos + 1);
      images.pop_back();
    }
  };
  backtrack(backtrack, 0);
  return found;
}

std::map<Element, Element> isomorphism_from_gen_images(
    const InverseAlgebra& A1, const InverseAlgebra& A2,
    const std::vector<Element>& gen_images) {
  std::map<Element, Element> map;
  if (!extend_isomorphism(A1, A2, A1.monoid_generators(), gen_images, map)) {
    throw InternalError("generator images do not define an isomorphism");
  }
  return map;
}

EquivalenceVerdict equivalent(const Subsemigroup& phi, const Subsemigroup& psi,
                              bool weak) {
  if (!phi.source() || !psi.source()) {
    throw InputError("equivalent: both representations need a source table");
  }
  const CayleyTable& table = phi.source()->table;
  const CayleyTable& other = psi.source()->table;
  if (table.labels != other.labels || table.product != other.product ||
      table.inverse != other.inverse) {
    throw InputError("equivalent: representations have different source tables");
  }
  const std::vector<Element>& rho_phi = phi.source()->rho;
  const std::vector<Element>& rho_psi = psi.source()->rho;

  // theta is pinned on the image by phi(t) theta = psi(t), so weak
  // equivalence is exactly: the two maps identify the same pairs.
  for (std::size_t i = 0; i < rho_phi.size(); ++i) {
    for (std::size_t j = i + 1; j < rho_phi.size(); ++j) {
      bool same_phi = rho_phi[i] == rho_phi[j];
      bool same_psi = rho_psi[i] == rho_psi[j];
      if (same_phi != same_psi) {
        return {false, "the maps identify different pairs at ('" +
                           table.labels[i] + "', '" + table.labels[j] + "')"};
      }
    }
  }
  if (weak) {
    return {true, "theta: t phi -> t psi is a well-defined isomorphism of the "
                  "images"};
  }

  const InverseAlgebra& A1 = phi.algebra();
  const InverseAlgebra& A2 = psi.algebra();
  for (const auto& gen_images : enumerate_isomorphisms(A1, A2)) {
    std::map<Element, Element> theta =
        isomorphism_from_gen_images(A1, A2, gen_images);
    bool pinned_ok = true;
    for (std::size_t i = 0; i < rho_phi.size() && pinned_ok; ++i) {
      pinned_ok = theta.at(rho_phi[i]) == rho_psi[i];
    }
    if (pinned_ok) {
      std::string witness = "theta determined by generator images:";
      const std::vector<Element> gens = A1.monoid_generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        witness += " " + A1.print(gens[i]) + " -> " + A2.print(gen_images[i]);
      }
      return {true, witness};
    }
  }
  return {false, "no isomorphism of the codomain algebras extends the pinned "
                 "map (exhaustive generator-image search)"};
}

}  // namespace irk
