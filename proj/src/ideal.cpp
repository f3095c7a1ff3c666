#include "ringlab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

// An additive subgroup grown one cyclic subgroup at a time.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const Ring& ring) : ring_(ring), mask_(ring.order()) {
    mask_.insert(ring.zero());
    members_.push_back(ring.zero());
  }
  SubgroupBuilder(const Ring& ring, const IndexSet& start)
      : ring_(ring), mask_(start), members_(start.members()) {}

  // Replaces H by H + <s>, the union of the cosets H + k*s.
  void absorb(Index s) {
    if (mask_.contains(s)) return;
    const std::size_t old_size = members_.size();
    Index shift = s;
    while (!mask_.contains(shift)) {
      for (std::size_t i = 0; i < old_size; ++i) {
        const Index v = ring_.add(members_[i], shift);
        mask_.insert(v);
        members_.push_back(v);
      }
      shift = ring_.add(shift, s);
    }
  }

  // Adds the principal ideal generated by g.
  void absorb_multiples(Index g) {
    for (std::size_t r = 0; r < ring_.order(); ++r) absorb(ring_.mul(static_cast<Index>(r), g));
  }

  const IndexSet& mask() const noexcept { return mask_; }
  IdealSet finish() && { return IdealSet(std::move(mask_)); }

 private:
  const Ring& ring_;
  IndexSet mask_;
  std::vector<Index> members_;
};

// Whether I + Rg stays proper, i.e. no r has 1 - r*g in I.
bool sum_with_principal_is_proper(const Ring& ring, const IndexSet& ideal, Index g) {
  for (std::size_t r = 0; r < ring.order(); ++r) {
    if (ideal.contains(ring.sub(ring.one(), ring.mul(static_cast<Index>(r), g)))) return false;
  }
  return true;
}

std::string quotient_label(const Ring& ring, const std::vector<Index>& gens) {
  std::string parent = ring.label();
  if (label_is_product(parent)) parent = "(" + parent + ")";
  std::string out = parent + "/(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(gens[i]);
  }
  return out + ")";
}

}  // namespace

bool canonical_less(const IdealSet& a, const IdealSet& b) {
  return canonical_compare(a.mask(), b.mask()) < 0;
}

void sort_canonical(std::vector<IdealSet>& ideals) {
  std::sort(ideals.begin(), ideals.end(), canonical_less);
}

bool is_ideal(const Ring& ring, const IndexSet& set) {
  if (set.universe() != ring.order() || !set.contains(ring.zero())) return false;
  const auto members = set.members();
  for (Index a : members) {
    for (Index b : members) {
      if (!set.contains(ring.add(a, b))) return false;
    }
    for (std::size_t r = 0; r < ring.order(); ++r) {
      if (!set.contains(ring.mul(static_cast<Index>(r), a))) return false;
    }
  }
  return true;
}

IdealSet zero_ideal(const Ring& ring) {
  IndexSet s(ring.order());
  s.insert(ring.zero());
  return IdealSet(std::move(s));
}

IdealSet whole_ring(const Ring& ring) { return IdealSet(IndexSet::full(ring.order())); }

IdealSet ideal_generated(const Ring& ring, std::span<const Index> gens) {
  SubgroupBuilder builder(ring);
  for (Index g : gens) {
    if (g >= ring.order()) throw std::out_of_range("generator index outside the ring");
    builder.absorb_multiples(g);
  }
  return std::move(builder).finish();
}

IdealSet principal_ideal(const Ring& ring, Index g) {
  const Index gens[] = {g};
  return ideal_generated(ring, gens);
}

IdealSet ideal_sum(const Ring& ring, const IdealSet& a, const IdealSet& b) {
  SubgroupBuilder builder(ring, a.mask());
  for (Index x : b.members()) builder.absorb(x);
  return std::move(builder).finish();
}

IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b) {
  return IdealSet(a.mask().intersect(b.mask()));
}

std::vector<Index> ideal_generators(const Ring& ring, const IdealSet& ideal) {
  std::vector<Index> gens;
  SubgroupBuilder builder(ring);
  for (Index x : ideal.members()) {
    if (builder.mask().contains(x)) continue;
    gens.push_back(x);
    builder.absorb_multiples(x);
  }
  return gens;
}

std::vector<IdealSet> enumerate_ideals(const Ring& ring, const Limits& limits) {
  if (ring.order() > limits.enumeration_cap) {
    throw CapExceeded("ideal enumeration", ring.order(), limits.enumeration_cap);
  }
  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::vector<IdealSet> principals;
  for (std::size_t x = 0; x < ring.order(); ++x) {
    auto p = principal_ideal(ring, static_cast<Index>(x));
    if (seen.insert(p.mask()).second) principals.push_back(std::move(p));
  }

  std::vector<IdealSet> all = principals;
  std::deque<std::size_t> frontier;
  for (std::size_t i = 0; i < all.size(); ++i) frontier.push_back(i);
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const auto& p : principals) {
      if (p.is_subset_of(all[i])) continue;
      auto joined = ideal_sum(ring, all[i], p);
      if (seen.insert(joined.mask()).second) {
        all.push_back(std::move(joined));
        frontier.push_back(all.size() - 1);
      }
    }
  }
  sort_canonical(all);
  return all;
}

QuotientRing quotient_ring(const Ring& ring, const IdealSet& ideal) {
  const std::size_t n = ring.order();
  if (ideal.mask().universe() != n || !is_ideal(ring, ideal.mask())) {
    throw std::invalid_argument("quotient by a set that is not an ideal");
  }
  if (ideal.is_whole()) throw std::invalid_argument("quotient by the whole ring is the zero ring");

  const auto members = ideal.members();
  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> coset(n, kUnset);
  std::vector<Index> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(static_cast<Index>(x));
    for (Index m : members) coset[ring.add(static_cast<Index>(x), m)] = id;
  }

  const std::size_t q = reps.size();
  RingTables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      t.add[a * q + b] = coset[ring.add(reps[a], reps[b])];
      t.mul[a * q + b] = coset[ring.mul(reps[a], reps[b])];
    }
  }
  t.zero = coset[ring.zero()];
  t.one = coset[ring.one()];
  auto gens = ideal_generators(ring, ideal);
  if (gens.empty()) gens.push_back(ring.zero());
  t.label = quotient_label(ring, gens);
  return QuotientRing{Ring::from_trusted_tables(std::move(t)), RingHom{std::move(coset)}};
}

bool is_field(const Ring& ring) {
  const std::size_t n = ring.order();
  for (std::size_t x = 0; x < n; ++x) {
    if (x == ring.zero()) continue;
    bool invertible = false;
    for (std::size_t y = 0; y < n && !invertible; ++y) {
      invertible = ring.mul(static_cast<Index>(x), static_cast<Index>(y)) == ring.one();
    }
    if (!invertible) return false;
  }
  return true;
}

std::vector<IdealSet> maximal_ideals(const Ring& ring) {
  const std::size_t n = ring.order();
  const auto classes = element_classes(ring);
  std::vector<IdealSet> found;
  IndexSet covered(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (classes.units.contains(x) || covered.contains(x)) continue;
    // Distinct maximal ideals are never covered by the others (prime avoidance),
    // so an uncovered non-unit always leads to a new one.
    SubgroupBuilder grow(ring);
    grow.absorb_multiples(static_cast<Index>(x));
    for (std::size_t y = 0; y < n; ++y) {
      const auto yi = static_cast<Index>(y);
      if (grow.mask().contains(y) || classes.units.contains(y)) continue;
      if (sum_with_principal_is_proper(ring, grow.mask(), yi)) grow.absorb_multiples(yi);
    }
    auto m = std::move(grow).finish();
    if (!is_field(quotient_ring(ring, m).ring)) {
      throw InternalDisagreement("greedy maximal ideal has a non-field quotient");
    }
    covered = covered.unite(m.mask());
    found.push_back(std::move(m));
  }
  sort_canonical(found);
  return found;
}

bool is_prime_ideal(const Ring& ring, const IdealSet& ideal) {
  if (!is_ideal(ring, ideal.mask())) throw std::invalid_argument("not an ideal");
  if (ideal.is_whole()) return false;
  const std::size_t n = ring.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (ideal.contains(static_cast<Index>(a))) continue;
    for (std::size_t b = a; b < n; ++b) {
      if (ideal.contains(static_cast<Index>(b))) continue;
      if (ideal.contains(ring.mul(static_cast<Index>(a), static_cast<Index>(b)))) return false;
    }
  }
  return true;
}

IdealSet nilradical(const Ring& ring) {
  auto nil = element_classes(ring).nilpotents;
  if (!is_ideal(ring, nil)) throw InvalidRing("nilpotent elements do not form an ideal");
  return IdealSet(std::move(nil));
}

IdealSet jacobson_radical(const Ring& ring) {
  IdealSet j = whole_ring(ring);
  for (const auto& m : maximal_ideals(ring)) j = ideal_intersection(j, m);
  return j;
}

}  // namespace ringlab
