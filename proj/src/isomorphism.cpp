#include <optional>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

// Per-element data preserved by any isomorphism.
struct Signature {
  std::size_t additive_order = 0;
  bool nilpotent = false;
  bool idempotent = false;
  bool unit = false;
  bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const Ring& ring) {
  const auto classes = element_classes(ring);
  std::vector<Signature> out(ring.order());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const auto xi = static_cast<Index>(x);
    std::size_t k = 1;
    for (Index acc = xi; acc != ring.zero(); acc = ring.add(acc, xi)) ++k;
    out[x] = {x == ring.zero() ? 1 : k, classes.nilpotents.contains(x),
              classes.idempotents.contains(x), classes.units.contains(x)};
  }
  return out;
}

constexpr int kUnmapped = -1;

// Partial bijection R -> S kept closed under + and * of its domain.
struct PartialMap {
  std::vector<int> forward;
  std::vector<int> backward;
  std::vector<Index> domain;
};

class Search {
 public:
  Search(const Ring& r, const Ring& s)
      : r_(r), s_(s), sig_r_(signatures(r)), sig_s_(signatures(s)) {}

  std::optional<RingHom> run() {
    PartialMap start{std::vector<int>(r_.order(), kUnmapped),
                     std::vector<int>(s_.order(), kUnmapped), {}};
    if (!assign(start, r_.zero(), s_.zero()) || !assign(start, r_.one(), s_.one())) {
      return std::nullopt;
    }
    return extend(start);
  }

 private:
  bool assign(PartialMap& m, Index x, Index y) {
    std::vector<Index> work;
    if (!bind(m, x, y, work)) return false;
    while (!work.empty()) {
      const Index a = work.back();
      work.pop_back();
      // domain grows while we iterate; index-based loop picks up new members
      for (std::size_t i = 0; i < m.domain.size(); ++i) {
        const Index b = m.domain[i];
        const auto fa = static_cast<Index>(m.forward[a]);
        const auto fb = static_cast<Index>(m.forward[b]);
        if (!bind(m, r_.add(a, b), s_.add(fa, fb), work)) return false;
        if (!bind(m, r_.mul(a, b), s_.mul(fa, fb), work)) return false;
      }
    }
    return true;
  }

  bool bind(PartialMap& m, Index x, Index y, std::vector<Index>& work) {
    if (m.forward[x] != kUnmapped) return m.forward[x] == y;
    if (m.backward[y] != kUnmapped) return false;
    if (!(sig_r_[x] == sig_s_[y])) return false;
    m.forward[x] = y;
    m.backward[y] = x;
    m.domain.push_back(x);
    work.push_back(x);
    return true;
  }

  std::optional<RingHom> extend(const PartialMap& m) {
    if (m.domain.size() == r_.order()) {
      RingHom h;
      h.map.reserve(r_.order());
      for (int v : m.forward) h.map.push_back(static_cast<Index>(v));
      return h;
    }
    std::size_t next = 0;
    while (m.forward[next] != kUnmapped) ++next;
    for (std::size_t y = 0; y < s_.order(); ++y) {
      if (m.backward[y] != kUnmapped || !(sig_r_[next] == sig_s_[y])) continue;
      PartialMap trial = m;
      if (!assign(trial, static_cast<Index>(next), static_cast<Index>(y))) continue;
      if (auto found = extend(trial)) return found;
    }
    return std::nullopt;
  }

  const Ring& r_;
  const Ring& s_;
  std::vector<Signature> sig_r_;
  std::vector<Signature> sig_s_;
};

}  // namespace

IsomorphismResult ring_isomorphic(const Ring& r, const Ring& s, const Limits& limits) {
  IsomorphismResult out;
  if (r.order() != s.order()) {
    out.reason = "order";
    return out;
  }
  if (r.order() > limits.isomorphism_cap) {
    throw CapExceeded("isomorphism search", r.order(), limits.isomorphism_cap);
  }
  if (characteristic(r) != characteristic(s)) {
    out.reason = "characteristic";
    return out;
  }
  const auto cr = element_classes(r);
  const auto cs = element_classes(s);
  if (cr.nilpotents.size() != cs.nilpotents.size()) {
    out.reason = "nilpotent count";
    return out;
  }
  if (cr.idempotents.size() != cs.idempotents.size()) {
    out.reason = "idempotent count";
    return out;
  }
  if (cr.units.size() != cs.units.size()) {
    out.reason = "unit count";
    return out;
  }
  if (r.order() <= limits.enumeration_cap &&
      enumerate_ideals(r, limits).size() != enumerate_ideals(s, limits).size()) {
    out.reason = "ideal count";
    return out;
  }
  if (auto hom = Search(r, s).run()) {
    out.isomorphic = true;
    out.witness = std::move(hom);
    return out;
  }
  out.reason = "search";
  return out;
}

}  // namespace ringlab
