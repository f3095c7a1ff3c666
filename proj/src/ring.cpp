#include "ringlab/ring.hpp"

#include <utility>

#include "ringlab/errors.hpp"

namespace ringlab {

bool label_is_product(const std::string& label) {
  int depth = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const char c = label[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && label.compare(i, 3, " x ") == 0) return true;
  }
  return false;
}

namespace {

void check_order_cap(const std::string& what, std::size_t order, const Limits& limits) {
  const std::size_t cap = limits.order_cap < kMaxRingOrder ? limits.order_cap : kMaxRingOrder;
  if (order > cap) throw CapExceeded(what, order, cap);
}

std::vector<Index> negation_table(const RingTables& t) {
  std::vector<Index> neg(t.order, 0);
  for (std::size_t a = 0; a < t.order; ++a) {
    for (std::size_t b = 0; b < t.order; ++b) {
      if (t.add[a * t.order + b] == t.zero) {
        neg[a] = static_cast<Index>(b);
        break;
      }
    }
  }
  return neg;
}

}  // namespace

AxiomReport validate_ring_axioms(const RingTables& t) {
  AxiomReport report;
  auto violate = [&report](std::string axiom, std::vector<Index> witness) {
    report.violations.push_back({std::move(axiom), std::move(witness)});
  };

  const std::size_t n = t.order;
  if (n == 0 || n > kMaxRingOrder || t.add.size() != n * n || t.mul.size() != n * n ||
      t.zero >= n || t.one >= n) {
    violate("table shape", {});
    return report;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) {
      violate("table entries in range", {static_cast<Index>(i / n), static_cast<Index>(i % n)});
      return report;
    }
  }
  if (t.one == t.zero) violate("one differs from zero", {t.zero});

  auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return t.add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return t.mul[a * n + b]; };
  auto idx = [](std::size_t v) { return static_cast<Index>(v); };

  bool add_comm = true, mul_comm = true, add_id = true, mul_id = true, add_inv = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (add_id && A(t.zero, a) != a) {
      violate("additive identity", {idx(a)});
      add_id = false;
    }
    if (mul_id && M(t.one, a) != a) {
      violate("multiplicative identity", {idx(a)});
      mul_id = false;
    }
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (add_comm && A(a, b) != A(b, a)) {
        violate("additive commutativity", {idx(a), idx(b)});
        add_comm = false;
      }
      if (mul_comm && M(a, b) != M(b, a)) {
        violate("multiplicative commutativity", {idx(a), idx(b)});
        mul_comm = false;
      }
      if (A(a, b) == t.zero) has_inverse = true;
    }
    if (add_inv && !has_inverse) {
      violate("additive inverse", {idx(a)});
      add_inv = false;
    }
  }

  bool add_assoc = true, mul_assoc = true, distrib = true;
  for (std::size_t a = 0; a < n && (add_assoc || mul_assoc || distrib); ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab_sum = A(a, b);
      const std::size_t ab_prod = M(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (add_assoc && A(ab_sum, c) != A(a, A(b, c))) {
          violate("additive associativity", {idx(a), idx(b), idx(c)});
          add_assoc = false;
        }
        if (mul_assoc && M(ab_prod, c) != M(a, M(b, c))) {
          violate("multiplicative associativity", {idx(a), idx(b), idx(c)});
          mul_assoc = false;
        }
        if (distrib && M(a, A(b, c)) != A(ab_prod, M(a, c))) {
          violate("distributivity", {idx(a), idx(b), idx(c)});
          distrib = false;
        }
      }
    }
  }
  return report;
}

Ring::Ring(RingTables t)
    : n_(t.order),
      add_(std::move(t.add)),
      mul_(std::move(t.mul)),
      zero_(t.zero),
      one_(t.one),
      label_(std::move(t.label)) {}

Ring Ring::from_tables(RingTables tables) {
  const auto report = validate_ring_axioms(tables);
  if (!report.ok()) {
    std::string msg = "not a commutative unital ring: " + report.violations.front().axiom;
    if (!report.violations.front().witness.empty()) {
      msg += " (witness";
      for (Index w : report.violations.front().witness) msg += " " + std::to_string(w);
      msg += ")";
    }
    throw InvalidRing(msg);
  }
  return from_trusted_tables(std::move(tables));
}

Ring Ring::from_trusted_tables(RingTables tables) {
  if (tables.order < 2) throw InvalidRing("rings of order 1 have one = zero");
  auto neg = negation_table(tables);
  Ring ring(std::move(tables));
  ring.neg_ = std::move(neg);
  return ring;
}

Index Ring::scale(long long k, Index x) const noexcept {
  Index base = x;
  if (k < 0) {
    base = neg(x);
    k = -k;
  }
  Index acc = zero_;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

Index Ring::pow(Index x, unsigned long long e) const noexcept {
  Index acc = one_;
  Index base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

RingTables Ring::tables() const { return RingTables{n_, add_, mul_, zero_, one_, label_}; }

Ring Ring::relabeled(std::string label) const& {
  Ring copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Ring Ring::relabeled(std::string label) && {
  label_ = std::move(label);
  return std::move(*this);
}

Ring make_zmod(std::size_t n, const Limits& limits) {
  if (n < 2) throw std::invalid_argument("Z_n requires n >= 2");
  check_order_cap("Z" + std::to_string(n), n, limits);
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Index>((a + b) % n);
      t.mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = 1;
  t.label = "Z" + std::to_string(n);
  return Ring::from_trusted_tables(std::move(t));
}

namespace {

// Products nest to the left without parentheses; a product on the right is grouped.
std::string product_label(const Ring& r, const Ring& s) {
  std::string right = s.label();
  if (label_is_product(right)) right = "(" + right + ")";
  return r.label() + " x " + right;
}

}  // namespace

Ring direct_product(const Ring& r, const Ring& s, const Limits& limits) {
  const std::size_t nr = r.order();
  const std::size_t ns = s.order();
  const std::size_t n = nr * ns;
  check_order_cap("direct product", n, limits);
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ar = static_cast<Index>(a / ns);
    const auto as = static_cast<Index>(a % ns);
    for (std::size_t b = 0; b < n; ++b) {
      const auto br = static_cast<Index>(b / ns);
      const auto bs = static_cast<Index>(b % ns);
      t.add[a * n + b] = static_cast<Index>(r.add(ar, br) * ns + s.add(as, bs));
      t.mul[a * n + b] = static_cast<Index>(r.mul(ar, br) * ns + s.mul(as, bs));
    }
  }
  t.zero = static_cast<Index>(r.zero() * ns + s.zero());
  t.one = static_cast<Index>(r.one() * ns + s.one());
  t.label = product_label(r, s);
  return Ring::from_trusted_tables(std::move(t));
}

namespace {

struct PowerScan {
  bool nilpotent = false;
  bool unit = false;
};

// Walks x, x^2, ... until it hits zero, hits one, or revisits a value.
// A finite power sequence repeats within n steps.
PowerScan scan_powers(const Ring& ring, Index x, std::vector<std::uint32_t>& stamp,
                      std::uint32_t epoch) {
  PowerScan out;
  Index p = x;
  for (std::size_t k = 1; k <= ring.order(); ++k) {
    if (p == ring.zero()) {
      out.nilpotent = true;
      return out;
    }
    if (p == ring.one()) {
      out.unit = true;
      return out;
    }
    if (stamp[p] == epoch) return out;
    stamp[p] = epoch;
    p = ring.mul(p, x);
  }
  return out;
}

}  // namespace

bool is_nilpotent(const Ring& ring, Index x) {
  std::vector<std::uint32_t> stamp(ring.order(), 0);
  return scan_powers(ring, x, stamp, 1).nilpotent;
}

ElementClasses element_classes(const Ring& ring) {
  const std::size_t n = ring.order();
  ElementClasses c{IndexSet(n), IndexSet(n), IndexSet(n)};
  std::vector<std::uint32_t> stamp(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Index>(x);
    const auto scan = scan_powers(ring, xi, stamp, static_cast<std::uint32_t>(x + 1));
    if (scan.nilpotent) c.nilpotents.insert(x);
    if (scan.unit) c.units.insert(x);
    if (ring.mul(xi, xi) == xi) c.idempotents.insert(x);
  }
  return c;
}

std::size_t characteristic(const Ring& ring) {
  Index acc = ring.one();
  std::size_t k = 1;
  while (acc != ring.zero()) {
    acc = ring.add(acc, ring.one());
    ++k;
  }
  return k;
}

HomCheck check_ring_hom(const Ring& domain, const Ring& codomain, const RingHom& hom) {
  HomCheck out;
  auto fail = [&out](std::string what, std::vector<Index> witness) {
    out.ok = false;
    out.failure = std::move(what);
    out.witness = std::move(witness);
    return out;
  };
  if (hom.map.size() != domain.order()) return fail("map length", {});
  for (Index v : hom.map) {
    if (v >= codomain.order()) return fail("image out of range", {});
  }
  if (hom(domain.one()) != codomain.one()) return fail("one maps to one", {domain.one()});
  const std::size_t n = domain.order();
  for (std::size_t a = 0; a < n; ++a) {
    const auto ai = static_cast<Index>(a);
    for (std::size_t b = a; b < n; ++b) {
      const auto bi = static_cast<Index>(b);
      if (hom(domain.add(ai, bi)) != codomain.add(hom(ai), hom(bi))) {
        return fail("additive", {ai, bi});
      }
      if (hom(domain.mul(ai, bi)) != codomain.mul(hom(ai), hom(bi))) {
        return fail("multiplicative", {ai, bi});
      }
    }
  }
  return out;
}

bool is_surjective(const RingHom& hom, std::size_t codomain_order) {
  IndexSet hit(codomain_order);
  for (Index v : hom.map) hit.insert(v);
  return hit.size() == codomain_order;
}

IndexSet hom_kernel(const Ring& codomain, const RingHom& hom) {
  IndexSet k(hom.map.size());
  for (std::size_t x = 0; x < hom.map.size(); ++x) {
    if (hom.map[x] == codomain.zero()) k.insert(x);
  }
  return k;
}

}  // namespace ringlab
