#include "ringlab/group.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ringlab/errors.hpp"

namespace ringlab {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

namespace {

std::size_t prime_of(std::size_t prime_power) { return factorize(prime_power).front().first; }

void require_prime(std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

AbelianGroup make_group(const std::vector<std::size_t>& orders) {
  AbelianGroup g;
  for (std::size_t d : orders) {
    if (d == 0) throw std::invalid_argument("cyclic factor of order 0");
    for (const auto& [p, e] : factorize(d)) {
      std::size_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      g.factors_.push_back(q);
    }
  }
  std::sort(g.factors_.begin(), g.factors_.end(), [](std::size_t a, std::size_t b) {
    const auto pa = prime_of(a);
    const auto pb = prime_of(b);
    return pa != pb ? pa < pb : a < b;
  });
  g.order_ = 1;
  for (std::size_t d : g.factors_) g.order_ *= d;
  return g;
}

std::vector<std::size_t> AbelianGroup::exponents(std::size_t element) const {
  std::vector<std::size_t> e(factors_.size(), 0);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = element % factors_[i];
    element /= factors_[i];
  }
  return e;
}

std::size_t AbelianGroup::element_of(const std::vector<std::size_t>& exponents) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx = idx * factors_[i] + exponents[i] % factors_[i];
  }
  return idx;
}

std::size_t AbelianGroup::multiply(std::size_t a, std::size_t b) const {
  auto ea = exponents(a);
  const auto eb = exponents(b);
  for (std::size_t i = 0; i < ea.size(); ++i) ea[i] = (ea[i] + eb[i]) % factors_[i];
  return element_of(ea);
}

std::string AbelianGroup::label() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " x ";
    out += "C" + std::to_string(factors_[i]);
  }
  return out;
}

AbelianGroup p_component(const AbelianGroup& g, std::size_t p) {
  require_prime(p);
  std::vector<std::size_t> kept;
  for (std::size_t d : g.factors()) {
    if (prime_of(d) == p) kept.push_back(d);
  }
  return make_group(kept);
}

AbelianGroup quotient_by_component(const AbelianGroup& g, std::size_t p) {
  require_prime(p);
  std::vector<std::size_t> kept;
  for (std::size_t d : g.factors()) {
    if (prime_of(d) != p) kept.push_back(d);
  }
  return make_group(kept);
}

bool is_p_group(const AbelianGroup& g, std::size_t p) {
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::size_t> p_component_elements(const AbelianGroup& g, std::size_t p) {
  require_prime(p);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = g.exponents(x);
    bool inside = true;
    for (std::size_t i = 0; i < e.size() && inside; ++i) {
      inside = prime_of(g.factors()[i]) == p || e[i] == 0;
    }
    if (inside) out.push_back(x);
  }
  return out;
}

namespace {

// Partitions of n into parts in non-decreasing order.
void partitions(unsigned n, unsigned min_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = min_part; part <= n; ++part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(std::size_t order) {
  if (order == 0) return {};
  // For each prime, the list of possible factor lists of its component.
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;
  for (const auto& [p, e] : factorize(order)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> scratch;
    partitions(e, 1, scratch, parts);
    std::vector<std::vector<std::size_t>> choices;
    for (const auto& partition : parts) {
      std::vector<std::size_t> factor_list;
      for (unsigned k : partition) {
        std::size_t q = 1;
        for (unsigned i = 0; i < k; ++i) q *= p;
        factor_list.push_back(q);
      }
      choices.push_back(std::move(factor_list));
    }
    per_prime.push_back(std::move(choices));
  }

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> combine = [&](std::size_t level) {
    if (level == per_prime.size()) {
      out.push_back(make_group(current));
      return;
    }
    for (const auto& choice : per_prime[level]) {
      const auto mark = current.size();
      current.insert(current.end(), choice.begin(), choice.end());
      combine(level + 1);
      current.resize(mark);
    }
  };
  combine(0);
  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors() < b.factors();
  });
  return out;
}

std::vector<Index> GroupRingView::coefficients(Index element) const {
  const std::size_t r = base.order();
  std::vector<Index> c(group.order(), 0);
  std::size_t x = element;
  for (auto& coeff : c) {
    coeff = static_cast<Index>(x % r);
    x /= r;
  }
  return c;
}

Index GroupRingView::from_coefficients(const std::vector<Index>& coeffs) const {
  const std::size_t r = base.order();
  std::size_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * r + coeffs[i];
  return static_cast<Index>(idx);
}

Index GroupRingView::monomial(Index r, std::size_t g) const {
  std::vector<Index> c(group.order(), base.zero());
  c[g] = r;
  return from_coefficients(c);
}

GroupRingView group_ring(const Ring& base, const AbelianGroup& group, const Limits& limits) {
  const std::size_t cap = std::min(limits.order_cap, kMaxRingOrder);
  const std::size_t r = base.order();
  const std::size_t m = group.order();
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    n *= r;
    if (n > cap) throw CapExceeded("group ring", n, cap);
  }

  std::vector<Index> coeffs(n * m);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t v = x;
    for (std::size_t g = 0; g < m; ++g) {
      coeffs[x * m + g] = static_cast<Index>(v % r);
      v /= r;
    }
  }
  std::vector<std::size_t> gmul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) gmul[a * m + b] = group.multiply(a, b);
  }
  auto encode = [&](const std::vector<Index>& c) {
    std::size_t idx = 0;
    for (std::size_t g = m; g-- > 0;) idx = idx * r + c[g];
    return static_cast<Index>(idx);
  };

  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  std::vector<Index> acc(m);
  for (std::size_t a = 0; a < n; ++a) {
    const Index* ca = &coeffs[a * m];
    for (std::size_t b = a; b < n; ++b) {
      const Index* cb = &coeffs[b * m];
      for (std::size_t g = 0; g < m; ++g) acc[g] = base.add(ca[g], cb[g]);
      const Index sum = encode(acc);
      std::fill(acc.begin(), acc.end(), base.zero());
      for (std::size_t i = 0; i < m; ++i) {
        if (ca[i] == base.zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (cb[j] == base.zero()) continue;
          Index& slot = acc[gmul[i * m + j]];
          slot = base.add(slot, base.mul(ca[i], cb[j]));
        }
      }
      const Index prod = encode(acc);
      t.add[a * n + b] = t.add[b * n + a] = sum;
      t.mul[a * n + b] = t.mul[b * n + a] = prod;
    }
  }
  std::vector<Index> unit(m, base.zero());
  t.zero = encode(unit);
  unit[AbelianGroup::identity()] = base.one();
  t.one = encode(unit);
  t.label = "GR(" + base.label() + ", " + group.label() + ")";
  return GroupRingView{Ring::from_trusted_tables(std::move(t)), base, group};
}

RingHom augmentation(const GroupRingView& view) {
  RingHom h;
  h.map.resize(view.ring.order());
  for (std::size_t x = 0; x < view.ring.order(); ++x) {
    Index s = view.base.zero();
    for (Index c : view.coefficients(static_cast<Index>(x))) s = view.base.add(s, c);
    h.map[x] = s;
  }
  return h;
}

IdealSet augmentation_ideal(const GroupRingView& view) {
  std::vector<Index> gens;
  for (std::size_t g = 0; g < view.group.order(); ++g) {
    gens.push_back(view.ring.sub(view.group_element(g), view.ring.one()));
  }
  return ideal_generated(view.ring, gens);
}

IdealSet karpilovsky_radical(const GroupRingView& view) {
  const Ring& base = view.base;
  const auto jr = jacobson_radical(base);
  std::vector<Index> gens;
  for (Index j : jr.members()) {
    for (std::size_t g = 0; g < view.group.order(); ++g) gens.push_back(view.monomial(j, g));
  }
  for (const auto& [p, e] : factorize(view.group.order())) {
    const auto gp = p_component_elements(view.group, p);
    for (std::size_t r = 0; r < base.order(); ++r) {
      const auto ri = static_cast<Index>(r);
      if (!jr.contains(base.scale(static_cast<long long>(p), ri))) continue;
      for (std::size_t g : gp) {
        // r(g - 1) = r*g - r*1
        gens.push_back(view.ring.sub(view.monomial(ri, g), view.monomial(ri, 0)));
      }
    }
  }
  return ideal_generated(view.ring, gens);
}

}  // namespace ringlab
