#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

bool is_prime(std::size_t p);

/// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n);

/// A finite abelian group as a product of cyclic groups of prime-power order,
/// sorted by (prime, exponent). Elements are exponent tuples, numbered in
/// lexicographic order; the identity is element 0.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  const std::vector<std::size_t>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  std::vector<std::size_t> exponents(std::size_t element) const;
  std::size_t element_of(const std::vector<std::size_t>& exponents) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  static constexpr std::size_t identity() noexcept { return 0; }

  /// "1" for the trivial group, otherwise e.g. "C2 x C4".
  std::string label() const;

  bool operator==(const AbelianGroup&) const = default;

  friend AbelianGroup make_group(const std::vector<std::size_t>& orders);

 private:
  std::vector<std::size_t> factors_;
  std::size_t order_ = 1;
};

/// Splits each cyclic order into prime-power factors and drops 1s.
AbelianGroup make_group(const std::vector<std::size_t>& orders);

/// G_p as an abstract group: the p-power factors. Throws if p is not prime.
AbelianGroup p_component(const AbelianGroup& g, std::size_t p);

/// G / G_p, realized as the product of the remaining factors.
AbelianGroup quotient_by_component(const AbelianGroup& g, std::size_t p);

/// |G| is a power of p. The trivial group counts as a p-group for every p.
bool is_p_group(const AbelianGroup& g, std::size_t p);

/// Indices (in G's own numbering) of the elements of G_p.
std::vector<std::size_t> p_component_elements(const AbelianGroup& g, std::size_t p);

/// Every abelian group of the given order, one per isomorphism class,
/// ordered lexicographically by factor list.
std::vector<AbelianGroup> abelian_groups_of_order(std::size_t order);

/// A group ring RG with the bookkeeping needed to read coefficients back.
/// Element index is the little-endian mixed-radix encoding of the coefficient
/// tuple: index = sum c_g * |R|^g. The embedded copy of R keeps R's indices.
struct GroupRingView {
  Ring ring;
  Ring base;
  AbelianGroup group;

  std::vector<Index> coefficients(Index element) const;
  Index from_coefficients(const std::vector<Index>& coeffs) const;
  /// r placed on group element g.
  Index monomial(Index r, std::size_t g) const;
  /// The embedded group element g (coefficient one).
  Index group_element(std::size_t g) const { return monomial(base.one(), g); }
};

/// Throws CapExceeded when |R|^|G| exceeds limits.order_cap.
GroupRingView group_ring(const Ring& base, const AbelianGroup& group, const Limits& limits = {});

/// Coefficient sum RG -> R.
RingHom augmentation(const GroupRingView& view);

/// The ideal generated by { g - 1 : g in G }.
IdealSet augmentation_ideal(const GroupRingView& view);

/// J(R)G + < r(g_p - 1) : p prime dividing |G|, g_p in G_p, p*r in J(R) >.
IdealSet karpilovsky_radical(const GroupRingView& view);

}  // namespace ringlab
