#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ideal.hpp"

using namespace ringlab;

namespace {

using Factors = std::vector<std::size_t>;

std::vector<std::vector<std::size_t>> group_table(const AbelianGroup& g) {
  std::vector<std::vector<std::size_t>> t(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) t[a][b] = g.multiply(a, b);
  }
  return t;
}

std::size_t partitions(unsigned k) {
  // p(k) by the recurrence on largest part
  std::vector<std::size_t> p(k + 1, 0);
  p[0] = 1;
  for (unsigned part = 1; part <= k; ++part) {
    for (unsigned s = part; s <= k; ++s) p[s] += p[s - part];
  }
  return p[k];
}

}  // namespace

TEST(Group, Construction) {
  EXPECT_EQ(make_group({6}).factors(), (Factors{2, 3}));
  EXPECT_TRUE(make_group({}).is_trivial());
  EXPECT_EQ(make_group({}).order(), 1u);
  EXPECT_EQ(make_group({}).label(), "1");
  const auto v4 = make_group({2, 2});
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(v4.label(), "C2 x C2");
  EXPECT_EQ(make_group({12, 1}).factors(), (Factors{4, 3}));
  EXPECT_THROW(make_group({0}), std::invalid_argument);
}

TEST(Group, Components) {
  EXPECT_EQ(p_component(make_group({6}), 2).factors(), (Factors{2}));
  EXPECT_TRUE(p_component(make_group({6}), 5).is_trivial());
  EXPECT_EQ(p_component(make_group({2, 4, 3}), 2).factors(), (Factors{2, 4}));
  EXPECT_EQ(quotient_by_component(make_group({6}), 2).factors(), (Factors{3}));
  EXPECT_TRUE(quotient_by_component(make_group({4}), 2).is_trivial());
  EXPECT_EQ(quotient_by_component(make_group({3, 3}), 2).factors(), (Factors{3, 3}));
  EXPECT_THROW(p_component(make_group({6}), 4), std::invalid_argument);
}

TEST(Group, PGroups) {
  EXPECT_TRUE(is_p_group(make_group({2, 2}), 2));
  EXPECT_FALSE(is_p_group(make_group({6}), 2));
  EXPECT_TRUE(make_group({}).is_trivial());
  EXPECT_TRUE(is_p_group(make_group({}), 3));
}

TEST(Group, ComponentElementsAreThePElements) {
  for (std::size_t m = 1; m <= 24; ++m) {
    for (const auto& g : abelian_groups_of_order(m)) {
      for (std::size_t p : {2, 3, 5}) {
        std::set<std::size_t> expected;
        for (std::size_t x = 0; x < g.order(); ++x) {
          // element order by repeated multiplication
          std::size_t k = 1;
          for (std::size_t y = x; y != AbelianGroup::identity(); y = g.multiply(y, x)) ++k;
          std::size_t q = k;
          while (q % p == 0) q /= p;
          if (q == 1) expected.insert(x);
        }
        const auto got = p_component_elements(g, p);
        EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), expected) << g.label() << " p=" << p;
        EXPECT_EQ(got.size(), p_component(g, p).order());
      }
    }
  }
}

TEST(Group, GroupAxioms) {
  for (std::size_t m = 1; m <= 16; ++m) {
    for (const auto& g : abelian_groups_of_order(m)) {
      for (std::size_t a = 0; a < m; ++a) {
        EXPECT_EQ(g.multiply(a, AbelianGroup::identity()), a);
        EXPECT_EQ(g.element_of(g.exponents(a)), a);
        for (std::size_t b = 0; b < m; ++b) {
          EXPECT_EQ(g.multiply(a, b), g.multiply(b, a));
          for (std::size_t c = 0; c < m; c += 3) {
            EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
          }
        }
      }
    }
  }
}

TEST(Group, CountByPartitions) {
  for (std::size_t m = 1; m <= 128; ++m) {
    std::size_t expected = 1;
    for (auto [p, e] : factorize(m)) expected *= partitions(e);
    const auto groups = abelian_groups_of_order(m);
    EXPECT_EQ(groups.size(), expected) << m;
    for (const auto& g : groups) EXPECT_EQ(g.order(), m);
  }
  EXPECT_EQ(abelian_groups_of_order(4).size(), 2u);
  EXPECT_EQ(abelian_groups_of_order(4)[0].label(), "C2 x C2");
}

TEST(GroupRing, Z3C2IsZ3xZ3) {
  const auto v = group_ring(make_zmod(3), make_group({2}));
  EXPECT_EQ(v.ring.order(), 9u);
  EXPECT_EQ(v.ring.label(), "GR(Z3, C2)");
  EXPECT_TRUE(ring_isomorphic(v.ring, direct_product(make_zmod(3), make_zmod(3))).isomorphic);
}

TEST(GroupRing, TrivialGroupGivesR) {
  for (std::size_t n : {2, 4, 6, 9}) {
    const auto r = make_zmod(n);
    const auto v = group_ring(r, make_group({}));
    EXPECT_EQ(v.ring.order(), n);
    EXPECT_EQ(v.ring.add_table(), r.add_table());
    EXPECT_EQ(v.ring.mul_table(), r.mul_table());
  }
}

TEST(GroupRing, Z2C3Radicals) {
  const auto v = group_ring(make_zmod(2), make_group({3}));
  EXPECT_EQ(v.ring.order(), 8u);
  EXPECT_TRUE(nilradical(v.ring).is_zero());
  EXPECT_TRUE(jacobson_radical(v.ring).is_zero());
}

TEST(GroupRing, MultiplicationIsConvolution) {
  const std::vector<std::pair<std::size_t, Factors>> cases = {
      {2, {2}}, {2, {2, 2}}, {3, {3}}, {4, {2}}, {2, {4}}, {6, {2}}, {2, {6}}, {3, {2, 2}}};
  for (const auto& [n, orders] : cases) {
    const auto r = make_zmod(n);
    const auto g = make_group(orders);
    const auto v = group_ring(r, g);
    const auto gt = group_table(g);
    EXPECT_TRUE(validate_ring_axioms(v.ring.tables()).ok()) << v.ring.label();
    for (std::size_t a = 0; a < v.ring.order(); ++a) {
      const auto ca = v.coefficients(static_cast<Index>(a));
      EXPECT_EQ(v.from_coefficients(ca), a);
      for (std::size_t b = 0; b < v.ring.order(); b += 5) {
        const auto cb = v.coefficients(static_cast<Index>(b));
        const auto want = oracle::convolve(r, gt, ca, cb);
        EXPECT_EQ(v.coefficients(v.ring.mul(static_cast<Index>(a), static_cast<Index>(b))), want);
      }
    }
  }
}

TEST(GroupRing, EmbeddingKeepsIndices) {
  const auto v = group_ring(make_zmod(5), make_group({3}));
  for (Index x = 0; x < 5; ++x) EXPECT_EQ(v.monomial(x, 0), x);
  EXPECT_EQ(v.monomial(1, 1), 5);
  EXPECT_EQ(v.monomial(2, 2), 50);
}

TEST(GroupRing, CapExceeded) {
  Limits limits;
  limits.order_cap = 100;
  EXPECT_THROW(group_ring(make_zmod(3), make_group({5}), limits), CapExceeded);
}

TEST(Augmentation, Examples) {
  const auto v = group_ring(make_zmod(3), make_group({2}));
  const auto aug = augmentation(v);
  EXPECT_TRUE(check_ring_hom(v.ring, v.base, aug).ok);
  EXPECT_TRUE(is_surjective(aug, 3));
  for (std::size_t g = 0; g < 2; ++g) EXPECT_EQ(aug(v.group_element(g)), 1);
  const Index one_plus_g = v.ring.add(v.group_element(0), v.group_element(1));
  EXPECT_EQ(aug(one_plus_g), 2);

  const auto w = group_ring(make_zmod(3), make_group({3}));
  EXPECT_EQ(hom_kernel(w.base, augmentation(w)).size(), 9u);
}

TEST(Augmentation, KernelIsAugmentationIdeal) {
  for (std::size_t n : {2, 3, 4, 5}) {
    for (const Factors& orders : {Factors{2}, Factors{3}, Factors{2, 2}, Factors{4}}) {
      Limits limits;
      limits.order_cap = 1024;
      const auto g = make_group(orders);
      if (std::pow(double(n), double(g.order())) > 1024) continue;
      const auto v = group_ring(make_zmod(n), g, limits);
      const auto aug = augmentation(v);
      EXPECT_EQ(IdealSet(hom_kernel(v.base, aug)), augmentation_ideal(v)) << v.ring.label();
      EXPECT_EQ(augmentation_ideal(v).size() * n, v.ring.order());
    }
  }
}

TEST(Karpilovsky, Examples) {
  const auto z2c3 = group_ring(make_zmod(2), make_group({3}));
  EXPECT_TRUE(karpilovsky_radical(z2c3).is_zero());

  const auto z3c3 = group_ring(make_zmod(3), make_group({3}));
  const auto k3 = karpilovsky_radical(z3c3);
  EXPECT_EQ(k3.size(), 9u);
  EXPECT_EQ(k3, augmentation_ideal(z3c3));
  EXPECT_EQ(k3, jacobson_radical(z3c3.ring));

  const auto z4c2 = group_ring(make_zmod(4), make_group({2}));
  const Index g_minus_1 = z4c2.ring.sub(z4c2.group_element(1), z4c2.group_element(0));
  const std::vector<Index> gens{2, g_minus_1};
  const auto k4 = karpilovsky_radical(z4c2);
  EXPECT_EQ(k4.size(), 8u);
  EXPECT_EQ(k4, ideal_generated(z4c2.ring, gens));
  EXPECT_EQ(k4, jacobson_radical(z4c2.ring));
}

TEST(Karpilovsky, MatchesUnitOracleOnSmallGroupRings) {
  for (std::size_t n : {2, 3, 4, 6, 8, 9}) {
    for (const Factors& orders : {Factors{}, Factors{2}, Factors{3}, Factors{2, 2}, Factors{4}}) {
      const auto g = make_group(orders);
      if (std::pow(double(n), double(g.order())) > 81) continue;
      const auto v = group_ring(make_zmod(n), g);
      const auto k = karpilovsky_radical(v);
      const auto m = k.members();
      EXPECT_EQ(std::set<Index>(m.begin(), m.end()), oracle::jacobson(v.ring)) << v.ring.label();
    }
  }
}
