#include "generators.hpp"
#include "oracles.hpp"

#include "slspec/errors.hpp"
#include "slspec/ring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace slspec;

namespace {

// Element mask of an ideal, in oracle ring order.
oracle::Mask mask_of(const oracle::RawModule& raw, const Ideal& ideal) {
  oracle::Mask out(raw.ring_elements().size());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = ideal.contains(RingElement(raw.ring_elements()[r]));
  return out;
}

oracle::RawModule ring_only(const FiniteRing& ring) {
  return oracle::RawModule(ring.moduli(), {std::vector<Int>(ring.arity(), 0)});
}

}  // namespace

TEST(Ring, RejectsTrivialModuli) {
  EXPECT_THROW(FiniteRing({1}), SpecError);
  EXPECT_THROW(FiniteRing({6, 0}), SpecError);
  EXPECT_THROW(FiniteRing(std::vector<Int>{}), SpecError);
}

TEST(Ring, ElementIndexRoundTrip) {
  const FiniteRing r({6, 4});
  ASSERT_EQ(r.order(), 24u);
  for (std::size_t i = 0; i < r.order(); ++i) EXPECT_EQ(r.index_of(r.element(i)), i);
  EXPECT_EQ(r.text(), "Z6xZ4");
}

TEST(Ring, IdealGeneratorsAreCanonical) {
  const FiniteRing r({12});
  EXPECT_EQ(Ideal(r, {8}), Ideal(r, {4}));
  EXPECT_EQ(Ideal(r, {12}).text(), "(0)");
  EXPECT_TRUE(Ideal(r, {12}).is_zero());
  EXPECT_TRUE(Ideal(r, {5}).is_whole());
  EXPECT_EQ(Ideal(r, {4}).cardinality(), 3u);
}

TEST(Ring, Z6Idempotents) {
  const auto e = ring_idempotents(FiniteRing({6}));
  std::vector<Int> values;
  for (const auto& x : e) values.push_back(x[0]);
  std::sort(values.begin(), values.end());
  EXPECT_EQ(values, (std::vector<Int>{0, 1, 3, 4}));
}

TEST(Ring, FieldDetection) {
  EXPECT_TRUE(FiniteRing({7}).is_field());
  EXPECT_FALSE(FiniteRing({8}).is_field());
  EXPECT_FALSE(FiniteRing({2, 3}).is_field());
}

TEST(RingProperty, IdealsMatchPrincipalIdealOracle) {
  gen::Source src(11);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteRing ring(src.moduli(24));
    const auto raw = ring_only(ring);
    std::set<oracle::Mask> lib;
    for (const auto& i : all_ideals(ring)) lib.insert(mask_of(raw, i));
    const auto expected = oracle::ring_ideals(raw);
    EXPECT_EQ(lib, std::set<oracle::Mask>(expected.begin(), expected.end())) << ring.text();
  }
}

TEST(RingProperty, RadicalAndPrimalityMatchOracle) {
  gen::Source src(12);
  for (int trial = 0; trial < 60; ++trial) {
    const FiniteRing ring(src.moduli(20));
    const auto raw = ring_only(ring);
    for (const auto& i : all_ideals(ring)) {
      const auto m = mask_of(raw, i);
      EXPECT_EQ(mask_of(raw, ideal_radical(i)), oracle::radical(raw, m)) << ring.text() << " " << i.text();
      EXPECT_EQ(is_prime_ideal(i), oracle::is_prime(raw, m)) << ring.text() << " " << i.text();
    }
  }
}

TEST(RingProperty, SpecIsEveryPrimeAndPrimesAreIncomparable) {
  gen::Source src(13);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteRing ring(src.moduli(40));
    const auto primes = ring_spec(ring);
    std::size_t expected = 0;
    for (const auto& i : all_ideals(ring)) expected += is_prime_ideal(i);
    EXPECT_EQ(primes.size(), expected);
    EXPECT_TRUE(std::is_sorted(primes.begin(), primes.end()));
    // Every prime of a finite ring is maximal.
    for (const auto& p : primes) {
      for (const auto& q : primes) {
        if (!(p == q)) EXPECT_FALSE(p.is_subset_of(q)) << p.text() << " " << q.text();
      }
    }
  }
}

TEST(RingProperty, IdealOperationsFollowElementSets) {
  gen::Source src(14);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteRing ring(src.moduli(20));
    const auto raw = ring_only(ring);
    const Ideal a = src.ideal(ring), b = src.ideal(ring);
    const auto ma = mask_of(raw, a), mb = mask_of(raw, b);
    oracle::Mask meet(ma.size()), sum(ma.size()), prod(ma.size());
    const auto& elems = raw.ring_elements();
    for (std::size_t x = 0; x < ma.size(); ++x) meet[x] = ma[x] && mb[x];
    for (std::size_t x = 0; x < ma.size(); ++x) {
      for (std::size_t y = 0; y < mb.size(); ++y) {
        if (!ma[x] || !mb[y]) continue;
        oracle::Tuple t(ring.arity());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = (elems[x][i] + elems[y][i]) % ring.moduli()[i];
        sum[raw.ring_index(t)] = true;
        // products ab generate the product ideal; principal multiples fill it out
        for (std::size_t r = 0; r < ma.size(); ++r) prod[raw.ring_mul(r, raw.ring_mul(x, y))] = true;
      }
    }
    EXPECT_EQ(mask_of(raw, ideal_intersection(a, b)), meet);
    EXPECT_EQ(mask_of(raw, ideal_sum(a, b)), sum);
    EXPECT_EQ(mask_of(raw, ideal_product(a, b)), prod);
  }
}

TEST(RingProperty, UnitsAndNilradical) {
  gen::Source src(15);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteRing ring(src.moduli(30));
    const auto un = units_and_nilradical(ring);
    std::size_t units = 0;
    for (const auto& x : ring.elements()) {
      bool invertible = false;
      for (const auto& y : ring.elements()) invertible = invertible || ring.mul(x, y) == ring.one();
      units += invertible;
      const bool listed = std::find(un.units.begin(), un.units.end(), x) != un.units.end();
      EXPECT_EQ(listed, invertible) << x.text();
      bool nilpotent = false;
      for (std::uint64_t k = 1; k <= ring.order() && !nilpotent; ++k) nilpotent = ring.pow(x, k) == ring.zero();
      EXPECT_EQ(un.nilradical.contains(x), nilpotent) << x.text();
    }
    EXPECT_EQ(un.units.size(), units);
  }
}

TEST(RingProperty, QuotientMapIsAHomomorphism) {
  gen::Source src(16);
  for (int trial = 0; trial < 150; ++trial) {
    const FiniteRing ring(src.moduli(24));
    const Ideal kernel = src.ideal(ring);
    if (kernel.is_whole()) {
      EXPECT_THROW(quotient_ring(ring, kernel), SpecError);
      continue;
    }
    const QuotientRing q = quotient_ring(ring, kernel);
    const FiniteRing& qr = q.ring();
    EXPECT_EQ(qr.order() * kernel.cardinality(), ring.order());
    for (int k = 0; k < 20; ++k) {
      const RingElement a = src.element(ring), b = src.element(ring);
      EXPECT_EQ(q.image(ring.mul(a, b)), qr.mul(q.image(a), q.image(b)));
      EXPECT_EQ(q.image(ring.add(a, b)), qr.add(q.image(a), q.image(b)));
      EXPECT_EQ(q.image(a) == qr.zero(), kernel.contains(a));
    }
    for (const auto& j : all_ideals(ring)) {
      if (!kernel.is_subset_of(j)) continue;
      EXPECT_EQ(q.preimage(q.image(j)), j);
      EXPECT_EQ(is_prime_ideal(q.image(j)), is_prime_ideal(j));
    }
  }
}

TEST(Ring, PrimeSetIntersection) {
  const FiniteRing r({30});
  const auto primes = ring_spec(r);
  ASSERT_EQ(primes.size(), 3u);
  EXPECT_TRUE(prime_set_intersection(r, primes).is_zero());
  EXPECT_TRUE(prime_set_intersection(r, std::vector<Ideal>{}).is_whole());
  EXPECT_EQ(prime_set_intersection(r, std::vector<Ideal>{primes[0], primes[1]}), Ideal(r, {6}));
}

TEST(Ring, PrimaryIdeals) {
  const FiniteRing r({12});
  EXPECT_TRUE(is_primary_ideal(Ideal(r, {4})));
  EXPECT_TRUE(is_primary_ideal(Ideal(r, {3})));
  EXPECT_FALSE(is_primary_ideal(Ideal(r, {6})));
  EXPECT_FALSE(is_primary_ideal(Ideal(r, {12})));
}
