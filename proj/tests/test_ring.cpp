#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "comax/ring.hpp"
#include "comax/spec_parser.hpp"
#include "oracles.hpp"

using namespace comax;

namespace {

Ring ring(const char* text) { return make_ring(parse_ring_spec(text)); }

std::vector<std::size_t> indices(const std::vector<Element>& elems) {
  std::vector<std::size_t> out;
  for (Element e : elems) out.push_back(index_of(e));
  return out;
}

std::vector<std::size_t> indices(const Ideal& i) { return indices(i.members); }

std::set<std::vector<std::size_t>> ideal_sets(const std::vector<Ideal>& ideals) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& i : ideals) out.insert(indices(i));
  return out;
}

// Rings small enough for subset enumeration of ideals.
const std::vector<const char*> kSmallRings{"Z2",    "Z3",      "Z4",      "Z5",    "Z6",      "Z8",
                                            "Z9",    "Z10",     "Z12",     "Z16",   "GF(4)",   "GF(8)",
                                            "GF(9)", "Z2xZ2",   "Z2xZ3",   "Z2xZ4", "Z2xZ2xZ2", "Z4xZ4",
                                            "Z2xGF(4)", "Z3xZ3", "Z2xZ2xZ3", "GF(16)", "Z2xZ8", "Z15"};

// Moderate rings for the O(n^2) and O(n^3) checks.
const std::vector<const char*> kMediumRings{"Z30",      "Z36",      "Z60",        "Z2xZ2xZ2xZ2", "Z4xGF(4)",
                                             "Z9xZ4",    "GF(8)xZ3", "Z2xZ3xGF(4)", "Z27",         "Z3xZ9",
                                             "Z2xZ2xZ9", "Z64",      "GF(25)",     "Z6xZ10"};

}  // namespace

TEST(RingConstruction, SizesAndMaximalIdealCounts) {
  EXPECT_EQ(ring("Z12").size(), 12u);
  EXPECT_EQ(ring("Z12").maximal_ideals().size(), 2u);
  EXPECT_EQ(ring("GF(2)xGF(2)xGF(2)").size(), 8u);
  EXPECT_EQ(ring("GF(2)xGF(2)xGF(2)").maximal_ideals().size(), 3u);
  const Ring z2 = ring("Z2");
  ASSERT_EQ(z2.maximal_ideals().size(), 1u);
  EXPECT_EQ(indices(z2.maximal_ideals()[0]), (std::vector<std::size_t>{0}));
}

TEST(RingConstruction, RejectsInvalidFactors) {
  EXPECT_THROW(make_ring(RingSpec{{Zn{1}}}), RingError);
  EXPECT_THROW(make_ring(RingSpec{{GF{4, 1}}}), RingError);
  EXPECT_THROW(make_ring(RingSpec{{GF{6, 1}}}), RingError);
  EXPECT_THROW(make_ring(RingSpec{{}}), RingError);
  EXPECT_THROW(make_ring(RingSpec{{Zn{5000}}}), GuardExceeded);
  EXPECT_THROW(make_ring(RingSpec{{GF{2, 13}}}), GuardExceeded);
  EXPECT_THROW(make_ring(RingSpec{{Zn{64}, Zn{64}, Zn{2}}}), GuardExceeded);
  RingLimits tiny;
  tiny.max_size = 10;
  EXPECT_THROW(make_ring(RingSpec{{Zn{12}}}, tiny), GuardExceeded);
  EXPECT_NO_THROW(make_ring(RingSpec{{Zn{10}}}, tiny));
}

TEST(RingConstruction, DeterministicEncodingAndOrder) {
  const Ring a = ring("Z6xGF(4)");
  const Ring b = ring("Z6 x GF(4)");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    EXPECT_EQ(a.element_name(element(x)), b.element_name(element(x)));
    for (std::size_t y = 0; y < a.size(); ++y) {
      EXPECT_EQ(a.add(element(x), element(y)), b.add(element(x), element(y)));
      EXPECT_EQ(a.mul(element(x), element(y)), b.mul(element(x), element(y)));
    }
  }
  ASSERT_EQ(a.maximal_ideals().size(), b.maximal_ideals().size());
  for (std::size_t i = 0; i < a.maximal_ideals().size(); ++i) EXPECT_EQ(a.maximal_ideals()[i], b.maximal_ideals()[i]);
  for (std::size_t i = 1; i < a.maximal_ideals().size(); ++i)
    EXPECT_TRUE(lexicographic_less(a.maximal_ideals()[i - 1], a.maximal_ideals()[i]));
}

TEST(RingArithmetic, ModularExamples) {
  const Ring z12 = ring("Z12");
  EXPECT_EQ(z12.arith(element(7), element(8), ArithOp::add), element(3));
  EXPECT_EQ(z12.arith(element(4), element(9), ArithOp::mul), element(0));
  EXPECT_EQ(z12.arith(element(5), element(0), ArithOp::neg), element(7));
  EXPECT_EQ(z12.arith(element(2), element(5), ArithOp::sub), element(9));
  EXPECT_THROW(z12.arith(element(12), element(0), ArithOp::add), RingError);
  EXPECT_THROW(z12.arith(element(0), element(40), ArithOp::mul), RingError);
}

TEST(RingArithmetic, ZnMatchesDirectModularArithmetic) {
  for (std::uint32_t n : {2u, 7u, 12u, 30u, 97u, 200u}) {
    const Ring r = make_ring(RingSpec{{Zn{n}}});
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        ASSERT_EQ(index_of(r.add(element(a), element(b))), (a + b) % n);
        ASSERT_EQ(index_of(r.mul(element(a), element(b))), (a * b) % n);
      }
  }
}

TEST(RingArithmetic, ProductIsComponentwise) {
  const Ring r = ring("Z4xZ6");
  for (std::uint32_t a0 = 0; a0 < 4; ++a0)
    for (std::uint32_t a1 = 0; a1 < 6; ++a1)
      for (std::uint32_t b0 = 0; b0 < 4; ++b0)
        for (std::uint32_t b1 = 0; b1 < 6; ++b1) {
          const std::uint32_t a[] = {a0, a1}, b[] = {b0, b1};
          const Element x = r.encode(a), y = r.encode(b);
          EXPECT_EQ(index_of(x), a0 * 6 + a1);  // first factor most significant
          EXPECT_EQ(r.decode(r.add(x, y)), (std::vector<std::uint32_t>{(a0 + b0) % 4, (a1 + b1) % 6}));
          EXPECT_EQ(r.decode(r.mul(x, y)), (std::vector<std::uint32_t>{(a0 * b0) % 4, (a1 * b1) % 6}));
        }
}

TEST(RingArithmetic, GF4ModulusForcesSquare) {
  const Ring gf4 = ring("GF(4)");
  ASSERT_EQ(gf4.factors().size(), 1u);
  EXPECT_EQ(gf4.factors()[0].modulus, (std::vector<std::uint32_t>{1, 1, 1}));  // x^2 + x + 1
  const Element x = element(2), x_plus_1 = element(3);
  EXPECT_EQ(gf4.mul(x, x), x_plus_1);
  EXPECT_EQ(gf4.element_name(x_plus_1), "a+1");
}

TEST(RingArithmetic, LeastIrreducibleHasNoFactors) {
  // A degree-k polynomial over Z_p is irreducible iff no monic polynomial of
  // degree 1..k/2 divides it; divisibility tested by brute-force long division.
  auto divides = [](std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& den, std::uint32_t p) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t d = num.size() - 1; d >= dd && d < num.size(); --d) {
      const std::uint32_t c = num[d];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) num[d - dd + i] = (num[d - dd + i] + (p - den[i]) * c) % p;
    }
    return std::all_of(num.begin(), num.end(), [](std::uint32_t c) { return c == 0; });
  };
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {2, 6}, {3, 3}}) {
    const auto m = least_irreducible(p, k);
    ASSERT_EQ(m.size(), k + 1u);
    EXPECT_EQ(m.back(), 1u);
    for (std::uint32_t deg = 1; deg <= k / 2; ++deg) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> den(deg + 1, 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < deg; ++i, c /= p) den[i] = static_cast<std::uint32_t>(c % p);
        EXPECT_FALSE(divides(m, den, p)) << "p=" << p << " k=" << k;
      }
    }
  }
}

TEST(RingArithmetic, FieldAxiomsHold) {
  for (const char* text : {"GF(4)", "GF(8)", "GF(9)", "GF(16)", "GF(25)", "GF(27)", "GF(7)"}) {
    const Ring f = ring(text);
    const std::size_t q = f.size();
    for (std::size_t a = 0; a < q; ++a) {
      bool has_inverse = a == 0;
      for (std::size_t b = 0; b < q; ++b) {
        const Element x = element(a), y = element(b);
        ASSERT_EQ(f.mul(x, y), f.mul(y, x));
        ASSERT_EQ(f.add(x, f.neg(x)), f.zero());
        if (f.mul(x, y) == f.one()) has_inverse = true;
        for (std::size_t c = 0; c < q; c += 3) {
          const Element z = element(c);
          ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
          ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        }
      }
      EXPECT_TRUE(has_inverse) << text << " element " << a;
    }
    EXPECT_EQ(f.units().size(), q - 1);
    EXPECT_EQ(f.ideals().size(), 2u);
  }
}

TEST(RingUnits, Examples) {
  EXPECT_EQ(indices(ring("Z12").units()), (std::vector<std::size_t>{1, 5, 7, 11}));
  EXPECT_EQ(indices(ring("Z2xZ2xZ2").units()), (std::vector<std::size_t>{7}));
  EXPECT_EQ(indices(ring("GF(5)").units()), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(RingUnits, MatchExhaustiveInverseSearch) {
  for (auto list : {&kSmallRings, &kMediumRings})
    for (const char* text : *list) {
      const Ring r = ring(text);
      EXPECT_EQ(indices(r.units()), oracle::units_by_search(r)) << text;
    }
}

TEST(RingUnits, AreExactlyEmptySignatures) {
  for (const char* text : kMediumRings) {
    const Ring r = ring(text);
    for (std::size_t x = 0; x < r.size(); ++x) EXPECT_EQ(r.is_unit(element(x)), r.signature(element(x)).empty()) << text;
  }
}

TEST(RingIdeals, PrincipalIdealExamples) {
  const Ring z12 = ring("Z12");
  EXPECT_EQ(indices(principal_ideal(z12, element(3))), (std::vector<std::size_t>{0, 3, 6, 9}));
  EXPECT_EQ(indices(principal_ideal(z12, element(3)).generators), (std::vector<std::size_t>{3}));
  for (const char* text : {"Z12", "Z2xGF(4)", "GF(9)"}) {
    const Ring r = ring(text);
    EXPECT_EQ(principal_ideal(r, r.zero()), zero_ideal(r));
    EXPECT_EQ(zero_ideal(r).size(), 1u);
    for (Element u : r.units()) EXPECT_EQ(principal_ideal(r, u), whole_ring(r));
  }
}

TEST(RingIdeals, SumExamples) {
  const Ring z12 = ring("Z12");
  const Ideal r2 = principal_ideal(z12, element(2)), r3 = principal_ideal(z12, element(3)),
              r4 = principal_ideal(z12, element(4));
  EXPECT_EQ(ideal_sum(z12, r2, r3), whole_ring(z12));
  EXPECT_TRUE(ideal_sum(z12, r2, r3).contains(z12.one()));
  EXPECT_EQ(indices(ideal_sum(z12, r2, r4)), (std::vector<std::size_t>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(indices(ideal_sum(z12, r2, r4).generators), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(ideal_sum(z12, r3, zero_ideal(z12)), r3);
  EXPECT_TRUE(sum_contains_one(z12, r2, r3));
  EXPECT_FALSE(sum_contains_one(z12, r2, r4));
}

TEST(RingIdeals, SumMatchesPairwiseEnumeration) {
  const Ring r = ring("Z2xZ4xZ3");
  for (const Ideal& a : r.ideals())
    for (const Ideal& b : r.ideals()) {
      std::set<std::size_t> sums;
      for (Element x : a.members)
        for (Element y : b.members) sums.insert(index_of(r.add(x, y)));
      EXPECT_EQ(indices(ideal_sum(r, a, b)), std::vector<std::size_t>(sums.begin(), sums.end()));
    }
}

TEST(RingIdeals, LatticeExamples) {
  const Ring z12 = ring("Z12");
  const std::set<std::vector<std::size_t>> expected{
      {0}, {0, 6}, {0, 4, 8}, {0, 3, 6, 9}, {0, 2, 4, 6, 8, 10}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  EXPECT_EQ(z12.ideals().size(), 6u);
  EXPECT_EQ(ideal_sets(z12.ideals()), expected);
  EXPECT_EQ(ring("GF(5)").ideals().size(), 2u);
  EXPECT_EQ(ring("Z2xZ2").ideals().size(), 4u);
}

TEST(RingIdeals, LatticeOfZnMatchesDivisors) {
  for (std::uint32_t n = 2; n <= 120; ++n) {
    const Ring r = make_ring(RingSpec{{Zn{n}}});
    std::set<std::vector<std::size_t>> expected;
    for (std::uint32_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      std::vector<std::size_t> members;
      for (std::uint32_t m = 0; m < n; m += d) members.push_back(m);
      expected.insert(members);
    }
    EXPECT_EQ(ideal_sets(r.ideals()), expected) << n;
  }
}

TEST(RingIdeals, LatticeMatchesSubsetEnumeration) {
  for (const char* text : kSmallRings) {
    const Ring r = ring(text);
    const auto brute = oracle::all_ideals_by_subsets(r);
    EXPECT_EQ(ideal_sets(r.ideals()), std::set<std::vector<std::size_t>>(brute.begin(), brute.end())) << text;
    EXPECT_EQ(ideal_sets(compute_all_ideals(r)), ideal_sets(r.ideals())) << text;
  }
}

TEST(RingIdeals, LatticeGuard) {
  RingLimits limits;
  limits.max_ideals = 3;
  EXPECT_THROW(make_ring(parse_ring_spec("Z12"), limits), GuardExceeded);
}

TEST(RingMaximalIdeals, Examples) {
  const Ring z12 = ring("Z12");
  EXPECT_EQ(ideal_sets(z12.maximal_ideals()),
            (std::set<std::vector<std::size_t>>{{0, 2, 4, 6, 8, 10}, {0, 3, 6, 9}}));
  const Ring z2cubed = ring("Z2xZ2xZ2");
  ASSERT_EQ(z2cubed.maximal_ideals().size(), 3u);
  for (const Ideal& m : z2cubed.maximal_ideals()) EXPECT_EQ(m.size(), 4u);
  const Ring z4 = ring("Z4");
  EXPECT_TRUE(z4.is_local());
  EXPECT_EQ(indices(z4.maximal_ideals()[0]), (std::vector<std::size_t>{0, 2}));
}

TEST(RingMaximalIdeals, MatchBruteForceAndStructural) {
  for (const char* text : kSmallRings) {
    const Ring r = ring(text);
    // Maximal among proper subset-enumerated ideals.
    const auto brute = oracle::all_ideals_by_subsets(r);
    std::set<std::vector<std::size_t>> maximal;
    for (const auto& a : brute) {
      if (a.size() == r.size()) continue;
      bool is_max = true;
      for (const auto& b : brute)
        if (b.size() > a.size() && b.size() < r.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
          is_max = false;
      if (is_max) maximal.insert(a);
    }
    EXPECT_EQ(ideal_sets(r.maximal_ideals()), maximal) << text;
    EXPECT_EQ(ideal_sets(structural_maximal_ideals(r)), maximal) << text;
  }
  for (const char* text : kMediumRings) {
    const Ring r = ring(text);
    EXPECT_EQ(ideal_sets(structural_maximal_ideals(r)), ideal_sets(r.maximal_ideals())) << text;
  }
}

TEST(RingRadical, Examples) {
  EXPECT_EQ(indices(ring("Z12").radical()), (std::vector<std::size_t>{0, 6}));
  EXPECT_EQ(indices(ring("Z2xZ2xZ2").radical()), (std::vector<std::size_t>{0}));
  EXPECT_EQ(indices(ring("Z4").radical()), (std::vector<std::size_t>{0, 2}));
}

TEST(RingRadical, BothDefinitionsAgree) {
  for (auto list : {&kSmallRings, &kMediumRings})
    for (const char* text : *list) {
      const Ring r = ring(text);
      EXPECT_EQ(indices(r.radical()), oracle::radical_by_units(r)) << text;
      if (r.size() <= 16) {
        // Intersection of brute-force maximal ideals.
        const auto brute = oracle::all_ideals_by_subsets(r);
        std::vector<std::size_t> meet;
        for (std::size_t x = 0; x < r.size(); ++x) meet.push_back(x);
        for (const auto& a : brute) {
          if (a.size() == r.size()) continue;
          bool is_max = true;
          for (const auto& b : brute)
            if (b.size() > a.size() && b.size() < r.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
              is_max = false;
          if (!is_max) continue;
          std::vector<std::size_t> next;
          std::set_intersection(meet.begin(), meet.end(), a.begin(), a.end(), std::back_inserter(next));
          meet = next;
        }
        EXPECT_EQ(indices(r.radical()), meet) << text;
      }
    }
}

TEST(RingSignature, Examples) {
  const Ring z12 = ring("Z12");
  const auto& max = z12.maximal_ideals();
  const SSignature s2 = z12.signature(element(2));
  EXPECT_EQ(s2.count(), 1u);
  for (std::size_t i = 0; i < max.size(); ++i) EXPECT_EQ(s2.test(i), max[i].contains(element(2)));
  EXPECT_TRUE(s_signature(z12, z12.one()).empty());
  for (const char* text : {"Z12", "Z2xZ4xZ9", "Z8"}) {
    const Ring r = ring(text);
    for (Element j : r.radical().members) EXPECT_TRUE(r.signature(j).full()) << text;
  }
}

TEST(RingComaximal, Examples) {
  const Ring z12 = ring("Z12");
  EXPECT_TRUE(is_comaximal(z12, element(3), element(4)));
  EXPECT_FALSE(is_comaximal(z12, element(2), element(6)));
  for (std::size_t x = 0; x < 12; ++x) EXPECT_TRUE(is_comaximal(z12, element(x), z12.one()));
}

TEST(RingComaximal, MatchesBruteForceSums) {
  for (const char* text : {"Z12", "Z30", "Z2xZ2xZ2", "Z2xGF(4)", "Z4xZ3", "Z2xZ2xZ3", "Z9xZ2"}) {
    const Ring r = ring(text);
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y) {
        const bool brute = oracle::comaximal_by_search(r, element(x), element(y));
        ASSERT_EQ(is_comaximal(r, element(x), element(y)), brute) << text << " " << x << "," << y;
        ASSERT_EQ(r.signature(element(x)).disjoint(r.signature(element(y))), brute);
      }
  }
}

TEST(RingQuotient, Z12ModRadicalIsZ6) {
  const Ring z12 = ring("Z12");
  const Ring q = quotient_ring(z12, z12.radical());
  ASSERT_EQ(q.size(), 6u);
  // Cosets are indexed by least member, so coset i holds i and i+6; compare
  // the tables with Z6 directly.
  for (std::uint32_t a = 0; a < 6; ++a) {
    EXPECT_EQ(index_of(q.representative(element(a))), a);
    for (std::uint32_t b = 0; b < 6; ++b) {
      EXPECT_EQ(index_of(q.add(element(a), element(b))), (a + b) % 6);
      EXPECT_EQ(index_of(q.mul(element(a), element(b))), (a * b) % 6);
    }
  }
  for (std::uint32_t x = 0; x < 12; ++x) EXPECT_EQ(index_of(q.coset_of(element(x))), x % 6);
  EXPECT_EQ(q.parent()->size(), 12u);
}

TEST(RingQuotient, ByZeroIsIdentityAndZ4ModJIsField) {
  const Ring r = ring("Z2xZ4");
  const Ring same = quotient_ring(r, zero_ideal(r));
  ASSERT_EQ(same.size(), r.size());
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) {
      EXPECT_EQ(same.add(element(a), element(b)), r.add(element(a), element(b)));
      EXPECT_EQ(same.mul(element(a), element(b)), r.mul(element(a), element(b)));
    }
  const Ring z4 = ring("Z4");
  const Ring f = quotient_ring(z4, z4.radical());
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.units().size(), 1u);
  EXPECT_EQ(f.ideals().size(), 2u);
}

TEST(RingQuotient, Preconditions) {
  const Ring z12 = ring("Z12");
  EXPECT_THROW(quotient_ring(z12, principal_ideal(z12, element(2))), RingError);
  EXPECT_THROW(quotient_ring(z12, whole_ring(z12)), RingError);
}

TEST(RingQuotient, ModRadicalIsReduced) {
  for (auto list : {&kSmallRings, &kMediumRings})
    for (const char* text : *list) {
      const Ring r = ring(text);
      const Ring q = quotient_ring(r, r.radical());
      EXPECT_EQ(q.size() * r.radical().size(), r.size()) << text;
      EXPECT_EQ(q.radical().size(), 1u) << text;
      EXPECT_EQ(q.maximal_ideals().size(), r.maximal_ideals().size()) << text;
      for (const LocalFactor& f : local_factors(q)) EXPECT_TRUE(f.is_field()) << text;
    }
}

TEST(RingStableRange, HoldsOnExamples) {
  for (const char* text : {"Z12", "Z2xZ2xZ2", "GF(7)", "GF(8)", "Z36", "Z2xZ4xZ9"}) {
    const StableRange s = stable_range_one(ring(text));
    EXPECT_TRUE(s.holds) << text;
    EXPECT_FALSE(s.violation.has_value());
  }
}

TEST(RingStableRange, WitnessSearchAgreesWithBruteForce) {
  for (const char* text : {"Z12", "Z2xZ3xZ2", "Z4xGF(4)"}) {
    const Ring r = ring(text);
    const auto units = oracle::units_by_search(r);
    const std::set<std::size_t> unit_set(units.begin(), units.end());
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y) {
        if (!oracle::comaximal_by_search(r, element(x), element(y))) continue;
        bool found = false;
        for (std::size_t t = 0; t < r.size() && !found; ++t)
          found = unit_set.count(index_of(r.add(element(x), r.mul(element(t), element(y))))) > 0;
        EXPECT_TRUE(found) << text;
      }
    EXPECT_TRUE(stable_range_one(r).holds);
  }
}

TEST(RingForms, LocalFactorizationMatchesSpec) {
  for (auto list : {&kSmallRings, &kMediumRings})
    for (const char* text : *list) {
      const Ring r = ring(text);
      std::vector<std::pair<std::size_t, std::size_t>> found;
      for (const LocalFactor& f : local_factors(r)) found.emplace_back(f.size, f.radical_size);
      std::sort(found.begin(), found.end());
      EXPECT_EQ(found, spec_local_factor_sizes(*r.spec())) << text;
    }
}

TEST(RingForms, Classification) {
  EXPECT_TRUE(classify(ring("Z4")).local);
  EXPECT_TRUE(classify(ring("GF(9)")).field);
  EXPECT_TRUE(classify(ring("Z6")).field_times_field);
  EXPECT_TRUE(classify(ring("Z6")).z2_times_field);
  EXPECT_TRUE(classify(ring("Z2xZ2")).z2_times_z2);
  EXPECT_TRUE(classify(ring("Z2xZ2xZ2")).z2_cubed);
  EXPECT_FALSE(classify(ring("Z2xZ2xZ3")).z2_cubed);
  EXPECT_TRUE(classify(ring("Z12")).field_times_local);
  EXPECT_TRUE(classify(ring("Z4xZ9")).local_times_local);
  EXPECT_FALSE(classify(ring("Z4xZ9")).field_times_local);
  EXPECT_FALSE(classify(ring("Z30")).field_times_field);
  EXPECT_EQ(classify(ring("Z30")).max_ideals, 3u);
  EXPECT_TRUE(classify(ring("Z8")).radical_prime);
  EXPECT_FALSE(classify(ring("Z6")).radical_prime);
  EXPECT_TRUE(radical_primality_witness(ring("Z6")).has_value());
  EXPECT_FALSE(radical_primality_witness(ring("Z9")).has_value());
}

TEST(RingText, CanonicalNamesRoundTrip) {
  for (const char* text : {"Z12", "GF(4)", "Z2 x GF(8) x Z9", "GF(7)"}) {
    const RingSpec s = parse_ring_spec(text);
    EXPECT_EQ(parse_ring_spec(to_string(s)), s);
  }
  EXPECT_EQ(to_string(parse_ring_spec("Z2xGF(4)")), "Z2 x GF(4)");
}

TEST(NumberTheory, PrimesAndPowers) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 500; ++n) {
    bool p = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && p; ++d) p = n % d != 0;
    EXPECT_EQ(is_prime(n), p) << n;
  }
  EXPECT_EQ(prime_power(8), (std::optional<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}}));
  EXPECT_EQ(prime_power(7), (std::optional<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}}));
  EXPECT_FALSE(prime_power(12).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {5, 1}}));
}
