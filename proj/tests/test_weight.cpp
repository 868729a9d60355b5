#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace bqarrow;

TEST(Weight, PaperTensorsVerify) {
  const Biquandle x = fixture::x2();
  for (const char* name : {"w8", "w1", "w2", "zero"}) EXPECT_TRUE(verify_weight(x, fixture::weight(name)).ok()) << name;
  EXPECT_TRUE(verify_weight(fixture::tricolor(), fixture::weight("tricolor")).ok());
}

TEST(Weight, ZeroTensorAlwaysVerifies) {
  for (const auto& b : fixture::sample_biquandles(4))
    for (Residue m : {1, 2, 5, 12}) EXPECT_TRUE(verify_weight(b, ArrowWeight::zero(b.size(), m)).ok());
}

TEST(Weight, EveryInstanceIsCounted) {
  for (const auto& b : fixture::sample_biquandles(4)) {
    const std::size_t n = b.size();
    EXPECT_EQ(verify_weight(b, ArrowWeight::zero(n, 2)).instances, n * n * n * n + n * n + 2 * n * n * n);
  }
}

TEST(Weight, BrokenSymmetryIsReported) {
  ArrowWeight w = fixture::weight("w8");
  w.set(0, 0, 0, 1, 3);
  const WeightCheck c = verify_weight(fixture::x2(), w);
  ASSERT_FALSE(c.ok());
  EXPECT_EQ(c.violation->axiom, WeightAxiom::I);
  EXPECT_EQ(c.violation->describe(), "axiom (i) fails at (1,1,1,2)");
}

TEST(Weight, NonzeroDiagonalIsReported) {
  ArrowWeight w = ArrowWeight::zero(2, 4);
  w.set(1, 0, 1, 0, 2);
  EXPECT_EQ(verify_weight(fixture::x2(), w).violation->axiom, WeightAxiom::II);
}

TEST(Weight, Lookup) {
  const ArrowWeight w = fixture::weight("w8");
  EXPECT_EQ(w.lookup({0, 1}, {0, 0}), 2);
  EXPECT_EQ(w.lookup({0, 0}, {1, 1}), 4);
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y) EXPECT_EQ(w.lookup({x, y}, {x, y}), 0);
  EXPECT_THROW(w.lookup({0, 2}, {0, 0}), IndexError);
}

TEST(Weight, Errors) {
  EXPECT_THROW(ArrowWeight(2, 0), ModulusError);
  EXPECT_THROW(ArrowWeight(2, 8, std::vector<Residue>(15)), DimensionError);
  EXPECT_THROW(verify_weight(fixture::tricolor(), fixture::weight("w8")), DimensionError);
  EXPECT_THROW(solve_weight_space(fixture::x2(), 1), ModulusError);
}

TEST(Weight, EntriesAreReduced) {
  const ArrowWeight w(1, 5, {-3});
  EXPECT_EQ(w(0, 0, 0, 0), 2);
}

TEST(Weight, JsonRoundTrip) {
  for (const char* name : {"w8", "w1", "w2", "tricolor"}) {
    const ArrowWeight w = fixture::weight(name);
    EXPECT_EQ(weight_from_json(weight_to_json(w)), w);
  }
  EXPECT_THROW(weight_from_json(Json::parse(R"({"m": 2, "tensor": [[[[0,0],[0,0]],[[0,0],[0,0]]],[[[0,0],[0,0]]]]})")),
               FormatError);
}

TEST(WeightSpace, OneElementBiquandleHasOnlyZero) {
  const WeightSpace ws = solve_weight_space(Biquandle::trivial(1), 2);
  EXPECT_EQ(ws.count(), 1u);
  const auto all = enumerate_weights(ws, 10);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], ArrowWeight::zero(1, 2));
}

TEST(WeightSpace, PaperTensorsAreMembers) {
  const Biquandle x = fixture::x2();
  EXPECT_TRUE(solve_weight_space(x, 8).contains(fixture::weight("w8")));
  EXPECT_TRUE(solve_weight_space(x, 4).contains(fixture::weight("w1")));
  EXPECT_TRUE(solve_weight_space(x, 4).contains(fixture::weight("w2")));
  EXPECT_TRUE(solve_weight_space(fixture::tricolor(), 3).contains(fixture::weight("tricolor")));
  ArrowWeight bad = fixture::weight("w8");
  bad.set(0, 0, 0, 1, 3);
  EXPECT_FALSE(solve_weight_space(x, 8).contains(bad));
}

TEST(WeightSpace, CoordinatesReproduceTheWeight) {
  const WeightSpace ws = solve_weight_space(fixture::x2(), 8);
  const ArrowWeight w = fixture::weight("w8");
  EXPECT_EQ(ws.combine(*ws.coordinates(w)), w);
}

// Exhaustive filter over all 2^16 tensors of a 2-element biquandle.
TEST(WeightSpace, MatchesBruteForceModTwo) {
  for (const Biquandle& b : {fixture::x2(), Biquandle::trivial(2)}) {
    const auto brute = fixture::brute_force_weights(b, 2);
    const auto solved = enumerate_weights(solve_weight_space(b, 2), 1u << 16);
    EXPECT_EQ(std::set<ArrowWeight>(solved.begin(), solved.end()), std::set<ArrowWeight>(brute.begin(), brute.end()));
    EXPECT_EQ(solved.size(), brute.size());
  }
}

TEST(WeightSpace, MatchesBruteForceModThreeOnOnePoint) {
  const Biquandle b = Biquandle::trivial(1);
  EXPECT_EQ(enumerate_weights(solve_weight_space(b, 3), 10).size(), fixture::brute_force_weights(b, 3).size());
}

TEST(WeightSpace, ClosedUnderLinearCombinations) {
  std::mt19937_64 rng(41);
  std::vector<std::pair<Biquandle, Residue>> cases{{fixture::x2(), 8}, {fixture::x2(), 4}, {fixture::x2(), 6},
                                                   {fixture::tricolor(), 3}, {fixture::tricolor(), 9}};
  for (const auto& b : fixture::sample_biquandles(4))
    if (b.size() == 4) cases.push_back({b, 4});
  for (const auto& [b, m] : cases) {
    const WeightSpace ws = solve_weight_space(b, m);
    for (const ArrowWeight& g : ws.generators()) ASSERT_TRUE(verify_weight(b, g).ok());
    auto random_member = [&] {
      std::vector<Residue> c;
      for (Residue o : ws.orders()) c.push_back(static_cast<Residue>(rng() % o));
      return ws.combine(c);
    };
    for (int k = 0; k < 50; ++k) {
      const ArrowWeight a = random_member(), w = random_member();
      const ArrowWeight sum = a.plus_scaled(w, static_cast<Residue>(rng() % m));
      ASSERT_TRUE(verify_weight(b, sum).ok());
      ASSERT_TRUE(ws.contains(sum));
    }
  }
}

TEST(WeightSpace, EnumerationLimits) {
  const WeightSpace ws = solve_weight_space(fixture::x2(), 8);
  ASSERT_GT(ws.count(), 5u);
  EXPECT_THROW(enumerate_weights(ws, 5), TooMany);
  const auto first = enumerate_weights(ws, 5, true);
  EXPECT_EQ(first.size(), 5u);
  EXPECT_EQ(first[0], ArrowWeight::zero(2, 8));
  EXPECT_EQ(std::set<ArrowWeight>(first.begin(), first.end()).size(), 5u);
}

TEST(WeightSpace, CountIsProductOfOrders) {
  for (Residue m : {2, 4, 8, 12}) {
    const WeightSpace ws = solve_weight_space(fixture::x2(), m);
    std::uint64_t p = 1;
    for (Residue o : ws.orders()) {
      EXPECT_EQ(m % o, 0);
      p *= o;
    }
    EXPECT_EQ(ws.count(), p);
    const auto all = enumerate_weights(ws, 1u << 20);
    EXPECT_EQ(std::set<ArrowWeight>(all.begin(), all.end()).size(), p);
  }
}
