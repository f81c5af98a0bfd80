#include "tlj/diagrams.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using tlj::PlanarPairing;
using tlj_test::pp;

namespace {

TEST(Diagrams, CatalanCounts) {
  long expect[] = {1, 1, 2, 5, 14, 42};
  for (int j = 0; j <= 5; ++j) {
    EXPECT_EQ(tlj::enumerate(j, j).size(), static_cast<size_t>(expect[j])) << j;
  }
  EXPECT_EQ(tlj::enumerate(1, 3).size(), 2u);
  EXPECT_EQ(tlj::enumerate(0, 4).size(), 2u);
  EXPECT_THROW(tlj::enumerate(2, 1), std::invalid_argument);
}

TEST(Diagrams, CanonicalOrderAndText) {
  auto all = tlj::enumerate(3, 3);
  EXPECT_EQ(all.front().to_string(), "L1-L2,L3-R3,R1-R2");
  for (size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(all[i - 1] < all[i]);
  EXPECT_EQ(PlanarPairing::identity(2).to_string(), "L1-R1,L2-R2");
  EXPECT_EQ(tlj::generators(2, 1).to_string(), "L1-L2,R1-R2");
}

TEST(Diagrams, CheckedValidation) {
  EXPECT_NO_THROW(pp(2, 2, "L1-R1,L2-R2"));
  // The strand transposition L1-R2, L2-R1 is not planar.
  std::vector<int> crossing = {2, 3, 0, 1};
  EXPECT_THROW(PlanarPairing::checked(2, 2, crossing), std::invalid_argument);
  std::vector<int> fixed_point = {0, 1};
  EXPECT_THROW(PlanarPairing::checked(1, 1, fixed_point), std::invalid_argument);
  EXPECT_THROW(PlanarPairing::checked(2, 2, {1, 0}), std::invalid_argument);
}

TEST(Diagrams, IdentityCompose) {
  PlanarPairing id3 = PlanarPairing::identity(3);
  for (const auto& d : tlj::enumerate(3, 3)) {
    auto [left, l1] = tlj::compose(id3, d);
    auto [right, l2] = tlj::compose(d, id3);
    EXPECT_EQ(left, d);
    EXPECT_EQ(right, d);
    EXPECT_EQ(l1, 0);
    EXPECT_EQ(l2, 0);
  }
  for (const auto& d : tlj::enumerate(3, 1)) {
    EXPECT_EQ(tlj::compose(d, PlanarPairing::identity(1)).first, d);
    EXPECT_EQ(tlj::compose(PlanarPairing::identity(3), d).first, d);
  }
  EXPECT_THROW(tlj::compose(id3, PlanarPairing::identity(2)), std::invalid_argument);
}

TEST(Diagrams, GeneratorRelations) {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      auto e = tlj::generators(n, i);
      auto [sq, loops] = tlj::compose(e, e);
      EXPECT_EQ(sq, e);
      EXPECT_EQ(loops, 1);
    }
  }
  auto e1 = tlj::generators(3, 1), e2 = tlj::generators(3, 2);
  auto m1 = tlj::compose(e1, e2);
  EXPECT_EQ(m1.second, 0);
  auto m2 = tlj::compose(m1.first, e1);
  EXPECT_EQ(m2.first, e1);
  EXPECT_EQ(m2.second, 0);
  auto f1 = tlj::generators(4, 1), f3 = tlj::generators(4, 3);
  EXPECT_EQ(tlj::compose(f1, f3).first, tlj::compose(f3, f1).first);
  EXPECT_THROW(tlj::generators(2, 2), std::invalid_argument);
}

TEST(Diagrams, CupCapComposition) {
  // A (2,4) diagram against a (4,0) cap pattern: one strand threads through
  // to close a loop with the nested caps.
  auto a = pp(2, 4, "L1-R1,L2-R4,R2-R3");
  auto b = pp(4, 0, "L1-L4,L2-L3");
  auto [c, loops] = tlj::compose(a, b);
  EXPECT_EQ(c, pp(2, 0, "L1-L2"));
  EXPECT_EQ(loops, 1);
  // Fully nested variant picks up no loop.
  auto b2 = pp(4, 0, "L1-L2,L3-L4");
  auto r2 = tlj::compose(a, b2);
  EXPECT_EQ(r2.first, pp(2, 0, "L1-L2"));
  EXPECT_EQ(r2.second, 0);
}

TEST(Diagrams, TensorStack) {
  auto id1 = PlanarPairing::identity(1);
  EXPECT_EQ(tlj::tensor_stack(id1, id1), PlanarPairing::identity(2));
  EXPECT_EQ(tlj::tensor_stack(tlj::generators(2, 1), id1), tlj::generators(3, 1));
  EXPECT_EQ(tlj::tensor_stack(id1, tlj::generators(2, 1)), tlj::generators(3, 2));
  auto cup = pp(0, 2, "R1-R2");
  auto cap = pp(2, 0, "L1-L2");
  EXPECT_EQ(tlj::tensor_stack(cup, cap), pp(2, 2, "L1-L2,R1-R2"));
  // Interchange with composition, including loop bookkeeping.
  auto e = tlj::generators(2, 1);
  auto lhs = tlj::compose(tlj::tensor_stack(e, id1), tlj::tensor_stack(e, id1));
  auto rhs = tlj::compose(e, e);
  EXPECT_EQ(lhs.first, tlj::tensor_stack(rhs.first, id1));
  EXPECT_EQ(lhs.second, rhs.second);
}

TEST(Diagrams, Reflect) {
  EXPECT_EQ(tlj::reflect(tlj::generators(3, 1)), tlj::generators(3, 1));
  EXPECT_EQ(tlj::reflect(pp(0, 2, "R1-R2")), pp(2, 0, "L1-L2"));
  for (const auto& d : tlj::enumerate(2, 4)) {
    EXPECT_EQ(tlj::reflect(tlj::reflect(d)), d);
  }
  // Anti-homomorphism with identical loop count.
  for (const auto& a : tlj::enumerate(2, 2)) {
    for (const auto& b : tlj::enumerate(2, 2)) {
      auto ab = tlj::compose(a, b);
      auto ba = tlj::compose(tlj::reflect(b), tlj::reflect(a));
      EXPECT_EQ(tlj::reflect(ab.first), ba.first);
      EXPECT_EQ(ab.second, ba.second);
    }
  }
}

TEST(Diagrams, MarkovClose) {
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(tlj::markov_close(PlanarPairing::identity(n)), n);
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      EXPECT_EQ(tlj::markov_close(tlj::generators(n, i)), n - 1);
  EXPECT_EQ(tlj::markov_close(pp(3, 3, "L1-L2,L3-R3,R1-R2")), 2);
  EXPECT_THROW(tlj::markov_close(pp(2, 0, "L1-L2")), std::invalid_argument);
  // Trace cyclicity: closure exponent of ab equals that of ba.
  for (const auto& a : tlj::enumerate(2, 2)) {
    for (const auto& b : tlj::enumerate(2, 2)) {
      auto ab = tlj::compose(a, b);
      auto ba = tlj::compose(b, a);
      EXPECT_EQ(tlj::markov_close(ab.first) + ab.second,
                tlj::markov_close(ba.first) + ba.second);
    }
  }
}

TEST(Diagrams, InternedIdsStable) {
  auto e = tlj::generators(4, 2);
  tlj::DiagramId id = tlj::intern_diagram(e);
  EXPECT_EQ(tlj::intern_diagram(e), id);
  EXPECT_EQ(tlj::diagram_of(id), e);
  auto [cid, loops] = tlj::compose_ids(id, id);
  EXPECT_EQ(cid, id);
  EXPECT_EQ(loops, 1);
}

}  // namespace
