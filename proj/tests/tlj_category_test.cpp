#include "tlj/tlj_category.hpp"

#include <gtest/gtest.h>

#include "fusion_oracle.hpp"
#include "test_util.hpp"

using tlj::CatMorphism;
using tlj::CatObject;
using tlj::Cyclotomic;
using tlj::Level;
using tlj::TLMorphism;
using tlj_test::pp;

namespace {

TEST(Category, BlockCrossingBasics) {
  Level l = Level::root_of_unity(2);
  EXPECT_EQ(tlj::block_crossing(l, 1, 1), tlj::braid_letter(l, 2, 1, +1));
  EXPECT_EQ(tlj::block_crossing(l, 0, 3), TLMorphism::identity(l, 3));
  EXPECT_EQ(tlj::block_crossing(l, 3, 0), TLMorphism::identity(l, 3));
  TLMorphism id1 = TLMorphism::identity(l, 1);
  // Cable decomposition: crossing one strand over two factors.
  EXPECT_EQ(tlj::block_crossing(l, 1, 2),
            tlj::compose(tlj::tensor_stack(id1, tlj::block_crossing(l, 1, 1)),
                         tlj::tensor_stack(tlj::block_crossing(l, 1, 1), id1)));
  EXPECT_EQ(tlj::block_crossing(l, 2, 1),
            tlj::compose(tlj::tensor_stack(tlj::block_crossing(l, 1, 1), id1),
                         tlj::tensor_stack(id1, tlj::block_crossing(l, 1, 1))));
  // Words are unitary on the nose.
  for (auto [a, b] : {std::pair{2, 1}, {1, 2}, {2, 2}}) {
    TLMorphism c = tlj::block_crossing(l, a, b);
    EXPECT_EQ(tlj::compose(tlj::star(c), c), TLMorphism::identity(l, a + b));
  }
}

TEST(Category, BlockCrossingNaturality) {
  for (const Level& l : {Level::root_of_unity(1), Level::root_of_unity(2),
                         Level::delta_two()}) {
    TLMorphism e = TLMorphism::from_diagram(l, tlj::generators(2, 1));
    TLMorphism id2 = TLMorphism::identity(l, 2);
    // Naturality in the first factor, exact in TL.
    EXPECT_EQ(tlj::compose(tlj::block_crossing(l, 2, 2), tlj::tensor_stack(e, id2)),
              tlj::compose(tlj::tensor_stack(id2, e), tlj::block_crossing(l, 2, 2)));
    // Shape-changing naturality: a birth slides through the crossing.
    TLMorphism birth = TLMorphism::from_diagram(l, pp(2, 0, "L1-L2"));
    TLMorphism id1 = TLMorphism::identity(l, 1);
    EXPECT_EQ(tlj::compose(tlj::block_crossing(l, 2, 1), tlj::tensor_stack(birth, id1)),
              tlj::tensor_stack(id1, birth));
  }
}

TEST(Category, ObjectValidation) {
  for (int k : {1, 2, 3}) {
    Level l = Level::root_of_unity(k);
    for (int s = 0; s <= k + 1; ++s)
      EXPECT_TRUE(tlj::validate_object(CatObject::simple(l, s))) << k << " " << s;
  }
  Level l = Level::root_of_unity(2);
  // A bare cup-cap is not idempotent (e^2 = delta e with delta != 1).
  CatObject bad = CatObject::of(TLMorphism::from_diagram(l, tlj::generators(2, 1)));
  EXPECT_FALSE(tlj::validate_object(bad));
  CatObject good = tlj::dsum(CatObject::simple(l, 0), CatObject::simple(l, 2));
  EXPECT_TRUE(tlj::validate_object(good));
  EXPECT_TRUE(tlj::validate_object(tlj::tensor_obj(good, CatObject::simple(l, 1))));
}

TEST(Category, MorphismAlgebra) {
  Level l = Level::root_of_unity(2);
  CatObject p = CatObject::of(TLMorphism::identity(l, 2));
  CatMorphism id = CatMorphism::identity_of(p);
  TLMorphism e = TLMorphism::from_diagram(l, tlj::generators(2, 1));
  CatMorphism f = CatMorphism::of(p, p, e);
  EXPECT_TRUE(tlj::cat_equal(tlj::compose(id, f), f));
  EXPECT_TRUE(tlj::cat_equal(tlj::compose(f, id), f));
  EXPECT_TRUE(tlj::cat_equal(tlj::star(tlj::star(f)), f));
  // e is self-adjoint and e o e = delta e.
  CatMorphism ee = tlj::compose(f, f);
  EXPECT_TRUE(tlj::cat_equal(ee, CatMorphism::of(p, p, tlj::delta_of_level(l) * e)));
  EXPECT_TRUE(tlj::cat_equal(tlj::star(f), f));
  EXPECT_EQ(tlj::cat_trace(id), tlj::delta_of_level(l) * tlj::delta_of_level(l));
  // dsum and tensor keep blocks where they belong.
  CatMorphism d = tlj::dsum(f, id);
  EXPECT_EQ(d.entries.size(), 2u);
  EXPECT_TRUE(d.entries[0][1].is_zero());
  CatMorphism t = tlj::tensor_morphism(f, f);
  EXPECT_EQ(t.entries[0][0].in_size(), 4);
}

TEST(Category, HomMembership) {
  Level l = Level::root_of_unity(2);
  CatObject full = CatObject::of(TLMorphism::identity(l, 2));
  CatObject f2 = CatObject::simple(l, 2);
  TLMorphism e = TLMorphism::from_diagram(l, tlj::generators(2, 1));
  EXPECT_TRUE(tlj::is_hom_element(e, full, full));
  EXPECT_FALSE(tlj::is_hom_element(e, f2, f2));
  EXPECT_TRUE(tlj::is_hom_element(tlj::jones_wenzl(l, 2), f2, f2));
}

TEST(Category, BraidingUnitary) {
  for (const Level& l : {Level::root_of_unity(1), Level::root_of_unity(2),
                         Level::delta_two()}) {
    CatObject p = CatObject::simple(l, 1);
    CatObject q = (l.is_delta_two() || l.k >= 2) ? CatObject::simple(l, 2)
                                                 : CatObject::simple(l, 1);
    CatMorphism s = tlj::braiding_of(p, q);
    EXPECT_TRUE(tlj::cat_equal(tlj::compose(tlj::star(s), s),
                               CatMorphism::identity_of(tlj::tensor_obj(p, q))));
    EXPECT_TRUE(tlj::cat_equal(tlj::compose(s, tlj::star(s)),
                               CatMorphism::identity_of(tlj::tensor_obj(q, p))));
  }
}

TEST(Category, BraidingOnSums) {
  Level l = Level::root_of_unity(2);
  CatObject p = tlj::dsum(CatObject::simple(l, 0), CatObject::simple(l, 2));
  CatObject q = CatObject::simple(l, 1);
  CatMorphism s = tlj::braiding_of(p, q);
  EXPECT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.entries[0].size(), 2u);
  EXPECT_TRUE(tlj::cat_equal(tlj::compose(tlj::star(s), s),
                             CatMorphism::identity_of(tlj::tensor_obj(p, q))));
}

TEST(Category, MultiplicityBasics) {
  for (int k : {1, 2, 3}) {
    Level l = Level::root_of_unity(k);
    for (int s = 0; s <= k; ++s) {
      for (int r = 0; r <= k; ++r) {
        EXPECT_EQ(tlj::multiplicity(l, r, tlj::jones_wenzl(l, s)), r == s ? 1 : 0)
            << k << " " << s << " " << r;
      }
    }
    // The full strand pair decomposes as f0 + f2 while f2 survives.
    TLMorphism id2 = TLMorphism::identity(l, 2);
    EXPECT_EQ(tlj::multiplicity(l, 0, id2), 1);
    if (k >= 2) EXPECT_EQ(tlj::multiplicity(l, 2, id2), 1);
  }
  EXPECT_EQ(tlj::multiplicity(Level::delta_two(), 2,
                              TLMorphism::identity(Level::delta_two(), 2)),
            1);
}

TEST(Category, FusionMatchesWalkOracle) {
  for (int k : {1, 2, 3}) {
    Level l = Level::root_of_unity(k);
    for (int s = 0; s <= k; ++s) {
      for (int t = 0; t <= k && s + t <= 4; ++t) {
        auto engine = tlj::fusion_product(l, s, t);
        auto oracle = tlj_test::fusion_oracle(k, s, t);
        ASSERT_EQ(engine.size(), oracle.size()) << k << " " << s << " " << t;
        for (size_t r = 0; r < oracle.size(); ++r)
          EXPECT_EQ(engine[r], oracle[r]) << k << " " << s << " " << t << " " << r;
      }
    }
  }
  auto d2 = tlj::fusion_product(Level::delta_two(), 1, 2, 5);
  auto d2o = tlj_test::fusion_oracle_delta_two(1, 2, 6);
  for (size_t r = 0; r < d2.size(); ++r) EXPECT_EQ(d2[r], d2o[r]) << r;
}

TEST(Category, FusionPinnedValues) {
  using V = tlj::FusionVector;
  EXPECT_EQ(tlj::fusion_product(Level::root_of_unity(1), 1, 1), (V{1, 0}));
  EXPECT_EQ(tlj::fusion_product(Level::root_of_unity(2), 1, 1), (V{1, 0, 1}));
  EXPECT_EQ(tlj::fusion_product(Level::root_of_unity(3), 2, 2), (V{1, 0, 1, 0}));
  EXPECT_EQ(tlj::fusion_product(Level::root_of_unity(4), 1, 2), (V{0, 1, 0, 1, 0}));
}

TEST(Category, FusionTableShape) {
  Level l = Level::root_of_unity(2);
  auto table = tlj::fusion_table(l, 3);
  EXPECT_EQ(table.bound, 2);
  // Unit row and symmetry.
  for (const auto& [st, v] : table.entries) {
    auto [s, t] = st;
    if (s == 0) {
      for (int r = 0; r <= table.bound; ++r)
        EXPECT_EQ(v[static_cast<size_t>(r)], r == t ? 1 : 0);
    }
    EXPECT_EQ(v, table.entries.at({t, s}));
  }
  EXPECT_TRUE(table.entries.count({1, 2}));
  EXPECT_FALSE(table.entries.count({2, 2}));
  EXPECT_THROW(tlj::fusion_product(l, 3, 0), std::invalid_argument);
}

}  // namespace
