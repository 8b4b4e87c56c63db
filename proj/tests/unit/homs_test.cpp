#include "primnorm/homs.hpp"

#include <gtest/gtest.h>

#include "primnorm/errors.hpp"
#include "test_support.hpp"

using namespace primnorm;
using primnorm::testing::cyc;
using primnorm::testing::load;

namespace {

// S4 onto {1, (1,2)} by parity.
Homomorphism sign_of_s4() {
  const Group s4 = Group::symmetric(4);
  GeneratorImageMap m{4, 2, s4.generators(), {}};
  for (const auto& g : s4.generators()) m.images.push_back(g.is_even() ? Permutation(2) : cyc(2, {{1, 2}}));
  return Homomorphism(m);
}

}  // namespace

TEST(Homomorphism, EvaluatesProductsConsistently) {
  const auto sign = sign_of_s4();
  EXPECT_FALSE(sign.is_injective());
  EXPECT_EQ(sign.image().order(), 2);
  for (const auto& x : elements(Group::symmetric(4)))
    EXPECT_EQ(sign.evaluate(x).is_identity(), x.is_even());
}

TEST(Homomorphism, RejectsMapsThatAreNotHomomorphisms) {
  const Group s3 = Group::symmetric(3);
  // A transposition cannot go to a 3-cycle.
  GeneratorImageMap bad{3, 3, {cyc(3, {{1, 2}})}, {cyc(3, {{1, 2, 3}})}};
  EXPECT_THROW(Homomorphism{bad}, InvalidArgument);
  EXPECT_THROW(sign_of_s4().evaluate(Permutation(5)), InvalidArgument);
}

TEST(Homomorphism, ComposeInvertRestrict) {
  const GroupFile a = load("psl2_07"), b = load("psl2_07_scr");
  const Homomorphism phi({8, 8, a.generators, b.generators});
  EXPECT_TRUE(phi.is_injective());
  const Homomorphism back = hom_invert(phi);
  const Homomorphism round = hom_compose(phi, back);
  for (const auto& x : elements(a.group())) EXPECT_EQ(round.evaluate(x), x);

  const Group stab = point_stabiliser(a.group(), 0);
  const Homomorphism r = hom_restrict(phi, stab);
  EXPECT_EQ(r.domain().order(), 21);
  EXPECT_THROW(hom_restrict(phi, Group::symmetric(8)), InvalidArgument);
  EXPECT_THROW(hom_invert(sign_of_s4()), InvalidArgument);
  const Homomorphism id = identity_hom(a.group());
  EXPECT_EQ(id.evaluate(a.generators[1]), a.generators[1]);
}

TEST(PermutationIsomorphism, RecoversTheRelabelling) {
  const GroupFile a = load("psl2_07"), b = load("psl2_07_scr");
  const Homomorphism phi({8, 8, a.generators, b.generators});
  const auto f = perm_iso_from_group_iso(a.group(), b.group(), phi);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_permutation_isomorphism(*f, phi));
  // The generators of b are the generators of a written in the new labels.
  const auto f_inv = f->inverse();
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    EXPECT_EQ(transport_back(b.generators[i], *f, f_inv), a.generators[i]);
}

TEST(PermutationIsomorphism, FailsWhenStabilisersAreNotMatched) {
  // The outer automorphism of S6 swaps transpositions and triple transpositions,
  // so it does not come from any relabelling of six points.
  const Group s6 = Group::symmetric(6);
  const Permutation t = cyc(6, {{1, 2}});
  const Permutation c = cyc(6, {{1, 2, 3, 4, 5, 6}});
  const Permutation t_img = cyc(6, {{1, 2}, {3, 4}, {5, 6}});
  std::optional<Homomorphism> phi;
  for (const auto& c_img : elements(s6)) {
    if (c_img.cycle_type() != std::vector<std::size_t>{3, 2, 1}) continue;
    try {
      Homomorphism h({6, 6, {t, c}, {t_img, c_img}});
      if (h.is_injective()) {
        phi.emplace(std::move(h));
        break;
      }
    } catch (const InvalidArgument&) {
    }
  }
  ASSERT_TRUE(phi.has_value());
  EXPECT_FALSE(perm_iso_from_group_iso(Group(6, {t, c}), s6, *phi).has_value());
}
