#include "chevcoh/weyl_group.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace chevcoh;

namespace {

WeylGroup group(Family f, int n) { return enumerate(build_root_system({f, n})); }

int inversions(const WeylGroup& g, const WeylElement& w) {
  const auto& rs = g.root_system();
  int count = 0;
  for (const auto& b : rs.positive_roots()) {
    auto image = rs.to_root_lattice(apply(w, rs.root_to_weight(b)));
    if (!image->is_nonnegative()) ++count;
  }
  return count;
}

}  // namespace

TEST(WeylGroup, OrdersMatchClosedForms) {
  const std::vector<std::pair<RootSystemSpec, std::int64_t>> cases = {
      {{Family::A, 1}, 2},  {{Family::A, 2}, 6},   {{Family::A, 3}, 24},  {{Family::A, 4}, 120},
      {{Family::B, 2}, 8},  {{Family::C, 2}, 8},   {{Family::C, 3}, 48},  {{Family::D, 4}, 192},
      {{Family::G, 2}, 12}, {{Family::F, 4}, 1152}};
  for (const auto& [spec, order] : cases) {
    SCOPED_TRACE(spec.name());
    EXPECT_EQ(weyl_group_order(spec), order);
    const auto g = enumerate(build_root_system(spec));
    EXPECT_EQ(static_cast<std::int64_t>(g.order()), order);
    EXPECT_EQ(g.longest().length(), positive_root_count(spec));
    EXPECT_TRUE(g.compose(g.longest(), g.longest()).is_identity());
    int rank_many = 0;
    for (const auto& w : g.elements()) rank_many += w.length() == 1;
    EXPECT_EQ(rank_many, spec.rank);
  }
}

TEST(WeylGroup, A2Lengths) {
  const auto g = group(Family::A, 2);
  std::vector<int> lengths;
  for (const auto& w : g.elements()) lengths.push_back(w.length());
  EXPECT_EQ(lengths, (std::vector<int>{0, 1, 1, 2, 2, 3}));
  EXPECT_EQ(g.longest().word_string(), "s1s2s1");
}

TEST(WeylGroup, SmallGroups) {
  EXPECT_EQ(group(Family::A, 1).order(), 2u);
  const auto c2 = group(Family::C, 2);
  EXPECT_EQ(c2.order(), 8u);
  EXPECT_EQ(c2.longest().length(), 4);
}

TEST(WeylGroup, ElementsAreDistinctSortedAndReduced) {
  for (const auto& spec : {RootSystemSpec{Family::B, 3}, RootSystemSpec{Family::G, 2}, RootSystemSpec{Family::D, 4}}) {
    SCOPED_TRACE(spec.name());
    const auto g = enumerate(build_root_system(spec));
    std::set<IntMatrix> seen;
    for (std::size_t k = 0; k < g.order(); ++k) {
      const auto& w = g.elements()[k];
      EXPECT_TRUE(seen.insert(w.action_matrix()).second);
      EXPECT_EQ(&g.from_word(w.reduced_word()), &w);
      EXPECT_EQ(w.length(), inversions(g, w));
      if (k > 0) {
        const auto& prev = g.elements()[k - 1];
        EXPECT_TRUE(prev.length() < w.length() ||
                    (prev.length() == w.length() && prev.reduced_word() < w.reduced_word()));
      }
    }
  }
}

TEST(WeylGroup, CanonicalWordIsLexLeast) {
  // brute force: for every word over the generators of length l(w), keep the least that evaluates to w
  const auto g = group(Family::C, 3);
  const auto n = static_cast<int>(g.root_system().rank());
  for (const auto& w : g.elements()) {
    std::vector<int> word(w.length(), 0);
    std::optional<std::vector<int>> best;
    while (true) {
      if (g.from_word(word) == w) {
        best = word;
        break;
      }
      int pos = w.length();
      while (pos > 0 && word[pos - 1] == n - 1) word[--pos] = 0;
      if (pos == 0) break;
      ++word[pos - 1];
    }
    ASSERT_TRUE(best);
    EXPECT_EQ(*best, w.reduced_word());
  }
}

TEST(WeylGroup, CapRefusesWithClosedFormOrder) {
  const auto f4 = build_root_system({Family::F, 4});
  try {
    enumerate(f4, 1000);
    FAIL() << "expected ResourceCapExceeded";
  } catch (const ResourceCapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("1152"), std::string::npos);
  }
  EXPECT_EQ(enumerate(f4, 1152).order(), 1152u);
}

TEST(WeylGroup, Apply) {
  const auto g = group(Family::A, 2);
  EXPECT_EQ(apply(g.identity(), Weight{3, -2}), (Weight{3, -2}));
  EXPECT_EQ(apply(g.simple_reflection(0), Weight{1, 0}), (Weight{-1, 1}));
  for (const auto& spec : {RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::C, 3}, RootSystemSpec{Family::G, 2}}) {
    const auto gg = enumerate(build_root_system(spec));
    const auto rho = gg.root_system().rho();
    EXPECT_EQ(apply(gg.longest(), rho), -rho) << spec.name();
  }
}

TEST(WeylGroup, DotAction) {
  const auto c2 = group(Family::C, 2);
  const auto& rs = c2.root_system();
  const Weight zero(2);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(dot_apply(c2.simple_reflection(i), zero), -rs.root_to_weight(rs.simple_root(i)));
  const auto& w = c2.from_word({0, 1, 0});
  EXPECT_EQ(dot_apply(w, zero), (Weight{-4, 0}));
  EXPECT_EQ(dot_apply(w, zero), -2 * rs.root_to_weight(rs.highest_root()));
  EXPECT_EQ(dot_apply(c2.identity(), Weight{5, 7}), (Weight{5, 7}));
}

TEST(WeylGroup, DualWeight) {
  const auto a1 = group(Family::A, 1);
  EXPECT_EQ(dual_weight(a1, Weight{3}), (Weight{3}));
  const auto a2 = group(Family::A, 2);
  EXPECT_EQ(dual_weight(a2, Weight{1, 0}), (Weight{0, 1}));
  const auto c2 = group(Family::C, 2);
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) EXPECT_EQ(dual_weight(c2, Weight{a, b}), (Weight{a, b}));
}

TEST(WeylGroup, WeylDimensionIsDualityInvariant) {
  for (const auto& spec : {RootSystemSpec{Family::A, 2}, RootSystemSpec{Family::A, 3}, RootSystemSpec{Family::C, 2},
                           RootSystemSpec{Family::D, 4}, RootSystemSpec{Family::G, 2}}) {
    const auto g = enumerate(build_root_system(spec));
    const auto& rs = g.root_system();
    const auto coef = rs.coroot_functional(rs.highest_short_root());
    // all dominant lambda with <lambda, alpha_0^vee> <= 10
    Weight w(rs.rank());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t j, Rational left) {
      if (j == rs.rank()) {
        EXPECT_EQ(weyl_dimension(w, rs), weyl_dimension(dual_weight(g, w), rs)) << spec.name() << " " << w;
        EXPECT_TRUE(is_dominant(dual_weight(g, w)));
        EXPECT_EQ(dual_weight(g, dual_weight(g, w)), w);
        return;
      }
      for (std::int64_t v = 0; coef[j] * v <= left; ++v) {
        w[j] = v;
        rec(j + 1, left - coef[j] * v);
      }
      w[j] = 0;
    };
    rec(0, 10);
  }
}

TEST(WeylGroup, DecomposePW) {
  const auto c2 = group(Family::C, 2);
  auto ds = decompose_pw(c2, Weight{1, 0}, 5);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].w->word_string(), "s1s2s1");
  EXPECT_EQ(ds[0].mu, (Weight{1, 0}));

  auto zero = decompose_pw(c2, Weight{0, 0}, 5);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].w->is_identity());
  EXPECT_TRUE(zero[0].mu.is_zero());

  const auto a2 = group(Family::A, 2);
  EXPECT_TRUE(decompose_pw(a2, Weight{1, 0}, 5).empty());
  EXPECT_THROW(decompose_pw(a2, Weight{1, 0}, 4), InvalidInput);
  EXPECT_THROW(decompose_pw(a2, Weight{-1, 0}, 5), InvalidInput);
}
