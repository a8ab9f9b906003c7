#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wreg/regularity.hpp"

using namespace wreg;

TEST_SUITE_BEGIN("regularity");

TEST_CASE("the P(3,2) trio") {
  Weights w = weight_data({3, 2});
  SheafExpr om5 = SheafExpr::split(w, {-5});
  SheafExpr om4 = SheafExpr::split(w, {-4});

  RegularityReport semi = is_semiwregular(om5, 0);
  CHECK(semi.verdict);
  CHECK(semi.windows.size() == 1);

  RegularityReport wr = is_wregular(om5, 0);
  CHECK_FALSE(wr.verdict);
  REQUIRE(wr.h0_value.has_value());
  CHECK(*wr.h0_value == 0);

  CHECK(is_wregular(om4, 0).verdict);
}

TEST_CASE("semiwregularity failure carries a witness") {
  Weights w = weight_data({3, 2});
  RegularityReport rep = is_semiwregular(SheafExpr::split(w, {-5}), -1);
  CHECK_FALSE(rep.verdict);
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].i == 1);
  CHECK(rep.witnesses[0].twist == -5);
  CHECK(rep.witnesses[0].value == 1);
}

TEST_CASE("wregular implies semiwregular") {
  for (const auto& item : testutil::regularity_corpus()) {
    for (long long m : {0ll, 1ll}) {
      if (is_wregular(item.expr, m).verdict)
        CHECK_MESSAGE(is_semiwregular(item.expr, m).verdict, item.name);
    }
  }
}

TEST_CASE("wreg_min basics") {
  for (auto raw : {std::vector<long long>{3, 2}, {3, 2, 1}, {5, 3, 2}, {1, 1, 1}}) {
    Weights w = weight_data(raw);
    CHECK(wreg_min(SheafExpr::split(w, {0})) == 0);
  }
  Weights w32 = weight_data({3, 2});
  CHECK(wreg_min(SheafExpr::split(w32, {-4})) == 0);
  long long m5 = wreg_min(SheafExpr::split(w32, {-5}));
  CHECK(m5 >= 1);
  CHECK(is_wregular(SheafExpr::split(w32, {-5}), m5).verdict);
  CHECK_FALSE(is_wregular(SheafExpr::split(w32, {-5}), m5 - 1).verdict);

  Weights w111 = weight_data({1, 1, 1});
  CHECK(wreg_min(SheafExpr::split(w111, {-1, -1})) == 1);
}

TEST_CASE("wreg_min consistency on the corpus") {
  for (const auto& item : testutil::regularity_corpus()) {
    long long m = wreg_min(item.expr);
    CHECK_MESSAGE(is_wregular(item.expr, m).verdict, item.name);
    CHECK_MESSAGE(!is_wregular(item.expr, m - 1).verdict, item.name);
  }
}

TEST_CASE("divisibility obstruction is reported, not looped") {
  // On P(4,2) every twist of O(-1) by a multiple of k = 4 stays odd.
  Weights w42 = weight_data({4, 2});
  CHECK_THROWS_AS(wreg_min(SheafExpr::split(w42, {-1})), NoWregularTwist);
}

TEST_CASE("toric regularity") {
  Weights w321 = weight_data({3, 2, 1});
  CHECK(is_toric_regular(SheafExpr::split(w321, {12}), 0).verdict);
  RegularityReport rep = is_toric_regular(SheafExpr::split(w321, {0}), 0);
  CHECK_FALSE(rep.verdict);
  REQUIRE(rep.witnesses.size() >= 1);
  CHECK(rep.witnesses[0].i == 2);
  CHECK(rep.witnesses[0].twist == -12);
  CHECK(rep.witnesses[0].value == 7);  // h^0(O(6)) on P(3,2,1)

  Weights w11 = weight_data({1, 1});
  CHECK(is_toric_regular(SheafExpr::split(w11, {0}), 0).verdict);
}

TEST_CASE("classical regularity on ordinary projective spaces") {
  Weights w11 = weight_data({1, 1});
  CHECK(classic_regularity(SheafExpr::split(w11, {0})) == 0);
  // reg(O(d)) = -d on projective space, and regularity of a sum is the max
  CHECK(classic_regularity(SheafExpr::split(w11, {-3, 0})) == 3);
  CHECK(classic_regularity(SheafExpr::split(w11, {-3})) == 3);
  Weights w111 = weight_data({1, 1, 1});
  CHECK(classic_regularity(SheafExpr::split(w111, {-1})) == 1);
  CHECK(classic_regularity(SheafExpr::split(w111, {0})) == 0);
  CHECK_THROWS_AS(classic_regularity(SheafExpr::split(weight_data({3, 2}), {0})), WrongWeights);
}

TEST_CASE("pullback regularity reports") {
  // The pullback of the structure sheaf is the structure sheaf of ordinary
  // projective space, so its classical regularity is 0; the bound from the
  // lemma is far from tight here.
  Weights w32 = weight_data({3, 2});
  PullbackRegReport pb = pullback_reg_report(SheafExpr::split(w32, {0}), 0);
  CHECK(pb.bound == 5);
  CHECK(pb.actual == 0);
  CHECK(pb.holds);

  // the pullback of O(-4) is O(-4) on the line: regularity 4 <= 5
  PullbackRegReport pm4 = pullback_reg_report(SheafExpr::split(w32, {-4}), 0);
  CHECK(pm4.bound == 5);
  CHECK(pm4.actual == 4);
  CHECK(pm4.holds);

  Weights w11 = weight_data({1, 1});
  for (long long m : {0ll, 2ll}) {
    PullbackRegReport r = pullback_reg_report(SheafExpr::split(w11, {0}), m);
    CHECK(r.bound == m);
    CHECK(r.actual <= m);
    CHECK(r.holds);
  }

  Weights w21 = weight_data({2, 1});
  PullbackRegReport r21 = pullback_reg_report(SheafExpr::split(w21, {0}), 0);
  CHECK(r21.bound == 1);
  CHECK(r21.actual == 0);
  CHECK(r21.holds);

  CHECK_THROWS_AS(pullback_reg_report(SheafExpr::split(w32, {-5}), -1), PreconditionFailed);
}

TEST_CASE("restriction reports") {
  Weights w321 = weight_data({3, 2, 1});
  RestrictReport r = restrict_semiwreg_report(SheafExpr::split(w321, {-5}), 2, 0);
  CHECK(r.z == 1);
  CHECK(r.k_sub == 6);
  CHECK(r.target_m == 0);
  CHECK(r.verdict);
  // wregularity does not restrict
  SheafExpr restricted = restrict_hyperplane(SheafExpr::split(w321, {-5}), 2);
  CHECK_FALSE(is_wregular(restricted, 0).verdict);

  Weights w111 = weight_data({1, 1, 1});
  RestrictReport r2 = restrict_semiwreg_report(SheafExpr::split(w111, {0}), 0, 0);
  CHECK(r2.z == 1);
  CHECK(r2.verdict);

  Weights w3221 = weight_data({3, 2, 2, 1});
  RestrictReport r3 = restrict_semiwreg_report(SheafExpr::split(w3221, {0}), 0, 0);
  CHECK(r3.k_sub == 2);
  CHECK(r3.z == 3);
  CHECK(r3.target_m == 2);
  CHECK(r3.verdict);
}

TEST_CASE("monad bound on the sharp example") {
  Monad sharp = sharp_example_monad();
  MonadBoundReport rep = monad_bound(sharp);
  CHECK(rep.rhs == 4);
  CHECK(rep.m == 0);  // with k = lcm = 6
  CHECK(rep.wreg_check.verdict);
}

TEST_CASE("monad bound rejects small dimensions") {
  // a perfectly valid monad on a surface (n = 2) is still out of scope
  Weights w = weight_data({1, 1, 1});
  auto x = [](int i) { return WeightedPoly::variable(i, 3); };
  auto z = [] { return WeightedPoly::zero(); };
  Monad m = make_monad(w, SplitBundle{{-1}}, SplitBundle{{0, 0, 0, 0}}, SplitBundle{{1}},
                       {{z()}, {z()}, {z()}, {x(0)}}, {{x(0), x(1), x(2), z()}});
  CHECK_THROWS_AS(monad_bound(m), DimensionTooSmall);
}

TEST_CASE("weighted global generation of splits") {
  CHECK(wgg_split(SheafExpr::split(weight_data({2, 1}), {0})).verdict);
  GgCertificate bad = wgg_split(SheafExpr::split(weight_data({3, 2}), {-5}));
  CHECK_FALSE(bad.verdict);
  CHECK(bad.witness_chart >= 0);
  CHECK(bad.witness_summand == -5);
  CHECK_FALSE(wgg_split(SheafExpr::split(weight_data({1, 1}), {-1})).verdict);
  CHECK_THROWS_AS(wgg_split(SheafExpr::monad(sharp_example_monad())), NotSplit);
  // a wregular bundle whose section does vanish at a point of the coarse
  // space: x0 still generates O(3) on both charts of P(3,2)
  CHECK(wgg_split(SheafExpr::split(weight_data({3, 2}), {-3})).verdict);
}

TEST_CASE("classical global generation of line bundles") {
  Weights w32 = weight_data({3, 2});
  CHECK(gg_line(w32, 6).verdict);
  CHECK_FALSE(gg_line(w32, 1).verdict);
  // O(5) is generated by its single section x0*x1: on each chart the other
  // variable's powers fall in incompatible residues
  CHECK(gg_line(w32, 5).verdict);
  CHECK(gg_line(w32, 7).verdict);
  CHECK(gg_line(weight_data({1, 1}), 1).verdict);
  CHECK(gg_line(w32, 0).verdict);
  CHECK_FALSE(gg_line(w32, -2).verdict);
  // on P(2,2) the odd twists sheafify to zero, so generation is vacuous
  CHECK(gg_line(weight_data({2, 2}), 1).verdict);
}

TEST_CASE("gg implies wgg for positive twists") {
  for (auto raw : {std::vector<long long>{3, 2}, {2, 1}, {5, 3, 2}, {2, 2}}) {
    Weights w = weight_data(raw);
    for (long long m = 1; m <= 2 * w.k; ++m) {
      if (!gg_line(w, m).verdict) continue;
      CHECK_MESSAGE(wgg_split(SheafExpr::split(w, {m})).verdict,
                    "m=", m, " on weights starting with ", raw[0]);
    }
  }
}

TEST_CASE("spanning of H^0(F(k)) for 0-wregular instances") {
  for (const auto& item : testutil::regularity_corpus()) {
    if (!is_wregular(item.expr, 0).verdict) continue;
    const Weights& w = item.expr.weights();
    Int h0k = hi_dim(item.expr, 0, w.k);
    Index cols = 0;
    std::vector<RatMat> blocks;
    for (int j = 0; j < w.vars(); ++j) {
      blocks.push_back(multiplication_map(item.expr, w.k - w.w[j], j));
      cols += blocks.back().cols();
    }
    RatMat stacked(static_cast<Index>(h0k.get_si()), cols);
    Index off = 0;
    for (const auto& b : blocks) {
      REQUIRE(b.rows() == stacked.rows());
      stacked.middleCols(off, b.cols()) = b;
      off += b.cols();
    }
    CHECK_MESSAGE(rank_exact(stacked) == stacked.rows(), item.name);
  }
}

TEST_CASE("monotonicity of wregularity") {
  for (const auto& item : testutil::regularity_corpus()) {
    if (!is_wregular(item.expr, 0).verdict) continue;
    for (long long m = 1; m <= 5; ++m)
      CHECK_MESSAGE(is_wregular(item.expr, m).verdict, item.name, " at m=", m);
  }
}

TEST_CASE("restriction lemma across the corpus") {
  for (const auto& item : testutil::regularity_corpus()) {
    if (item.expr.weights().vars() < 3) continue;  // keep the hyperplane at dim >= 1
    if (!is_semiwregular(item.expr, 0).verdict) continue;
    for (int j = 0; j < item.expr.weights().vars(); ++j) {
      try {
        RestrictReport r = restrict_semiwreg_report(item.expr, j, 0);
        CHECK_MESSAGE(r.verdict, item.name, " j=", j);
      } catch (const RestrictionNotMonad&) {
        // the lemma only speaks about restrictions that stay monads
      } catch (const DimensionTooSmall&) {
        // monad homology on the hyperplane may drop below a surface
      }
    }
  }
}

TEST_CASE("window cap errors are reported") {
  Options tight;
  tight.window_cap = 1;
  SheafExpr sharp = SheafExpr::monad(sharp_example_monad());
  CHECK_THROWS_AS(is_semiwregular(sharp, 0, tight), WindowExceeded);
}

TEST_CASE("strict mode flags unverified certificates") {
  Weights w = weight_data({3, 2, 1});
  Monad m = make_monad(w, SplitBundle{{}}, SplitBundle{{-3}}, SplitBundle{{0}},
                       {std::vector<WeightedPoly>{}}, {{WeightedPoly::variable(0, 3)}});
  Options strict;
  strict.strict = true;
  CHECK_THROWS_AS(is_semiwregular(SheafExpr::monad(std::move(m)), 0, strict), StrictUnverified);
}

TEST_SUITE_END();
