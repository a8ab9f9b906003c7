#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wreg/sheaf.hpp"

using namespace wreg;

namespace {

WeightedPoly xv(int i, int nvars) { return WeightedPoly::variable(i, nvars); }

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("sheaf");

TEST_CASE("koszul complex terms") {
  auto k532 = koszul_complex(weight_data({5, 3, 2}));
  REQUIRE(k532.size() == 3);
  CHECK(k532[0].twists == std::vector<long long>{-5, -3, -2});
  CHECK(k532[1].twists == std::vector<long long>{-8, -7, -5});
  CHECK(k532[2].twists == std::vector<long long>{-10});

  auto k11 = koszul_complex(weight_data({1, 1}));
  CHECK(k11[0].twists == std::vector<long long>{-1, -1});
  CHECK(k11[1].twists == std::vector<long long>{-2});

  auto k32 = koszul_complex(weight_data({3, 2}));
  CHECK(k32[0].twists == std::vector<long long>{-3, -2});
  CHECK(k32[1].twists == std::vector<long long>{-5});
}

TEST_CASE("koszul complex counting invariants") {
  for (auto raw : {std::vector<long long>{3, 2, 2, 1}, {4, 3, 1}, {2, 2}}) {
    Weights w = weight_data(raw);
    auto terms = koszul_complex(w);
    REQUIRE(static_cast<int>(terms.size()) == w.vars());
    for (int j = 0; j < w.vars(); ++j)
      CHECK(terms[j].rank() == binom(w.vars(), j + 1));
    std::vector<long long> first;
    for (long long wi : w.w) first.push_back(-wi);
    CHECK(terms.front().twists == first);
    CHECK(terms.back().twists == std::vector<long long>{-w.total});
  }
}

TEST_CASE("graded matrix degree bookkeeping") {
  Weights w = weight_data({3, 2});
  // O(0) -> O(3) must be degree 3 = weight of x0
  CHECK_NOTHROW(make_graded_matrix(w, SplitBundle{{3}}, SplitBundle{{0}}, {{xv(0, 2)}}));
  CHECK_THROWS_AS(make_graded_matrix(w, SplitBundle{{3}}, SplitBundle{{0}}, {{xv(1, 2)}}),
                  DegreeMismatch);
  CHECK_THROWS_AS(make_graded_matrix(w, SplitBundle{{3}}, SplitBundle{{0}},
                                     {{xv(0, 2) + xv(1, 2)}}),
                  DegreeMismatch);
  // entries of negative required degree must be zero
  CHECK_NOTHROW(make_graded_matrix(w, SplitBundle{{-1}}, SplitBundle{{0}},
                                   {{WeightedPoly::zero()}}));
}

TEST_CASE("sharp example monad validates completely") {
  Monad m = sharp_example_monad();
  MonadValidity v = validate_monad(m);
  CHECK(v.composition_zero);
  CHECK(v.alpha_injective == Cert::proven);
  CHECK(v.beta_surjective == Cert::proven);
  CHECK(v.pointwise_bundle == Cert::proven);
  CHECK(v.minimal);
  CHECK(m.homology_rank() == 2);
  // the cokernel of beta lives in degree -2 only
  CHECK(v.beta_stable_from == -1);
}

TEST_CASE("non-surjective beta stays unverified") {
  // On P(3,2) the single entry x0 presents a cokernel with unbounded nonzero
  // degrees (powers of x1 are never reached).
  Weights w = weight_data({3, 2});
  Monad m = make_monad(w, SplitBundle{{}}, SplitBundle{{-3}}, SplitBundle{{0}},
                       {std::vector<WeightedPoly>{}}, {{xv(0, 2)}});
  MonadValidity v = validate_monad(m);
  CHECK(v.composition_zero);
  CHECK(v.beta_surjective == Cert::unverified);
}

TEST_CASE("composition failure is an error") {
  Weights w = weight_data({1, 1});
  Monad bad = make_monad(w, SplitBundle{{-1}}, SplitBundle{{0, 0}}, SplitBundle{{1}},
                         {{xv(0, 2)}, {WeightedPoly::zero()}},
                         {{xv(0, 2), xv(1, 2)}});
  CHECK_THROWS_AS(validate_monad(bad), NotAComplex);
}

TEST_CASE("minimality detects scalar entries") {
  Weights w = weight_data({1, 1});
  WeightedPoly one = WeightedPoly::monomial(Exponents{0, 0}, 1);
  Monad m = make_monad(w, SplitBundle{{}}, SplitBundle{{0}}, SplitBundle{{0}},
                       {std::vector<WeightedPoly>{}}, {{one}});
  MonadValidity v = validate_monad(m);
  CHECK_FALSE(v.minimal);
  CHECK(v.beta_surjective == Cert::proven);
}

TEST_CASE("dual is an involution") {
  Monad sharp = sharp_example_monad();
  SheafExpr exprs[] = {
      SheafExpr::split(weight_data({5, 3, 2}), {-5, 0, 2}),
      SheafExpr::monad(sharp).twisted(3),
      SheafExpr::sum({SheafExpr::split(sharp.w, {-1, 4}), SheafExpr::monad(sharp)}),
  };
  for (const auto& e : exprs) CHECK(dual(dual(e)) == e);
  CHECK(dual(SheafExpr::split(weight_data({3, 2}), {-5})) ==
        SheafExpr::split(weight_data({3, 2}), {5}));
}

TEST_CASE("dual of the sharp monad keeps its shape") {
  SheafExpr d = dual(SheafExpr::monad(sharp_example_monad()));
  REQUIRE(d.monad_leaves().size() == 1);
  const Monad& m = *d.monad_leaves()[0].monad;
  CHECK(m.a.twists == std::vector<long long>{-2});
  CHECK(m.b.twists == std::vector<long long>{1, 0, 0, -1});
  CHECK(m.c.twists == std::vector<long long>{2});
  CHECK(validate_monad(m).beta_surjective == Cert::proven);
}

TEST_CASE("restriction of split bundles keeps twists") {
  SheafExpr e = SheafExpr::split(weight_data({3, 2, 1}), {-5});
  SheafExpr r = restrict_hyperplane(e, 2);
  CHECK(r.weights() == weight_data({3, 2}));
  CHECK(r.split_twists() == std::vector<long long>{-5});
  CHECK(restricted_lcm(weight_data({3, 2, 1}), 2) == 6);

  SheafExpr o = SheafExpr::split(weight_data({1, 1, 1}), {0});
  CHECK(restrict_hyperplane(o, 0) == SheafExpr::split(weight_data({1, 1}), {0}));
}

TEST_CASE("restriction of the sharp monad stays a monad") {
  SheafExpr e = SheafExpr::monad(sharp_example_monad());
  SheafExpr r = restrict_hyperplane(e, 3);
  CHECK(r.weights() == weight_data({3, 2, 2}));
  REQUIRE(r.monad_leaves().size() == 1);
  const Monad& m = *r.monad_leaves()[0].monad;
  CHECK(m.beta.entry[0][3].is_zero());  // x3 became 0
  CHECK(validate_monad(m).beta_surjective == Cert::proven);
  CHECK(validate_monad(m).alpha_injective == Cert::proven);
}

TEST_CASE("restriction refuses to produce a non-monad") {
  // alpha = (x0): restricting to {x0 = 0} kills the whole column.
  Weights w = weight_data({1, 1, 1});
  Monad m = make_monad(w, SplitBundle{{-1}}, SplitBundle{{0}}, SplitBundle{{}},
                       {{xv(0, 3)}}, {});
  SheafExpr e = SheafExpr::monad(std::move(m));
  CHECK_THROWS_AS(restrict_hyperplane(e, 0), RestrictionNotMonad);
  CHECK_NOTHROW(restrict_hyperplane(e, 1));
}

TEST_CASE("pullback shift multiplicities") {
  auto s32 = pullback_shifts(weight_data({3, 2}));
  CHECK(s32 == std::vector<std::pair<long long, long long>>{{0, 1}, {-1, 2}, {-2, 2}, {-3, 1}});
  auto s11 = pullback_shifts(weight_data({1, 1}));
  CHECK(s11 == std::vector<std::pair<long long, long long>>{{0, 1}});
  auto s2 = pullback_shifts(weight_data({2}));
  CHECK(s2 == std::vector<std::pair<long long, long long>>{{0, 1}, {-1, 1}});
}

TEST_CASE("pullback multiplicity symmetry") {
  for (auto raw : {std::vector<long long>{3, 2, 2, 1}, {5, 3, 2}, {4, 1}}) {
    Weights w = weight_data(raw);
    auto shifts = pullback_shifts(w);
    long long center = -(w.total - w.vars());
    long long count = 0;
    for (auto [s, c] : shifts) {
      count += c;
      long long mirror = center - s;
      bool found = false;
      for (auto [s2, c2] : shifts)
        if (s2 == mirror && c2 == c) found = true;
      CHECK(found);
    }
    long long product = 1;
    for (long long wi : w.w) product *= wi;
    CHECK(count == product);
  }
}

TEST_CASE("pullback expansion of split leaves") {
  Weights w = weight_data({3, 2});
  SheafExpr e = pullback_expand(SheafExpr::split(w, {0}));
  CHECK(e.split_twists() == std::vector<long long>{-3, -2, -2, -1, -1, 0});
  Weights w11 = weight_data({1, 1});
  CHECK(pullback_expand(SheafExpr::split(w11, {7})) == SheafExpr::split(w11, {7}));
}

TEST_CASE("expression normalization") {
  Weights w = weight_data({3, 2});
  SheafExpr a = SheafExpr::split(w, {0}).twisted(3);
  CHECK(a == SheafExpr::split(w, {3}));
  SheafExpr b = SheafExpr::sum({SheafExpr::split(w, {1}), SheafExpr::split(w, {-2, 1})});
  CHECK(b.split_twists() == std::vector<long long>{-2, 1, 1});
  Monad sharp = sharp_example_monad();
  SheafExpr c = SheafExpr::monad(sharp).twisted(2).twisted(-2);
  CHECK(c == SheafExpr::monad(sharp));
  CHECK_THROWS_AS(SheafExpr::sum({SheafExpr::split(w, {0}),
                                  SheafExpr::split(weight_data({1, 1}), {0})}),
                  ShapeMismatch);
}

TEST_CASE("transpose_dual round trip on matrices") {
  Monad sharp = sharp_example_monad();
  GradedMatrix twice = transpose_dual(transpose_dual(sharp.beta));
  CHECK(twice == sharp.beta);
  GradedMatrix comp = compose(sharp.beta, sharp.alpha);
  CHECK(is_zero(comp));
}

TEST_CASE("random monads validate by construction") {
  std::mt19937_64 rng(20240901);
  for (auto raw : {std::vector<long long>{3, 2, 2, 1}, {1, 1, 1, 1}}) {
    Weights w = weight_data(raw);
    for (int trial = 0; trial < 5; ++trial) {
      Monad m = testutil::random_quasilinear_monad(w, rng);
      MonadValidity v = validate_monad(m);
      CHECK(v.composition_zero);
      CHECK(v.alpha_injective == Cert::proven);
      CHECK(v.beta_surjective == Cert::proven);
      CHECK(v.pointwise_bundle == Cert::proven);
      CHECK(v.minimal);
    }
  }
}

TEST_SUITE_END();
