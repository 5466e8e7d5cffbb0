#include <doctest.h>

#include <set>

#include "centra/canonical_forms.hpp"
#include "centra/text_io.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

template <ExactField F>
Matrix<F> mat(const F& f, std::size_t r, std::size_t c, std::initializer_list<long> values) {
  std::vector<ElementOf<F>> e;
  for (long v : values) e.push_back(f.from_int(v));
  return Matrix<F>(f, r, c, e);
}

/// Irreducible test polynomials over GF(3), one per degree 1..3.
std::vector<Poly<PrimeField>> gf3_corpus() {
  const PrimeField f3(3);
  return {parse_poly(f3, "x+1"), parse_poly(f3, "x^2+1"), parse_poly(f3, "x^3+2*x+1")};
}

}  // namespace

TEST_CASE("companion matrix") {
  const PrimeField f3(3);
  CHECK(companion(parse_poly(f3, "x^2+1")) == mat(f3, 2, 2, {0, 2, 1, 0}));
  const RationalField q;
  CHECK(companion(parse_poly(q, "x-7/2")) == Matrix<RationalField>(q, 1, 1, {Rational(7, 2)}));
  CHECK(companion(parse_poly(q, "x^3-2*x+5")) == mat(q, 3, 3, {0, 0, -5, 1, 0, 2, 0, 1, 0}));
  CHECK(code_of([&] { (void)companion(parse_poly(q, "2*x+1")); }) == ErrorCode::NotMonic);
}

TEST_CASE("corner matrix E") {
  const PrimeField f2(2);
  CHECK(e_matrix(f2, 1) == mat(f2, 1, 1, {1}));
  CHECK(e_matrix(f2, 3) == mat(f2, 3, 3, {0, 0, 1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("generalized Jordan blocks") {
  const PrimeField f3(3);
  const auto p = parse_poly(f3, "x^2+1");
  CHECK(gj_block(p, 1, FormKind::EKind) == companion(p));
  const RationalField q;
  const auto lambda = Rational(-3, 4);
  CHECK(gj_block(parse_poly(q, "x+3/4"), 3, FormKind::EKind) == oracle::classical_lower_jordan(q, lambda, {3}));
  const auto g = gj_block(p, 3, FormKind::FirstKind);
  CHECK(g.block(2, 0, 2, 2) == Matrix<PrimeField>::identity(f3, 2));
  CHECK(g.block(0, 2, 2, 2).is_zero());
  CHECK(code_of([&] { (void)gj_block(parse_poly(RationalFunctionField(2), "x^2+t"), 2, FormKind::FirstKind); }) ==
        ErrorCode::NonSeparableFirstKind);
}

TEST_CASE("make_spec validation") {
  const PrimeField f2(2);
  CHECK(code_of([&] { (void)make_spec(parse_poly(f2, "x^2+1"), Partition{1}, FormKind::EKind); }) ==
        ErrorCode::NotIrreducible);
  CHECK(code_of([&] { (void)make_spec(parse_poly(f2, "x^2+x+1"), Partition{1, 2}, FormKind::EKind); }) ==
        ErrorCode::NotSortedDescending);
  const RationalFunctionField ft(2);
  CHECK(code_of([&] { (void)make_spec(parse_poly(ft, "x^2+t"), Partition{2}, FormKind::EKind); }) ==
        ErrorCode::IrreducibilityUnsupported);
  CHECK(code_of([&] { (void)make_spec(parse_poly(ft, "x^2+t"), Partition{2}, FormKind::FirstKind, true); }) ==
        ErrorCode::NonSeparableFirstKind);
  const auto spec = make_spec(parse_poly(ft, "x^2+t"), Partition{2, 1}, FormKind::EKind, true);
  CHECK(spec.n() == 6);
  CHECK(spec.s() == 2);
}

TEST_CASE("generalized Jordan form shapes") {
  const PrimeField f3(3);
  const auto p = parse_poly(f3, "x^2+1");
  const auto c = companion(p);
  const auto e = e_matrix(f3, 2);
  const auto g32 = gj_form(make_spec(p, Partition{3, 2}, FormKind::EKind));
  CHECK(g32 == block_diagonal(f3, {gj_block(p, 3, FormKind::EKind), gj_block(p, 2, FormKind::EKind)}));
  CHECK(gj_form(make_spec(p, Partition{1}, FormKind::EKind)) == c);

  const auto g = gj_form(make_spec(p, Partition{5, 4, 3, 1, 1}, FormKind::EKind));
  REQUIRE(g.rows() == 28);
  const std::set<std::pair<int, int>> e_at = {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {7, 6},
                                              {8, 7}, {9, 8}, {11, 10}, {12, 11}};
  for (int r = 1; r <= 14; ++r)
    for (int col = 1; col <= 14; ++col) {
      const auto blk = g.block((r - 1) * 2, (col - 1) * 2, 2, 2);
      if (r == col)
        CHECK(blk == c);
      else if (e_at.count({r, col}))
        CHECK(blk == e);
      else
        CHECK(blk.is_zero());
    }
}

TEST_CASE("s = 1 reduces to classical Jordan and Weyr matrices") {
  const PrimeField f5(5);
  const auto p = parse_poly(f5, "x+3");
  const auto lambda = f5.from_int(2);
  for (std::size_t r = 1; r <= 7; ++r)
    for (const auto& alpha : partitions_of(r)) {
      const auto spec = make_spec(p, alpha, FormKind::EKind);
      CHECK(gj_form(spec) == oracle::classical_lower_jordan(f5, lambda, alpha));
      CHECK(weyr_form(spec) == oracle::classical_upper_weyr(f5, lambda, oracle::conjugate_by_counting(alpha)));
    }
}

TEST_CASE("D+N split") {
  const PrimeField f3(3);
  const auto first = make_spec(parse_poly(f3, "x^2+1"), Partition{2}, FormKind::FirstKind);
  const auto dn = dn_split(first);
  CHECK(dn.d + dn.n == gj_form(first));
  CHECK(dn.d * dn.n == dn.n * dn.d);

  const RationalFunctionField ft(2);
  const auto nonsep = make_spec(parse_poly(ft, "x^2+t"), Partition{2}, FormKind::EKind, true);
  const auto dn2 = dn_split(nonsep);
  CHECK(dn2.d + dn2.n == gj_form(nonsep));
  CHECK_FALSE(dn2.d * dn2.n == dn2.n * dn2.d);

  const auto single = dn_split(make_spec(parse_poly(f3, "x^2+1"), Partition{1}, FormKind::EKind));
  CHECK(single.n.is_zero());
}

TEST_CASE("first-kind D and N commute across the corpus") {
  for (const auto& p : gf3_corpus())
    for (std::size_t r = 1; r <= 5; ++r)
      for (const auto& alpha : partitions_of(r)) {
        const auto dn = dn_split(make_spec(p, alpha, FormKind::FirstKind));
        CHECK(dn.d * dn.n == dn.n * dn.d);
      }
}

TEST_CASE("Weyr permutation of the (3,2,2) example") {
  const PrimeField f2(2);
  const auto spec = make_spec(parse_poly(f2, "x^2+x+1"), Partition{3, 2, 2}, FormKind::EKind);
  const auto perm = weyr_permutation(spec);
  CHECK(perm.order == std::vector<std::size_t>{2, 4, 6, 1, 3, 5, 0});
  CHECK(weyr_levels(spec.segre) == std::vector<std::vector<std::size_t>>{{3, 5, 7}, {2, 4, 6}, {1}});
  const auto p = permutation_matrix(f2, perm);
  CHECK(p * p.transpose() == Matrix<PrimeField>::identity(f2, 14));
  const auto single = weyr_permutation(make_spec(parse_poly(f2, "x"), Partition{1}, FormKind::EKind));
  CHECK(single.order == std::vector<std::size_t>{0});
}

TEST_CASE("Weyr form of the (3,2,2) example matches the printed 7-block matrix") {
  const PrimeField f3(3);
  const auto p = parse_poly(f3, "x^2+1");
  const auto spec = make_spec(p, Partition{3, 2, 2}, FormKind::EKind);
  const auto w = weyr_form(spec);
  const auto c = companion(p);
  const auto e = e_matrix(f3, 2);
  for (std::size_t r = 0; r < 7; ++r) {
    std::istringstream row(golden::kWeyr322[r]);
    for (std::size_t col = 0; col < 7; ++col) {
      std::string tok;
      row >> tok;
      const auto blk = w.block(r * 2, col * 2, 2, 2);
      if (tok == "C")
        CHECK(blk == c);
      else if (tok == "E")
        CHECK(blk == e);
      else
        CHECK(blk.is_zero());
    }
  }
  const auto g = gj_form(spec);
  const auto pm = oracle::explicit_permutation(f3, 2, weyr_permutation(spec).order);
  CHECK(oracle::naive_product(pm.transpose(), oracle::naive_product(g, pm)) == w);
}

TEST_CASE("Weyr form of the (5,4,3,1,1) example") {
  const PrimeField f3(3);
  const auto p = parse_poly(f3, "x^2+1");
  const auto w = weyr_form(make_spec(p, Partition{5, 4, 3, 1, 1}, FormKind::EKind));
  const auto c = companion(p);
  const auto e = e_matrix(f3, 2);
  const std::set<std::pair<int, int>> e_at = {{1, 6}, {2, 7}, {3, 8}, {6, 9}, {7, 10}, {8, 11}, {9, 12}, {10, 13}, {12, 14}};
  for (int r = 1; r <= 14; ++r)
    for (int col = 1; col <= 14; ++col) {
      const auto blk = w.block((r - 1) * 2, (col - 1) * 2, 2, 2);
      if (r == col)
        CHECK(blk == c);
      else if (e_at.count({r, col}))
        CHECK(blk == e);
      else
        CHECK(blk.is_zero());
    }
}

TEST_CASE("conjugation identity and Weyr characteristic on the corpus") {
  const RationalFunctionField ft(2);
  const auto nonsep = parse_poly(ft, "x^2+t");
  for (std::size_t r = 1; r <= 6; ++r)
    for (const auto& alpha : partitions_of(r)) {
      for (const auto& p : gf3_corpus())
        for (auto kind : {FormKind::EKind, FormKind::FirstKind}) {
          const auto spec = make_spec(p, alpha, kind);
          const auto g = gj_form(spec);
          const auto w = weyr_form(spec);
          CHECK(conjugate_by_permutation(g, weyr_permutation(spec)) == w);
          CHECK(weyr_characteristic(w, p) == oracle::conjugate_by_counting(alpha));
          CHECK(weyr_characteristic(g, p) == oracle::conjugate_by_counting(alpha));
        }
      if (r <= 4) {
        const auto spec = make_spec(nonsep, alpha, FormKind::EKind, true);
        CHECK(conjugate_by_permutation(gj_form(spec), weyr_permutation(spec)) == weyr_form(spec));
        CHECK(weyr_characteristic(weyr_form(spec), nonsep) == oracle::conjugate_by_counting(alpha));
      }
    }
}

TEST_CASE("Weyr characteristic edge cases") {
  const PrimeField f3(3);
  const auto p = parse_poly(f3, "x^2+1");
  CHECK(weyr_characteristic(weyr_form(make_spec(p, Partition{1}, FormKind::EKind)), p) == Partition{1});
  // p = (x+1)^2 has s = 2, but p(diag(2,0)) = diag(0,1) has a one-dimensional kernel
  CHECK(code_of([&] { (void)weyr_characteristic(mat(f3, 2, 2, {2, 0, 0, 0}), parse_poly(f3, "x^2+2*x+1")); }) ==
        ErrorCode::NotMultipleOfS);
}

TEST_CASE("minimal polynomial is exactly p^alpha_1") {
  const RationalFunctionField ft(3);
  for (const auto& p : gf3_corpus())
    for (std::size_t r = 1; r <= 5; ++r)
      for (const auto& alpha : partitions_of(r))
        for (auto kind : {FormKind::EKind, FormKind::FirstKind}) {
          const auto g = gj_form(make_spec(p, alpha, kind));
          const auto pg = eval_poly_at_matrix(p, g);
          CHECK(matrix_power(pg, alpha.front()).is_zero());
          CHECK_FALSE(matrix_power(pg, alpha.front() - 1).is_zero());
          CHECK(eval_poly_at_matrix(pow(p, alpha.front()), g).is_zero());
        }
  const auto q = parse_poly(ft, "x^3-t");
  const auto g = gj_form(make_spec(q, Partition{2, 2, 1}, FormKind::EKind, true));
  CHECK(eval_poly_at_matrix(pow(q, 2), g).is_zero());
  CHECK_FALSE(eval_poly_at_matrix(q, g).is_zero());
}

TEST_CASE("first-kind and E-kind forms share rank sequences") {
  for (const auto& p : gf3_corpus())
    for (std::size_t r = 1; r <= 6; ++r)
      for (const auto& alpha : partitions_of(r)) {
        const auto ge = gj_form(make_spec(p, alpha, FormKind::EKind));
        const auto gf = gj_form(make_spec(p, alpha, FormKind::FirstKind));
        const auto pe = eval_poly_at_matrix(p, ge);
        const auto pf = eval_poly_at_matrix(p, gf);
        for (std::size_t k = 0; k <= alpha.front(); ++k) CHECK(rank(matrix_power(pe, k)) == rank(matrix_power(pf, k)));
      }
}
