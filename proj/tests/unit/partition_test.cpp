#include <doctest.h>

#include "centra/centralizer.hpp"
#include "centra/partition.hpp"
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

}  // namespace

TEST_CASE("segre indexing of the (3,2,2) example") {
  const auto d = segre_indexing(Partition{3, 2, 2});
  CHECK(d.beta == Partition{3, 2});
  CHECK(d.freq == Partition{1, 2});
  CHECK(d.cumfreq == Partition{1, 3});
  CHECK(d.sigma == Partition{3, 5, 7});
  CHECK(d.tau == Partition{3, 3, 1});
  CHECK(d.r() == 7);
  CHECK(d.m() == 3);
  CHECK(d.h() == 2);
}

TEST_CASE("segre indexing edge cases") {
  const auto single = segre_indexing(Partition{4});
  CHECK(single.beta == Partition{4});
  CHECK(single.freq == Partition{1});
  CHECK(single.cumfreq == Partition{1});
  CHECK(single.sigma == Partition{4});
  CHECK(segre_indexing(Partition{5, 4, 3, 1, 1}).tau == Partition{5, 3, 3, 2, 1});
  CHECK(conjugate_partition(Partition{1, 1, 1, 1}) == Partition{4});
  CHECK(conjugate_partition(Partition{3, 2, 2}) == Partition{3, 3, 1});
}

TEST_CASE("partition validation") {
  CHECK(code_of([] { validate_partition(Partition{2, 3}); }) == ErrorCode::NotSortedDescending);
  CHECK(code_of([] { validate_partition(Partition{2, 0}); }) == ErrorCode::NonPositivePart);
  CHECK(code_of([] { validate_partition(Partition{}); }) == ErrorCode::NonPositivePart);
  CHECK(code_of([] { (void)parse_partition("3,0"); }) == ErrorCode::NonPositivePart);
  CHECK(code_of([] { (void)parse_partition("3,-1"); }) == ErrorCode::NonPositivePart);
  CHECK(code_of([] { (void)parse_partition("1,2"); }) == ErrorCode::NotSortedDescending);
  CHECK(code_of([] { (void)parse_partition("3,,1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)parse_partition("a"); }) == ErrorCode::ParseError);
  CHECK(parse_partition("5, 4,3,1,1") == Partition{5, 4, 3, 1, 1});
  const std::vector<long> raw{3, 2, 0, 0};
  CHECK(normalize_partition(raw) == Partition{3, 2});
  CHECK(format_partition(Partition{5, 3, 3}) == "5,3,3");
}

TEST_CASE("conjugation is an involution and matches direct counting") {
  for (std::size_t r = 1; r <= 10; ++r)
    for (const auto& alpha : partitions_of(r)) {
      const auto tau = conjugate_partition(alpha);
      CHECK(tau == oracle::conjugate_by_counting(alpha));
      CHECK(conjugate_partition(tau) == alpha);
      const auto d = segre_indexing(alpha);
      std::size_t sum_tau = 0, sum_freq = 0;
      for (auto t : d.tau) sum_tau += t;
      for (auto n : d.freq) sum_freq += n;
      CHECK(sum_tau == r);
      CHECK(sum_freq == d.m());
      CHECK(d.sigma.back() == r);
    }
}

TEST_CASE("partitions_of counts") {
  const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (std::size_t n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == expected[n]);
}

TEST_CASE("both centralizer dimension formulas agree on 500 random partitions") {
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto alpha = oracle::random_partition(1 + rng() % 12, rng);
    const std::size_t s = 1 + rng() % 4;
    const auto both = centralizer_dim_formulas(alpha, s);
    std::size_t weighted = 0, squares = 0;
    for (std::size_t k = 0; k < alpha.size(); ++k) weighted += (2 * k + 1) * alpha[k];
    for (auto t : oracle::conjugate_by_counting(alpha)) squares += t * t;
    CHECK(both.segre == s * weighted);
    CHECK(both.weyr == s * squares);
    CHECK(centralizer_dim(alpha, s) == both.segre);
  }
  CHECK(centralizer_dim(Partition{5, 4, 3, 1, 1}, 1) == 48);
  CHECK(centralizer_dim(Partition{5, 4, 3, 1, 1}, 2) == 96);
  CHECK(centralizer_dim(Partition{3, 2}, 3) == 27);
  CHECK(centralizer_dim(Partition{4}, 3) == 12);
}
