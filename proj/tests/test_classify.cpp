#include "doctest.h"

#include <algorithm>
#include <cstdint>

#include "classify.hpp"
#include "errors.hpp"

using namespace ppdiv;

namespace {

// Largest nontrivial divisor by explicit search; oracle for f.
std::uint64_t brute_f(std::uint64_t n) {
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0) return n - n / d;  // n/d is the largest nontrivial divisor
  return n - 1;
}

std::vector<std::uint64_t> brute_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Exhaustive subset-sum over the proper divisors; oracle for is_pseudoperfect.
bool brute_pseudoperfect(std::uint64_t n) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d : brute_divisors(n))
    if (d < n) divs.push_back(d);
  std::size_t count = divs.size();
  for (std::uint64_t mask = 1; mask < (1ull << count); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (1ull << i)) sum += divs[i];
    if (sum == n) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("f_step examples") {
  CHECK(f_step(15) == 10);
  CHECK(f_step(20) == 10);
  CHECK(f_step(2) == 1);
  CHECK_THROWS_AS(f_step(1), std::invalid_argument);
  CHECK_THROWS_AS(f_step(0), std::invalid_argument);
}

TEST_CASE("f_step matches the divisor-subtraction oracle") {
  SpfSieve sieve(20'000);
  for (std::uint64_t n = 2; n <= 20'000; ++n) CHECK(f_step(n, &sieve) == brute_f(n));
}

TEST_CASE("trajectory examples") {
  SpfSieve sieve(100);
  CHECK(trajectory(20, &sieve) == Trajectory{20, 10, 5, 4, 2, 1});
  CHECK(trajectory(15, &sieve) == Trajectory{15, 10, 5, 4, 2, 1});
  CHECK(trajectory(1) == Trajectory{1});
  CHECK_THROWS_AS(trajectory(0), std::invalid_argument);
}

TEST_CASE("trajectory is strictly decreasing and consistent with f_step") {
  SpfSieve sieve(10'000);
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    Trajectory orbit = trajectory(n, &sieve);
    REQUIRE(orbit.front() == n);
    REQUIRE(orbit.back() == 1);
    for (std::size_t i = 1; i < orbit.size(); ++i) {
      CHECK(orbit[i] < orbit[i - 1]);
      CHECK(orbit[i] == f_step(orbit[i - 1], &sieve));
    }
  }
}

TEST_CASE("is_murthy examples") {
  SpfSieve sieve(30'000);
  CHECK(is_murthy(20, &sieve));
  CHECK_FALSE(is_murthy(23994, &sieve));
  CHECK(is_murthy(1));
  CHECK_THROWS_AS(is_murthy(0), std::invalid_argument);
}

TEST_CASE("is_murthy equals the orbit-set-equals-divisor-set oracle") {
  SpfSieve sieve(2'000);
  for (std::uint64_t n = 1; n <= 2'000; ++n) {
    Trajectory orbit = trajectory(n, &sieve);
    std::sort(orbit.begin(), orbit.end());
    CHECK(is_murthy(n, &sieve) == (orbit == brute_divisors(n)));
  }
}

TEST_CASE("chain condition examples") {
  CHECK(chain_condition(factorize(1806)));
  CHECK(chain_condition(Factorization{}));
  CHECK_FALSE(chain_condition(factorize(23994)));
}

TEST_CASE("chain condition is equivalent to is_murthy") {
  SpfSieve sieve(20'000);
  for (std::uint64_t n = 1; n <= 20'000; ++n)
    CHECK(is_murthy(n, &sieve) ==
          chain_condition(factorize(Big(static_cast<unsigned long>(n)), &sieve)));
}

TEST_CASE("is_pseudoperfect examples") {
  CHECK(is_pseudoperfect(20));
  CHECK(is_pseudoperfect(6));
  CHECK_FALSE(is_pseudoperfect(2));
  CHECK_FALSE(is_pseudoperfect(1));
  CHECK_THROWS_AS(is_pseudoperfect(0), std::invalid_argument);
  CHECK_THROWS_AS(is_pseudoperfect(kSubsetSumCap + 1), ResourceLimitError);
}

TEST_CASE("is_pseudoperfect agrees with exhaustive subset enumeration") {
  SpfSieve sieve(600);
  for (std::uint64_t n = 1; n <= 600; ++n)
    CHECK(is_pseudoperfect(n, &sieve) == brute_pseudoperfect(n));
}

TEST_CASE("primary pseudoperfect scan") {
  SpfSieve sieve(10'000);
  std::vector<std::uint64_t> found;
  for (std::uint64_t n = 2; n <= 10'000; ++n)
    if (is_primary_pseudoperfect(n, &sieve)) found.push_back(n);
  CHECK(found == std::vector<std::uint64_t>{2, 6, 42, 1806});
  CHECK_FALSE(is_primary_pseudoperfect(20));
  CHECK_THROWS_AS(is_primary_pseudoperfect(1), std::invalid_argument);
}

TEST_CASE("giuga examples") {
  CHECK(is_giuga(30));
  CHECK(is_giuga(858));
  CHECK_FALSE(is_giuga(4));
  CHECK_FALSE(is_giuga(30030));
  CHECK_THROWS_AS(is_giuga(1), std::invalid_argument);
}

TEST_CASE("prime power pseudoperfect examples") {
  SpfSieve sieve(30'000);
  CHECK(is_pp_pseudoperfect(20, &sieve));
  CHECK(is_pp_pseudoperfect(23994, &sieve));
  CHECK_FALSE(is_pp_pseudoperfect(558, &sieve));
  CHECK_THROWS_AS(is_pp_pseudoperfect(1), std::invalid_argument);
}

TEST_CASE("prime power giuga excess") {
  SpfSieve sieve(10'000);
  Rational r12 = pp_giuga_excess(12, &sieve);
  CHECK(r12.num == 1);
  CHECK(r12.den == 1);
  Rational r858 = pp_giuga_excess(858, &sieve);
  CHECK(r858.num == 1);
  CHECK(r858.den == 1);
  Rational r5202 = pp_giuga_excess(5202, &sieve);
  CHECK(r5202.den != 1);
  CHECK_THROWS_AS(pp_giuga_excess(7), std::invalid_argument);
  CHECK_THROWS_AS(pp_giuga_excess(1), std::invalid_argument);
  CHECK(is_pp_giuga(306, &sieve));
  CHECK_FALSE(is_pp_giuga(5202, &sieve));
}

TEST_CASE("factored-form predicates match the direct ones") {
  SpfSieve sieve(30'000);
  for (std::uint64_t n : {20ull, 23994ull, 558ull, 306ull, 5202ull, 12ull, 16ull}) {
    Factorization fact = factorize(Big(static_cast<unsigned long>(n)), &sieve);
    CHECK(pp_pseudoperfect_of(fact) == is_pp_pseudoperfect(n, &sieve));
    if (!is_prime_u64(n)) CHECK(pp_giuga_of(fact) == is_pp_giuga(n, &sieve));
  }
}

TEST_CASE("extended Fermat prime levels") {
  CHECK(efp_level(2) == 0u);
  CHECK(efp_level(43) == 3u);
  CHECK(efp_level(11) == std::nullopt);
  CHECK(efp_level(4) == std::nullopt);  // composite, not an error
  CHECK_THROWS_AS(efp_level(1), std::invalid_argument);
}

TEST_CASE("efp level with supplied factorization") {
  CHECK(efp_level(77659, Factorization::parse("2·3·7·43^2")) == 4u);
  CHECK_THROWS_AS(efp_level(77659, Factorization::parse("2·3·7")), std::invalid_argument);
  // beyond the factoring budget without a supplied factorization
  Big m127 = (Big(1) << 127) - 1;
  CHECK_THROWS_AS(efp_level(m127), ResourceLimitError);
}

TEST_CASE("efp bridge: defined iff p = 2 or p - 1 is a chain number") {
  SpfSieve sieve(100'000);
  for (std::uint64_t p = 2; p <= 100'000; ++p) {
    if (!is_prime_u64(p)) continue;
    auto level = efp_level(Big(static_cast<unsigned long>(p)), std::nullopt, &sieve);
    CHECK(level.has_value() == (p == 2 || is_murthy(p - 1, &sieve)));
    if (level)
      CHECK(*level == factorize(Big(static_cast<unsigned long>(p - 1)), &sieve).distinct_primes());
  }
}

TEST_CASE("level-1 extended Fermat primes below 70000 are the Fermat primes") {
  SpfSieve sieve(70'000);
  std::vector<std::uint64_t> level1;
  for (std::uint64_t p = 3; p <= 70'000; ++p) {
    if (!is_prime_u64(p)) continue;
    auto level = efp_level(Big(static_cast<unsigned long>(p)), std::nullopt, &sieve);
    bool pm1_power_of_2 = ((p - 1) & (p - 2)) == 0;
    CHECK((level == 1u) == pm1_power_of_2);
    if (level == 1u) level1.push_back(p);
  }
  CHECK(level1 == std::vector<std::uint64_t>{3, 5, 17, 257, 65537});
}

TEST_CASE("classify_all examples") {
  SpfSieve sieve(30'000);
  Classification c20 = classify_all(20, &sieve);
  CHECK(c20.pp_pseudoperfect);
  CHECK(c20.murthy);
  CHECK_FALSE(c20.pp_giuga);
  CHECK(c20.pseudoperfect);
  CHECK_FALSE(c20.primary_pseudoperfect);

  Classification c30 = classify_all(30, &sieve);
  CHECK(c30.giuga);
  CHECK(c30.pp_giuga);
  CHECK_FALSE(c30.murthy);

  Classification c4 = classify_all(4, &sieve);
  CHECK(c4.pp_pseudoperfect);
  CHECK(c4.murthy);
  CHECK_FALSE(c4.pseudoperfect);

  CHECK_THROWS_AS(classify_all(1, &sieve), std::invalid_argument);
}

TEST_CASE("class containments hold below 20000") {
  SpfSieve sieve(20'000);
  for (std::uint64_t n = 2; n <= 20'000; ++n) {
    bool pp_pseudo = is_pp_pseudoperfect(n, &sieve);
    if (is_primary_pseudoperfect(n, &sieve)) CHECK(pp_pseudo);
    if (is_giuga(n, &sieve)) CHECK(is_pp_giuga(n, &sieve));
    if (pp_pseudo && (n & (n - 1)) != 0) CHECK(is_pseudoperfect(n, &sieve));
    if (is_murthy(n, &sieve)) CHECK(pp_pseudo);
  }
}
