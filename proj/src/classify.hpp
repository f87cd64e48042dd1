#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arith.hpp"

namespace ppdiv {

/// Orbit of the divisor-subtraction map, from n down to 1, strictly
/// decreasing.
using Trajectory = std::vector<std::uint64_t>;

struct Classification {
  std::uint64_t n = 0;
  Factorization factorization;
  bool pseudoperfect = false;
  bool primary_pseudoperfect = false;
  bool giuga = false;
  bool pp_pseudoperfect = false;
  bool pp_giuga = false;
  bool murthy = false;
  std::optional<unsigned> efp_level;
};

/// Exact rational with positive denominator, in lowest terms.
struct Rational {
  Big num;
  Big den;
  bool is_positive_integer() const { return den == 1 && num >= 1; }
};

/// n - 1 for prime n, otherwise n minus its largest nontrivial divisor,
/// computed as (p - 1) * n / p for p the smallest prime factor.
std::uint64_t f_step(std::uint64_t n, const SpfSieve* sieve = nullptr);

Trajectory trajectory(std::uint64_t n, const SpfSieve* sieve = nullptr);

/// True iff the orbit of n is exactly the divisor set of n. Bails out as
/// soon as an iterate fails to divide n.
bool is_murthy(std::uint64_t n, const SpfSieve* sieve = nullptr);

/// For the ascending factorization prod p_i^{a_i}: each p_i - 1 must equal
/// prod_{j<i} p_j^{a_j}. Vacuously true for the empty factorization.
bool chain_condition(const Factorization& fact);

inline constexpr std::uint64_t kSubsetSumCap = 1'000'000;

/// Subset-sum over the proper divisors with target n.
bool is_pseudoperfect(std::uint64_t n, const SpfSieve* sieve = nullptr,
                      std::uint64_t cap = kSubsetSumCap);

bool is_primary_pseudoperfect(std::uint64_t n, const SpfSieve* sieve = nullptr);

bool is_giuga(std::uint64_t n, const SpfSieve* sieve = nullptr);

bool is_pp_pseudoperfect(std::uint64_t n, const SpfSieve* sieve = nullptr);

/// Sum of 1/p^k over prime power divisors of n, minus 1/n. n must be
/// composite.
Rational pp_giuga_excess(std::uint64_t n, const SpfSieve* sieve = nullptr);

bool is_pp_giuga(std::uint64_t n, const SpfSieve* sieve = nullptr);

// Factored-form variants for integers carried as products (no re-factoring).
bool pp_pseudoperfect_of(const Factorization& fact);
Rational pp_giuga_excess_of(const Factorization& fact);
bool pp_giuga_of(const Factorization& fact);

/// Level of p as an extended Fermat prime: the number of distinct primes of
/// p - 1 when p is prime and p - 1 satisfies the chain condition, otherwise
/// nullopt. Callers must supply the factorization of p - 1 when it exceeds
/// the factoring budget.
std::optional<unsigned> efp_level(const Big& p,
                                  const std::optional<Factorization>& fact_of_p_minus_1 =
                                      std::nullopt,
                                  const SpfSieve* sieve = nullptr);

Classification classify_all(std::uint64_t n, const SpfSieve* sieve = nullptr,
                            std::uint64_t subset_sum_cap = kSubsetSumCap);

}  // namespace ppdiv
