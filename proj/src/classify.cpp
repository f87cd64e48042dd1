#include "classify.hpp"

#include <stdexcept>

#include "errors.hpp"

namespace ppdiv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u64> divisors_of(u64 n, const SpfSieve* sieve) {
  std::vector<u64> divs{1};
  for (const auto& [p, a] : factorize_u64(n, sieve)) {
    std::size_t count = divs.size();
    u64 pk = 1;
    for (unsigned j = 0; j < a; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Sum of n/p^k over all prime power divisors p^k | n.
u128 prime_power_cofactor_sum(u64 n, const SpfSieve* sieve) {
  u128 sum = 0;
  for (const auto& [p, a] : factorize_u64(n, sieve)) {
    u64 pk = 1;
    for (unsigned j = 0; j < a; ++j) {
      pk *= p;
      sum += n / pk;
    }
  }
  return sum;
}

Big sum_of_cofactors(const Factorization& fact, const Big& n) {
  Big sum = 0;
  for (const auto& t : fact.terms) {
    Big pk = 1;
    for (unsigned j = 0; j < t.exponent; ++j) {
      pk *= t.prime;
      sum += n / pk;
    }
  }
  return sum;
}

}  // namespace

std::uint64_t f_step(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("f is defined for n >= 2");
  u64 p = smallest_prime_factor(n, sieve);
  return (p - 1) * (n / p);
}

Trajectory trajectory(std::uint64_t n, const SpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("trajectory is defined for n >= 1");
  Trajectory orbit{n};
  while (n > 1) {
    n = f_step(n, sieve);
    orbit.push_back(n);
  }
  return orbit;
}

bool is_murthy(std::uint64_t n, const SpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n == 1) return true;
  u64 tau = 1;
  for (const auto& [p, a] : factorize_u64(n, sieve)) tau *= a + 1;
  // Iterates are distinct and decreasing, so F_n = D_n iff every iterate
  // divides n and the orbit length equals the divisor count.
  u64 m = n;
  u64 steps = 1;
  while (m > 1) {
    m = f_step(m, sieve);
    if (n % m != 0) return false;
    if (++steps > tau) return false;
  }
  return steps == tau;
}

bool chain_condition(const Factorization& fact) {
  Big prefix = 1;
  for (const auto& t : fact.terms) {
    if (t.prime - 1 != prefix) return false;
    Big pk;
    mpz_pow_ui(pk.get_mpz_t(), t.prime.get_mpz_t(), t.exponent);
    prefix *= pk;
  }
  return true;
}

bool is_pseudoperfect(std::uint64_t n, const SpfSieve* sieve, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > cap)
    throw ResourceLimitError("subset-sum check capped at " + std::to_string(cap));
  if (n == 1) return false;
  std::size_t words = static_cast<std::size_t>(n / 64) + 1;
  std::vector<u64> bits(words, 0);
  bits[0] = 1;
  auto test_target = [&] { return (bits[n >> 6] >> (n & 63)) & 1; };
  for (u64 d : divisors_of(n, sieve)) {
    if (d == n) continue;
    std::size_t off = d >> 6;
    unsigned sh = d & 63;
    for (std::size_t i = words; i-- > off;) {
      u64 v = bits[i - off] << sh;
      if (sh && i - off > 0) v |= bits[i - off - 1] >> (64 - sh);
      bits[i] |= v;
    }
    if (test_target()) return true;
  }
  return false;
}

bool is_primary_pseudoperfect(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  u128 sum = 1;
  for (const auto& [p, a] : factorize_u64(n, sieve)) sum += n / p;
  return sum == n;
}

bool is_giuga(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  auto fact = factorize_u64(n, sieve);
  if (fact.size() == 1 && fact[0].second == 1) return false;  // prime
  u128 sum = 0;
  for (const auto& [p, a] : fact) sum += n / p;
  return sum > 1 && (sum - 1) % n == 0;
}

bool is_pp_pseudoperfect(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return prime_power_cofactor_sum(n, sieve) + 1 == n;
}

Rational pp_giuga_excess(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (is_prime_u64(n))
    throw std::invalid_argument("the excess is defined for composite n only");
  u128 sum = prime_power_cofactor_sum(n, sieve);
  Big num = Big(static_cast<unsigned long>(sum >> 64)) << 64;
  num += static_cast<unsigned long>(sum);
  num -= 1;
  Big den = n;
  Big g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Rational{num / g, den / g};
}

bool is_pp_giuga(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (is_prime_u64(n)) return false;
  u128 sum = prime_power_cofactor_sum(n, sieve);
  return sum > 1 && (sum - 1) % n == 0;
}

bool pp_pseudoperfect_of(const Factorization& fact) {
  if (fact.terms.empty()) return false;  // n = 1
  Big n = fact.product();
  return sum_of_cofactors(fact, n) + 1 == n;
}

Rational pp_giuga_excess_of(const Factorization& fact) {
  Big n = fact.product();
  if (n < 2 || (fact.terms.size() == 1 && fact.terms[0].exponent == 1))
    throw std::invalid_argument("the excess is defined for composite n only");
  Big num = sum_of_cofactors(fact, n) - 1;
  Big den = n;
  Big g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Rational{num / g, den / g};
}

bool pp_giuga_of(const Factorization& fact) {
  if (fact.terms.empty() || (fact.terms.size() == 1 && fact.terms[0].exponent == 1))
    return false;
  return pp_giuga_excess_of(fact).is_positive_integer();
}

std::optional<unsigned> efp_level(const Big& p,
                                  const std::optional<Factorization>& fact_of_p_minus_1,
                                  const SpfSieve* sieve) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (is_prime(p) == Primality::composite) return std::nullopt;
  Big pm1 = p - 1;
  Factorization fact;
  if (fact_of_p_minus_1) {
    if (fact_of_p_minus_1->product() != pm1)
      throw std::invalid_argument("supplied factorization does not match p - 1");
    fact = *fact_of_p_minus_1;
  } else if (fits_u64(pm1)) {
    fact = factorize(pm1, sieve);
  } else {
    throw ResourceLimitError("p - 1 exceeds the factoring budget; supply its factorization");
  }
  if (!chain_condition(fact)) return std::nullopt;
  return static_cast<unsigned>(fact.distinct_primes());
}

Classification classify_all(std::uint64_t n, const SpfSieve* sieve,
                            std::uint64_t subset_sum_cap) {
  if (n < 2) throw std::invalid_argument("classification is defined for n >= 2");
  Classification c;
  c.n = n;
  c.factorization = factorize(Big(static_cast<unsigned long>(n)), sieve);
  c.pseudoperfect = is_pseudoperfect(n, sieve, subset_sum_cap);
  c.primary_pseudoperfect = is_primary_pseudoperfect(n, sieve);
  c.giuga = is_giuga(n, sieve);
  c.pp_pseudoperfect = is_pp_pseudoperfect(n, sieve);
  c.pp_giuga = is_pp_giuga(n, sieve);
  c.murthy = is_murthy(n, sieve);
  c.efp_level = efp_level(Big(static_cast<unsigned long>(n)), std::nullopt, sieve);
  return c;
}

}  // namespace ppdiv
