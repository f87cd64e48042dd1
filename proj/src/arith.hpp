#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ppdiv {

using Big = mpz_class;

struct FactorTerm {
  Big prime;
  unsigned exponent = 1;
};

/// Canonical ordered prime-power decomposition. Primes strictly increase,
/// exponents are >= 1, and the empty list stands for the integer 1.
struct Factorization {
  std::vector<FactorTerm> terms;

  Big product() const;
  std::size_t distinct_primes() const { return terms.size(); }
  std::uint64_t divisor_count() const;

  /// Merge p^e in, preserving the ascending prime order.
  void multiply_by(const Big& prime, unsigned exponent);

  /// "2^2·3" style; "1" for the empty product.
  std::string str() const;

  /// Accepts '·', '*' or 'x' as separators, optional whitespace.
  static Factorization parse(const std::string& text);

  bool operator==(const Factorization& other) const;
};

enum class Primality { composite, prime, probable_prime };

/// Smallest-prime-factor table for [2, limit]. Immutable once built; safe to
/// share across threads.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t spf(std::uint64_t n) const { return table_[n]; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> table_;
};

/// Memory allowed for the sieve, from PPDIV_SIEVE_MEMORY_MB (default 2048).
std::uint64_t sieve_memory_budget_bytes();

bool is_prime_u64(std::uint64_t n);

/// Deterministic below 2^64; above, a Baillie-PSW style test plus 21 extra
/// strong rounds (error probability of a wrong probable_prime <= 4^-21).
Primality is_prime(const Big& n);

std::uint64_t smallest_prime_factor(std::uint64_t n, const SpfSieve* sieve = nullptr);

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n,
                                                              const SpfSieve* sieve = nullptr);

Factorization factorize(const Big& n, const SpfSieve* sieve = nullptr);

bool fits_u64(const Big& n);
std::uint64_t to_u64(const Big& n);
Big parse_big(const std::string& text);

}  // namespace ppdiv
