#include "arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace ppdiv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Brent's variant of Pollard rho. n must be odd, composite and not a prime
// power of a trial-division prime.
u64 brent_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int power = 1, lam = 0;
    auto step = [&](u64 v) { return (static_cast<u64>(u128(v) * v % n) + c) % n; };
    while (d == 1) {
      if (lam == power) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = step(y);
      ++lam;
      q = mulmod(q, x > y ? x - y : y - x, n);
      if (lam % 64 == 0 || lam == power) {
        d = gcd_u64(q, n);
        q = 1;
      }
    }
    if (d != n) return d;
  }
}

void factor_u64_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho(n);
  factor_u64_rec(d, out);
  factor_u64_rec(n / d, out);
}

constexpr u64 kTrialLimit = 1'000'000;

// Pollard rho on arbitrary-precision composites. Inputs here are never
// adversarial semiprimes; they come from chain constructions with small
// cofactors.
Big brent_rho_big(const Big& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEu);
  for (;;) {
    Big c = rng.get_z_range(n - 1) + 1;
    Big x = rng.get_z_range(n);
    Big y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_gcd(d.get_mpz_t(), Big(x > y ? x - y : y - x).get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_big_rec(const Big& n, std::vector<Big>& out) {
  if (n == 1) return;
  if (is_prime(n) != Primality::composite) {
    out.push_back(n);
    return;
  }
  Big d = brent_rho_big(n);
  factor_big_rec(d, out);
  factor_big_rec(n / d, out);
}

}  // namespace

Big Factorization::product() const {
  Big p = 1;
  for (const auto& t : terms) {
    Big pk;
    mpz_pow_ui(pk.get_mpz_t(), t.prime.get_mpz_t(), t.exponent);
    p *= pk;
  }
  return p;
}

std::uint64_t Factorization::divisor_count() const {
  u64 c = 1;
  for (const auto& t : terms) c *= t.exponent + 1;
  return c;
}

void Factorization::multiply_by(const Big& prime, unsigned exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), prime,
                             [](const FactorTerm& t, const Big& p) { return t.prime < p; });
  if (it != terms.end() && it->prime == prime)
    it->exponent += exponent;
  else
    terms.insert(it, FactorTerm{prime, exponent});
}

std::string Factorization::str() const {
  if (terms.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) out << "·";
    first = false;
    out << t.prime.get_str();
    if (t.exponent != 1) out << '^' << t.exponent;
  }
  return out.str();
}

Factorization Factorization::parse(const std::string& text) {
  Factorization fact;
  std::string cleaned;
  cleaned.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (c == '*' || c == 'x' || c == 'X') {
      cleaned += ' ';
    } else if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      cleaned += ' ';
      ++i;  // UTF-8 middle dot
    } else {
      cleaned += static_cast<char>(c);
    }
  }
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    if (token == "1" && fact.terms.empty() && in.peek() == EOF) break;
    std::string prime_part = token, exp_part;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      prime_part = token.substr(0, caret);
      exp_part = token.substr(caret + 1);
    }
    Big p = parse_big(prime_part);
    unsigned e = 1;
    if (!exp_part.empty()) {
      unsigned long v = std::stoul(exp_part);
      e = static_cast<unsigned>(v);
    }
    if (p < 2 || e < 1) throw std::invalid_argument("bad factorization term: " + token);
    if (!fact.terms.empty() && fact.terms.back().prime >= p)
      throw std::invalid_argument("factorization primes must strictly increase");
    fact.terms.push_back(FactorTerm{p, e});
  }
  return fact;
}

bool Factorization::operator==(const Factorization& other) const {
  if (terms.size() != other.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].prime != other.terms[i].prime || terms[i].exponent != other.terms[i].exponent)
      return false;
  return true;
}

std::uint64_t sieve_memory_budget_bytes() {
  u64 mb = 2048;
  if (const char* env = std::getenv("PPDIV_SIEVE_MEMORY_MB")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) mb = v;
  }
  return mb * 1024 * 1024;
}

SpfSieve::SpfSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
  if (limit > 0xFFFFFFFFull) throw ResourceLimitError("sieve limit exceeds 32-bit prime range");
  u64 bytes = (limit + 1) * sizeof(std::uint32_t);
  if (bytes > sieve_memory_budget_bytes())
    throw ResourceLimitError("sieve of " + std::to_string(limit) +
                             " exceeds the configured memory budget");
  table_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (table_[i] == 0) {
      table_[i] = static_cast<std::uint32_t>(i);
      for (u64 j = i * i; j <= limit; j += i)
        if (table_[j] == 0) table_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // This witness set is deterministic for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

Primality is_prime(const Big& n) {
  if (n < 2) return Primality::composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::prime : Primality::composite;
  // BPSW plus 21 extra strong rounds.
  int r = mpz_probab_prime_p(n.get_mpz_t(), 45);
  if (r == 0) return Primality::composite;
  if (r == 2) return Primality::prime;
  return Primality::probable_prime;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n,
                                                              const SpfSieve* sieve) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<std::pair<u64, unsigned>> fact;
  auto push = [&fact](u64 p) {
    if (!fact.empty() && fact.back().first == p)
      ++fact.back().second;
    else
      fact.emplace_back(p, 1u);
  };
  if (sieve && n <= sieve->limit()) {
    while (n > 1) {
      u64 p = sieve->spf(n);
      push(p);
      n /= p;
    }
    return fact;
  }
  for (u64 d = 2; d <= kTrialLimit && d * d <= n; d = (d == 2 ? 3 : d + 2)) {
    while (n % d == 0) {
      push(d);
      n /= d;
    }
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_u64_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (u64 p : rest) push(p);
  }
  return fact;
}

std::uint64_t smallest_prime_factor(std::uint64_t n, const SpfSieve* sieve) {
  if (n < 2) throw std::invalid_argument("smallest prime factor needs n >= 2");
  if (sieve && n <= sieve->limit()) return sieve->spf(n);
  if (n % 2 == 0) return 2;
  for (u64 d = 3; d <= kTrialLimit && d * d <= n; d += 2)
    if (n % d == 0) return d;
  if (is_prime_u64(n)) return n;
  return factorize_u64(n, sieve).front().first;
}

Factorization factorize(const Big& n, const SpfSieve* sieve) {
  if (n <= 0) throw std::invalid_argument("cannot factorize nonpositive integers");
  Factorization fact;
  if (fits_u64(n)) {
    for (const auto& [p, e] : factorize_u64(to_u64(n), sieve))
      fact.terms.push_back(FactorTerm{Big(static_cast<unsigned long>(p)), e});
    return fact;
  }
  Big m = n;
  auto push = [&fact](const Big& p) {
    if (!fact.terms.empty() && fact.terms.back().prime == p)
      ++fact.terms.back().exponent;
    else
      fact.terms.push_back(FactorTerm{p, 1});
  };
  for (u64 d = 2; d <= kTrialLimit; d = (d == 2 ? 3 : d + 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      push(Big(static_cast<unsigned long>(d)));
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
    }
    if (m == 1) break;
  }
  if (m > 1) {
    std::vector<Big> rest;
    factor_big_rec(m, rest);
    std::sort(rest.begin(), rest.end());
    for (const Big& p : rest) push(p);
  }
  return fact;
}

bool fits_u64(const Big& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Big& n) {
  u64 lo = mpz_get_ui(n.get_mpz_t());
  return lo;
}

Big parse_big(const std::string& text) {
  Big v;
  if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0 || v < 0)
    throw std::invalid_argument("not a nonnegative decimal integer: '" + text + "'");
  return v;
}

}  // namespace ppdiv
