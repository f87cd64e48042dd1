#include "enumerate.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "classify.hpp"
#include "errors.hpp"

namespace ppdiv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

using SmallFactors = std::vector<std::pair<u64, unsigned>>;

void factor_with_sieve(u64 n, const SpfSieve& sieve, SmallFactors& out) {
  out.clear();
  while (n > 1) {
    u64 p = sieve.spf(n);
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.emplace_back(p, e);
  }
}

u128 cofactor_sum(u64 n, const SmallFactors& fact) {
  u128 sum = 0;
  for (const auto& [p, a] : fact) {
    u64 pk = 1;
    for (unsigned j = 0; j < a; ++j) {
      pk *= p;
      sum += n / pk;
    }
  }
  return sum;
}

bool composite(const SmallFactors& fact) {
  return fact.size() > 1 || (fact.size() == 1 && fact[0].second > 1);
}

// Scans [2, limit] in fixed-size blocks, in parallel, and merges hits in
// block order so the result is deterministic.
template <typename Pred>
std::vector<u64> block_scan(u64 limit, const SpfSieve& sieve, unsigned threads, Pred pred) {
  if (limit < 2 || limit > sieve.limit())
    throw std::invalid_argument("limit must lie in [2, sieve limit]");
  constexpr u64 kBlock = 1 << 17;
  std::size_t block_count = static_cast<std::size_t>((limit - 1 + kBlock) / kBlock);
  std::vector<std::vector<u64>> hits(block_count);
  std::atomic<std::size_t> next{0};
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  auto work = [&] {
    SmallFactors fact;
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= block_count) return;
      u64 lo = 2 + b * kBlock;
      u64 hi = std::min(limit, lo + kBlock - 1);
      for (u64 n = lo; n <= hi; ++n) {
        factor_with_sieve(n, sieve, fact);
        if (pred(n, fact)) hits[b].push_back(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<u64> out;
  for (auto& block : hits) out.insert(out.end(), block.begin(), block.end());
  return out;
}

bool pp_giuga_hit(u64 n, const SmallFactors& fact) {
  if (!composite(fact)) return false;
  u128 sum = cofactor_sum(n, fact);
  return sum > 1 && (sum - 1) % n == 0;
}

}  // namespace

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::root: return "root";
    case EdgeKind::times_largest_prime: return "times-largest-prime";
    case EdgeKind::times_n_plus_1: return "times-n-plus-1";
    case EdgeKind::efp_child: return "efp-child";
  }
  return "?";
}

std::vector<long> GenTree::children_of(long index) const {
  std::vector<long> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].parent == index) out.push_back(static_cast<long>(i));
  return out;
}

std::vector<std::uint64_t> enumerate_pp_pseudoperfect(std::uint64_t limit, const SpfSieve& sieve,
                                                      unsigned threads) {
  return block_scan(limit, sieve, threads, [](u64 n, const SmallFactors& fact) {
    return cofactor_sum(n, fact) + 1 == n;
  });
}

std::vector<std::uint64_t> enumerate_pp_giuga(std::uint64_t limit, const SpfSieve& sieve,
                                              unsigned threads) {
  return block_scan(limit, sieve, threads, pp_giuga_hit);
}

std::vector<std::uint64_t> enumerate_murthy(std::uint64_t limit, const SpfSieve& sieve) {
  if (limit < 2 || limit > sieve.limit())
    throw std::invalid_argument("limit must lie in [2, sieve limit]");
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n)
    if (is_murthy(n, &sieve)) out.push_back(n);
  return out;
}

GenTree build_murthy_tree(const Big& value_limit, int depth_limit, const SpfSieve* sieve) {
  (void)sieve;
  if (value_limit < 2) throw std::invalid_argument("value limit must be at least 2");
  GenTree tree;
  Factorization two;
  two.terms.push_back(FactorTerm{2, 1});
  tree.nodes.push_back(TreeNode{Big(2), two, -1, EdgeKind::root, 0});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    TreeNode node = tree.nodes[i];  // copy; the vector reallocates below
    if (depth_limit >= 0 && node.level >= static_cast<unsigned>(depth_limit)) continue;
    const Big& p = node.fact.terms.back().prime;
    Big grown = node.value * p;
    if (grown <= value_limit) {
      Factorization f = node.fact;
      f.multiply_by(p, 1);
      tree.nodes.push_back(TreeNode{grown, f, static_cast<long>(i),
                                    EdgeKind::times_largest_prime, node.level + 1});
    }
    Big succ = node.value + 1;
    if (is_prime(succ) != Primality::composite) {
      Big grown2 = node.value * succ;
      if (grown2 <= value_limit) {
        Factorization f = node.fact;
        f.multiply_by(succ, 1);
        tree.nodes.push_back(TreeNode{grown2, f, static_cast<long>(i),
                                      EdgeKind::times_n_plus_1, node.level + 1});
      }
    }
  }
  return tree;
}

GenTree build_efp_tree(const Big& prime_limit, unsigned exponent_limit) {
  if (prime_limit < 2) throw std::invalid_argument("prime limit must be at least 2");
  if (exponent_limit < 1) throw std::invalid_argument("exponent limit must be at least 1");
  GenTree tree;
  tree.nodes.push_back(TreeNode{Big(2), Factorization{}, -1, EdgeKind::root, 0});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    TreeNode node = tree.nodes[i];
    const Big& p = node.value;
    Big chain = node.fact.product();  // = p - 1
    Big pk = 1;
    for (unsigned k = 1; k <= exponent_limit; ++k) {
      pk *= p;
      Big candidate = chain * pk + 1;
      if (candidate > prime_limit) break;
      if (is_prime(candidate) == Primality::composite) continue;
      Factorization f = node.fact;
      f.multiply_by(p, k);
      tree.nodes.push_back(
          TreeNode{candidate, f, static_cast<long>(i), EdgeKind::efp_child, node.level + 1});
    }
  }
  return tree;
}

std::optional<Prop5Variant> parse_prop5_variant(const std::string& name) {
  if (name == "i-divide") return Prop5Variant::i_divide;
  if (name == "i-multiply") return Prop5Variant::i_multiply;
  if (name == "ii") return Prop5Variant::ii;
  if (name == "iii") return Prop5Variant::iii;
  if (name == "iv") return Prop5Variant::iv;
  return std::nullopt;
}

Constructed construct_prop5(std::uint64_t n, Prop5Variant variant, std::uint64_t k,
                            const SpfSieve* sieve) {
  if (n < 2) throw PreconditionError("n must exceed 1");
  Big big_n(static_cast<unsigned long>(n));
  Factorization fact = factorize(big_n, sieve);
  auto require_murthy = [&] {
    if (!is_murthy(n, sieve))
      throw PreconditionError("n is not a chain number (F_n != D_n)");
  };
  auto require_pp_pseudoperfect = [&] {
    if (!is_pp_pseudoperfect(n, sieve))
      throw PreconditionError("n is not a prime power pseudoperfect number");
  };
  switch (variant) {
    case Prop5Variant::i_divide: {
      require_murthy();
      FactorTerm& top = fact.terms.back();
      Big value = big_n / top.prime;
      if (--top.exponent == 0) fact.terms.pop_back();
      return Constructed{value, fact};
    }
    case Prop5Variant::i_multiply: {
      require_murthy();
      Big p = fact.terms.back().prime;
      fact.multiply_by(p, 1);
      return Constructed{big_n * p, fact};
    }
    case Prop5Variant::ii:
    case Prop5Variant::iii: {
      if (variant == Prop5Variant::ii)
        require_murthy();
      else
        require_pp_pseudoperfect();
      Big succ = big_n + 1;
      if (is_prime(succ) == Primality::composite)
        throw PreconditionError("n + 1 is not prime");
      Big pk;
      mpz_pow_ui(pk.get_mpz_t(), succ.get_mpz_t(), static_cast<unsigned long>(k));
      fact.multiply_by(succ, static_cast<unsigned>(k));
      return Constructed{big_n * pk, fact};
    }
    case Prop5Variant::iv: {
      require_pp_pseudoperfect();
      Big pred = big_n - 1;
      if (is_prime(pred) == Primality::composite)
        throw PreconditionError("n - 1 is not prime");
      fact.multiply_by(pred, 1);
      return Constructed{big_n * pred, fact};
    }
  }
  throw std::invalid_argument("unknown variant");
}

std::optional<Constructed> mersenne_giuga(unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  Big m = (Big(1) << k) - 1;
  if (is_prime(m) == Primality::composite) return std::nullopt;
  Factorization fact;
  fact.terms.push_back(FactorTerm{2, k});
  fact.terms.push_back(FactorTerm{m, 1});
  return Constructed{(Big(1) << k) * m, fact};
}

std::vector<unsigned> scan_a003306(unsigned k_limit) {
  std::vector<unsigned> out;
  Big power = 1;
  for (unsigned k = 0; k <= k_limit; ++k) {
    if (is_prime(2 * power + 1) != Primality::composite) out.push_back(k);
    power *= 3;
  }
  return out;
}

std::vector<std::uint64_t> scan_strict_giuga(std::uint64_t limit, const SpfSieve& sieve,
                                             unsigned threads) {
  return block_scan(limit, sieve, threads, [](u64 n, const SmallFactors& fact) {
    if (!pp_giuga_hit(n, fact)) return false;
    return (cofactor_sum(n, fact) - 1) / n != 1;
  });
}

}  // namespace ppdiv
