#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arith.hpp"

namespace ppdiv {

enum class EdgeKind { root, times_largest_prime, times_n_plus_1, efp_child };

const char* edge_kind_name(EdgeKind kind);

struct TreeNode {
  Big value;
  /// Chain-tree nodes carry the factorization of the value; extended-Fermat
  /// nodes carry the factorization of value - 1.
  Factorization fact;
  long parent = -1;  // index into GenTree::nodes, -1 for the root
  EdgeKind edge = EdgeKind::root;
  unsigned level = 0;
};

/// Breadth-first tree, children in canonical order.
struct GenTree {
  std::vector<TreeNode> nodes;
  std::vector<long> children_of(long index) const;
};

std::vector<std::uint64_t> enumerate_pp_pseudoperfect(std::uint64_t limit, const SpfSieve& sieve,
                                                      unsigned threads = 0);

std::vector<std::uint64_t> enumerate_pp_giuga(std::uint64_t limit, const SpfSieve& sieve,
                                              unsigned threads = 0);

std::vector<std::uint64_t> enumerate_murthy(std::uint64_t limit, const SpfSieve& sieve);

/// Both growth moves from root 2: n -> n*p for p the largest prime divisor,
/// and n -> n*(n+1) when n+1 is prime. Values above value_limit are pruned;
/// depth_limit < 0 means unbounded depth.
GenTree build_murthy_tree(const Big& value_limit, int depth_limit = -1,
                          const SpfSieve* sieve = nullptr);

/// Tree of extended Fermat primes rooted at 2. The children of p with chain
/// number m = p - 1 are the primes m * p^k + 1 <= prime_limit, k in
/// [1, exponent_limit].
GenTree build_efp_tree(const Big& prime_limit, unsigned exponent_limit);

enum class Prop5Variant { i_divide, i_multiply, ii, iii, iv };

std::optional<Prop5Variant> parse_prop5_variant(const std::string& name);

struct Constructed {
  Big value;
  Factorization fact;
};

Constructed construct_prop5(std::uint64_t n, Prop5Variant variant, std::uint64_t k,
                            const SpfSieve* sieve = nullptr);

/// 2^k * (2^k - 1) when 2^k - 1 is (probably) prime.
std::optional<Constructed> mersenne_giuga(unsigned k);

std::vector<unsigned> scan_a003306(unsigned k_limit);

/// Counterexamples to the strict excess-equals-one observation; expected
/// empty.
std::vector<std::uint64_t> scan_strict_giuga(std::uint64_t limit, const SpfSieve& sieve,
                                             unsigned threads = 0);

}  // namespace ppdiv
