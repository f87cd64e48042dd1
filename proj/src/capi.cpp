#include "ppdiv.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "arith.hpp"
#include "classify.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "oeis.hpp"

using namespace ppdiv;

struct ppdiv_ctx {
  std::optional<SpfSieve> sieve;
  const SpfSieve* sieve_ptr() const { return sieve ? &*sieve : nullptr; }
};

struct ppdiv_seq {
  SequenceFile seq;
};

struct ppdiv_tree {
  GenTree tree;
};

namespace {

thread_local std::string tl_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ppdiv_status guard(F&& body) {
  try {
    tl_error.clear();
    body();
    return PPDIV_OK;
  } catch (const PreconditionError& e) {
    tl_error = e.what();
    return PPDIV_ERR_PRECONDITION;
  } catch (const ResourceLimitError& e) {
    tl_error = e.what();
    return PPDIV_ERR_RESOURCE_LIMIT;
  } catch (const ParseError& e) {
    tl_error = e.what();
    return PPDIV_ERR_PARSE;
  } catch (const IoError& e) {
    tl_error = e.what();
    return PPDIV_ERR_IO;
  } catch (const std::invalid_argument& e) {
    tl_error = e.what();
    return PPDIV_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    tl_error = e.what();
    return PPDIV_ERR_INTERNAL;
  }
}

const SpfSieve& require_sieve(ppdiv_ctx* ctx, std::uint64_t limit) {
  if (!ctx->sieve || ctx->sieve->limit() < limit)
    throw std::invalid_argument("context sieve does not cover limit " + std::to_string(limit));
  return *ctx->sieve;
}

SequenceFile enumerate_kind(ppdiv_ctx* ctx, ppdiv_sequence_kind kind, std::uint64_t limit) {
  SequenceFile seq;
  seq.offset = 1;
  auto from_u64 = [&seq](const std::vector<std::uint64_t>& values) {
    for (std::uint64_t v : values) seq.values.emplace_back(static_cast<unsigned long>(v));
  };
  switch (kind) {
    case PPDIV_SEQ_PP_PSEUDOPERFECT:
      seq.id = "A283423";
      from_u64(enumerate_pp_pseudoperfect(limit, require_sieve(ctx, limit)));
      break;
    case PPDIV_SEQ_PP_GIUGA:
      seq.id = "A286497";
      from_u64(enumerate_pp_giuga(limit, require_sieve(ctx, limit)));
      break;
    case PPDIV_SEQ_MURTHY:
      seq.id = "A073935";
      from_u64(enumerate_murthy(limit, require_sieve(ctx, limit)));
      break;
    case PPDIV_SEQ_EFP: {
      seq.id = "A286499";
      GenTree tree = build_efp_tree(Big(static_cast<unsigned long>(limit)), 64);
      std::vector<Big> values;
      for (const auto& node : tree.nodes) values.push_back(node.value);
      std::sort(values.begin(), values.end());
      seq.values = std::move(values);
      break;
    }
    case PPDIV_SEQ_PRIMARY_PSEUDOPERFECT: {
      seq.id = "A054377";
      const SpfSieve& sieve = require_sieve(ctx, limit);
      for (std::uint64_t n = 2; n <= limit; ++n)
        if (is_primary_pseudoperfect(n, &sieve))
          seq.values.emplace_back(static_cast<unsigned long>(n));
      break;
    }
    case PPDIV_SEQ_GIUGA: {
      seq.id = "A007850";
      const SpfSieve& sieve = require_sieve(ctx, limit);
      for (std::uint64_t n = 2; n <= limit; ++n)
        if (is_giuga(n, &sieve)) seq.values.emplace_back(static_cast<unsigned long>(n));
      break;
    }
    case PPDIV_SEQ_A003306: {
      seq.id = "A003306";
      for (unsigned k : scan_a003306(static_cast<unsigned>(limit)))
        seq.values.emplace_back(static_cast<unsigned long>(k));
      break;
    }
    default:
      throw std::invalid_argument("unknown sequence kind");
  }
  return seq;
}

std::optional<Factorization> parse_optional_fact(const char* text) {
  if (!text || !*text) return std::nullopt;
  return Factorization::parse(text);
}

}  // namespace

extern "C" {

const char* ppdiv_last_error(void) { return tl_error.c_str(); }

void ppdiv_string_free(char* s) { std::free(s); }

ppdiv_status ppdiv_ctx_create(uint64_t sieve_limit, ppdiv_ctx** out) {
  return guard([&] {
    auto ctx = std::make_unique<ppdiv_ctx>();
    if (sieve_limit >= 2) ctx->sieve.emplace(sieve_limit);
    *out = ctx.release();
  });
}

void ppdiv_ctx_destroy(ppdiv_ctx* ctx) { delete ctx; }

ppdiv_status ppdiv_factorize(ppdiv_ctx* ctx, const char* n_decimal, char** out_factored) {
  return guard([&] {
    Big n = parse_big(n_decimal);
    *out_factored = dup_string(factorize(n, ctx->sieve_ptr()).str());
  });
}

ppdiv_status ppdiv_is_prime(ppdiv_ctx* ctx, const char* n_decimal, ppdiv_verdict* out) {
  (void)ctx;
  return guard([&] {
    switch (is_prime(parse_big(n_decimal))) {
      case Primality::composite: *out = PPDIV_COMPOSITE; break;
      case Primality::prime: *out = PPDIV_PRIME; break;
      case Primality::probable_prime: *out = PPDIV_PROBABLE_PRIME; break;
    }
  });
}

ppdiv_status ppdiv_smallest_prime_factor(ppdiv_ctx* ctx, uint64_t n, uint64_t* out) {
  return guard([&] { *out = smallest_prime_factor(n, ctx->sieve_ptr()); });
}

ppdiv_status ppdiv_classify(ppdiv_ctx* ctx, uint64_t n, ppdiv_classification* out) {
  return guard([&] {
    std::uint64_t cap = std::max<std::uint64_t>(kSubsetSumCap, std::min<std::uint64_t>(n, 100'000'000));
    Classification c = classify_all(n, ctx->sieve_ptr(), cap);
    out->n = c.n;
    out->pseudoperfect = c.pseudoperfect;
    out->primary_pseudoperfect = c.primary_pseudoperfect;
    out->giuga = c.giuga;
    out->pp_pseudoperfect = c.pp_pseudoperfect;
    out->pp_giuga = c.pp_giuga;
    out->murthy = c.murthy;
    out->has_efp_level = c.efp_level.has_value();
    out->efp_level = c.efp_level.value_or(0);
  });
}

ppdiv_status ppdiv_f_step(ppdiv_ctx* ctx, uint64_t n, uint64_t* out) {
  return guard([&] { *out = f_step(n, ctx->sieve_ptr()); });
}

ppdiv_status ppdiv_trajectory(ppdiv_ctx* ctx, uint64_t n, ppdiv_seq** out) {
  return guard([&] {
    auto seq = std::make_unique<ppdiv_seq>();
    seq->seq.id = "A073932";
    seq->seq.offset = 0;
    for (std::uint64_t v : trajectory(n, ctx->sieve_ptr()))
      seq->seq.values.emplace_back(static_cast<unsigned long>(v));
    *out = seq.release();
  });
}

ppdiv_status ppdiv_pp_giuga_excess(ppdiv_ctx* ctx, uint64_t n, char** out_num, char** out_den) {
  return guard([&] {
    Rational r = pp_giuga_excess(n, ctx->sieve_ptr());
    *out_num = dup_string(r.num.get_str());
    *out_den = dup_string(r.den.get_str());
  });
}

ppdiv_status ppdiv_efp_level(ppdiv_ctx* ctx, const char* p_decimal,
                             const char* p_minus_1_factored, int* out_defined,
                             unsigned* out_level) {
  return guard([&] {
    auto level = efp_level(parse_big(p_decimal), parse_optional_fact(p_minus_1_factored),
                           ctx->sieve_ptr());
    *out_defined = level.has_value();
    *out_level = level.value_or(0);
  });
}

ppdiv_status ppdiv_enumerate(ppdiv_ctx* ctx, ppdiv_sequence_kind kind, uint64_t limit,
                             ppdiv_seq** out) {
  return guard([&] {
    auto seq = std::make_unique<ppdiv_seq>();
    seq->seq = enumerate_kind(ctx, kind, limit);
    *out = seq.release();
  });
}

ppdiv_status ppdiv_enumerate_by_id(ppdiv_ctx* ctx, const char* oeis_id, uint64_t limit,
                                   ppdiv_seq** out) {
  return guard([&] {
    std::string id = oeis_id ? oeis_id : "";
    ppdiv_sequence_kind kind;
    if (id == "A283423") kind = PPDIV_SEQ_PP_PSEUDOPERFECT;
    else if (id == "A286497") kind = PPDIV_SEQ_PP_GIUGA;
    else if (id == "A073935") kind = PPDIV_SEQ_MURTHY;
    else if (id == "A286499") kind = PPDIV_SEQ_EFP;
    else if (id == "A054377") kind = PPDIV_SEQ_PRIMARY_PSEUDOPERFECT;
    else if (id == "A007850") kind = PPDIV_SEQ_GIUGA;
    else if (id == "A003306") kind = PPDIV_SEQ_A003306;
    else throw std::invalid_argument("no enumerator for sequence id '" + id + "'");
    auto seq = std::make_unique<ppdiv_seq>();
    seq->seq = enumerate_kind(ctx, kind, limit);
    *out = seq.release();
  });
}

ppdiv_status ppdiv_murthy_tree(ppdiv_ctx* ctx, const char* value_limit_decimal, int depth_limit,
                               ppdiv_tree** out) {
  return guard([&] {
    auto tree = std::make_unique<ppdiv_tree>();
    tree->tree = build_murthy_tree(parse_big(value_limit_decimal), depth_limit, ctx->sieve_ptr());
    *out = tree.release();
  });
}

ppdiv_status ppdiv_efp_tree(ppdiv_ctx* ctx, const char* prime_limit_decimal,
                            unsigned exponent_limit, ppdiv_tree** out) {
  (void)ctx;
  return guard([&] {
    auto tree = std::make_unique<ppdiv_tree>();
    tree->tree = build_efp_tree(parse_big(prime_limit_decimal), exponent_limit);
    *out = tree.release();
  });
}

ppdiv_status ppdiv_construct(ppdiv_ctx* ctx, const char* variant, uint64_t n, uint64_t k,
                             char** out_value, char** out_factored, int* out_predicate_ok) {
  return guard([&] {
    auto parsed = parse_prop5_variant(variant ? variant : "");
    if (!parsed) throw std::invalid_argument("unknown variant; expected i-divide, i-multiply, ii, iii or iv");
    Constructed c = construct_prop5(n, *parsed, k, ctx->sieve_ptr());
    bool ok = false;
    switch (*parsed) {
      case Prop5Variant::i_divide:
      case Prop5Variant::i_multiply:
      case Prop5Variant::ii:
        ok = fits_u64(c.value) ? is_murthy(to_u64(c.value), ctx->sieve_ptr())
                               : chain_condition(c.fact);
        break;
      case Prop5Variant::iii:
        ok = pp_pseudoperfect_of(c.fact);
        break;
      case Prop5Variant::iv:
        ok = pp_giuga_of(c.fact);
        break;
    }
    *out_value = dup_string(c.value.get_str());
    *out_factored = dup_string(c.fact.str());
    *out_predicate_ok = ok;
  });
}

ppdiv_status ppdiv_mersenne_giuga(ppdiv_ctx* ctx, unsigned k, int* out_exists, char** out_value) {
  (void)ctx;
  return guard([&] {
    auto c = mersenne_giuga(k);
    *out_exists = c.has_value();
    *out_value = dup_string(c ? c->value.get_str() : std::string());
  });
}

ppdiv_status ppdiv_scan_a003306(ppdiv_ctx* ctx, unsigned k_limit, ppdiv_seq** out) {
  return guard([&] {
    auto seq = std::make_unique<ppdiv_seq>();
    seq->seq = enumerate_kind(ctx, PPDIV_SEQ_A003306, k_limit);
    *out = seq.release();
  });
}

ppdiv_status ppdiv_scan_strict_giuga(ppdiv_ctx* ctx, uint64_t limit, ppdiv_seq** out) {
  return guard([&] {
    auto seq = std::make_unique<ppdiv_seq>();
    seq->seq.id = "strict-giuga-counterexamples";
    for (std::uint64_t n : scan_strict_giuga(limit, require_sieve(ctx, limit)))
      seq->seq.values.emplace_back(static_cast<unsigned long>(n));
    *out = seq.release();
  });
}

size_t ppdiv_seq_size(const ppdiv_seq* seq) { return seq->seq.values.size(); }

int64_t ppdiv_seq_offset(const ppdiv_seq* seq) { return seq->seq.offset; }

const char* ppdiv_seq_id(const ppdiv_seq* seq) { return seq->seq.id.c_str(); }

ppdiv_status ppdiv_seq_value(const ppdiv_seq* seq, size_t i, char** out_decimal) {
  return guard([&] {
    if (i >= seq->seq.values.size()) throw std::invalid_argument("sequence index out of range");
    *out_decimal = dup_string(seq->seq.values[i].get_str());
  });
}

ppdiv_status ppdiv_seq_write_bfile(const ppdiv_seq* seq, const char* path) {
  return guard([&] { write_bfile(seq->seq, std::string(path)); });
}

ppdiv_status ppdiv_seq_read_bfile(const char* path, ppdiv_seq** out) {
  return guard([&] {
    auto seq = std::make_unique<ppdiv_seq>();
    seq->seq = read_bfile(std::string(path));
    *out = seq.release();
  });
}

ppdiv_status ppdiv_seq_compare(const ppdiv_seq* computed, const ppdiv_seq* reference,
                               int* out_match, int64_t* out_index, char** out_computed,
                               char** out_reference) {
  return guard([&] {
    CompareReport report = compare_sequences(computed->seq, reference->seq);
    *out_match = report.match;
    *out_index = report.index;
    *out_computed = dup_string(report.computed.get_str());
    *out_reference = dup_string(report.reference.get_str());
  });
}

void ppdiv_seq_destroy(ppdiv_seq* seq) { delete seq; }

size_t ppdiv_tree_size(const ppdiv_tree* tree) { return tree->tree.nodes.size(); }

ppdiv_status ppdiv_tree_node(const ppdiv_tree* tree, size_t i, char** out_label,
                             int64_t* out_parent, const char** out_edge_label,
                             unsigned* out_level) {
  return guard([&] {
    if (i >= tree->tree.nodes.size()) throw std::invalid_argument("tree index out of range");
    const TreeNode& node = tree->tree.nodes[i];
    *out_label = dup_string(node_label(node));
    *out_parent = node.parent;
    *out_edge_label = edge_kind_name(node.edge);
    *out_level = node.level;
  });
}

ppdiv_status ppdiv_tree_dot(const ppdiv_tree* tree, char** out) {
  return guard([&] { *out = dup_string(to_dot(tree->tree)); });
}

ppdiv_status ppdiv_tree_export_dot(const ppdiv_tree* tree, const char* path) {
  return guard([&] { export_dot(tree->tree, std::string(path)); });
}

void ppdiv_tree_destroy(ppdiv_tree* tree) { delete tree; }

}  // extern "C"
