// Command-line frontend for libppdiv. Talks to the library exclusively
// through the C API in ppdiv.h.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppdiv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDivergence = 1;
constexpr int kExitArgument = 2;
constexpr int kExitResource = 3;

constexpr std::uint64_t kDefaultLimit = 10'000'000;

int exit_code_for(ppdiv_status status) {
  switch (status) {
    case PPDIV_OK: return kExitOk;
    case PPDIV_ERR_RESOURCE_LIMIT: return kExitResource;
    default: return kExitArgument;
  }
}

[[noreturn]] void die(ppdiv_status status) {
  std::cerr << "ppdiv: " << ppdiv_last_error() << "\n";
  std::exit(exit_code_for(status));
}

void check(ppdiv_status status) {
  if (status != PPDIV_OK) die(status);
}

struct CtxHandle {
  ppdiv_ctx* ctx = nullptr;
  explicit CtxHandle(std::uint64_t sieve_limit) { check(ppdiv_ctx_create(sieve_limit, &ctx)); }
  ~CtxHandle() { ppdiv_ctx_destroy(ctx); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ppdiv_string_free(s);
  return out;
}

std::string seq_value(const ppdiv_seq* seq, std::size_t i) {
  char* s = nullptr;
  check(ppdiv_seq_value(seq, i, &s));
  return take_string(s);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) {
    std::cerr << "ppdiv: cannot open '" << path << "' for writing\n";
    std::exit(kExitArgument);
  }
  return file;
}

void print_sequence(const ppdiv_seq* seq, const std::string& format, std::ostream& out,
                    ppdiv_ctx* ctx, bool with_factorization) {
  std::size_t size = ppdiv_seq_size(seq);
  for (std::size_t i = 0; i < size; ++i) {
    std::string value = seq_value(seq, i);
    if (format == "bfile") {
      out << (ppdiv_seq_offset(seq) + static_cast<std::int64_t>(i)) << ' ' << value << '\n';
    } else if (with_factorization) {
      char* fact = nullptr;
      check(ppdiv_factorize(ctx, value.c_str(), &fact));
      out << value << ' ' << take_string(fact) << '\n';
    } else {
      out << value << '\n';
    }
  }
}

void print_tree(const ppdiv_tree* tree, const std::string& format, const std::string& output) {
  if (format == "dot") {
    if (output.empty() || output == "-") {
      char* dot = nullptr;
      check(ppdiv_tree_dot(tree, &dot));
      std::cout << take_string(dot);
    } else {
      check(ppdiv_tree_export_dot(tree, output.c_str()));
    }
    return;
  }
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  std::size_t size = ppdiv_tree_size(tree);
  for (std::size_t i = 0; i < size; ++i) {
    char* label = nullptr;
    std::int64_t parent = -1;
    const char* edge = nullptr;
    unsigned level = 0;
    check(ppdiv_tree_node(tree, i, &label, &parent, &edge, &level));
    out << take_string(label) << " parent=" << parent << " edge=" << edge
        << " level=" << level << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Egyptian-fraction number classes built from prime power divisors"};
  app.require_subcommand(1);

  std::uint64_t arg_n = 0;
  std::uint64_t limit = kDefaultLimit;
  std::uint64_t arg_k = 0;
  int depth = -1;
  unsigned max_exp = 64;
  std::string kind, format = "plain", output, variant, factorization, sequence_id, bfile_path;
  std::string big_arg;

  auto* classify = app.add_subcommand("classify", "classify a single integer");
  classify->add_option("n", arg_n, "integer to classify")->required();

  auto* trajectory = app.add_subcommand("trajectory", "orbit of the divisor-subtraction map");
  trajectory->add_option("n", arg_n, "starting integer")->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate a sequence up to a limit");
  enumerate->add_option("kind", kind, "pppn | ppgiuga | murthy | primary | giuga | efp")
      ->required();
  enumerate->add_option("--limit", limit, "inclusive upper bound");
  enumerate->add_option("--format", format, "plain | bfile");
  enumerate->add_option("--output", output, "output path (default stdout)");

  auto* tree = app.add_subcommand("tree", "generation trees");
  tree->add_option("kind", kind, "murthy | efp")->required();
  tree->add_option("--limit", big_arg, "value limit (murthy) or prime limit (efp)");
  tree->add_option("--depth", depth, "depth limit for the murthy tree (-1 = unbounded)");
  tree->add_option("--max-exp", max_exp, "exponent limit per node for the efp tree");
  tree->add_option("--format", format, "plain | dot");
  tree->add_option("--output", output, "output path (default stdout)");

  auto* efp = app.add_subcommand("efp", "extended-Fermat-prime level of p");
  efp->add_option("p", big_arg, "prime to test (decimal)")->required();
  efp->add_option("--factorization", factorization, "factorization of p-1, e.g. 2·3^2");

  auto* construct = app.add_subcommand("construct", "Proposition-style constructors");
  construct->add_option("--variant", variant, "i-divide | i-multiply | ii | iii | iv")
      ->required();
  construct->add_option("--n", arg_n, "seed integer")->required();
  construct->add_option("--k", arg_k, "exponent (variants ii/iii)");

  auto* scan = app.add_subcommand("scan", "conjecture evidence scans");
  scan->add_option("kind", kind, "strict-giuga | a003306")->required();
  scan->add_option("--limit", limit, "bound (value bound or exponent bound)");

  auto* verify = app.add_subcommand("verify", "regress a computed sequence against a b-file");
  verify->add_option("--sequence", sequence_id, "OEIS id, e.g. A286497")->required();
  verify->add_option("--bfile", bfile_path, "reference b-file path")->required();
  verify->add_option("--limit", limit, "computation bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitArgument;
  }

  if (classify->parsed()) {
    CtxHandle h(std::min<std::uint64_t>(std::max<std::uint64_t>(arg_n, 2), kDefaultLimit));
    ppdiv_classification c{};
    check(ppdiv_classify(h.ctx, arg_n, &c));
    char* fact = nullptr;
    check(ppdiv_factorize(h.ctx, std::to_string(arg_n).c_str(), &fact));
    auto b = [](int v) { return v ? "true" : "false"; };
    std::cout << "n=" << c.n << " factorization=" << take_string(fact)
              << " pseudoperfect=" << b(c.pseudoperfect)
              << " primary_pseudoperfect=" << b(c.primary_pseudoperfect)
              << " giuga=" << b(c.giuga) << " pp_pseudoperfect=" << b(c.pp_pseudoperfect)
              << " pp_giuga=" << b(c.pp_giuga) << " murthy=" << b(c.murthy) << " efp_level=";
    if (c.has_efp_level)
      std::cout << c.efp_level;
    else
      std::cout << "none";
    std::cout << '\n';
    return kExitOk;
  }

  if (trajectory->parsed()) {
    CtxHandle h(std::min<std::uint64_t>(std::max<std::uint64_t>(arg_n, 2), kDefaultLimit));
    ppdiv_seq* seq = nullptr;
    check(ppdiv_trajectory(h.ctx, arg_n, &seq));
    std::size_t size = ppdiv_seq_size(seq);
    for (std::size_t i = 0; i < size; ++i) std::cout << (i ? " " : "") << seq_value(seq, i);
    std::cout << '\n';
    ppdiv_seq_destroy(seq);
    return kExitOk;
  }

  if (enumerate->parsed()) {
    std::string id;
    if (kind == "pppn") id = "A283423";
    else if (kind == "ppgiuga") id = "A286497";
    else if (kind == "murthy") id = "A073935";
    else if (kind == "primary") id = "A054377";
    else if (kind == "giuga") id = "A007850";
    else if (kind == "efp") id = "A286499";
    else {
      std::cerr << "ppdiv: unknown enumeration kind '" << kind << "'\n";
      return kExitArgument;
    }
    CtxHandle h(kind == "efp" ? 0 : limit);
    ppdiv_seq* seq = nullptr;
    check(ppdiv_enumerate_by_id(h.ctx, id.c_str(), limit, &seq));
    std::ofstream file;
    std::ostream& out = open_output(output, file);
    print_sequence(seq, format, out, h.ctx, kind == "ppgiuga");
    ppdiv_seq_destroy(seq);
    return kExitOk;
  }

  if (tree->parsed()) {
    if (big_arg.empty()) big_arg = std::to_string(kDefaultLimit);
    ppdiv_tree* t = nullptr;
    CtxHandle h(0);
    if (kind == "murthy") {
      check(ppdiv_murthy_tree(h.ctx, big_arg.c_str(), depth, &t));
    } else if (kind == "efp") {
      check(ppdiv_efp_tree(h.ctx, big_arg.c_str(), max_exp, &t));
    } else {
      std::cerr << "ppdiv: unknown tree kind '" << kind << "'\n";
      return kExitArgument;
    }
    print_tree(t, format, output);
    ppdiv_tree_destroy(t);
    return kExitOk;
  }

  if (efp->parsed()) {
    CtxHandle h(1'000'000);
    int defined = 0;
    unsigned level = 0;
    check(ppdiv_efp_level(h.ctx, big_arg.c_str(), factorization.empty() ? nullptr : factorization.c_str(),
                          &defined, &level));
    if (defined)
      std::cout << "level=" << level << '\n';
    else
      std::cout << "not an extended Fermat prime\n";
    return kExitOk;
  }

  if (construct->parsed()) {
    CtxHandle h(std::min<std::uint64_t>(std::max<std::uint64_t>(arg_n, 2), kDefaultLimit));
    char* value = nullptr;
    char* fact = nullptr;
    int ok = 0;
    check(ppdiv_construct(h.ctx, variant.c_str(), arg_n, arg_k, &value, &fact, &ok));
    std::cout << "value=" << take_string(value) << " factorization=" << take_string(fact)
              << " predicate=" << (ok ? "holds" : "FAILS") << '\n';
    return kExitOk;
  }

  if (scan->parsed()) {
    if (kind == "strict-giuga") {
      CtxHandle h(limit);
      ppdiv_seq* seq = nullptr;
      check(ppdiv_scan_strict_giuga(h.ctx, limit, &seq));
      std::size_t size = ppdiv_seq_size(seq);
      if (size == 0) {
        std::cout << "no counterexamples up to " << limit << '\n';
      } else {
        for (std::size_t i = 0; i < size; ++i) std::cout << seq_value(seq, i) << '\n';
      }
      ppdiv_seq_destroy(seq);
      return kExitOk;
    }
    if (kind == "a003306") {
      CtxHandle h(0);
      ppdiv_seq* seq = nullptr;
      check(ppdiv_scan_a003306(h.ctx, static_cast<unsigned>(limit), &seq));
      std::size_t size = ppdiv_seq_size(seq);
      for (std::size_t i = 0; i < size; ++i) std::cout << (i ? " " : "") << seq_value(seq, i);
      std::cout << '\n';
      ppdiv_seq_destroy(seq);
      return kExitOk;
    }
    std::cerr << "ppdiv: unknown scan kind '" << kind << "'\n";
    return kExitArgument;
  }

  if (verify->parsed()) {
    CtxHandle h(sequence_id == "A286499" || sequence_id == "A003306" ? 0 : limit);
    ppdiv_seq* computed = nullptr;
    check(ppdiv_enumerate_by_id(h.ctx, sequence_id.c_str(), limit, &computed));
    ppdiv_seq* reference = nullptr;
    check(ppdiv_seq_read_bfile(bfile_path.c_str(), &reference));
    int match = 0;
    std::int64_t index = 0;
    char* lhs = nullptr;
    char* rhs = nullptr;
    check(ppdiv_seq_compare(computed, reference, &match, &index, &lhs, &rhs));
    std::string lhs_s = take_string(lhs), rhs_s = take_string(rhs);
    ppdiv_seq_destroy(computed);
    ppdiv_seq_destroy(reference);
    if (match) {
      std::cout << "match\n";
      return kExitOk;
    }
    std::cout << "divergence at index " << index << ": computed " << lhs_s << ", reference "
              << rhs_s << '\n';
    return kExitDivergence;
  }

  return kExitArgument;
}
