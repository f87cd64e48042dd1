#include "doctest.h"

#include <random>
#include <sstream>

#include "errors.hpp"
#include "oeis.hpp"

using namespace ppdiv;

namespace {

SequenceFile random_sequence(std::mt19937_64& rng) {
  SequenceFile seq;
  seq.id = "Atest";
  seq.offset = static_cast<long long>(rng() % 5);
  std::size_t len = 1 + rng() % 40;
  for (std::size_t i = 0; i < len; ++i) {
    // digit counts from 1 up to ~1000 to cover giant values
    std::size_t digits = 1 + rng() % 1000;
    std::string text;
    text += static_cast<char>('1' + rng() % 9);
    for (std::size_t j = 1; j < digits; ++j) text += static_cast<char>('0' + rng() % 10);
    seq.values.push_back(parse_big(text));
  }
  return seq;
}

}  // namespace

TEST_CASE("b-file write format") {
  SequenceFile seq{"A286497", 1, {12, 30, 56}};
  std::ostringstream out;
  write_bfile(seq, out);
  CHECK(out.str() == "1 12\n2 30\n3 56\n");

  SequenceFile empty{"A000000", 1, {}};
  std::ostringstream out2;
  write_bfile(empty, out2);
  CHECK(out2.str().empty());
}

TEST_CASE("b-file read") {
  std::istringstream in("1 2\n2 4\n");
  SequenceFile seq = read_bfile(in);
  CHECK(seq.offset == 1);
  CHECK(seq.values == std::vector<Big>{2, 4});

  std::istringstream commented("# comment\n1 12\n");
  CHECK(read_bfile(commented).values == std::vector<Big>{12});
}

TEST_CASE("b-file parse errors carry line numbers") {
  std::istringstream bad("1 2\nnot a line\n");
  try {
    read_bfile(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream gap("1 2\n3 4\n");
  CHECK_THROWS_AS(read_bfile(gap), ParseError);

  std::istringstream junk("1 2 extra\n");
  CHECK_THROWS_AS(read_bfile(junk), ParseError);
}

TEST_CASE("b-file round trip on randomized sequences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    SequenceFile seq = random_sequence(rng);
    std::ostringstream out;
    write_bfile(seq, out);
    std::istringstream in(out.str());
    CHECK(read_bfile(in) == seq);
  }
}

TEST_CASE("sequence comparison") {
  SequenceFile a{"", 1, {2, 4, 6}};
  SequenceFile b{"", 1, {2, 4, 6, 8}};
  CHECK(compare_sequences(a, b).match);

  SequenceFile c{"", 1, {2}};
  SequenceFile d{"", 1, {3}};
  CompareReport report = compare_sequences(c, d);
  CHECK_FALSE(report.match);
  CHECK(report.index == 1);
  CHECK(report.computed == 2);
  CHECK(report.reference == 3);

  SequenceFile e{"", 10, {5}};
  CHECK_THROWS_AS(compare_sequences(c, e), std::invalid_argument);
}

TEST_CASE("dot export of the chain tree") {
  GenTree tree = build_murthy_tree(100, 2);
  std::string dot = to_dot(tree);
  CHECK(dot.find("digraph") != std::string::npos);
  for (const char* label : {"\"2\"", "\"4\"", "\"6\"", "\"8\"", "\"20\"", "\"18\"", "\"42\""})
    CHECK(dot.find(label) != std::string::npos);
  CHECK(dot.find("times-largest-prime") != std::string::npos);
  CHECK(dot.find("times-n-plus-1") != std::string::npos);
  // stable across runs
  CHECK(to_dot(build_murthy_tree(100, 2)) == dot);
}

TEST_CASE("dot export of a single node and of the efp tree") {
  GenTree root_only = build_murthy_tree(3, 0);
  std::string dot = to_dot(root_only);
  CHECK(dot.find("n0 [label=\"2\"]") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  GenTree efp = build_efp_tree(100'000, 9);
  std::string efp_dot = to_dot(efp);
  CHECK(efp_dot.find("\"77659\"") != std::string::npos);
  CHECK(efp_dot.find("efp-child") != std::string::npos);
}

TEST_CASE("giant tree values are labeled by their factored form") {
  TreeNode node;
  node.fact = Factorization::parse("2·3·7·43^2·77659^197");
  node.value = node.fact.product() + 1;
  node.edge = EdgeKind::efp_child;
  CHECK(node_label(node) == "2·3·7·43^2·77659^197 + 1");
  CHECK(node.value.get_str().size() >= 960);
}
