#include "doctest.h"

#include <cstdio>
#include <string>

#include "ppdiv.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ppdiv_string_free(s);
  return out;
}

struct Ctx {
  ppdiv_ctx* ctx = nullptr;
  explicit Ctx(uint64_t limit) { REQUIRE(ppdiv_ctx_create(limit, &ctx) == PPDIV_OK); }
  ~Ctx() { ppdiv_ctx_destroy(ctx); }
};

std::string tmp_path(const char* name) {
  return std::string("capi_test_") + name + ".tmp";
}

}  // namespace

TEST_CASE("context creation honors limits") {
  ppdiv_ctx* ctx = nullptr;
  CHECK(ppdiv_ctx_create(0, &ctx) == PPDIV_OK);
  ppdiv_ctx_destroy(ctx);
}

TEST_CASE("classify through the C API") {
  Ctx h(100'000);
  ppdiv_classification c{};
  REQUIRE(ppdiv_classify(h.ctx, 20, &c) == PPDIV_OK);
  CHECK(c.pp_pseudoperfect);
  CHECK(c.murthy);
  CHECK(c.pseudoperfect);
  CHECK_FALSE(c.pp_giuga);

  CHECK(ppdiv_classify(h.ctx, 1, &c) == PPDIV_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ppdiv_last_error()).size() > 0);
}

TEST_CASE("factorize and primality through the C API") {
  Ctx h(0);
  char* fact = nullptr;
  REQUIRE(ppdiv_factorize(h.ctx, "23994", &fact) == PPDIV_OK);
  CHECK(take(fact) == "2·3^2·31·43");

  ppdiv_verdict v;
  REQUIRE(ppdiv_is_prime(h.ctx, "77659", &v) == PPDIV_OK);
  CHECK(v == PPDIV_PRIME);
  CHECK(ppdiv_is_prime(h.ctx, "bogus", &v) == PPDIV_ERR_INVALID_ARGUMENT);

  uint64_t spf = 0;
  REQUIRE(ppdiv_smallest_prime_factor(h.ctx, 23994, &spf) == PPDIV_OK);
  CHECK(spf == 2);
}

TEST_CASE("trajectory and excess through the C API") {
  Ctx h(1'000);
  ppdiv_seq* seq = nullptr;
  REQUIRE(ppdiv_trajectory(h.ctx, 20, &seq) == PPDIV_OK);
  REQUIRE(ppdiv_seq_size(seq) == 6);
  char* v = nullptr;
  REQUIRE(ppdiv_seq_value(seq, 1, &v) == PPDIV_OK);
  CHECK(take(v) == "10");
  ppdiv_seq_destroy(seq);

  char* num = nullptr;
  char* den = nullptr;
  REQUIRE(ppdiv_pp_giuga_excess(h.ctx, 12, &num, &den) == PPDIV_OK);
  CHECK(take(num) == "1");
  CHECK(take(den) == "1");
  CHECK(ppdiv_pp_giuga_excess(h.ctx, 7, &num, &den) == PPDIV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("efp level with and without a supplied factorization") {
  Ctx h(0);
  int defined = 0;
  unsigned level = 0;
  REQUIRE(ppdiv_efp_level(h.ctx, "77659", nullptr, &defined, &level) == PPDIV_OK);
  CHECK(defined);
  CHECK(level == 4);
  REQUIRE(ppdiv_efp_level(h.ctx, "77659", "2·3·7·43^2", &defined, &level) == PPDIV_OK);
  CHECK(level == 4);
  REQUIRE(ppdiv_efp_level(h.ctx, "11", nullptr, &defined, &level) == PPDIV_OK);
  CHECK_FALSE(defined);
}

TEST_CASE("enumeration through the C API") {
  Ctx h(100'000);
  ppdiv_seq* seq = nullptr;
  REQUIRE(ppdiv_enumerate(h.ctx, PPDIV_SEQ_PP_GIUGA, 100'000, &seq) == PPDIV_OK);
  REQUIRE(ppdiv_seq_size(seq) >= 14);
  char* v = nullptr;
  REQUIRE(ppdiv_seq_value(seq, 0, &v) == PPDIV_OK);
  CHECK(take(v) == "12");
  CHECK(std::string(ppdiv_seq_id(seq)) == "A286497");
  ppdiv_seq_destroy(seq);

  // limit above the sieve is an argument error
  CHECK(ppdiv_enumerate(h.ctx, PPDIV_SEQ_PP_GIUGA, 200'000, &seq) ==
        PPDIV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("b-file round trip and comparison through the C API") {
  Ctx h(1'000);
  ppdiv_seq* seq = nullptr;
  REQUIRE(ppdiv_enumerate(h.ctx, PPDIV_SEQ_PP_GIUGA, 1'000, &seq) == PPDIV_OK);
  std::string path = tmp_path("bfile");
  REQUIRE(ppdiv_seq_write_bfile(seq, path.c_str()) == PPDIV_OK);
  ppdiv_seq* back = nullptr;
  REQUIRE(ppdiv_seq_read_bfile(path.c_str(), &back) == PPDIV_OK);
  int match = 0;
  int64_t index = 0;
  char* lhs = nullptr;
  char* rhs = nullptr;
  REQUIRE(ppdiv_seq_compare(seq, back, &match, &index, &lhs, &rhs) == PPDIV_OK);
  CHECK(match);
  take(lhs);
  take(rhs);
  ppdiv_seq_destroy(seq);
  ppdiv_seq_destroy(back);
  std::remove(path.c_str());

  CHECK(ppdiv_seq_read_bfile("does_not_exist.tmp", &back) == PPDIV_ERR_IO);
}

TEST_CASE("trees through the C API") {
  Ctx h(0);
  ppdiv_tree* tree = nullptr;
  REQUIRE(ppdiv_murthy_tree(h.ctx, "100", 2, &tree) == PPDIV_OK);
  CHECK(ppdiv_tree_size(tree) == 7);
  char* label = nullptr;
  int64_t parent = -1;
  const char* edge = nullptr;
  unsigned level = 0;
  REQUIRE(ppdiv_tree_node(tree, 0, &label, &parent, &edge, &level) == PPDIV_OK);
  CHECK(take(label) == "2");
  CHECK(parent == -1);
  char* dot = nullptr;
  REQUIRE(ppdiv_tree_dot(tree, &dot) == PPDIV_OK);
  CHECK(take(dot).find("digraph") == 0);
  ppdiv_tree_destroy(tree);

  REQUIRE(ppdiv_efp_tree(h.ctx, "50", 9, &tree) == PPDIV_OK);
  CHECK(ppdiv_tree_size(tree) >= 6);  // 2, 3, 5, 7, 17, 19, 43
  ppdiv_tree_destroy(tree);
}

TEST_CASE("constructors through the C API") {
  Ctx h(1'000);
  char* value = nullptr;
  char* fact = nullptr;
  int ok = 0;
  REQUIRE(ppdiv_construct(h.ctx, "iv", 18, 0, &value, &fact, &ok) == PPDIV_OK);
  CHECK(take(value) == "306");
  CHECK(take(fact) == "2·3^2·17");
  CHECK(ok);

  CHECK(ppdiv_construct(h.ctx, "iv", 30, 0, &value, &fact, &ok) == PPDIV_ERR_PRECONDITION);
  CHECK(ppdiv_construct(h.ctx, "nope", 18, 0, &value, &fact, &ok) ==
        PPDIV_ERR_INVALID_ARGUMENT);

  int exists = 0;
  REQUIRE(ppdiv_mersenne_giuga(h.ctx, 5, &exists, &value) == PPDIV_OK);
  CHECK(exists);
  CHECK(take(value) == "992");
}
