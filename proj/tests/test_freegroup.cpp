#include "doctest.h"

#include "fixtures.hpp"
#include "oracle/oracles.hpp"

#include "kersym/freegroup.hpp"
#include "kersym/rng.hpp"

using namespace kersym;
using kersym::test::word;

namespace {
  AlphabetPtr abcd() {
    static auto a = make_alphabet({"a", "b", "c", "d"});
    return a;
  }

  Word random_word_of(AlphabetPtr const& a, std::size_t max_len, Rng& rng) {
    std::vector<Letter> letters(static_cast<std::size_t>(rng.between(0, max_len)));
    for (auto& x : letters) {
      x = {symbol_at(static_cast<std::size_t>(rng.below(a->size()))),
           rng.coin() ? Sign::plus : Sign::minus};
    }
    return Word(a, std::move(letters));
  }
}  // namespace

TEST_CASE("reduce: examples") {
  auto a = abcd();
  CHECK(reduce(word(a, "a a^-1")).empty());
  CHECK(format_word(reduce(word(a, "a b^-1 b c"))) == "a c");
  CHECK(format_word(reduce(word(a, "a^-1 b b^-1 a c"))) == "c");
  CHECK(format_word(reduce(word(a, "a a b"))) == "a a b");
}

TEST_CASE("reduce: idempotent on 1000 random words") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    auto w = random_word_of(abcd(), 100, rng);
    CHECK(reduce(reduce(w)) == reduce(w));
  }
}

TEST_CASE("reduce: agrees with random cancellation orders") {
  Rng rng(2);
  auto a = make_alphabet({"x", "y"});
  for (int i = 0; i < 2000; ++i) {
    auto w     = random_word_of(a, 40, rng);
    auto plain = test::to_plain(w);
    for (int trial = 0; trial < 3; ++trial) {
      CHECK(oracle::reduce_random_order(plain, rng) == test::to_plain(reduce(w)));
    }
  }
}

TEST_CASE("reduce: never grows and keeps parity") {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto w = random_word_of(abcd(), 60, rng);
    auto r = reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(r.size() % 2 == w.size() % 2);
  }
}

TEST_CASE("word_product") {
  auto a = abcd();
  CHECK(word_product(word(a, "a"), word(a, "a^-1")).empty());
  CHECK(format_word(word_product(word(a, "a b"), word(a, "b^-1 c"))) == "a c");

  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    auto u = random_word_of(a, 20, rng);
    auto v = random_word_of(a, 20, rng);
    auto w = random_word_of(a, 20, rng);
    CHECK(word_product(word_product(u, v), w) == word_product(u, word_product(v, w)));
  }

  auto other = make_alphabet({"a", "b"});
  CHECK_THROWS_AS((void) word_product(word(a, "a"), word(other, "a")), Error);
}

TEST_CASE("word_inverse") {
  auto a = abcd();
  CHECK(format_word(word_inverse(word(a, "a b^-1"))) == "b a^-1");
  CHECK(word_inverse(word(a, "")).empty());
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    auto u = random_word_of(a, 30, rng);
    CHECK(word_product(u, word_inverse(u)).empty());
  }
}

TEST_CASE("apply_map and is_kernel_member on SQ4") {
  auto sq = test::sq4_raw();
  auto a  = sq.f.domain();
  CHECK(format_word(apply_map(word(a, "a b^-1"), sq.f)) == "1 1^-1");
  CHECK(apply_map(word(a, ""), sq.f).empty());

  CHECK(is_kernel_member(word(a, "a b^-1"), sq.f));
  CHECK_FALSE(is_kernel_member(word(a, "a"), sq.f));
  CHECK_FALSE(is_kernel_member(word(a, "a b^-1"), sq.h));

  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word_of(a, 50, rng);
    CHECK(apply_map(w, sq.f).size() == w.size());
  }

  auto other = make_alphabet({"a", "b"});
  CHECK_THROWS_AS((void) apply_map(word(other, "a"), sq.f), Error);
}

TEST_CASE("homomorphism law and reduce invariance of kernel membership") {
  auto sq = test::sq4_raw();
  auto a  = sq.f.domain();
  Rng  rng(7);
  for (int i = 0; i < 1000; ++i) {
    auto u = random_word_of(a, 20, rng);
    auto v = random_word_of(a, 20, rng);
    for (auto const* m : {&sq.f, &sq.h}) {
      CHECK(reduce(apply_map(word_product(u, v), *m))
            == word_product(apply_map(u, *m), apply_map(v, *m)));
      CHECK(is_kernel_member(u, *m) == is_kernel_member(reduce(u), *m));
    }
  }
}

TEST_CASE("parse_word") {
  auto a = abcd();
  auto w = word(a, "a b^-1");
  REQUIRE(w.size() == 2);
  CHECK(w[0] == Letter{test::sym(a, "a"), Sign::plus});
  CHECK(w[1] == Letter{test::sym(a, "b"), Sign::minus});
  CHECK(word(a, "").empty());
  CHECK(word(a, "   \t ").empty());
  CHECK(format_word(word(a, "  a   c^-1 ")) == "a c^-1");

  auto code_of = [&](std::string const& text) {
    try {
      (void) parse_word(text, a);
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error for \"" << text << "\"");
    return ErrorCode::invariant_violation;
  };
  CHECK(code_of("a^2") == ErrorCode::parse_error);
  CHECK(code_of("a^+1") == ErrorCode::parse_error);
  CHECK(code_of("a^-1^-1") == ErrorCode::parse_error);
  CHECK(code_of("a-b") == ErrorCode::parse_error);
  CHECK(code_of("z") == ErrorCode::unknown_generator);

  try {
    (void) parse_word("a b c^2", a);
  } catch (Error const& e) {
    CHECK(std::string(e.what()).find("token 3") != std::string::npos);
  }
}

TEST_CASE("alphabet and map construction errors") {
  CHECK_THROWS_AS(make_alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(make_alphabet({"a b"}), Error);
  CHECK_THROWS_AS(make_alphabet({""}), Error);
  auto a = abcd();
  auto b = make_alphabet({"1"});
  CHECK_THROWS_AS(FiniteMap::from_names(a, b, {{"a", "1"}}), Error);
  CHECK_THROWS_AS(FiniteMap(a, b, {symbol_at(0)}), Error);
  CHECK_THROWS_AS(Word(a, {{symbol_at(7), Sign::plus}}), Error);
}
