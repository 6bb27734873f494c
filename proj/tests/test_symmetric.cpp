#include "doctest.h"

#include "fixtures.hpp"
#include "oracle/oracles.hpp"

#include "kersym/rewrite.hpp"
#include "kersym/symmetric.hpp"

using namespace kersym;
using kersym::test::sym;
using kersym::test::word;

namespace {
  Instance small_instance(std::uint64_t seed) {
    Rng     rng(seed);
    GenSpec spec;
    spec.seed       = seed;
    spec.base_size  = static_cast<std::size_t>(rng.between(1, 3));
    spec.left_size  = spec.base_size + static_cast<std::size_t>(rng.between(0, 3));
    spec.right_size = spec.base_size + static_cast<std::size_t>(rng.between(0, 3));
    spec.inflation  = static_cast<std::size_t>(rng.between(1, 3));
    return gen_instance(spec);
  }

  GenSpec element_spec(std::uint64_t seed, std::size_t factors, std::size_t conj) {
    GenSpec s;
    s.seed              = seed;
    s.factors           = factors;
    s.conjugator_length = conj;
    return s;
  }
}  // namespace

TEST_CASE("one_dim_decompose: examples") {
  auto sq = test::sq4_raw();
  auto a  = sq.f.domain();

  auto c1 = one_dim_decompose(word(a, "a b^-1"), sq.f);
  CHECK(c1.rows()
        == std::vector<PairRow>{{sym(a, "a"), sym(a, "a"), Sign::plus},
                                {sym(a, "b"), sym(a, "a"), Sign::minus}});
  CHECK(format_word(c1.word_b()) == "a a^-1");
  CHECK(reduce(c1.word_b()).empty());

  auto c2 = one_dim_decompose(word(a, "c d^-1 a b^-1"), sq.f);
  CHECK(format_certificate(c2) == "pair n=4\nc c +1\nd c -1\na a +1\nb a -1\n");

  // reduced first
  auto c3 = one_dim_decompose(word(a, "a c^-1 c b^-1"), sq.f);
  CHECK(c3 == c1);

  CHECK(one_dim_decompose(word(a, ""), sq.f).size() == 0);

  // nested pairs
  auto c4 = one_dim_decompose(word(a, "a c d^-1 b^-1"), sq.f);
  CHECK(format_certificate(c4) == "pair n=4\na a +1\nc c +1\nd c -1\nb a -1\n");
  CHECK(verify_pair_certificate(c4, sq.f, word(a, "a c d^-1 b^-1")));

  try {
    (void) one_dim_decompose(word(a, "a d^-1"), sq.f);
    FAIL("expected NotInKernel");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_in_kernel);
  }
}

TEST_CASE("verify_pair_certificate") {
  auto sq = test::sq4_raw();
  auto a  = sq.f.domain();
  auto g  = word(a, "a b^-1");
  CHECK(verify_pair_certificate(PairCertificate(a,
                                                {{sym(a, "a"), sym(a, "a"), Sign::plus},
                                                 {sym(a, "b"), sym(a, "a"), Sign::minus}}),
                                sq.f,
                                g));
  CHECK(verify_pair_certificate(PairCertificate(a), sq.f, word(a, "")));
  // f(a) != f(c)
  CHECK_FALSE(verify_pair_certificate(
      PairCertificate(a, {{sym(a, "a"), sym(a, "c"), Sign::plus}}), sq.f, word(a, "a c^-1")));
  // right rows, wrong word
  CHECK_FALSE(verify_pair_certificate(
      PairCertificate(a, {{sym(a, "a"), sym(a, "a"), Sign::plus}}), sq.f, word(a, "a b^-1")));
}

TEST_CASE("one_dim_decompose round trip on generated elements") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto inst = small_instance(100 + s);
    for (std::uint64_t k = 0; k < 30; ++k) {
      auto g    = gen_kernel_element(inst, element_spec(s * 1000 + k, 3, 4), MapChoice::f);
      auto cert = one_dim_decompose(g, inst.f());
      CHECK(verify_pair_certificate(cert, inst.f(), g));
      CHECK(cert.path() == reduce(g));
      CHECK(cert.size() == reduce(g).size());
      for (auto const& r : cert.rows()) {
        CHECK(inst.f().same_image(r.a, r.b));
      }
    }
  }
}

TEST_CASE("two_dim_decompose: SQ4 golden") {
  auto inst = test::sq4();
  auto a    = inst.a();
  auto g    = word(a, "a b^-1 c d^-1");

  // Independent oracle on integer tables.
  auto pair = one_dim_decompose(g, inst.f());
  std::vector<int> as, bs, ds;
  for (auto const& r : pair.rows()) {
    as.push_back(static_cast<int>(index(r.a)));
    bs.push_back(static_cast<int>(index(r.b)));
    ds.push_back(to_int(r.sign));
  }
  auto run = oracle::run_algorithm_text(as, bs, ds, test::table(inst.f()), test::table(inst.h()));
  // y = (a,b,b,a,b,b,a,a), traced by hand
  std::vector<int> const hand = {-1, 0, 1, 1, 0, 1, 1, 0, 0};
  CHECK(run.y == hand);
  CHECK(run.tests == std::vector<std::pair<int, int>>{{4, 5}, {6, 3}, {2, 7}});

  RewriteLog log;
  auto       cert = two_dim_decompose(g, inst, &log);
  CHECK(format_certificate(cert)
        == "quad n=4\n"
           "a a a a +1\n"
           "b a a b -1\n"
           "c c b b +1\n"
           "d c b a -1\n");
  CHECK(verify_quad_certificate(cert, inst.f(), inst.h(), g));

  // Library y agrees with the oracle: d_k = y_k, c_k = y_o(k).
  std::vector<int> lib(9, -1);
  for (std::size_t k = 0; k < 4; ++k) {
    lib[k + 1] = static_cast<int>(index(cert.rows()[k].d));
    lib[8 - k] = static_cast<int>(index(cert.rows()[k].c));
  }
  CHECK(lib == run.y);

  auto text = log.to_text(*a);
  CHECK(text.find("testpair j=4 o(j)=5 replace z=b") != std::string::npos);
  CHECK(text.find("testpair j=6 o(j)=3 keep") != std::string::npos);
  CHECK(text.find("testpair j=2 o(j)=7 keep") != std::string::npos);
  CHECK(text.find("close l=8 o(l)=p(m)=1") != std::string::npos);
}

TEST_CASE("test_pair_step") {
  auto inst = test::sq4();
  auto a    = inst.a();
  auto pair = one_dim_decompose(word(a, "a b^-1 c d^-1"), inst.f());
  RewriteState st(pair, inst.h());
  REQUIRE(st.size() == 8);
  // position 4 holds d^-1 (y=a from its pair (1,4)); position 5 holds c (y=c).
  CHECK(st.y(3) == sym(a, "a"));
  CHECK(st.y(4) == sym(a, "c"));
  auto after = test_pair_step(st, 3, inst.f(), inst.h());
  CHECK(after.y(4) == sym(a, "b"));
  CHECK(st.y(4) == sym(a, "c"));
  // already f-related: unchanged
  auto again = test_pair_step(after, 3, inst.f(), inst.h());
  CHECK(again.y() == after.y());
}

TEST_CASE("the 14-letter replay") {
  auto grid = test::grid_instance();
  auto pair = test::replay_pair(grid);

  RewriteLog log;
  auto       cert = rewrite_symmetric_pair(pair, grid, &log);

  // d_7 c_7 c_6 c_1 d_6 d_1 | d_2 c_2 d_3 c_5 d_5 d_4 c_4 c_3 as positions.
  std::vector<std::size_t> expected;
  for (std::size_t k : {7, 8, 9, 14, 6, 1, 2, 13, 3, 10, 5, 4, 11, 12}) {
    expected.push_back(k - 1);
  }
  CHECK(log.fix_order() == expected);

  std::vector<std::pair<std::size_t, std::size_t>> tested;
  std::size_t switches = 0, closes = 0;
  for (auto const& e : log.events()) {
    if (e.kind == RewriteEvent::Kind::test_keep || e.kind == RewriteEvent::Kind::test_replace) {
      tested.emplace_back(e.index + 1, e.other + 1);
    }
    switches += e.kind == RewriteEvent::Kind::switch_to;
    closes += e.kind == RewriteEvent::Kind::close;
  }
  CHECK(tested == std::vector<std::pair<std::size_t, std::size_t>>{{7, 8}, {9, 6}, {2, 13}, {10, 5}, {4, 11}});
  CHECK(switches == 1);
  CHECK(closes == 2);

  // The integer oracle reproduces the same order and values.
  std::vector<int> as, bs, ds;
  for (auto const& r : pair.rows()) {
    as.push_back(static_cast<int>(index(r.a)));
    bs.push_back(static_cast<int>(index(r.b)));
    ds.push_back(to_int(r.sign));
  }
  auto run = oracle::run_algorithm_text(as, bs, ds, test::table(grid.f()), test::table(grid.h()));
  std::vector<std::size_t> oracle_order;
  for (int k : run.assignment_order) {
    oracle_order.push_back(static_cast<std::size_t>(k - 1));
  }
  CHECK(oracle_order == expected);
  std::vector<int> lib(15, -1);
  for (std::size_t k = 0; k < 7; ++k) {
    lib[k + 1]  = static_cast<int>(index(cert.rows()[k].d));
    lib[14 - k] = static_cast<int>(index(cert.rows()[k].c));
  }
  CHECK(lib == run.y);

  for (auto const& r : cert.rows()) {
    CHECK(grid.f().same_image(r.a, r.b));
    CHECK(grid.f().same_image(r.d, r.c));
    CHECK(grid.h().same_image(r.a, r.d));
    CHECK(grid.h().same_image(r.b, r.c));
  }
}

TEST_CASE("two_dim_decompose agrees with the oracle on generated elements") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto inst = small_instance(200 + s);
    auto f    = test::table(inst.f());
    auto h    = test::table(inst.h());
    for (std::uint64_t k = 0; k < 25; ++k) {
      auto g    = gen_intersection_element(inst, element_spec(s * 7919 + k, 3, 3));
      auto pair = one_dim_decompose(g, inst.f());
      std::vector<int> as, bs, ds;
      for (auto const& r : pair.rows()) {
        as.push_back(static_cast<int>(index(r.a)));
        bs.push_back(static_cast<int>(index(r.b)));
        ds.push_back(to_int(r.sign));
      }
      auto run  = oracle::run_algorithm_text(as, bs, ds, f, h);
      auto cert = two_dim_decompose(g, inst);
      REQUIRE(verify_quad_certificate(cert, inst.f(), inst.h(), g));
      CHECK(cert.size() == reduce(g).size());
      std::size_t const n = cert.size();
      std::vector<int>  lib(2 * n + 1, -1);
      for (std::size_t i = 0; i < n; ++i) {
        lib[i + 1]     = static_cast<int>(index(cert.rows()[i].d));
        lib[2 * n - i] = static_cast<int>(index(cert.rows()[i].c));
      }
      CHECK(lib == run.y);
    }
  }
}

TEST_CASE("two_dim_decompose: preconditions") {
  auto inst = test::sq4();
  auto a    = inst.a();
  auto code_of = [&](auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::invariant_violation;
  };
  CHECK(code_of([&] { (void) two_dim_decompose(word(a, "a d^-1"), inst); })
        == ErrorCode::not_in_kernel_f);
  CHECK(code_of([&] { (void) two_dim_decompose(word(a, "a b^-1"), inst); })
        == ErrorCode::not_in_kernel_h);
  auto nc = test::nc3_raw();
  CHECK(code_of([&] {
          (void) two_dim_decompose(word(nc.f.domain(), ""), nc.f, nc.h);
        })
        == ErrorCode::instance_invalid);
  CHECK(two_dim_decompose(word(a, ""), inst).size() == 0);
  CHECK(two_dim_decompose(word(a, "a a^-1"), inst).size() == 0);
}

TEST_CASE("verify_quad_certificate rejects broken rows") {
  auto inst = test::sq4();
  auto a    = inst.a();
  auto g    = word(a, "a b^-1 c d^-1");
  auto bad  = QuadCertificate(a, {{sym(a, "a"), sym(a, "c"), sym(a, "b"), sym(a, "d"), Sign::plus}});
  CHECK_FALSE(verify_quad_certificate(bad, inst.f(), inst.h(), g));
  auto cert = two_dim_decompose(g, inst);
  CHECK_FALSE(verify_quad_certificate(cert, inst.f(), inst.h(), word(a, "")));
}

TEST_CASE("cert_inverse and cert_conjugate") {
  auto inst = test::sq4();
  auto a    = inst.a();
  auto g    = word(a, "a b^-1 c d^-1");
  auto cert = two_dim_decompose(g, inst);

  auto inv = cert_inverse(cert);
  CHECK(format_certificate(inv)
        == "quad n=4\n"
           "a a a a +1\n"
           "b a a b -1\n"
           "b b c c +1\n"
           "a b c d -1\n");
  CHECK(verify_quad_certificate(inv, inst.f(), inst.h(), word_inverse(g)));
  CHECK(cert_inverse(inv) == cert);

  auto conj = cert_conjugate(cert, Letter{sym(a, "a"), Sign::minus});
  CHECK(conj.rows().front() == QuadRow{sym(a, "a"), sym(a, "a"), sym(a, "a"), sym(a, "a"), Sign::minus});
  CHECK(verify_quad_certificate(conj, inst.f(), inst.h(), word(a, "a^-1 a b^-1 c d^-1 a")));

  CHECK_THROWS_AS((void) cert_conjugate(cert, Letter{symbol_at(9), Sign::plus}), Error);

  for (std::uint64_t s = 0; s < 20; ++s) {
    auto gi = small_instance(300 + s);
    Rng  rng(s);
    for (int k = 0; k < 20; ++k) {
      auto w  = gen_intersection_element(gi, element_spec(rng.next(), 2, 3));
      auto c  = two_dim_decompose(w, gi);
      auto x  = Letter{symbol_at(static_cast<std::size_t>(rng.below(gi.a()->size()))),
                      rng.coin() ? Sign::plus : Sign::minus};
      auto xw = word_product(word_product(Word(gi.a(), {x}), w), Word(gi.a(), {x.inverse()}));
      CHECK(verify_quad_certificate(cert_inverse(c), gi.f(), gi.h(), word_inverse(w)));
      CHECK(verify_quad_certificate(cert_conjugate(c, x), gi.f(), gi.h(), xw));
    }
  }
}

TEST_CASE("certificate text format") {
  auto inst = test::sq4();
  auto a    = inst.a();
  auto cert = two_dim_decompose(word(a, "a b^-1 c d^-1"), inst);
  auto text = format_certificate(cert);
  CHECK(parse_quad_certificate(text, a) == cert);
  CHECK(parse_quad_certificate(text + "\n\n", a) == cert);

  std::string crlf;
  for (char ch : text) {
    if (ch == '\n') {
      crlf += '\r';
    }
    crlf += ch;
  }
  CHECK(parse_quad_certificate(crlf, a) == cert);

  auto pair = one_dim_decompose(word(a, "a b^-1"), inst.f());
  CHECK(parse_pair_certificate(format_certificate(pair), a) == pair);
  CHECK(format_certificate(QuadCertificate(a)) == "quad n=0\n");

  auto code_of = [&](std::string const& t) {
    try {
      (void) parse_quad_certificate(t, a);
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::invariant_violation;
  };
  CHECK(code_of("pair n=1\na a +1\n") == ErrorCode::format_error);
  CHECK(code_of("quad n=2\na a a a +1\n") == ErrorCode::format_error);
  CHECK(code_of("quad n=1\na a a +1\n") == ErrorCode::format_error);
  CHECK(code_of("quad n=1\na a a a 1\n") == ErrorCode::format_error);
  CHECK(code_of("quad n=x\n") == ErrorCode::format_error);
  CHECK(code_of("quad n=1\na a a z +1\n") == ErrorCode::unknown_generator);
}
