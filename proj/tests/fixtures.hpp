// Shared test fixtures and helpers. SQ4 and NC3 are the two small reference
// instances; the grid instance carries the 14-letter replay.

#ifndef KERSYM_TESTS_FIXTURES_HPP_
#define KERSYM_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "kersym/freegroup.hpp"
#include "kersym/instances.hpp"
#include "kersym/pairing.hpp"
#include "kersym/symmetric.hpp"

namespace kersym::test {

  // A = {a,b,c,d}, f: a,b -> 1; c,d -> 2, h: a,d -> 1; b,c -> 2.
  inline constexpr char const* sq4_json
      = R"({"A":["a","b","c","d"],"B":["1","2"],"C":["1","2"],)"
        R"("f":{"a":"1","b":"1","c":"2","d":"2"},"h":{"a":"1","b":"2","c":"2","d":"1"}})";

  // A = {a,b,c}, f: a,b -> 1; c -> 2, h: a -> 1; b,c -> 2. Not commuting.
  inline constexpr char const* nc3_json
      = R"({"A":["a","b","c"],"B":["1","2"],"C":["1","2"],)"
        R"("f":{"a":"1","b":"1","c":"2"},"h":{"a":"1","b":"2","c":"2"}})";

  inline RawInstance sq4_raw() {
    return parse_instance_document(sq4_json);
  }

  inline Instance sq4() {
    return validate_instance(sq4_raw());
  }

  inline RawInstance nc3_raw() {
    return parse_instance_document(nc3_json);
  }

  inline Word word(AlphabetPtr const& a, std::string const& text) {
    return parse_word(text, a);
  }

  inline Symbol sym(AlphabetPtr const& a, std::string const& name) {
    return a->at(name);
  }

  // Plain-integer views for the oracles.
  inline std::vector<std::pair<int, int>> to_plain(Word const& w) {
    std::vector<std::pair<int, int>> out;
    for (auto const& x : w.letters()) {
      out.emplace_back(static_cast<int>(index(x.symbol)), to_int(x.exponent));
    }
    return out;
  }

  inline std::vector<int> table(FiniteMap const& m) {
    std::vector<int> out;
    for (auto s : m.images()) {
      out.push_back(static_cast<int>(index(s)));
    }
    return out;
  }

  // 1-based pairs as written in the documentation.
  inline std::vector<IndexPair> one_based(std::vector<IndexPair> pairs) {
    for (auto& [i, j] : pairs) {
      --i;
      --j;
    }
    return pairs;
  }

  ////////////////////////////////////////////////////////////////////////
  // The 14-letter replay.
  //
  // A is the full grid B x C with B = {0,1,2}, C = {0,1,2,3}; the symbol
  // pFH has f-image F and h-image H. Seven rows (a_k, b_k, δ_k) are chosen so
  // that the x-sequence a_1..a_7, b_7^-1..b_1^-1 cancels under h with pairs
  // (1,6),(2,3),(4,5),(7,14),(8,9),(10,13),(11,12), and so that the pairs
  // tested at positions 9, 2, 10 and 4 are not f-related.
  ////////////////////////////////////////////////////////////////////////

  inline Instance grid_instance() {
    std::vector<std::string> names;
    std::vector<Symbol>      f_image, h_image;
    for (int f = 0; f < 3; ++f) {
      for (int h = 0; h < 4; ++h) {
        names.push_back("p" + std::to_string(f) + std::to_string(h));
        f_image.push_back(symbol_at(f));
        h_image.push_back(symbol_at(h));
      }
    }
    auto a = make_alphabet(names);
    return validate_instance(FiniteMap(a, make_alphabet({"0", "1", "2"}), f_image),
                             FiniteMap(a, make_alphabet({"0", "1", "2", "3"}), h_image));
  }

  inline PairCertificate replay_pair(Instance const& grid) {
    int const  f_value[7] = {0, 1, 0, 2, 0, 0, 1};
    int const  h_of_a[7]  = {0, 1, 1, 2, 2, 0, 0};
    int const  h_of_b[7]  = {0, 2, 3, 3, 2, 1, 1};
    Sign const sign[7]    = {Sign::plus,
                             Sign::plus,
                             Sign::minus,
                             Sign::plus,
                             Sign::minus,
                             Sign::minus,
                             Sign::plus};
    auto       point      = [&](int f, int h) {
      return grid.a()->at("p" + std::to_string(f) + std::to_string(h));
    };
    std::vector<PairRow> rows;
    for (int k = 0; k < 7; ++k) {
      rows.push_back({point(f_value[k], h_of_a[k]), point(f_value[k], h_of_b[k]), sign[k]});
    }
    return PairCertificate(grid.a(), rows);
  }

  inline std::vector<IndexPair> replay_h_pairs() {
    return one_based({{1, 6}, {2, 3}, {4, 5}, {7, 14}, {8, 9}, {10, 13}, {11, 12}});
  }

}  // namespace kersym::test

#endif  // KERSYM_TESTS_FIXTURES_HPP_
