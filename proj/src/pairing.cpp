#include "kersym/pairing.hpp"

#include <algorithm>
#include <limits>

namespace kersym {

  namespace {
    constexpr auto unpaired = std::numeric_limits<std::size_t>::max();
  }

  Pairing::Pairing(std::size_t word_length, std::vector<IndexPair> pairs)
      : _length(word_length), _pairs(std::move(pairs)), _partner(word_length, unpaired) {
    for (auto& [i, j] : _pairs) {
      if (i > j) {
        std::swap(i, j);
      }
    }
    std::sort(_pairs.begin(), _pairs.end());

    _perfect = 2 * _pairs.size() == _length;
    for (auto const& [i, j] : _pairs) {
      if (i == j || j >= _length || _partner[i] != unpaired || _partner[j] != unpaired) {
        _perfect = false;
        break;
      }
      _partner[i] = j;
      _partner[j] = i;
    }
    if (!_perfect) {
      _partner.clear();
    }
  }

  bool Pairing::is_non_crossing() const {
    if (!_perfect) {
      return false;
    }
    // Openers are pushed; each closer must match the innermost open pair.
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < _length; ++k) {
      if (_partner[k] > k) {
        open.push_back(k);
      } else {
        if (open.empty() || open.back() != _partner[k]) {
          return false;
        }
        open.pop_back();
      }
    }
    return open.empty();
  }

  std::string Pairing::to_string() const {
    std::string out;
    for (auto const& [i, j] : _pairs) {
      out += std::to_string(i + 1) + '-' + std::to_string(j + 1) + '\n';
    }
    return out;
  }

  Pairing extract_pairing(Word const& w, FiniteMap const& m) {
    auto                     image = apply_map(w, m);
    std::vector<std::size_t> stack;
    std::vector<IndexPair>   pairs;
    stack.reserve(image.size());
    pairs.reserve(image.size() / 2);
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (!stack.empty() && image[stack.back()].cancels(image[k])) {
        pairs.emplace_back(stack.back(), k);
        stack.pop_back();
      } else {
        stack.push_back(k);
      }
    }
    if (!stack.empty()) {
      throw Error(ErrorCode::not_in_kernel, "word is not in the kernel of the map");
    }
    return Pairing(w.size(), std::move(pairs));
  }

  bool validate_pairing(Word const& w, FiniteMap const& m, Pairing const& p) {
    if (p.word_length() != w.size()) {
      throw Error(ErrorCode::length_mismatch,
                  "pairing covers " + std::to_string(p.word_length())
                      + " positions but the word has " + std::to_string(w.size()));
    }
    if (!same_alphabet(w.alphabet(), m.domain())) {
      throw Error(ErrorCode::alphabet_mismatch, "validate_pairing: alphabets differ");
    }
    if (!p.is_perfect() || !p.is_non_crossing()) {
      return false;
    }
    return std::all_of(p.pairs().begin(), p.pairs().end(), [&](IndexPair const& q) {
      auto const& x = w[q.first];
      auto const& y = w[q.second];
      return m.same_image(x.symbol, y.symbol) && x.exponent == -y.exponent;
    });
  }

}  // namespace kersym
