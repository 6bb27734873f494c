// Non-crossing cancellation pairings.
//
// When the image of a word under Fg(m) reduces to the empty word, the
// cancellations pair up the positions of the word: each pair (i, j) has
// m(a_i) = m(a_j) and opposite exponents, every position occurs once, and
// no two pairs interleave. Conversely any word carrying such a pairing lies
// in the kernel of Fg(m).
//
// Positions are 0-based in the API; text output is 1-based.

#ifndef KERSYM_PAIRING_HPP_
#define KERSYM_PAIRING_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kersym/freegroup.hpp"

namespace kersym {

  using IndexPair = std::pair<std::size_t, std::size_t>;

  class Pairing {
   public:
    // Pairs are normalised to (min, max) and sorted. No structural checks
    // are made here; see is_perfect() and is_non_crossing().
    Pairing(std::size_t word_length, std::vector<IndexPair> pairs);

    [[nodiscard]] std::size_t word_length() const noexcept {
      return _length;
    }

    [[nodiscard]] std::vector<IndexPair> const& pairs() const noexcept {
      return _pairs;
    }

    [[nodiscard]] bool is_perfect() const noexcept {
      return _perfect;
    }

    [[nodiscard]] bool is_non_crossing() const;

    // The paired index. Only meaningful when is_perfect().
    [[nodiscard]] std::size_t partner(std::size_t k) const {
      return _partner.at(k);
    }

    [[nodiscard]] std::vector<std::size_t> const& partners() const noexcept {
      return _partner;
    }

    // One "i-j" line per pair, 1-based, sorted.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Pairing const& x, Pairing const& y) {
      return x._length == y._length && x._pairs == y._pairs;
    }

   private:
    std::size_t              _length;
    std::vector<IndexPair>   _pairs;
    std::vector<std::size_t> _partner;
    bool                     _perfect;
  };

  // Leftmost-innermost pairing read off the stack reduction of apply_map(w, m).
  // w is not reduced first. Throws ErrorCode::not_in_kernel or
  // ErrorCode::alphabet_mismatch.
  [[nodiscard]] Pairing extract_pairing(Word const& w, FiniteMap const& m);

  // Throws ErrorCode::length_mismatch when the lengths disagree.
  [[nodiscard]] bool validate_pairing(Word const& w, FiniteMap const& m, Pairing const& p);

}  // namespace kersym

#endif  // KERSYM_PAIRING_HPP_
