// Words over a finite alphabet with free reduction. A map m between finite
// alphabets induces the homomorphism Fg(m), applied here letter by letter.
//
// A Word stores its letters verbatim: nothing here reduces implicitly except
// the operations documented to return reduced words (reduce, word_product).

#ifndef KERSYM_FREEGROUP_HPP_
#define KERSYM_FREEGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kersym/error.hpp"

namespace kersym {

  // Position of a generator in its alphabet. Alphabets are ordered and this
  // order is the tie-breaking order used throughout the library.
  enum class Symbol : std::uint32_t {};

  [[nodiscard]] constexpr std::size_t index(Symbol s) noexcept {
    return static_cast<std::size_t>(s);
  }

  [[nodiscard]] constexpr Symbol symbol_at(std::size_t i) noexcept {
    return static_cast<Symbol>(i);
  }

  enum class Sign : std::int8_t { plus = 1, minus = -1 };

  [[nodiscard]] constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
  }

  [[nodiscard]] constexpr int to_int(Sign s) noexcept {
    return static_cast<int>(s);
  }

  // "+1" / "-1"
  std::string_view to_string(Sign s) noexcept;

  struct Letter {
    Symbol symbol;
    Sign   exponent = Sign::plus;

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return {symbol, -exponent};
    }

    [[nodiscard]] constexpr bool cancels(Letter const& other) const noexcept {
      return symbol == other.symbol && exponent == -other.exponent;
    }

    friend constexpr bool operator==(Letter const&, Letter const&) = default;
  };

  // An ordered finite set of generator names matching [A-Za-z0-9_]+.
  class Alphabet {
   public:
    explicit Alphabet(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] std::string const& name(Symbol s) const {
      return _names.at(index(s));
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] bool contains(Symbol s) const noexcept {
      return index(s) < _names.size();
    }

    [[nodiscard]] std::optional<Symbol> find(std::string_view name) const;

    // Throws ErrorCode::unknown_generator.
    [[nodiscard]] Symbol at(std::string_view name) const;

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x._names == y._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _lookup;
  };

  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  AlphabetPtr make_alphabet(std::vector<std::string> names);

  [[nodiscard]] bool is_valid_symbol_name(std::string_view name) noexcept;

  // Pointer-equal or element-wise equal.
  [[nodiscard]] bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y);

  class Word {
   public:
    explicit Word(AlphabetPtr alphabet) : _alphabet(std::move(alphabet)) {}

    // Throws ErrorCode::unknown_generator if a symbol is outside the alphabet.
    Word(AlphabetPtr alphabet, std::vector<Letter> letters);

    [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    [[nodiscard]] Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }

    // Letters only; alphabets are compared by same_alphabet where it matters.
    friend bool operator==(Word const& x, Word const& y) {
      return x._letters == y._letters && same_alphabet(x._alphabet, y._alphabet);
    }

   private:
    AlphabetPtr         _alphabet;
    std::vector<Letter> _letters;
  };

  // A total function between two finite alphabets.
  class FiniteMap {
   public:
    // image[i] is the image of symbol i of the domain.
    FiniteMap(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Symbol> image);

    // Builds from names; every domain symbol must appear exactly once.
    static FiniteMap from_names(
        AlphabetPtr                                                 domain,
        AlphabetPtr                                                 codomain,
        std::vector<std::pair<std::string, std::string>> const& assignment);

    [[nodiscard]] AlphabetPtr const& domain() const noexcept {
      return _domain;
    }

    [[nodiscard]] AlphabetPtr const& codomain() const noexcept {
      return _codomain;
    }

    [[nodiscard]] Symbol operator()(Symbol s) const {
      return _image.at(index(s));
    }

    [[nodiscard]] bool same_image(Symbol s, Symbol t) const {
      return (*this)(s) == (*this)(t);
    }

    [[nodiscard]] std::span<Symbol const> images() const noexcept {
      return _image;
    }

    [[nodiscard]] bool is_surjective() const;

   private:
    AlphabetPtr         _domain;
    AlphabetPtr         _codomain;
    std::vector<Symbol> _image;
  };

  // Free reduction by a single left-to-right stack scan.
  [[nodiscard]] Word reduce(Word const& w);

  // Throws ErrorCode::alphabet_mismatch.
  [[nodiscard]] Word word_product(Word const& u, Word const& v);

  [[nodiscard]] Word word_inverse(Word const& u);

  // Letterwise image, not reduced. Throws ErrorCode::alphabet_mismatch.
  [[nodiscard]] Word apply_map(Word const& w, FiniteMap const& m);

  [[nodiscard]] bool is_kernel_member(Word const& w, FiniteMap const& m);

  // Word text syntax: whitespace separated tokens `x` or `x^-1`.
  // Throws ErrorCode::parse_error (with a 1-based token position) or
  // ErrorCode::unknown_generator.
  [[nodiscard]] Word parse_word(std::string_view text, AlphabetPtr const& alphabet);

  [[nodiscard]] std::string format_word(Word const& w);

  [[nodiscard]] std::string format_letter(Letter const& x, Alphabet const& alphabet);

}  // namespace kersym

#endif  // KERSYM_FREEGROUP_HPP_
