#include "kersym/freegroup.hpp"

#include <algorithm>
#include <utility>

namespace kersym {

  std::string_view to_string(Sign s) noexcept {
    return s == Sign::plus ? "+1" : "-1";
  }

  bool is_valid_symbol_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
             || (c >= '0' && c <= '9') || c == '_';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    _lookup.reserve(_names.size());
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!is_valid_symbol_name(_names[i])) {
        throw Error(ErrorCode::format_error,
                    "invalid symbol name \"" + _names[i] + "\"");
      }
      if (!_lookup.emplace(_names[i], i).second) {
        throw Error(ErrorCode::format_error,
                    "duplicate symbol \"" + _names[i] + "\"");
      }
    }
  }

  std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = _lookup.find(std::string(name));
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return symbol_at(it->second);
  }

  Symbol Alphabet::at(std::string_view name) const {
    if (auto s = find(name)) {
      return *s;
    }
    throw Error(ErrorCode::unknown_generator,
                "unknown generator \"" + std::string(name) + "\"");
  }

  AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<Alphabet const>(std::move(names));
  }

  bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) {
    if (x == y) {
      return true;
    }
    return x != nullptr && y != nullptr && *x == *y;
  }

  namespace {
    void require_same(AlphabetPtr const& x, AlphabetPtr const& y, char const* where) {
      if (!same_alphabet(x, y)) {
        throw Error(ErrorCode::alphabet_mismatch,
                    std::string(where) + ": alphabets differ");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
      : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
    for (auto const& x : _letters) {
      if (!_alphabet->contains(x.symbol)) {
        throw Error(ErrorCode::unknown_generator,
                    "symbol index " + std::to_string(index(x.symbol))
                        + " is outside the alphabet");
      }
      if (x.exponent != Sign::plus && x.exponent != Sign::minus) {
        throw Error(ErrorCode::parse_error, "exponent must be +1 or -1");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteMap
  ////////////////////////////////////////////////////////////////////////

  FiniteMap::FiniteMap(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Symbol> image)
      : _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _image(std::move(image)) {
    if (_image.size() != _domain->size()) {
      throw Error(ErrorCode::format_error, "map is not total on its domain");
    }
    for (auto s : _image) {
      if (!_codomain->contains(s)) {
        throw Error(ErrorCode::unknown_generator, "map image outside the codomain");
      }
    }
  }

  FiniteMap FiniteMap::from_names(
      AlphabetPtr                                             domain,
      AlphabetPtr                                             codomain,
      std::vector<std::pair<std::string, std::string>> const& assignment) {
    std::vector<std::optional<Symbol>> partial(domain->size());
    for (auto const& [from, to] : assignment) {
      auto s = domain->at(from);
      if (partial[index(s)]) {
        throw Error(ErrorCode::format_error, "symbol \"" + from + "\" is assigned twice");
      }
      partial[index(s)] = codomain->at(to);
    }
    std::vector<Symbol> image;
    image.reserve(partial.size());
    for (std::size_t i = 0; i < partial.size(); ++i) {
      if (!partial[i]) {
        throw Error(ErrorCode::format_error,
                    "map is not total: no image for \"" + domain->names()[i] + "\"");
      }
      image.push_back(*partial[i]);
    }
    return FiniteMap(std::move(domain), std::move(codomain), std::move(image));
  }

  bool FiniteMap::is_surjective() const {
    std::vector<bool> hit(_codomain->size(), false);
    for (auto s : _image) {
      hit[index(s)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Word reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto const& x : w.letters()) {
      if (!stack.empty() && stack.back().cancels(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return Word(w.alphabet(), std::move(stack));
  }

  Word word_product(Word const& u, Word const& v) {
    require_same(u.alphabet(), v.alphabet(), "word_product");
    std::vector<Letter> letters(u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return reduce(Word(u.alphabet(), std::move(letters)));
  }

  Word word_inverse(Word const& u) {
    std::vector<Letter> letters;
    letters.reserve(u.size());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    return Word(u.alphabet(), std::move(letters));
  }

  Word apply_map(Word const& w, FiniteMap const& m) {
    require_same(w.alphabet(), m.domain(), "apply_map");
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (auto const& x : w.letters()) {
      letters.push_back({m(x.symbol), x.exponent});
    }
    return Word(m.codomain(), std::move(letters));
  }

  bool is_kernel_member(Word const& w, FiniteMap const& m) {
    return reduce(apply_map(w, m)).empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Text syntax
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, AlphabetPtr const& alphabet) {
    std::vector<Letter> letters;
    std::size_t         pos   = 0;
    std::size_t         token = 0;
    auto is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    };
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
        continue;
      }
      auto end = pos;
      while (end < text.size() && !is_space(text[end])) {
        ++end;
      }
      ++token;
      std::string_view tok  = text.substr(pos, end - pos);
      Sign             sign = Sign::plus;
      if (auto caret = tok.find('^'); caret != std::string_view::npos) {
        if (tok.substr(caret) != "^-1") {
          throw Error(ErrorCode::parse_error,
                      "token " + std::to_string(token) + " \"" + std::string(tok)
                          + "\": the only allowed exponent is ^-1");
        }
        tok  = tok.substr(0, caret);
        sign = Sign::minus;
      }
      if (!is_valid_symbol_name(tok)) {
        throw Error(ErrorCode::parse_error,
                    "token " + std::to_string(token) + " \"" + std::string(tok)
                        + "\" is not a symbol");
      }
      auto s = alphabet->find(tok);
      if (!s) {
        throw Error(ErrorCode::unknown_generator,
                    "token " + std::to_string(token) + ": unknown generator \""
                        + std::string(tok) + "\"");
      }
      letters.push_back({*s, sign});
      pos = end;
    }
    return Word(alphabet, std::move(letters));
  }

  std::string format_letter(Letter const& x, Alphabet const& alphabet) {
    std::string out = alphabet.name(x.symbol);
    if (x.exponent == Sign::minus) {
      out += "^-1";
    }
    return out;
  }

  std::string format_word(Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += format_letter(w[i], *w.alphabet());
    }
    return out;
  }

}  // namespace kersym
