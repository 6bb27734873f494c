// Kernel pairs of finite maps, relational composition and square completion.

#ifndef KERSYM_RELATIONS_HPP_
#define KERSYM_RELATIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kersym/freegroup.hpp"

namespace kersym {

  // The kernel pair Eq(m) of a map, stored as blocks of its domain.
  class Partition {
   public:
    Partition(AlphabetPtr ground, std::vector<std::size_t> class_index);

    [[nodiscard]] AlphabetPtr const& ground() const noexcept {
      return _ground;
    }

    // Blocks are numbered by their least member, in alphabet order.
    [[nodiscard]] std::size_t class_of(Symbol s) const {
      return _class_index.at(index(s));
    }

    [[nodiscard]] bool related(Symbol s, Symbol t) const {
      return class_of(s) == class_of(t);
    }

    [[nodiscard]] std::vector<std::vector<Symbol>> const& blocks() const noexcept {
      return _blocks;
    }

    // e.g. "{a,b} {c,d}"
    [[nodiscard]] std::string to_string() const;

   private:
    AlphabetPtr                      _ground;
    std::vector<std::size_t>         _class_index;
    std::vector<std::vector<Symbol>> _blocks;
  };

  // A binary relation on a finite ground set, as a dense boolean matrix.
  class Relation {
   public:
    explicit Relation(AlphabetPtr ground);

    static Relation identity(AlphabetPtr ground);
    static Relation from_partition(Partition const& p);

    [[nodiscard]] AlphabetPtr const& ground() const noexcept {
      return _ground;
    }

    [[nodiscard]] bool contains(Symbol s, Symbol t) const {
      return _matrix[index(s) * _n + index(t)] != 0;
    }

    void insert(Symbol s, Symbol t) {
      _matrix[index(s) * _n + index(t)] = 1;
    }

    [[nodiscard]] std::vector<std::pair<Symbol, Symbol>> pairs() const;

    friend bool operator==(Relation const& x, Relation const& y) {
      return same_alphabet(x._ground, y._ground) && x._matrix == y._matrix;
    }

   private:
    AlphabetPtr               _ground;
    std::size_t               _n;
    std::vector<unsigned char> _matrix;
  };

  [[nodiscard]] Partition eq_partition(FiniteMap const& m);

  // (a,b) is in the result iff there is c with (a,c) in r and (c,b) in s.
  // Throws ErrorCode::ground_mismatch.
  [[nodiscard]] Relation compose_relations(Relation const& r, Relation const& s);

  [[nodiscard]] bool relations_commute(FiniteMap const& f, FiniteMap const& h);

  // A pair lying in exactly one of Eq(f)∘Eq(h) and Eq(h)∘Eq(f), if any.
  [[nodiscard]] std::optional<std::pair<Symbol, Symbol>>
  commuting_witness(FiniteMap const& f, FiniteMap const& h);

  // The least z (in alphabet order) with f(y) = f(z) and h(z) = h(x).
  // Throws ErrorCode::no_completion when there is none.
  [[nodiscard]] Symbol complete_square(Symbol           y,
                                       Symbol           x,
                                       FiniteMap const& f,
                                       FiniteMap const& h);

}  // namespace kersym

#endif  // KERSYM_RELATIONS_HPP_
