#include "kersym/relations.hpp"

#include <unordered_map>

namespace kersym {

  namespace {
    void require_same_ground(AlphabetPtr const& x, AlphabetPtr const& y) {
      if (!same_alphabet(x, y)) {
        throw Error(ErrorCode::ground_mismatch, "relations are on different ground sets");
      }
    }
  }  // namespace

  Partition::Partition(AlphabetPtr ground, std::vector<std::size_t> class_index)
      : _ground(std::move(ground)) {
    if (class_index.size() != _ground->size()) {
      throw Error(ErrorCode::ground_mismatch, "class index does not cover the ground set");
    }
    // Renumber so that block ids follow the first occurrence in alphabet order.
    std::unordered_map<std::size_t, std::size_t> renumber;
    _class_index.reserve(class_index.size());
    for (std::size_t i = 0; i < class_index.size(); ++i) {
      auto [it, fresh] = renumber.emplace(class_index[i], _blocks.size());
      if (fresh) {
        _blocks.emplace_back();
      }
      _class_index.push_back(it->second);
      _blocks[it->second].push_back(symbol_at(i));
    }
  }

  std::string Partition::to_string() const {
    std::string out;
    for (auto const& block : _blocks) {
      if (!out.empty()) {
        out += ' ';
      }
      out += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += _ground->name(block[i]);
      }
      out += '}';
    }
    return out;
  }

  Relation::Relation(AlphabetPtr ground)
      : _ground(std::move(ground)), _n(_ground->size()), _matrix(_n * _n, 0) {}

  Relation Relation::identity(AlphabetPtr ground) {
    Relation r(std::move(ground));
    for (std::size_t i = 0; i < r._n; ++i) {
      r.insert(symbol_at(i), symbol_at(i));
    }
    return r;
  }

  Relation Relation::from_partition(Partition const& p) {
    Relation r(p.ground());
    for (auto const& block : p.blocks()) {
      for (auto s : block) {
        for (auto t : block) {
          r.insert(s, t);
        }
      }
    }
    return r;
  }

  std::vector<std::pair<Symbol, Symbol>> Relation::pairs() const {
    std::vector<std::pair<Symbol, Symbol>> out;
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if (_matrix[i * _n + j] != 0) {
          out.emplace_back(symbol_at(i), symbol_at(j));
        }
      }
    }
    return out;
  }

  Partition eq_partition(FiniteMap const& m) {
    std::vector<std::size_t> class_index;
    class_index.reserve(m.domain()->size());
    for (auto s : m.images()) {
      class_index.push_back(index(s));
    }
    return Partition(m.domain(), std::move(class_index));
  }

  Relation compose_relations(Relation const& r, Relation const& s) {
    require_same_ground(r.ground(), s.ground());
    auto const n = r.ground()->size();
    Relation   result(r.ground());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!r.contains(symbol_at(a), symbol_at(c))) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (s.contains(symbol_at(c), symbol_at(b))) {
            result.insert(symbol_at(a), symbol_at(b));
          }
        }
      }
    }
    return result;
  }

  std::optional<std::pair<Symbol, Symbol>> commuting_witness(FiniteMap const& f,
                                                             FiniteMap const& h) {
    require_same_ground(f.domain(), h.domain());
    auto eq_f = Relation::from_partition(eq_partition(f));
    auto eq_h = Relation::from_partition(eq_partition(h));
    auto fh   = compose_relations(eq_f, eq_h);
    auto hf   = compose_relations(eq_h, eq_f);
    auto n    = f.domain()->size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (fh.contains(symbol_at(a), symbol_at(b)) != hf.contains(symbol_at(a), symbol_at(b))) {
          return std::pair{symbol_at(a), symbol_at(b)};
        }
      }
    }
    return std::nullopt;
  }

  bool relations_commute(FiniteMap const& f, FiniteMap const& h) {
    return !commuting_witness(f, h).has_value();
  }

  Symbol complete_square(Symbol y, Symbol x, FiniteMap const& f, FiniteMap const& h) {
    require_same_ground(f.domain(), h.domain());
    auto const& a = *f.domain();
    if (!a.contains(y) || !a.contains(x)) {
      throw Error(ErrorCode::unknown_generator, "complete_square: symbol outside the alphabet");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto z = symbol_at(i);
      if (f.same_image(y, z) && h.same_image(z, x)) {
        return z;
      }
    }
    throw Error(ErrorCode::no_completion,
                "no z with f(" + a.name(y) + ") = f(z) and h(z) = h(" + a.name(x) + ")");
  }

}  // namespace kersym
