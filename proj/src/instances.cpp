#include "kersym/instances.hpp"

#include "json.hpp"

#include "kersym/relations.hpp"

namespace kersym {

  Instance validate_instance(FiniteMap f, FiniteMap h) {
    if (!same_alphabet(f.domain(), h.domain())) {
      throw Error(ErrorCode::instance_invalid, "f and h must share the domain A");
    }
    if (!f.is_surjective()) {
      throw Error(ErrorCode::not_surjective_f, "hypothesis failed: f: A -> B is not surjective");
    }
    if (!h.is_surjective()) {
      throw Error(ErrorCode::not_surjective_h, "hypothesis failed: h: A -> C is not surjective");
    }
    if (auto w = commuting_witness(f, h)) {
      auto const& a = *f.domain();
      throw Error(ErrorCode::kernel_pairs_do_not_commute,
                  "hypothesis failed: kernel pairs do not commute, Eq(f)∘Eq(h) != "
                  "Eq(h)∘Eq(f) (witness pair ("
                      + a.name(w->first) + "," + a.name(w->second) + "))");
    }
    return Instance(std::move(f), std::move(h));
  }

  ////////////////////////////////////////////////////////////////////////
  // Instance document
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using nlohmann::json;

    AlphabetPtr read_alphabet(json const& doc, char const* key) {
      if (!doc.contains(key) || !doc[key].is_array()) {
        throw Error(ErrorCode::format_error,
                    std::string("instance document: \"") + key + "\" must be an array");
      }
      std::vector<std::string> names;
      for (auto const& item : doc[key]) {
        if (!item.is_string()) {
          throw Error(ErrorCode::format_error,
                      std::string("instance document: \"") + key + "\" must hold strings");
        }
        names.push_back(item.get<std::string>());
      }
      return make_alphabet(std::move(names));
    }

    FiniteMap read_map(json const&        doc,
                       char const*        key,
                       AlphabetPtr const& domain,
                       AlphabetPtr const& codomain) {
      if (!doc.contains(key) || !doc[key].is_object()) {
        throw Error(ErrorCode::format_error,
                    std::string("instance document: \"") + key + "\" must be an object");
      }
      std::vector<std::pair<std::string, std::string>> assignment;
      for (auto const& [from, to] : doc[key].items()) {
        if (!to.is_string()) {
          throw Error(ErrorCode::format_error,
                      std::string("instance document: images in \"") + key
                          + "\" must be strings");
        }
        assignment.emplace_back(from, to.get<std::string>());
      }
      try {
        return FiniteMap::from_names(domain, codomain, assignment);
      } catch (Error const& e) {
        throw Error(ErrorCode::format_error,
                    std::string("instance document: map \"") + key + "\": " + e.what());
      }
    }
  }  // namespace

  RawInstance parse_instance_document(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::exception const& e) {
      throw Error(ErrorCode::format_error, std::string("instance document: ") + e.what());
    }
    if (!doc.is_object()) {
      throw Error(ErrorCode::format_error, "instance document must be a JSON object");
    }
    auto a = read_alphabet(doc, "A");
    auto b = read_alphabet(doc, "B");
    auto c = read_alphabet(doc, "C");
    return RawInstance{read_map(doc, "f", a, b), read_map(doc, "h", a, c)};
  }

  std::string format_instance_document(FiniteMap const& f,
                                       FiniteMap const& h,
                                       std::string_view version) {
    nlohmann::ordered_json doc;
    if (!version.empty()) {
      doc["version"] = std::string(version);
    }
    doc["A"] = f.domain()->names();
    doc["B"] = f.codomain()->names();
    doc["C"] = h.codomain()->names();
    auto write_map = [](FiniteMap const& m) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < m.domain()->size(); ++i) {
        obj[m.domain()->names()[i]] = m.codomain()->name(m(symbol_at(i)));
      }
      return obj;
    };
    doc["f"] = write_map(f);
    doc["h"] = write_map(h);
    return doc.dump() + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  std::string generator_version() {
    return "kersym-instance/1 rng=" + std::string(rng_algorithm);
  }

  void check_gen_spec(GenSpec const& spec) {
    auto fail = [](std::string const& msg) {
      throw Error(ErrorCode::spec_out_of_bounds, "generator spec: " + msg);
    };
    if (spec.base_size < 1 || spec.left_size < 1 || spec.right_size < 1 || spec.inflation < 1) {
      fail("all sizes must be at least 1");
    }
    if (spec.left_size > max_gen_set_size || spec.right_size > max_gen_set_size) {
      fail("|B| and |C| must be at most " + std::to_string(max_gen_set_size));
    }
    if (spec.base_size > spec.left_size || spec.base_size > spec.right_size) {
      fail("|D| must not exceed |B| or |C|");
    }
    if (spec.inflation > max_gen_inflation) {
      fail("inflation must be at most " + std::to_string(max_gen_inflation));
    }
    if (spec.factors > max_gen_factors) {
      fail("factor count must be at most " + std::to_string(max_gen_factors));
    }
    if (spec.conjugator_length > max_gen_conjugator) {
      fail("conjugator length must be at most " + std::to_string(max_gen_conjugator));
    }
  }

  namespace {
    std::vector<std::string> numbered(char prefix, std::size_t n) {
      std::vector<std::string> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i));
      }
      return out;
    }

    // A uniformly shuffled surjection onto [0, target).
    std::vector<std::size_t> random_surjection(std::size_t size, std::size_t target, Rng& rng) {
      std::vector<std::size_t> out(size);
      for (std::size_t i = 0; i < size; ++i) {
        out[i] = i < target ? i : static_cast<std::size_t>(rng.below(target));
      }
      rng.shuffle(out);
      return out;
    }

    std::vector<Symbol> fiber(FiniteMap const& m, Symbol s) {
      std::vector<Symbol> out;
      for (std::size_t i = 0; i < m.domain()->size(); ++i) {
        if (m.same_image(s, symbol_at(i))) {
          out.push_back(symbol_at(i));
        }
      }
      return out;
    }

    void append_conjugate(std::vector<Letter>&       out,
                          Word const&                conjugator,
                          std::vector<Letter> const& core) {
      out.insert(out.end(), conjugator.letters().begin(), conjugator.letters().end());
      out.insert(out.end(), core.begin(), core.end());
      auto inv = word_inverse(conjugator);
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }  // namespace

  Instance gen_instance(GenSpec const& spec) {
    check_gen_spec(spec);
    Rng  rng(spec.seed);
    auto beta  = random_surjection(spec.left_size, spec.base_size, rng);
    auto gamma = random_surjection(spec.right_size, spec.base_size, rng);

    std::vector<Symbol> f_image, h_image;
    for (std::size_t b = 0; b < spec.left_size; ++b) {
      for (std::size_t c = 0; c < spec.right_size; ++c) {
        if (beta[b] != gamma[c]) {
          continue;
        }
        auto copies = rng.between(1, spec.inflation);
        for (std::uint64_t k = 0; k < copies; ++k) {
          f_image.push_back(symbol_at(b));
          h_image.push_back(symbol_at(c));
        }
      }
    }
    auto a  = make_alphabet(numbered('a', f_image.size()));
    auto bs = make_alphabet(numbered('b', spec.left_size));
    auto cs = make_alphabet(numbered('c', spec.right_size));
    return validate_instance(FiniteMap(a, bs, std::move(f_image)),
                             FiniteMap(a, cs, std::move(h_image)));
  }

  Square draw_square(Instance const& inst, Rng& rng) {
    auto const& f = inst.f();
    auto const& h = inst.h();
    auto        a = symbol_at(static_cast<std::size_t>(rng.below(inst.a()->size())));
    auto        b = rng.pick(fiber(f, a));
    auto        d = rng.pick(fiber(h, a));
    std::vector<Symbol> corners;
    for (auto z : fiber(f, d)) {
      if (h.same_image(z, b)) {
        corners.push_back(z);
      }
    }
    if (corners.empty()) {
      throw Error(ErrorCode::no_completion, "draw_square: square does not close");
    }
    return Square{a, b, rng.pick(corners), d};
  }

  Word square_word(Instance const& inst, Square const& q) {
    return Word(inst.a(),
                {{q.a, Sign::plus}, {q.b, Sign::minus}, {q.c, Sign::plus}, {q.d, Sign::minus}});
  }

  Word random_word(AlphabetPtr const& alphabet, std::size_t length, Rng& rng) {
    std::vector<Letter> letters;
    letters.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
      auto s = symbol_at(static_cast<std::size_t>(rng.below(alphabet->size())));
      letters.push_back({s, rng.coin() ? Sign::plus : Sign::minus});
    }
    return Word(alphabet, std::move(letters));
  }

  Word gen_intersection_element(Instance const& inst, GenSpec const& spec) {
    check_gen_spec(spec);
    Rng                 rng(spec.seed);
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < spec.factors; ++k) {
      auto square = square_word(inst, draw_square(inst, rng));
      auto length = rng.between(0, spec.conjugator_length);
      auto x      = random_word(inst.a(), static_cast<std::size_t>(length), rng);
      append_conjugate(letters, x, {square.letters().begin(), square.letters().end()});
    }
    return reduce(Word(inst.a(), std::move(letters)));
  }

  Word gen_kernel_element(Instance const& inst, GenSpec const& spec, MapChoice which) {
    check_gen_spec(spec);
    auto const&         m = inst.map(which);
    Rng                 rng(spec.seed);
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < spec.factors; ++k) {
      auto a      = symbol_at(static_cast<std::size_t>(rng.below(inst.a()->size())));
      auto b      = rng.pick(fiber(m, a));
      auto length = rng.between(0, spec.conjugator_length);
      auto x      = random_word(inst.a(), static_cast<std::size_t>(length), rng);
      append_conjugate(letters, x, {{a, Sign::plus}, {b, Sign::minus}});
    }
    return reduce(Word(inst.a(), std::move(letters)));
  }

}  // namespace kersym
