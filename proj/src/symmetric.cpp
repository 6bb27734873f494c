#include "kersym/symmetric.hpp"

#include <sstream>

#include "kersym/pairing.hpp"
#include "kersym/rewrite.hpp"

namespace kersym {

  namespace {
    void check_symbols(Alphabet const& a, std::initializer_list<Symbol> symbols) {
      for (auto s : symbols) {
        if (!a.contains(s)) {
          throw Error(ErrorCode::unknown_generator, "certificate symbol outside the alphabet");
        }
      }
    }

    template <typename Rows, typename Pick>
    Word column(AlphabetPtr const& a, Rows const& rows, Pick pick) {
      std::vector<Letter> letters;
      letters.reserve(rows.size());
      for (auto const& r : rows) {
        letters.push_back({pick(r), r.sign});
      }
      return Word(a, std::move(letters));
    }

    void require_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) {
      if (!same_alphabet(x, y)) {
        throw Error(ErrorCode::alphabet_mismatch, "certificate alphabet differs from the map domain");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PairCertificate
  ////////////////////////////////////////////////////////////////////////

  PairCertificate::PairCertificate(AlphabetPtr alphabet, std::vector<PairRow> rows)
      : _alphabet(std::move(alphabet)), _rows(std::move(rows)) {
    for (auto const& r : _rows) {
      check_symbols(*_alphabet, {r.a, r.b});
    }
  }

  Word PairCertificate::word_a() const {
    return column(_alphabet, _rows, [](PairRow const& r) { return r.a; });
  }

  Word PairCertificate::word_b() const {
    return column(_alphabet, _rows, [](PairRow const& r) { return r.b; });
  }

  Word PairCertificate::path() const {
    return word_product(word_a(), word_inverse(word_b()));
  }

  ////////////////////////////////////////////////////////////////////////
  // QuadCertificate
  ////////////////////////////////////////////////////////////////////////

  QuadCertificate::QuadCertificate(AlphabetPtr alphabet, std::vector<QuadRow> rows)
      : _alphabet(std::move(alphabet)), _rows(std::move(rows)) {
    for (auto const& r : _rows) {
      check_symbols(*_alphabet, {r.a, r.b, r.c, r.d});
    }
  }

  Word QuadCertificate::word_a() const {
    return column(_alphabet, _rows, [](QuadRow const& r) { return r.a; });
  }

  Word QuadCertificate::word_b() const {
    return column(_alphabet, _rows, [](QuadRow const& r) { return r.b; });
  }

  Word QuadCertificate::word_c() const {
    return column(_alphabet, _rows, [](QuadRow const& r) { return r.c; });
  }

  Word QuadCertificate::word_d() const {
    return column(_alphabet, _rows, [](QuadRow const& r) { return r.d; });
  }

  Word QuadCertificate::path() const {
    auto ab = word_product(word_a(), word_inverse(word_b()));
    auto cd = word_product(word_c(), word_inverse(word_d()));
    return word_product(ab, cd);
  }

  ////////////////////////////////////////////////////////////////////////
  // One-dimensional decomposition
  ////////////////////////////////////////////////////////////////////////

  PairCertificate one_dim_decompose(Word const& g, FiniteMap const& f) {
    auto const nu      = reduce(g);
    auto const pairing = extract_pairing(nu, f);
    std::vector<PairRow> rows;
    rows.reserve(nu.size());
    for (std::size_t k = 0; k < nu.size(); ++k) {
      auto const first = std::min(k, pairing.partner(k));
      rows.push_back({nu[k].symbol, nu[first].symbol, nu[k].exponent});
    }
    return PairCertificate(nu.alphabet(), std::move(rows));
  }

  bool verify_pair_certificate(PairCertificate const& cert, FiniteMap const& f, Word const& g) {
    require_alphabet(cert.alphabet(), f.domain());
    require_alphabet(g.alphabet(), f.domain());
    for (auto const& r : cert.rows()) {
      if (!f.same_image(r.a, r.b)) {
        return false;
      }
    }
    return cert.path() == reduce(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Two-dimensional decomposition
  ////////////////////////////////////////////////////////////////////////

  QuadCertificate two_dim_decompose(Word const& g, Instance const& inst, RewriteLog* log) {
    if (!same_alphabet(g.alphabet(), inst.a())) {
      throw Error(ErrorCode::alphabet_mismatch, "two_dim_decompose: word is not over A");
    }
    if (!is_kernel_member(g, inst.f())) {
      throw Error(ErrorCode::not_in_kernel_f,
                  "hypothesis failed: the word is not in the kernel of Fg(f)");
    }
    if (!is_kernel_member(g, inst.h())) {
      throw Error(ErrorCode::not_in_kernel_h,
                  "hypothesis failed: the word is not in the kernel of Fg(h)");
    }
    auto pair = one_dim_decompose(g, inst.f());
    return rewrite_symmetric_pair(pair, inst, log);
  }

  QuadCertificate two_dim_decompose(Word const&      g,
                                    FiniteMap const& f,
                                    FiniteMap const& h,
                                    RewriteLog*      log) {
    auto inst = [&] {
      try {
        return validate_instance(f, h);
      } catch (Error const& e) {
        throw Error(ErrorCode::instance_invalid, e.what());
      }
    }();
    return two_dim_decompose(g, inst, log);
  }

  bool verify_quad_certificate(QuadCertificate const& cert,
                               FiniteMap const&       f,
                               FiniteMap const&       h,
                               Word const&            g) {
    require_alphabet(cert.alphabet(), f.domain());
    require_alphabet(cert.alphabet(), h.domain());
    require_alphabet(g.alphabet(), f.domain());
    for (auto const& r : cert.rows()) {
      if (!f.same_image(r.a, r.b) || !f.same_image(r.d, r.c) || !h.same_image(r.a, r.d)
          || !h.same_image(r.b, r.c)) {
        return false;
      }
    }
    return cert.path() == reduce(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  QuadCertificate cert_inverse(QuadCertificate const& cert) {
    std::vector<QuadRow> rows;
    rows.reserve(cert.size());
    for (auto const& r : cert.rows()) {
      rows.push_back({r.d, r.c, r.b, r.a, r.sign});
    }
    return QuadCertificate(cert.alphabet(), std::move(rows));
  }

  QuadCertificate cert_conjugate(QuadCertificate const& cert, Letter x) {
    if (!cert.alphabet()->contains(x.symbol)) {
      throw Error(ErrorCode::unknown_generator, "cert_conjugate: letter outside the alphabet");
    }
    std::vector<QuadRow> rows;
    rows.reserve(cert.size() + 1);
    rows.push_back({x.symbol, x.symbol, x.symbol, x.symbol, x.exponent});
    rows.insert(rows.end(), cert.rows().begin(), cert.rows().end());
    return QuadCertificate(cert.alphabet(), std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  std::string format_certificate(PairCertificate const& cert) {
    auto const& a   = *cert.alphabet();
    std::string out = "pair n=" + std::to_string(cert.size()) + "\n";
    for (auto const& r : cert.rows()) {
      out += a.name(r.a) + ' ' + a.name(r.b) + ' ' + std::string(to_string(r.sign)) + '\n';
    }
    return out;
  }

  std::string format_certificate(QuadCertificate const& cert) {
    auto const& a   = *cert.alphabet();
    std::string out = "quad n=" + std::to_string(cert.size()) + "\n";
    for (auto const& r : cert.rows()) {
      out += a.name(r.a) + ' ' + a.name(r.b) + ' ' + a.name(r.c) + ' ' + a.name(r.d) + ' '
             + std::string(to_string(r.sign)) + '\n';
    }
    return out;
  }

  namespace {
    std::vector<std::vector<std::string>> certificate_lines(std::string_view text,
                                                            std::string_view kind,
                                                            std::size_t      columns) {
      std::vector<std::string> lines;
      {
        std::string       buffer(text);
        std::stringstream in(buffer);
        std::string       line;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') {
            line.pop_back();
          }
          lines.push_back(line);
        }
      }
      while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
      }
      auto fail = [&](std::string const& msg) {
        throw Error(ErrorCode::format_error, std::string(kind) + " certificate: " + msg);
      };
      std::string const prefix = std::string(kind) + " n=";
      if (lines.empty() || lines[0].rfind(prefix, 0) != 0) {
        fail("expected header \"" + prefix + "<n>\"");
      }
      auto const  count_text = lines[0].substr(prefix.size());
      std::size_t n          = 0;
      if (count_text.empty()
          || count_text.find_first_not_of("0123456789") != std::string::npos) {
        fail("bad row count \"" + count_text + "\"");
      }
      try {
        n = std::stoul(count_text);
      } catch (std::exception const&) {
        fail("bad row count \"" + count_text + "\"");
      }
      if (lines.size() - 1 != n) {
        fail("header announces " + std::to_string(n) + " rows but "
             + std::to_string(lines.size() - 1) + " follow");
      }
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        std::stringstream        in(lines[i]);
        std::vector<std::string> tokens;
        std::string              tok;
        while (in >> tok) {
          tokens.push_back(tok);
        }
        if (tokens.size() != columns) {
          fail("line " + std::to_string(i + 1) + ": expected " + std::to_string(columns)
               + " fields");
        }
        if (tokens.back() != "+1" && tokens.back() != "-1") {
          fail("line " + std::to_string(i + 1) + ": sign must be +1 or -1");
        }
        rows.push_back(std::move(tokens));
      }
      return rows;
    }

    Sign read_sign(std::string const& s) {
      return s == "+1" ? Sign::plus : Sign::minus;
    }
  }  // namespace

  PairCertificate parse_pair_certificate(std::string_view text, AlphabetPtr const& alphabet) {
    std::vector<PairRow> rows;
    for (auto const& t : certificate_lines(text, "pair", 3)) {
      rows.push_back({alphabet->at(t[0]), alphabet->at(t[1]), read_sign(t[2])});
    }
    return PairCertificate(alphabet, std::move(rows));
  }

  QuadCertificate parse_quad_certificate(std::string_view text, AlphabetPtr const& alphabet) {
    std::vector<QuadRow> rows;
    for (auto const& t : certificate_lines(text, "quad", 5)) {
      rows.push_back({alphabet->at(t[0]),
                      alphabet->at(t[1]),
                      alphabet->at(t[2]),
                      alphabet->at(t[3]),
                      read_sign(t[4])});
    }
    return QuadCertificate(alphabet, std::move(rows));
  }

}  // namespace kersym
