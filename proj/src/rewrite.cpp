#include "kersym/rewrite.hpp"

#include <algorithm>

#include "kersym/relations.hpp"

namespace kersym {

  namespace {
    std::vector<Letter> x_sequence(PairCertificate const& pair) {
      auto const&         rows = pair.rows();
      std::vector<Letter> x;
      x.reserve(2 * rows.size());
      for (auto const& r : rows) {
        x.push_back({r.a, r.sign});
      }
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        x.push_back({it->b, -it->sign});
      }
      return x;
    }

    Pairing h_pairing(AlphabetPtr const& a, std::vector<Letter> const& x, FiniteMap const& h) {
      try {
        return extract_pairing(Word(a, x), h);
      } catch (Error const& e) {
        if (e.code() == ErrorCode::not_in_kernel) {
          throw Error(ErrorCode::not_in_kernel_h,
                      "hypothesis failed: the word is not in the kernel of Fg(h)");
        }
        throw;
      }
    }

    [[noreturn]] void violated(std::string const& what) {
      throw Error(ErrorCode::invariant_violation, "rewriting invariant violated: " + what);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RewriteLog
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> RewriteLog::fix_order() const {
    std::vector<std::size_t> out;
    for (auto const& e : _events) {
      if (e.kind == RewriteEvent::Kind::fix) {
        out.push_back(e.index);
      }
    }
    return out;
  }

  std::string RewriteLog::to_text(Alphabet const& alphabet) const {
    auto set_text = [](std::vector<std::size_t> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(xs[i] + 1);
      }
      return out + "}";
    };
    auto pos = [](std::size_t i) { return std::to_string(i + 1); };

    std::string out;
    for (auto const& e : _events) {
      using K = RewriteEvent::Kind;
      switch (e.kind) {
        case K::outer:
          out += "outer m=" + pos(e.index) + " o(m)=" + pos(e.other)
                 + " I=" + set_text(e.unvisited);
          break;
        case K::inner:
          out += "inner l=" + pos(e.index) + " o(l)=" + pos(e.other)
                 + " I=" + set_text(e.unvisited);
          break;
        case K::test_keep:
          out += "testpair j=" + pos(e.index) + " o(j)=" + pos(e.other) + " keep";
          break;
        case K::test_replace:
          out += "testpair j=" + pos(e.index) + " o(j)=" + pos(e.other)
                 + " replace z=" + alphabet.name(e.symbol);
          break;
        case K::fix:
          out += "fix y" + pos(e.index) + "=" + alphabet.name(e.symbol);
          break;
        case K::close:
          out += "close l=" + pos(e.index) + " o(l)=p(m)=" + pos(e.other);
          break;
        case K::switch_to:
          out += "switch m=" + pos(e.index);
          break;
        case K::stop:
          out += "stop I=" + set_text(e.unvisited);
          break;
      }
      out += '\n';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // RewriteState
  ////////////////////////////////////////////////////////////////////////

  RewriteState::RewriteState(PairCertificate const& pair, FiniteMap const& h)
      : _alphabet(pair.alphabet()),
        _n(pair.size()),
        _x(x_sequence(pair)),
        _pairing(h_pairing(_alphabet, _x, h)),
        _y(_x.size()),
        _fixed(_x.size(), false) {
    for (std::size_t k = 0; k < _x.size(); ++k) {
      _y[k] = _x[std::min(k, _pairing.partner(k))].symbol;
      _unvisited.insert(k);
    }
  }

  void RewriteState::visit(std::size_t i) {
    if (_unvisited.erase(i) == 0) {
      violated("position " + std::to_string(i + 1) + " visited twice");
    }
  }

  void RewriteState::set_y(std::size_t i, Symbol s) {
    if (_fixed[i]) {
      violated("y" + std::to_string(i + 1) + " changed after being fixed");
    }
    _y[i] = s;
  }

  bool RewriteState::test_pair(std::size_t j, FiniteMap const& f, FiniteMap const& h) {
    auto o = opposite(j);
    if (f.same_image(_y[j], _y[o])) {
      return false;
    }
    set_y(o, complete_square(_y[j], _x[o].symbol, f, h));
    return true;
  }

  void RewriteState::fix(std::size_t i) {
    if (_fixed[i]) {
      violated("y" + std::to_string(i + 1) + " fixed twice");
    }
    _fixed[i] = true;
  }

  void RewriteState::copy_and_fix(std::size_t target, std::size_t source) {
    set_y(target, _y[source]);
    fix(target);
  }

  Word RewriteState::sigma_word() const {
    std::vector<Letter> letters;
    letters.reserve(_y.size());
    for (std::size_t k = 0; k < _y.size(); ++k) {
      letters.push_back({_y[k], -sigma(k)});
    }
    return Word(_alphabet, std::move(letters));
  }

  RewriteState test_pair_step(RewriteState     state,
                              std::size_t      j,
                              FiniteMap const& f,
                              FiniteMap const& h) {
    state.test_pair(j, f, h);
    return state;
  }

  ////////////////////////////////////////////////////////////////////////
  // The engine
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RewriteEvent event(RewriteEvent::Kind kind,
                       std::size_t        index  = 0,
                       std::size_t        other  = 0,
                       Symbol             symbol = {}) {
      RewriteEvent e;
      e.kind   = kind;
      e.index  = index;
      e.other  = other;
      e.symbol = symbol;
      return e;
    }

    class Engine {
     public:
      Engine(RewriteState& st, Instance const& inst, RewriteLog* log)
          : _st(st), _f(inst.f()), _h(inst.h()), _log(log) {}

      void run() {
        auto& st = _st;
        st.set_cursor_m(st.half_length() - 1);
        while (true) {
          outer();
          if (st.unvisited().empty()) {
            record(event(RewriteEvent::Kind::stop));
            return;
          }
          // Switch: the smallest unvisited position.
          st.set_cursor_m(*st.unvisited().begin());
          record(event(RewriteEvent::Kind::switch_to, st.cursor_m()));
        }
      }

     private:
      void outer() {
        auto&      st = _st;
        auto const m  = st.cursor_m();
        auto const om = st.opposite(m);
        st.visit(m);
        st.visit(om);
        record_visit(RewriteEvent::Kind::outer, m, om);

        test(m, /*fix_j=*/true);
        if (st.partner(m) == om) {
          return;
        }
        // Both copies happen together; they are recorded in position order.
        std::pair<std::size_t, std::size_t> copies[] = {{st.partner(m), m},
                                                        {st.partner(om), om}};
        if (copies[0].first > copies[1].first) {
          std::swap(copies[0], copies[1]);
        }
        for (auto [target, source] : copies) {
          copy(target, source);
        }
        st.set_cursor_l(st.partner(om));
        inner();
      }

      void inner() {
        auto&      st = _st;
        auto const pm = st.partner(st.cursor_m());
        while (true) {
          auto const l  = st.cursor_l();
          auto const ol = st.opposite(l);
          st.visit(l);
          st.visit(ol);
          record_visit(RewriteEvent::Kind::inner, l, ol);
          if (ol == pm) {
            if (!_f.same_image(st.y(l), st.y(ol))) {
              violated("closing pair (" + std::to_string(l + 1) + ","
                       + std::to_string(ol + 1) + ") is not f-related");
            }
            record(event(RewriteEvent::Kind::close, l, ol));
            return;
          }
          test(l, /*fix_j=*/false);
          copy(st.partner(ol), ol);
          st.set_cursor_l(st.partner(ol));
        }
      }

      void test(std::size_t j, bool fix_j) {
        auto&      st       = _st;
        auto const o        = st.opposite(j);
        bool const replaced = st.test_pair(j, _f, _h);
        if (replaced) {
          record(event(RewriteEvent::Kind::test_replace, j, o, st.y(o)));
        } else {
          record(event(RewriteEvent::Kind::test_keep, j, o));
        }
        if (fix_j) {
          fix(j);
        } else if (!st.is_fixed(j)) {
          violated("y" + std::to_string(j + 1) + " tested before being fixed");
        }
        fix(o);
      }

      void fix(std::size_t i) {
        _st.fix(i);
        record(event(RewriteEvent::Kind::fix, i, 0, _st.y(i)));
      }

      void copy(std::size_t target, std::size_t source) {
        _st.copy_and_fix(target, source);
        record(event(RewriteEvent::Kind::fix, target, 0, _st.y(target)));
      }

      void record_visit(RewriteEvent::Kind kind, std::size_t i, std::size_t oi) {
        if (_log != nullptr) {
          auto e = event(kind, i, oi);
          e.unvisited.assign(_st.unvisited().begin(), _st.unvisited().end());
          _log->record(std::move(e));
        }
      }

      void record(RewriteEvent e) {
        if (_log != nullptr) {
          if (e.kind == RewriteEvent::Kind::stop) {
            e.unvisited.assign(_st.unvisited().begin(), _st.unvisited().end());
          }
          _log->record(std::move(e));
        }
      }

      RewriteState&    _st;
      FiniteMap const& _f;
      FiniteMap const& _h;
      RewriteLog*      _log;
    };

    void check_final_state(RewriteState const& st, FiniteMap const& f, FiniteMap const& h) {
      for (std::size_t k = 0; k < st.size(); ++k) {
        if (!st.is_fixed(k)) {
          violated("y" + std::to_string(k + 1) + " never fixed");
        }
        if (st.y(st.partner(k)) != st.y(k)) {
          violated("paired positions disagree at " + std::to_string(k + 1));
        }
        if (!h.same_image(st.x(k).symbol, st.y(k))) {
          violated("(x, y) not h-related at " + std::to_string(k + 1));
        }
        if (!f.same_image(st.y(k), st.y(st.opposite(k)))) {
          violated("(y, y_o) not f-related at " + std::to_string(k + 1));
        }
      }
      if (!st.unvisited().empty()) {
        violated("unvisited positions remain");
      }
      if (!reduce(st.sigma_word()).empty()) {
        violated("the sigma word does not reduce to the empty word");
      }
    }
  }  // namespace

  QuadCertificate rewrite_symmetric_pair(PairCertificate const& pair,
                                         Instance const&        inst,
                                         RewriteLog*            log) {
    if (!same_alphabet(pair.alphabet(), inst.a())) {
      throw Error(ErrorCode::alphabet_mismatch, "rewrite: certificate and instance alphabets differ");
    }
    for (auto const& r : pair.rows()) {
      if (!inst.f().same_image(r.a, r.b)) {
        throw Error(ErrorCode::not_in_kernel_f, "rewrite: the pair is not f-symmetric");
      }
    }
    RewriteState st(pair, inst.h());
    auto const   n = st.half_length();
    if (n == 0) {
      return QuadCertificate(pair.alphabet());
    }
    Engine(st, inst, log).run();
    check_final_state(st, inst.f(), inst.h());

    std::vector<QuadRow> rows;
    rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto const& r = pair.rows()[k];
      rows.push_back({r.a, r.b, st.y(st.opposite(k)), st.y(k), r.sign});
    }
    return QuadCertificate(pair.alphabet(), std::move(rows));
  }

}  // namespace kersym
