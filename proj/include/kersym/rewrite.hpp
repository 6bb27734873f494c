// The rewriting engine turning an f-symmetric pair into a square certificate.
//
// Given rows (a_k, b_k, δ_k) whose path lies in Ker(Fg(h)), the engine forms
// the 2n-letter sequence
//
//     x = a_1^δ_1, ..., a_n^δ_n, b_n^-δ_n, ..., b_1^-δ_1
//
// pairs it through Fg(h) (partner p), starts from y_k = x at the smaller
// position of k's pair, and then walks the positions with two cursors m and l,
// fixing each y exactly once so that (y_k, y_o(k)) ∈ Eq(f) for the opposite
// position o(k) = 2n-1-k (0-based). The result is read off as d_k = y_k and
// c_k = y_o(k).
//
// Positions are 0-based in the API and 1-based in RewriteLog::to_text().

#ifndef KERSYM_REWRITE_HPP_
#define KERSYM_REWRITE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "kersym/freegroup.hpp"
#include "kersym/instances.hpp"
#include "kersym/pairing.hpp"
#include "kersym/symmetric.hpp"

namespace kersym {

  struct RewriteEvent {
    enum class Kind {
      outer,         // index = m, other = o(m); both leave the unvisited set
      inner,         // index = l, other = o(l); both leave the unvisited set
      test_keep,     // index = j, other = o(j)
      test_replace,  // index = j, other = o(j), symbol = z
      fix,           // index, symbol = final value
      close,         // index = l, other = o(l) = p(m)
      switch_to,     // index = new m
      stop
    };

    Kind                     kind = Kind::stop;
    std::size_t              index = 0;
    std::size_t              other = 0;
    Symbol                   symbol{};
    std::vector<std::size_t> unvisited;  // after removal, for outer/inner/stop
  };

  class RewriteLog {
   public:
    void record(RewriteEvent e) {
      _events.push_back(std::move(e));
    }

    [[nodiscard]] std::vector<RewriteEvent> const& events() const noexcept {
      return _events;
    }

    // Positions in the order their y value was fixed.
    [[nodiscard]] std::vector<std::size_t> fix_order() const;

    // One line per event, 1-based positions.
    [[nodiscard]] std::string to_text(Alphabet const& alphabet) const;

   private:
    std::vector<RewriteEvent> _events;
  };

  class RewriteState {
   public:
    // Throws ErrorCode::not_in_kernel_h if the path of pair is not in
    // Ker(Fg(h)).
    RewriteState(PairCertificate const& pair, FiniteMap const& h);

    [[nodiscard]] std::size_t half_length() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return 2 * _n;
    }
    [[nodiscard]] std::size_t opposite(std::size_t i) const noexcept {
      return 2 * _n - 1 - i;
    }
    [[nodiscard]] std::size_t partner(std::size_t i) const {
      return _pairing.partner(i);
    }
    [[nodiscard]] Pairing const& pairing() const noexcept {
      return _pairing;
    }
    [[nodiscard]] Letter const& x(std::size_t i) const {
      return _x[i];
    }
    [[nodiscard]] Symbol y(std::size_t i) const {
      return _y[i];
    }
    [[nodiscard]] std::vector<Symbol> const& y() const noexcept {
      return _y;
    }
    // σ_i, with x_i carrying exponent -σ_i.
    [[nodiscard]] Sign sigma(std::size_t i) const {
      return -_x[i].exponent;
    }
    [[nodiscard]] bool is_fixed(std::size_t i) const {
      return _fixed[i];
    }
    [[nodiscard]] std::set<std::size_t> const& unvisited() const noexcept {
      return _unvisited;
    }

    [[nodiscard]] std::size_t cursor_m() const noexcept {
      return _m;
    }
    [[nodiscard]] std::size_t cursor_l() const noexcept {
      return _l;
    }
    void set_cursor_m(std::size_t m) noexcept {
      _m = m;
    }
    void set_cursor_l(std::size_t l) noexcept {
      _l = l;
    }

    // Removes i from the unvisited set; throws ErrorCode::invariant_violation
    // if it was already removed.
    void visit(std::size_t i);

    // If (y_j, y_o(j)) ∉ Eq(f), replaces y_o(j) by complete_square(y_j,
    // x_o(j)). Returns true when y_o(j) was replaced.
    bool test_pair(std::size_t j, FiniteMap const& f, FiniteMap const& h);

    // Marks i as final; throws ErrorCode::invariant_violation if it already is.
    void fix(std::size_t i);

    // y_target := y_source, then fixes target.
    void copy_and_fix(std::size_t target, std::size_t source);

    // The word (y_k^-σ_k).
    [[nodiscard]] Word sigma_word() const;

    [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }

   private:
    void set_y(std::size_t i, Symbol s);

    AlphabetPtr           _alphabet;
    std::size_t           _n;
    std::vector<Letter>   _x;
    Pairing               _pairing;
    std::vector<Symbol>   _y;
    std::vector<bool>     _fixed;
    std::set<std::size_t> _unvisited;
    std::size_t           _m = 0;
    std::size_t           _l = 0;
  };

  // Functional form of RewriteState::test_pair.
  [[nodiscard]] RewriteState test_pair_step(RewriteState     state,
                                            std::size_t      j,
                                            FiniteMap const& f,
                                            FiniteMap const& h);

  // Runs the engine on an f-symmetric pair whose path lies in Ker(Fg(h)).
  // The rows of the result keep a_k, b_k and δ_k from pair.
  // Throws ErrorCode::not_in_kernel_h, or ErrorCode::invariant_violation if
  // a bookkeeping invariant fails.
  [[nodiscard]] QuadCertificate rewrite_symmetric_pair(PairCertificate const& pair,
                                                       Instance const&        inst,
                                                       RewriteLog*            log = nullptr);

}  // namespace kersym

#endif  // KERSYM_REWRITE_HPP_
