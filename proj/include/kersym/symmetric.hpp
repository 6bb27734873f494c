// Symmetric-path certificates.
//
// A PairCertificate lists rows (a_i, b_i, δ_i) with f(a_i) = f(b_i); it
// certifies g = g_a g_b^-1 where g_a = a_1^δ_1 ⋯ a_n^δ_n and
// g_b = b_1^δ_1 ⋯ b_n^δ_n. Every element of Ker(Fg(f)) has one, produced by
// one_dim_decompose.
//
// A QuadCertificate lists rows (a_i, b_i, c_i, d_i, δ_i) forming squares
//
//     a_i --f-- b_i
//      |         |
//      h         h
//      |         |
//     d_i --f-- c_i
//
// and certifies g = g_a g_b^-1 g_c g_d^-1. When Eq(f) and Eq(h) commute,
// every element of Ker(Fg(f)) ∩ Ker(Fg(h)) has one, produced by
// two_dim_decompose.
//
// Text format: a header line `pair n=<n>` or `quad n=<n>`, then one line per
// row with space separated symbols and a trailing `+1` or `-1`.

#ifndef KERSYM_SYMMETRIC_HPP_
#define KERSYM_SYMMETRIC_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kersym/freegroup.hpp"
#include "kersym/instances.hpp"

namespace kersym {

  class RewriteLog;

  struct PairRow {
    Symbol a, b;
    Sign   sign;

    friend bool operator==(PairRow const&, PairRow const&) = default;
  };

  struct QuadRow {
    Symbol a, b, c, d;
    Sign   sign;

    friend bool operator==(QuadRow const&, QuadRow const&) = default;
  };

  class PairCertificate {
   public:
    explicit PairCertificate(AlphabetPtr alphabet, std::vector<PairRow> rows = {});

    [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<PairRow> const& rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _rows.size();
    }

    [[nodiscard]] Word word_a() const;
    [[nodiscard]] Word word_b() const;
    // reduce(g_a g_b^-1)
    [[nodiscard]] Word path() const;

    friend bool operator==(PairCertificate const& x, PairCertificate const& y) {
      return x._rows == y._rows && same_alphabet(x._alphabet, y._alphabet);
    }

   private:
    AlphabetPtr          _alphabet;
    std::vector<PairRow> _rows;
  };

  class QuadCertificate {
   public:
    explicit QuadCertificate(AlphabetPtr alphabet, std::vector<QuadRow> rows = {});

    [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::vector<QuadRow> const& rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _rows.size();
    }

    [[nodiscard]] Word word_a() const;
    [[nodiscard]] Word word_b() const;
    [[nodiscard]] Word word_c() const;
    [[nodiscard]] Word word_d() const;
    // reduce(g_a g_b^-1 g_c g_d^-1)
    [[nodiscard]] Word path() const;

    friend bool operator==(QuadCertificate const& x, QuadCertificate const& y) {
      return x._rows == y._rows && same_alphabet(x._alphabet, y._alphabet);
    }

   private:
    AlphabetPtr          _alphabet;
    std::vector<QuadRow> _rows;
  };

  // Reduces g, pairs its letters through Fg(f) and sets b_k to the letter at
  // the smaller position of k's pair. Throws ErrorCode::not_in_kernel.
  [[nodiscard]] PairCertificate one_dim_decompose(Word const& g, FiniteMap const& f);

  [[nodiscard]] bool verify_pair_certificate(PairCertificate const& cert,
                                             FiniteMap const&       f,
                                             Word const&            g);

  // Throws ErrorCode::not_in_kernel_f / ErrorCode::not_in_kernel_h.
  [[nodiscard]] QuadCertificate two_dim_decompose(Word const&     g,
                                                  Instance const& inst,
                                                  RewriteLog*     log = nullptr);

  // Validates (f, h) first; throws ErrorCode::instance_invalid when the maps
  // are not surjective or their kernel pairs do not commute.
  [[nodiscard]] QuadCertificate two_dim_decompose(Word const&      g,
                                                  FiniteMap const& f,
                                                  FiniteMap const& h,
                                                  RewriteLog*      log = nullptr);

  [[nodiscard]] bool verify_quad_certificate(QuadCertificate const& cert,
                                             FiniteMap const&       f,
                                             FiniteMap const&       h,
                                             Word const&            g);

  // Rows (d, c, b, a, δ): a certificate for g^-1.
  [[nodiscard]] QuadCertificate cert_inverse(QuadCertificate const& cert);

  // Prepends (x, x, x, x, δ_x): a certificate for x g x^-1.
  // Throws ErrorCode::unknown_generator.
  [[nodiscard]] QuadCertificate cert_conjugate(QuadCertificate const& cert, Letter x);

  [[nodiscard]] std::string format_certificate(PairCertificate const& cert);
  [[nodiscard]] std::string format_certificate(QuadCertificate const& cert);

  // Throw ErrorCode::format_error or ErrorCode::unknown_generator.
  [[nodiscard]] PairCertificate parse_pair_certificate(std::string_view   text,
                                                       AlphabetPtr const& alphabet);
  [[nodiscard]] QuadCertificate parse_quad_certificate(std::string_view   text,
                                                       AlphabetPtr const& alphabet);

}  // namespace kersym

#endif  // KERSYM_SYMMETRIC_HPP_
