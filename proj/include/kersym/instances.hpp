// Validated instances f: A -> B, h: A -> C with commuting kernel pairs.
// Also the JSON instance document and the seeded generators used for tests.

#ifndef KERSYM_INSTANCES_HPP_
#define KERSYM_INSTANCES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "kersym/freegroup.hpp"
#include "kersym/rng.hpp"

namespace kersym {

  enum class MapChoice { f, h };

  // A pair of maps on a common domain as read from an instance document.
  // Nothing beyond well-formedness has been checked.
  struct RawInstance {
    FiniteMap f;
    FiniteMap h;

    [[nodiscard]] FiniteMap const& map(MapChoice which) const {
      return which == MapChoice::f ? f : h;
    }
  };

  // Only validate_instance creates these, so holding one means both maps are
  // surjective and Eq(f)∘Eq(h) = Eq(h)∘Eq(f).
  class Instance {
   public:
    [[nodiscard]] AlphabetPtr const& a() const noexcept {
      return _f.domain();
    }
    [[nodiscard]] AlphabetPtr const& b() const noexcept {
      return _f.codomain();
    }
    [[nodiscard]] AlphabetPtr const& c() const noexcept {
      return _h.codomain();
    }
    [[nodiscard]] FiniteMap const& f() const noexcept {
      return _f;
    }
    [[nodiscard]] FiniteMap const& h() const noexcept {
      return _h;
    }
    [[nodiscard]] FiniteMap const& map(MapChoice which) const noexcept {
      return which == MapChoice::f ? _f : _h;
    }

   private:
    friend Instance validate_instance(FiniteMap f, FiniteMap h);

    Instance(FiniteMap f, FiniteMap h) : _f(std::move(f)), _h(std::move(h)) {}

    FiniteMap _f;
    FiniteMap _h;
  };

  // Throws ErrorCode::instance_invalid (different domains),
  // ErrorCode::not_surjective_f, ErrorCode::not_surjective_h or
  // ErrorCode::kernel_pairs_do_not_commute.
  Instance validate_instance(FiniteMap f, FiniteMap h);

  inline Instance validate_instance(RawInstance const& raw) {
    return validate_instance(raw.f, raw.h);
  }

  // JSON: {"A":[...],"B":[...],"C":[...],"f":{...},"h":{...}}. Array order is
  // the alphabet order. Throws ErrorCode::format_error on malformed input.
  [[nodiscard]] RawInstance parse_instance_document(std::string_view text);

  // Keys are written as A, B, C, f, h in that order; map entries follow A.
  // A non-empty version string is written under "version".
  [[nodiscard]] std::string format_instance_document(FiniteMap const& f,
                                                     FiniteMap const& h,
                                                     std::string_view version = {});

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  // Version string stamped on generated instance documents.
  [[nodiscard]] std::string generator_version();

  struct GenSpec {
    std::uint64_t seed = 0;
    // Set sizes for the cospan B -> D <- C. inflation bounds the copies of
    // each pullback element placed in A.
    std::size_t base_size  = 1;
    std::size_t left_size  = 2;
    std::size_t right_size = 2;
    std::size_t inflation  = 1;
    // Number of conjugated squares in a generated element and the maximum
    // conjugator length.
    std::size_t factors           = 1;
    std::size_t conjugator_length = 0;
  };

  inline constexpr std::size_t max_gen_set_size   = 64;
  inline constexpr std::size_t max_gen_inflation  = 8;
  inline constexpr std::size_t max_gen_factors    = 1000;
  inline constexpr std::size_t max_gen_conjugator = 256;

  // Throws ErrorCode::spec_out_of_bounds.
  void check_gen_spec(GenSpec const& spec);

  // f and h are the two projections from an inflated pullback of a random
  // cospan of surjections, so the kernel pairs commute by construction.
  [[nodiscard]] Instance gen_instance(GenSpec const& spec);

  // A quadruple with f(a)=f(b), f(d)=f(c), h(a)=h(d), h(b)=h(c).
  struct Square {
    Symbol a, b, c, d;
  };

  [[nodiscard]] Square draw_square(Instance const& inst, Rng& rng);

  // a b^-1 c d^-1
  [[nodiscard]] Word square_word(Instance const& inst, Square const& q);

  [[nodiscard]] Word random_word(AlphabetPtr const& alphabet, std::size_t length, Rng& rng);

  // Reduced product of spec.factors conjugates x (a b^-1 c d^-1) x^-1.
  [[nodiscard]] Word gen_intersection_element(Instance const& inst, GenSpec const& spec);

  // Reduced product of spec.factors conjugates x (a b^-1) x^-1 with (a, b)
  // in the kernel pair of the chosen map.
  [[nodiscard]] Word gen_kernel_element(Instance const& inst,
                                        GenSpec const&  spec,
                                        MapChoice       which);

}  // namespace kersym

#endif  // KERSYM_INSTANCES_HPP_
