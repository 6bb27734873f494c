#include "kersym/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "kersym/freegroup.hpp"
#include "kersym/instances.hpp"
#include "kersym/pairing.hpp"
#include "kersym/relations.hpp"
#include "kersym/rewrite.hpp"
#include "kersym/symmetric.hpp"

namespace kersym::cli {

  int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::not_in_kernel:
      case ErrorCode::not_in_kernel_f:
      case ErrorCode::not_in_kernel_h:
      case ErrorCode::no_completion:
      case ErrorCode::not_surjective_f:
      case ErrorCode::not_surjective_h:
      case ErrorCode::kernel_pairs_do_not_commute:
      case ErrorCode::instance_invalid:
        return exit_precondition;
      case ErrorCode::invariant_violation:
        return exit_internal;
      default:
        return exit_bad_input;
    }
  }

  namespace {

    struct Options {
      std::string   instance_path;
      std::string   word;
      std::string   map_name = "f";
      std::string   cert_path;
      std::string   output_path;
      std::string   letter;
      std::string   kind = "intersection";
      bool          trace = false;
      std::uint64_t seed  = 0;
      GenSpec       gen;
    };

    std::string read_file(std::string const& path) {
      std::ifstream file(path, std::ios::binary);
      if (!file) {
        throw Error(ErrorCode::format_error, "cannot read \"" + path + "\"");
      }
      return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    class Runner {
     public:
      Runner(Options const& opts, std::istream& in, std::ostream& err)
          : _opts(opts), _in(in), _err(err) {}

      // Each verb returns its exit code and writes its result into _out.
      int validate() {
        auto inst = load_valid();
        _out << "valid\n";
        _out << "Eq(f): " << eq_partition(inst.f()).to_string() << "\n";
        _out << "Eq(h): " << eq_partition(inst.h()).to_string() << "\n";
        return exit_ok;
      }

      int member() {
        auto raw = load_raw();
        auto w   = parse_word(_opts.word, raw.f.domain());
        bool yes = false;
        if (_opts.map_name == "both") {
          yes = is_kernel_member(w, raw.f) && is_kernel_member(w, raw.h);
        } else {
          yes = is_kernel_member(w, raw.map(map_choice()));
        }
        _out << (yes ? "true\n" : "false\n");
        return yes ? exit_ok : exit_false;
      }

      int pairing() {
        auto raw = load_raw();
        auto w   = parse_word(_opts.word, raw.f.domain());
        _out << extract_pairing_named(w, raw).to_string();
        return exit_ok;
      }

      int decompose1() {
        auto raw = load_raw();
        auto w   = parse_word(_opts.word, raw.f.domain());
        if (!is_kernel_member(w, raw.map(map_choice()))) {
          throw not_in_kernel();
        }
        _out << format_certificate(one_dim_decompose(w, raw.map(map_choice())));
        return exit_ok;
      }

      int decompose2() {
        auto       inst = load_valid();
        auto       w    = parse_word(_opts.word, inst.a());
        RewriteLog log;
        auto       cert = two_dim_decompose(w, inst, _opts.trace ? &log : nullptr);
        if (_opts.trace) {
          _err << log.to_text(*inst.a());
        }
        _out << format_certificate(cert);
        return exit_ok;
      }

      int verify1() {
        auto raw  = load_raw();
        auto w    = parse_word(_opts.word, raw.f.domain());
        auto cert = parse_pair_certificate(read_cert(), raw.f.domain());
        return report(verify_pair_certificate(cert, raw.map(map_choice()), w));
      }

      int verify2() {
        auto raw  = load_raw();
        auto w    = parse_word(_opts.word, raw.f.domain());
        auto cert = parse_quad_certificate(read_cert(), raw.f.domain());
        return report(verify_quad_certificate(cert, raw.f, raw.h, w));
      }

      int gen_instance() {
        auto spec = _opts.gen;
        spec.seed = _opts.seed;
        auto inst = kersym::gen_instance(spec);
        _out << format_instance_document(inst.f(), inst.h(), generator_version());
        return exit_ok;
      }

      int gen_element() {
        auto inst = load_valid();
        auto spec = _opts.gen;
        spec.seed = _opts.seed;
        Word w(inst.a());
        if (_opts.kind == "intersection") {
          w = gen_intersection_element(inst, spec);
        } else {
          w = gen_kernel_element(inst, spec, _opts.kind == "f" ? MapChoice::f : MapChoice::h);
        }
        _out << format_word(w) << "\n";
        return exit_ok;
      }

      int invert_cert() {
        auto raw = load_raw();
        _out << format_certificate(cert_inverse(parse_quad_certificate(read_cert(), raw.f.domain())));
        return exit_ok;
      }

      int conjugate_cert() {
        auto raw    = load_raw();
        auto cert   = parse_quad_certificate(read_cert(), raw.f.domain());
        auto letter = parse_word(_opts.letter, raw.f.domain());
        if (letter.size() != 1) {
          throw Error(ErrorCode::parse_error, "--letter must be a single letter");
        }
        _out << format_certificate(cert_conjugate(cert, letter[0]));
        return exit_ok;
      }

      [[nodiscard]] std::string output() const {
        return _out.str();
      }

     private:
      MapChoice map_choice() const {
        return _opts.map_name == "h" ? MapChoice::h : MapChoice::f;
      }

      Error not_in_kernel() const {
        return map_choice() == MapChoice::f
                   ? Error(ErrorCode::not_in_kernel_f,
                           "hypothesis failed: the word is not in the kernel of Fg(f)")
                   : Error(ErrorCode::not_in_kernel_h,
                           "hypothesis failed: the word is not in the kernel of Fg(h)");
      }

      Pairing extract_pairing_named(Word const& w, RawInstance const& raw) const {
        try {
          return extract_pairing(w, raw.map(map_choice()));
        } catch (Error const& e) {
          if (e.code() == ErrorCode::not_in_kernel) {
            throw not_in_kernel();
          }
          throw;
        }
      }

      RawInstance load_raw() const {
        return parse_instance_document(read_file(_opts.instance_path));
      }

      Instance load_valid() const {
        return validate_instance(load_raw());
      }

      std::string read_cert() {
        if (_opts.cert_path == "-") {
          return {std::istreambuf_iterator<char>(_in), std::istreambuf_iterator<char>()};
        }
        return read_file(_opts.cert_path);
      }

      int report(bool verified) {
        _out << (verified ? "true\n" : "false\n");
        return verified ? exit_ok : exit_false;
      }

      Options const&     _opts;
      std::istream&      _in;
      std::ostream&      _err;
      std::ostringstream _out;
    };

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Certified rewriting of elements in the intersection of kernels "
                 "of maps between free groups",
                 "kersym"};
    app.require_subcommand(1);
    Options opts;

    auto add_instance = [&](CLI::App* sub) {
      sub->add_option("--instance", opts.instance_path, "instance document (JSON)")
          ->required();
    };
    auto add_word = [&](CLI::App* sub) {
      sub->add_option("--word", opts.word, "word, e.g. \"a b^-1 c d^-1\"")->required();
    };
    auto add_map = [&](CLI::App* sub, bool allow_both) {
      auto* opt = sub->add_option("--map", opts.map_name, "which map to use")
                      ->capture_default_str();
      if (allow_both) {
        opt->check(CLI::IsMember({"f", "h", "both"}));
      } else {
        opt->check(CLI::IsMember({"f", "h"}));
      }
    };
    auto add_cert = [&](CLI::App* sub) {
      sub->add_option("--cert", opts.cert_path, "certificate file, or - for stdin")
          ->required();
    };
    auto add_output = [&](CLI::App* sub) {
      sub->add_option("--output,-o", opts.output_path, "write the result to this file");
    };
    auto add_element_params = [&](CLI::App* sub) {
      sub->add_option("--factors", opts.gen.factors, "number of conjugated factors")
          ->capture_default_str();
      sub->add_option("--conjugator-length",
                      opts.gen.conjugator_length,
                      "maximum conjugator length")
          ->capture_default_str();
    };

    auto* validate = app.add_subcommand("validate", "check the instance hypotheses");
    add_instance(validate);
    add_output(validate);

    auto* member = app.add_subcommand("member", "kernel membership of a word");
    add_instance(member);
    add_word(member);
    add_map(member, true);
    add_output(member);

    auto* pairing = app.add_subcommand("pairing", "the cancellation pairing of a kernel word");
    add_instance(pairing);
    add_word(pairing);
    add_map(pairing, false);
    add_output(pairing);

    auto* decompose1 = app.add_subcommand("decompose1", "certify a word in Ker(Fg(f))");
    add_instance(decompose1);
    add_word(decompose1);
    add_map(decompose1, false);
    add_output(decompose1);

    auto* decompose2 = app.add_subcommand("decompose2", "certify a word in Ker(Fg(f)) ∩ Ker(Fg(h))");
    add_instance(decompose2);
    add_word(decompose2);
    decompose2->add_flag("--trace", opts.trace, "print each rewriting step to stderr");
    add_output(decompose2);

    auto* verify1 = app.add_subcommand("verify1", "check a pair certificate");
    add_instance(verify1);
    add_word(verify1);
    add_cert(verify1);
    add_map(verify1, false);
    add_output(verify1);

    auto* verify2 = app.add_subcommand("verify2", "check a quad certificate");
    add_instance(verify2);
    add_word(verify2);
    add_cert(verify2);
    add_output(verify2);

    auto* gen_instance = app.add_subcommand("gen-instance", "generate a valid instance");
    gen_instance->add_option("--seed", opts.seed)->capture_default_str();
    gen_instance->add_option("--base", opts.gen.base_size, "|D|")->capture_default_str();
    gen_instance->add_option("--left", opts.gen.left_size, "|B|")->capture_default_str();
    gen_instance->add_option("--right", opts.gen.right_size, "|C|")->capture_default_str();
    gen_instance->add_option("--inflation", opts.gen.inflation, "maximum copies per pullback element")
        ->capture_default_str();
    add_output(gen_instance);

    auto* gen_element = app.add_subcommand("gen-element", "generate a kernel element");
    add_instance(gen_element);
    gen_element->add_option("--seed", opts.seed)->capture_default_str();
    gen_element->add_option("--kind", opts.kind, "intersection, f or h")
        ->check(CLI::IsMember({"intersection", "f", "h"}))
        ->capture_default_str();
    add_element_params(gen_element);
    add_output(gen_element);

    auto* invert_cert = app.add_subcommand("invert-cert", "certificate for the inverse");
    add_instance(invert_cert);
    add_cert(invert_cert);
    add_output(invert_cert);

    auto* conjugate_cert = app.add_subcommand("conjugate-cert", "certificate for x g x^-1");
    add_instance(conjugate_cert);
    add_cert(conjugate_cert);
    conjugate_cert->add_option("--letter", opts.letter, "x or x^-1")->required();
    add_output(conjugate_cert);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_bad_input;
    }

    Runner runner(opts, in, err);
    int    code = exit_ok;
    try {
      if (validate->parsed()) {
        code = runner.validate();
      } else if (member->parsed()) {
        code = runner.member();
      } else if (pairing->parsed()) {
        code = runner.pairing();
      } else if (decompose1->parsed()) {
        code = runner.decompose1();
      } else if (decompose2->parsed()) {
        code = runner.decompose2();
      } else if (verify1->parsed()) {
        code = runner.verify1();
      } else if (verify2->parsed()) {
        code = runner.verify2();
      } else if (gen_instance->parsed()) {
        code = runner.gen_instance();
      } else if (gen_element->parsed()) {
        code = runner.gen_element();
      } else if (invert_cert->parsed()) {
        code = runner.invert_cert();
      } else if (conjugate_cert->parsed()) {
        code = runner.conjugate_cert();
      }
    } catch (Error const& e) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
      return exit_code_for(e.code());
    }

    if (opts.output_path.empty()) {
      out << runner.output();
    } else {
      std::ofstream file(opts.output_path, std::ios::binary);
      file << runner.output();
      if (!file) {
        err << "error: cannot write \"" << opts.output_path << "\"\n";
        return exit_bad_input;
      }
    }
    return code;
  }

}  // namespace kersym::cli
