// Command-line front end: decompose a tensor product of modular Jordan
// blocks, emit explicit generators for its indecomposable components, or
// certify the construction against the brute-force verifier.
//
// Exit codes: 0 success / verified, 1 verification failed, 2 bad input,
// 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tensorgen/oracle.hpp"
#include "tensorgen/serialize.hpp"

namespace {

using tensorgen::i64;

struct CommonOpts {
  i64 p = 0;
  i64 r = 0;
  i64 s = 0;
  std::string format = "json";
  std::string out_path;
};

tensorgen::OutputFormat parse_format(const std::string& fmt) {
  if (fmt == "json") return tensorgen::OutputFormat::Json;
  if (fmt == "text") return tensorgen::OutputFormat::Text;
  throw tensorgen::InvalidInputError("format must be json or text");
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw tensorgen::InvalidInputError("cannot open output file: " + out_path);
  out << payload;
}

i64 oracle_bound() {
  const char* env = std::getenv("TENSORGEN_ORACLE_BOUND");
  if (env == nullptr || *env == '\0') return tensorgen::kDefaultOracleBound;
  try {
    size_t pos = 0;
    i64 bound = std::stoll(env, &pos);
    if (pos != std::string(env).size() || bound < 1) throw std::invalid_argument("bad bound");
    return bound;
  } catch (const std::exception&) {
    throw tensorgen::InvalidInputError("TENSORGEN_ORACLE_BOUND must be a positive integer");
  }
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--p", opts.p, "prime modulus")->required();
  cmd->add_option("--r", opts.r, "first block size")->required();
  cmd->add_option("--s", opts.s, "second block size")->required();
  cmd->add_option("--format", opts.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.out_path, "write output to this path instead of stdout");
}

int run_decompose(const CommonOpts& opts) {
  tensorgen::LambdaProfile profile = tensorgen::lambda_sequence(opts.r, opts.s, opts.p);
  emit(tensorgen::render_decomposition(profile, parse_format(opts.format)), opts.out_path);
  return 0;
}

int run_generators(const CommonOpts& opts) {
  tensorgen::GeneratorEngine eng(opts.p);
  auto profile = eng.profile(opts.r, opts.s);
  auto components = eng.components(opts.r, opts.s);
  emit(tensorgen::render_generators(*profile, components, parse_format(opts.format)),
       opts.out_path);
  return 0;
}

int run_verify(const CommonOpts& opts) {
  tensorgen::VerificationReport report =
      tensorgen::certify(opts.r, opts.s, opts.p, oracle_bound());
  emit(tensorgen::render_report(report, parse_format(opts.format)), opts.out_path);
  return report.passed ? 0 : 1;
}

int run_sweep(const std::vector<i64>& p_list, i64 r_max, i64 s_max, const std::string& format,
              const std::string& out_path) {
  tensorgen::detail::expect(r_max >= 1 && s_max >= 1, "sweep bounds must be positive");
  tensorgen::OutputFormat fmt = parse_format(format);
  i64 bound = oracle_bound();
  tensorgen::detail::expect(r_max * s_max <= bound,
                            "sweep grid exceeds the oracle size bound");
  std::string payload;
  bool all_passed = true;
  for (i64 p : p_list) {
    tensorgen::GeneratorEngine eng(p);
    for (i64 r = 1; r <= r_max; ++r) {
      for (i64 s = 1; s <= s_max; ++s) {
        tensorgen::VerificationReport report = tensorgen::certify(eng, r, s, bound);
        all_passed = all_passed && report.passed;
        payload += tensorgen::render_sweep_line(report, fmt);
      }
    }
  }
  emit(payload, out_path);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensor product decomposition of Jordan blocks over F_p"};
  app.require_subcommand(1);

  CommonOpts decompose_opts, generators_opts, verify_opts;
  CLI::App* decompose = app.add_subcommand("decompose", "component dimensions with case metadata");
  add_common(decompose, decompose_opts);
  CLI::App* generators = app.add_subcommand("generators", "explicit component generators");
  add_common(generators, generators_opts);
  CLI::App* verify = app.add_subcommand("verify", "certify the construction by brute force");
  add_common(verify, verify_opts);

  std::vector<i64> p_list;
  i64 r_max = 0, s_max = 0;
  std::string sweep_format = "json", sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "certify a whole grid, one line per pair");
  sweep->add_option("--p-list", p_list, "primes to sweep")->required()->expected(-1);
  sweep->add_option("--r-max", r_max, "largest first block size")->required();
  sweep->add_option("--s-max", s_max, "largest second block size")->required();
  sweep->add_option("--format", sweep_format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  sweep->add_option("--out", sweep_out, "write output to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decompose->parsed()) return run_decompose(decompose_opts);
    if (generators->parsed()) return run_generators(generators_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (sweep->parsed()) return run_sweep(p_list, r_max, s_max, sweep_format, sweep_out);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const tensorgen::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tensorgen::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
