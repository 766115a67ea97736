#pragma once

#include <string>
#include <vector>

#include "tensorgen/generators.hpp"
#include "tensorgen/oracle.hpp"

namespace tensorgen {

enum class OutputFormat { Json, Text };

// Renderings are deterministic: fixed field order, terms in lexicographic
// (i, j) order, coefficients as integers in [0, p).  Identical inputs give
// byte-identical output.
std::string render_decomposition(const LambdaProfile& profile, OutputFormat fmt);
std::string render_generators(const LambdaProfile& profile,
                              const std::vector<GeneratorComponent>& components, OutputFormat fmt);
std::string render_report(const VerificationReport& report, OutputFormat fmt);
// single-line rendering used by sweep mode (NDJSON in json format)
std::string render_sweep_line(const VerificationReport& report, OutputFormat fmt);

// Re-parse of a generators document, used to close the emit -> parse ->
// re-verify loop.
struct ParsedGenerators {
  i64 p = 0, r = 0, s = 0;
  std::vector<i64> lambdas;
  std::vector<CandidateGenerator> candidates;
};
ParsedGenerators parse_generators(const std::string& json_text);

}  // namespace tensorgen
