#include "tensorgen/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace tensorgen {

namespace {

using ojson = nlohmann::ordered_json;

ojson terms_json(const TensorVector& v) {
  ojson arr = ojson::array();
  for (const auto& [ij, c] : v.terms()) {
    ojson term;
    term["i"] = ij.first;
    term["j"] = ij.second;
    term["coeff"] = c;
    arr.push_back(std::move(term));
  }
  return arr;
}

void render_terms_text(std::ostringstream& out, const TensorVector& v) {
  if (v.is_zero()) {
    out << "0";
    return;
  }
  bool first = true;
  for (const auto& [ij, c] : v.terms()) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c << "*";
    out << "v[" << ij.first << "," << ij.second << "]";
  }
}

ojson profile_component_json(const LambdaEntry& entry, i64 ell) {
  ojson comp;
  comp["ell"] = ell;
  comp["lambda"] = entry.lambda;
  comp["case"] = to_string(entry.tag);
  comp["t"] = entry.t;
  comp["k"] = entry.k;
  return comp;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string render_decomposition(const LambdaProfile& profile, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ojson doc;
    doc["p"] = profile.ctx.p;
    doc["r"] = profile.ctx.r;
    doc["s"] = profile.ctx.s;
    doc["lambdas"] = profile.lambdas();
    ojson comps = ojson::array();
    for (i64 ell = 1; ell <= profile.size(); ++ell) {
      comps.push_back(profile_component_json(profile.entry(ell), ell));
    }
    doc["components"] = std::move(comps);
    return dump(doc);
  }
  std::ostringstream out;
  out << "p=" << profile.ctx.p << " r=" << profile.ctx.r << " s=" << profile.ctx.s << "\n";
  out << "lambdas:";
  for (i64 v : profile.lambdas()) out << " " << v;
  out << "\n";
  for (i64 ell = 1; ell <= profile.size(); ++ell) {
    const auto& e = profile.entry(ell);
    out << "ell=" << ell << " lambda=" << e.lambda << " case=" << to_string(e.tag)
        << " t=" << e.t << " k=" << e.k << "\n";
  }
  return out.str();
}

std::string render_generators(const LambdaProfile& profile,
                              const std::vector<GeneratorComponent>& components, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ojson doc;
    doc["p"] = profile.ctx.p;
    doc["r"] = profile.ctx.r;
    doc["s"] = profile.ctx.s;
    doc["lambdas"] = profile.lambdas();
    ojson comps = ojson::array();
    for (const auto& comp : components) {
      ojson c = profile_component_json(profile.entry(comp.ell), comp.ell);
      c["c_exponent"] = comp.lift_exponent;
      c["y"] = terms_json(comp.generator);
      c["z"] = terms_json(comp.seed);
      comps.push_back(std::move(c));
    }
    doc["components"] = std::move(comps);
    return dump(doc);
  }
  std::ostringstream out;
  out << "p=" << profile.ctx.p << " r=" << profile.ctx.r << " s=" << profile.ctx.s << "\n";
  for (const auto& comp : components) {
    out << "ell=" << comp.ell << " lambda=" << comp.lambda << " case=" << to_string(comp.tag)
        << " t=" << comp.t << " k=" << comp.k << " c_exponent=" << comp.lift_exponent << "\n";
    out << "  y = ";
    render_terms_text(out, comp.generator);
    out << "\n  z = ";
    render_terms_text(out, comp.seed);
    out << "\n";
  }
  return out.str();
}

namespace {

ojson report_json(const VerificationReport& report) {
  ojson doc;
  doc["p"] = report.p;
  doc["r"] = report.r;
  doc["s"] = report.s;
  doc["passed"] = report.passed;
  doc["lambda_match"] = report.lambda_match;
  doc["direct_sum_rank"] = report.direct_sum_rank;
  doc["lambdas"] = report.claimed_lambdas;
  doc["jordan_type"] = report.rank_lambdas;
  ojson comps = ojson::array();
  for (const auto& check : report.components) {
    ojson c;
    c["ell"] = check.ell;
    c["lambda"] = check.lambda;
    c["level"] = check.level;
    c["annihilation"] = check.annihilation;
    c["socle_target"] = check.socle_target;
    comps.push_back(std::move(c));
  }
  doc["components"] = std::move(comps);
  return doc;
}

}  // namespace

std::string render_report(const VerificationReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return dump(report_json(report));
  std::ostringstream out;
  out << "p=" << report.p << " r=" << report.r << " s=" << report.s
      << " passed=" << (report.passed ? "true" : "false")
      << " lambda_match=" << (report.lambda_match ? "true" : "false")
      << " direct_sum_rank=" << report.direct_sum_rank << "/" << report.r * report.s << "\n";
  for (const auto& check : report.components) {
    out << "ell=" << check.ell << " lambda=" << check.lambda
        << " level=" << (check.level ? "ok" : "FAIL")
        << " annihilation=" << (check.annihilation ? "ok" : "FAIL")
        << " socle_target=" << (check.socle_target ? "ok" : "FAIL") << "\n";
  }
  return out.str();
}

std::string render_sweep_line(const VerificationReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    ojson line;
    line["p"] = report.p;
    line["r"] = report.r;
    line["s"] = report.s;
    line["passed"] = report.passed;
    line["lambda_match"] = report.lambda_match;
    line["direct_sum_rank"] = report.direct_sum_rank;
    return line.dump() + "\n";
  }
  std::ostringstream out;
  out << "p=" << report.p << " r=" << report.r << " s=" << report.s << " "
      << (report.passed ? "passed" : "FAILED") << "\n";
  return out.str();
}

ParsedGenerators parse_generators(const std::string& json_text) {
  ojson doc = ojson::parse(json_text);
  ParsedGenerators out;
  out.p = doc.at("p").get<i64>();
  out.r = doc.at("r").get<i64>();
  out.s = doc.at("s").get<i64>();
  out.lambdas = doc.at("lambdas").get<std::vector<i64>>();
  Ambient amb = make_ambient(out.r, out.s, out.p);
  for (const auto& comp : doc.at("components")) {
    CandidateGenerator cand{comp.at("ell").get<i64>(), comp.at("lambda").get<i64>(),
                            TensorVector(amb)};
    for (const auto& term : comp.at("y")) {
      cand.vec.add_term(term.at("i").get<i64>(), term.at("j").get<i64>(),
                        term.at("coeff").get<i64>());
    }
    out.candidates.push_back(std::move(cand));
  }
  return out;
}

}  // namespace tensorgen
