#include "randsub/report.hpp"

#include <cstdio>
#include <string>

namespace randsub {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

nlohmann::json set_json(const SubtractionSet& set) { return set.elements(); }

nlohmann::json fraction_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"text", to_fraction_string(q)},
          {"float", q.get_d()}};
}

void write_sequence_csv(std::ostream& out, const SequenceRun& run) {
  out << "n,value_exact,value_float\n";
  for (std::size_t n = 0; n <= run.n_max(); ++n) {
    out << n << ',';
    if (run.mode() == NumericMode::exact) out << to_fraction_string(run.exact_values()[n]);
    out << ',' << format_double(run.as_double(n)) << '\n';
  }
}

nlohmann::json sequence_json(const SequenceRun& run) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = 0; n <= run.n_max(); ++n) {
    nlohmann::json row = {{"n", n}, {"value_float", run.as_double(n)}};
    row["value_exact"] = run.mode() == NumericMode::exact ? nlohmann::json(to_fraction_string(run.exact_values()[n]))
                                                          : nlohmann::json(nullptr);
    rows.push_back(std::move(row));
  }
  return {{"schema_version", kSchemaVersion},
          {"set", set_json(run.set())},
          {"mode", run.mode() == NumericMode::exact ? "exact" : "float"},
          {"n_max", run.n_max()},
          {"rows", std::move(rows)}};
}

nlohmann::json roots_json(const std::vector<ComplexRoot>& roots) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : roots) {
    out.push_back({{"re", r.re}, {"im", r.im}, {"modulus", r.modulus}, {"residual", r.residual}});
  }
  return out;
}

nlohmann::json root_analysis_json(const RootAnalysis& a) {
  return {{"degree", a.roots.size()},
          {"max_modulus", a.max_modulus},
          {"has_minus_one", a.has_minus_one},
          {"unit_root_count", a.unit_roots.size()},
          {"spectral_gap", a.spectral_gap},
          {"square_free", a.square_free},
          {"roots", roots_json(a.roots)}};
}

nlohmann::json verdict_json(const Classification& c) {
  nlohmann::json out = {{"verdict", verdict_name(c.verdict)},
                        {"reduced_set", set_json(c.reduced)},
                        {"reduction_factor", c.reduction_factor}};
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Periodic>) {
          out["period"] = v.period;
        } else if constexpr (std::is_same_v<V, ConvergesToHalf>) {
          out["reason"] = v.reason;
          out["limit"] = fraction_json(Rational(1, 2));
        } else if constexpr (std::is_same_v<V, Oscillates>) {
          out["alpha1"] = fraction_json(v.alpha1);
          out["even_limit"] = fraction_json(v.even_limit);
          out["odd_limit"] = fraction_json(v.odd_limit);
        } else {
          out["alpha1"] = fraction_json(v.alpha1);
          out["simple_roots_verified"] = v.simple_roots_verified;
        }
      },
      c.verdict);
  return out;
}

nlohmann::json alpha1_json(const Alpha1Result& r) {
  nlohmann::json out = {{"via_quotient", fraction_json(r.via_quotient)},
                        {"empirical", {{"estimate", r.empirical.estimate}, {"spread", r.empirical.spread}}},
                        {"empirical_consistent", r.empirical_within_spread}};
  out["via_sums"] = r.via_sums ? fraction_json(*r.via_sums) : nlohmann::json(nullptr);
  out["via_printed_formula"] = r.via_printed_formula ? fraction_json(*r.via_printed_formula) : nlohmann::json(nullptr);
  out["sums_match_quotient"] = r.sums_match_quotient;
  out["printed_formula_mismatch"] = !r.printed_matches_sums;
  return out;
}

nlohmann::json conjecture_record_json(const ConjectureRecord& r) {
  return {{"schema_version", kSchemaVersion}, {"S", set_json(r.set)}, {"square_free", r.square_free}};
}

nlohmann::json question_record_json(const QuestionRecord& r) {
  return {{"schema_version", kSchemaVersion},
          {"S", set_json(r.set)},
          {"alpha1_num", r.alpha1.get_num().get_str()},
          {"alpha1_den", r.alpha1.get_den().get_str()},
          {"zero", r.zero()}};
}

nlohmann::json root_record_json(const RootRecord& r) {
  return {{"schema_version", kSchemaVersion}, {"S", set_json(r.set)},         {"all_odd", r.all_odd},
          {"minus_one_is_root", r.minus_one_is_root}, {"max_modulus", r.max_modulus}, {"spectral_gap", r.spectral_gap}};
}

void write_json_lines(std::ostream& out, const std::vector<nlohmann::json>& records) {
  for (const auto& r : records) out << r.dump() << '\n';
}

}  // namespace randsub
