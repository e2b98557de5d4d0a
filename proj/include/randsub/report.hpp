#pragma once

#include <json.hpp>

#include <ostream>
#include <vector>

#include "randsub/closed_form.hpp"
#include "randsub/convergence.hpp"
#include "randsub/extensions.hpp"
#include "randsub/roots.hpp"
#include "randsub/scan.hpp"
#include "randsub/sequence.hpp"

namespace randsub {

// Machine-readable output. Every JSON document and JSON-lines record carries
// "schema_version".
inline constexpr int kSchemaVersion = 1;

nlohmann::json set_json(const SubtractionSet& set);
nlohmann::json fraction_json(const Rational& q);  // {"num": "...", "den": "...", "text": "n/d", "float": x}

// CSV with header "n,value_exact,value_float"; value_exact is "num/den" in
// exact mode and empty in float mode. Floats use 17 significant digits.
void write_sequence_csv(std::ostream& out, const SequenceRun& run);
nlohmann::json sequence_json(const SequenceRun& run);

nlohmann::json roots_json(const std::vector<ComplexRoot>& roots);  // [{re, im, modulus, residual}]
nlohmann::json root_analysis_json(const RootAnalysis& analysis);
nlohmann::json verdict_json(const Classification& c);
nlohmann::json alpha1_json(const Alpha1Result& r);

nlohmann::json conjecture_record_json(const ConjectureRecord& r);
nlohmann::json question_record_json(const QuestionRecord& r);  // {S, alpha1_num, alpha1_den, zero}
nlohmann::json root_record_json(const RootRecord& r);

// One compact JSON object per line, in enumeration order.
void write_json_lines(std::ostream& out, const std::vector<nlohmann::json>& records);

}  // namespace randsub
