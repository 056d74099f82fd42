#pragma once

#include <json.hpp>

#include "framefit/admissibility.hpp"
#include "framefit/frame.hpp"
#include "framefit/sequence.hpp"

namespace framefit {

using Json = nlohmann::json;

// Sequence spec:
//   {"head":[...], "tail":{"kind":"none"|"constant"|"generator",
//    "constant":k, "generator":{"name":..., "params":{...}}, "meta":{...}}}
SequenceModel parse_sequence(const Json& j);
Json sequence_to_json(const SequenceModel& m);

// Operator spec: {"kind":"matrix","data":[[...]]} or
//   {"kind":"diagonal","sequence":<sequence spec>}.
// A diagonal spec over a finite sequence yields a finite matrix model.
OperatorModel parse_operator(const Json& j);
Json operator_to_json(const OperatorModel& s);

// Frame file: {"dim":n, "vectors":[[...],...]}, one row per vector.
Frame parse_frame(const Json& j);
Json frame_to_json(const Frame& f);

Json evidence_to_json(const EvidenceList& ev);
Json verdict_to_json(const AdmissibilityVerdict& v);
Json verify_report_to_json(const VerifyReport& r);

}  // namespace framefit
