// Report (de)serialization. Key order is fixed so equal reports always
// produce byte-identical JSON.
#pragma once

#include <nlohmann/json.hpp>

#include "locdim/verify.hpp"

namespace locdim {

using Json = nlohmann::ordered_json;

Json to_json(const HittingSet& h);
Json to_json(const TwinPartition& t);
Json to_json(const DecompositionReport& rep);
Json to_json(const FormulaTerms& t);
Json to_json(const ApexFormulaTerms& t);
Json to_json(const VerificationReport& rep);
Json to_json(const SweepSummary& summary);

HittingSet hitting_set_from_json(const Json& j);
TwinPartition twin_partition_from_json(const Json& j);
DecompositionReport decomposition_from_json(const Json& j);
FormulaTerms formula_terms_from_json(const Json& j);
ApexFormulaTerms apex_terms_from_json(const Json& j);
VerificationReport verification_from_json(const Json& j);
SweepSummary sweep_summary_from_json(const Json& j);

}  // namespace locdim
