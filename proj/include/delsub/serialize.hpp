#pragma once

#include <string>

#include <json.hpp>

#include "delsub/audit.hpp"
#include "delsub/codes.hpp"
#include "delsub/error_model.hpp"
#include "delsub/oracle.hpp"
#include "delsub/partition.hpp"

namespace delsub {

using Json = nlohmann::json;

Json to_json(const Ball& ball);  // sorted array of member strings
Json to_json(const EditScript& script);
EditScript edit_script_from_json(const Json& j);
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const CodeParams& params);
CodeParams code_params_from_json(const Json& j);
Json to_json(const ErrorCertificate& cert);
Json to_json(const Counterexample& c);
Counterexample counterexample_from_json(const Json& j);
Json to_json(const VerificationReport& report);
Json to_json(const CellSummary& cell);
Json to_json(const SigmaWitness& w);
Json to_json(const AuditReport& report);

/// family,q,n,t,s,best_size,pigeonhole_floor,redundancy_bits
std::string bucket_csv_header();
std::string bucket_csv_row(const BucketSummary& summary);
/// The bucket columns followed by mode,codes_checked,codes_failed,ok
std::string cell_csv_header();
std::string cell_csv_row(const CellSummary& cell);

}  // namespace delsub
