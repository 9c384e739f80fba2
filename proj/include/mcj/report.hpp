#pragma once

#include <json.hpp>
#include <string>

#include <mcj/orthog.hpp>

namespace mcj {

using Json = nlohmann::ordered_json;

Json params_json(const ParamSet& p);
Json orth_report_json(const OrthReport& rep);
Json sweep_json(const SweepResult& sweep);

// Two-space indented JSON; floating numbers with 17 significant digits.
std::string dump_json(const Json& j);

// |G_ij| as CSV with a header row of partitions.
std::string gram_modulus_csv(const OrthReport& rep);

std::string orth_report_text(const OrthReport& rep);

}  // namespace mcj
