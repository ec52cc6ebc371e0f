#pragma once

#include "wonder/oracle.hpp"
#include "wonder/presentation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wonder {

using Json = nlohmann::ordered_json;

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json to_json(const Layer& layer);
Layer layer_from_json(const Json& j, Eigen::Index rank);

/// [{"coef": c, "exp": {"c:0": 1, "t:1": 2}}, ...]; t variables are 1-based.
Json polynomial_to_json(const Polynomial& p, int ray_count);
Polynomial polynomial_from_json(const Json& j, int ray_count, int member_count);

struct JobSpec {
  Eigen::Index rank = 0;
  Fan fan;
  std::vector<Layer> layers;
  std::optional<std::vector<Layer>> building;  // nullopt: "all"
  std::optional<int> max_degree;
  std::optional<int> budget;
  int basis_bound = 2;
};

/// Throws Error(Schema) on malformed input.
JobSpec job_from_json(const Json& j);
Json to_json(const JobSpec& job);

Json to_json(const LayerPoset& poset);
Json to_json(const ModelPresentation& p, const HilbertResult& h);
Json to_json(const BlowupPlan& plan);
Json to_json(const VerifyReport& r);

}  // namespace wonder
