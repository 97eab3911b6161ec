#pragma once

#include <json.hpp>

#include "erasplit/config.hpp"
#include "erasplit/metrics.hpp"

namespace erasplit {

nlohmann::json config_to_json(const TrainConfig& config);
TrainConfig config_from_json(const nlohmann::json& j);

nlohmann::json metric_report_to_json(const MetricReport& report);

}  // namespace erasplit
