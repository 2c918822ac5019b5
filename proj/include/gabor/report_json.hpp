#pragma once

#include <json.hpp>

#include "gabor/dominance.hpp"
#include "gabor/framecert.hpp"
#include "gabor/grid.hpp"

namespace gabor {

nlohmann::json to_json(const DominanceCertificate& cert);
nlohmann::json to_json(const FrameReport& report);
nlohmann::json to_json(const ValidationReport& report);

}  // namespace gabor
