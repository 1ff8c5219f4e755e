// Copyright 2026 The qlr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLR_TOOLS_REPORT_H
#define QLR_TOOLS_REPORT_H

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "qlr/stabilizer.h"
#include "qlr/surface.h"

namespace qlr::cli {

/// Output of `qlr plan`. Positions are 1-based indices for raw codes and
/// edge ids for surfaces; both are kept as strings here.
struct PlanReport {
    std::string kind;  // "stabilizer" or "surface"
    std::uint32_t p = 2;
    std::size_t n = 0;
    std::size_t dim_c = 0;
    std::vector<std::string> erasures;
    /// (a|b) vectors for raw codes, face/vertex ids for surfaces.
    std::vector<std::string> observables;
    std::vector<std::string> faces;
    std::vector<std::string> vertices;
    std::vector<std::string> recovering_set;
    std::size_t plan_dim = 0;
    std::size_t baseline_dim = 0;
    std::size_t residual_dim = 0;

    bool operator==(const PlanReport &other) const = default;
};

PlanReport make_report(const StabilizerCode &code, const MeasurementPlan &plan);
PlanReport make_report(const SurfaceCode &code, const SurfacePlan &plan);

nlohmann::json to_json(const PlanReport &report);
PlanReport report_from_json(const nlohmann::json &j);
std::string render_table(const PlanReport &report);

}  // namespace qlr::cli

#endif
