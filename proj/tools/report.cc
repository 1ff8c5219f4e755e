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

#include "report.h"

#include <sstream>

namespace qlr::cli {

using nlohmann::json;

namespace {

std::vector<std::string> one_based(const std::vector<std::size_t> &zero_based) {
    std::vector<std::string> out;
    for (std::size_t i : zero_based) {
        out.push_back(std::to_string(i + 1));
    }
    return out;
}

// Raw-code positions are emitted as JSON integers.
json positions(const PlanReport &r, const std::vector<std::string> &items) {
    json out = json::array();
    for (const auto &s : items) {
        if (r.kind == "stabilizer") {
            out.push_back(std::stoull(s));
        } else {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<std::string> read_positions(const json &v) {
    std::vector<std::string> out;
    for (const auto &item : v) {
        out.push_back(item.is_string() ? item.get<std::string>() : std::to_string(item.get<std::uint64_t>()));
    }
    return out;
}

std::string joined(const std::vector<std::string> &items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); i++) {
        out += (i ? ", " : "") + items[i];
    }
    return out.empty() ? "-" : out;
}

}  // namespace

PlanReport make_report(const StabilizerCode &code, const MeasurementPlan &plan) {
    PlanReport r;
    r.kind = "stabilizer";
    r.p = code.p();
    r.n = code.n();
    r.dim_c = code.dim();
    r.erasures = one_based(plan.erasures.indices());
    for (std::size_t i = 0; i < plan.observables.rows(); i++) {
        auto row = plan.observables.row(i);
        r.observables.push_back(PauliVector(code.field(), std::vector<fp_t>(row.begin(), row.end())).str());
    }
    r.recovering_set = one_based(plan.recovering_set);
    r.plan_dim = plan.dim();
    r.baseline_dim = code.dim();
    r.residual_dim = plan.residual.rows();
    return r;
}

PlanReport make_report(const SurfaceCode &code, const SurfacePlan &plan) {
    const Surface &s = code.surface;
    PlanReport r;
    r.kind = "surface";
    r.p = 2;
    r.n = code.n();
    r.dim_c = code.css.cx().dim() + code.css.cz().dim();
    for (std::size_t c : plan.erasures.indices()) {
        r.erasures.push_back(s.edges()[code.qubit_edges[c]].id);
    }
    for (std::size_t f : plan.faces) {
        r.faces.push_back(s.faces()[f].id);
    }
    for (std::size_t v : plan.vertices) {
        r.vertices.push_back(s.vertices()[v]);
    }
    r.observables = r.faces;
    r.observables.insert(r.observables.end(), r.vertices.begin(), r.vertices.end());
    for (std::size_t e : plan.measured_edges) {
        r.recovering_set.push_back(s.edges()[e].id);
    }
    r.plan_dim = plan.dim();
    r.baseline_dim = r.dim_c;
    r.residual_dim = r.dim_c - plan.dim();
    return r;
}

json to_json(const PlanReport &r) {
    return json{
        {"kind", r.kind},
        {"code", json{{"p", r.p}, {"n", r.n}, {"dim", r.dim_c}}},
        {"erasures", positions(r, r.erasures)},
        {"observables", r.observables},
        {"faces", r.faces},
        {"vertices", r.vertices},
        {"recovering_set", positions(r, r.recovering_set)},
        {"counts",
         json{{"plan", r.plan_dim}, {"baseline", r.baseline_dim}, {"residual", r.residual_dim},
              {"qubits_measured", r.recovering_set.size()}}}};
}

PlanReport report_from_json(const json &j) {
    PlanReport r;
    r.kind = j.at("kind").get<std::string>();
    r.p = j.at("code").at("p").get<std::uint32_t>();
    r.n = j.at("code").at("n").get<std::size_t>();
    r.dim_c = j.at("code").at("dim").get<std::size_t>();
    r.erasures = read_positions(j.at("erasures"));
    r.observables = j.at("observables").get<std::vector<std::string>>();
    r.faces = j.at("faces").get<std::vector<std::string>>();
    r.vertices = j.at("vertices").get<std::vector<std::string>>();
    r.recovering_set = read_positions(j.at("recovering_set"));
    r.plan_dim = j.at("counts").at("plan").get<std::size_t>();
    r.baseline_dim = j.at("counts").at("baseline").get<std::size_t>();
    r.residual_dim = j.at("counts").at("residual").get<std::size_t>();
    return r;
}

std::string render_table(const PlanReport &r) {
    std::ostringstream out;
    out << "code           p=" << r.p << " n=" << r.n << " dim C=" << r.dim_c << "\n";
    out << "erasures       " << joined(r.erasures) << "\n";
    if (r.kind == "surface") {
        out << "faces          " << joined(r.faces) << "\n";
        out << "vertices       " << joined(r.vertices) << "\n";
    } else {
        out << "observables    " << joined(r.observables) << "\n";
    }
    out << "measured       " << joined(r.recovering_set) << " (" << r.recovering_set.size() << " of " << r.n
        << " qudits)\n";
    out << "measurements   " << r.plan_dim << " (baseline " << r.baseline_dim << ", residual " << r.residual_dim
        << ")\n";
    return out.str();
}

}  // namespace qlr::cli
