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

#include "commands.h"

#include <algorithm>
#include <charconv>
#include <optional>

#include "CLI11.hpp"
#include "qlr/errors.h"
#include "qlr/io.h"
#include "report.h"

namespace qlr::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string code_path;
    std::string surface_path;
    std::string erasures;
    std::string syndrome;
    std::string format = "table";
    std::size_t delta = 0;
    bool single = false;
};

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    auto flush = [&] {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) {
            out.push_back(item.substr(b, e - b + 1));
        } else if (!item.empty() || !out.empty()) {
            throw std::invalid_argument("empty item in list '" + text + "'");
        }
        item.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else {
            item += ch;
        }
    }
    if (!text.empty()) {
        flush();
    }
    return out;
}

std::uint64_t parse_uint(const std::string &s, const char *what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string(what) + ": '" + s + "' is not a non-negative integer");
    }
    return v;
}

// The loaded input: a raw stabilizer/CSS code or a surface.
struct Input {
    std::optional<StabilizerCode> code;
    std::optional<SurfaceCode> surface;

    const StabilizerCode &stabilizer() {
        if (!code) {
            code = surface->stabilizer();
        }
        return *code;
    }

    ErasurePattern erasures(const std::string &text) {
        std::vector<std::string> items = split_list(text);
        if (surface) {
            return surface->erasures(items);
        }
        std::vector<std::size_t> positions;
        for (const auto &s : items) {
            positions.push_back(parse_uint(s, "erasure position"));
        }
        return ErasurePattern::from_one_based(code->n(), positions);
    }

    std::vector<std::string> labels(const ErasurePattern &pattern) {
        std::vector<std::string> out;
        for (std::size_t c : pattern.indices()) {
            out.push_back(surface ? surface->surface.edges()[surface->qubit_edges[c]].id : std::to_string(c + 1));
        }
        return out;
    }

    json positions(const ErasurePattern &pattern) {
        if (surface) {
            return labels(pattern);
        }
        return pattern.one_based();
    }
};

Input load_input(const Options &o) {
    if (o.code_path.empty() == o.surface_path.empty()) {
        throw std::invalid_argument("give exactly one of CODE or --surface FILE");
    }
    Input in;
    if (!o.surface_path.empty()) {
        in.surface = surface_to_css(load_surface(o.surface_path));
    } else {
        in.code = load_code(o.code_path);
    }
    return in;
}

std::string joined(const std::vector<std::string> &items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); i++) {
        out += (i ? ", " : "") + items[i];
    }
    return out.empty() ? "-" : out;
}

std::string matrix_rows(const FpMatrix &m, std::vector<std::string> *rows_out) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); r++) {
        auto row = m.row(r);
        std::string s = PauliVector(m.field(), std::vector<fp_t>(row.begin(), row.end())).str();
        rows_out->push_back(s);
        out += (r ? ", " : "") + s;
    }
    return out;
}

int cmd_check(const Options &o, std::ostream &out) {
    Input in = load_input(o);
    ErasurePattern pattern = in.erasures(o.erasures);
    auto witness = correctability_witness(in.stabilizer(), pattern);
    if (o.format == "json") {
        json j{{"correctable", !witness}, {"erasures", in.positions(pattern)}};
        if (witness) {
            j["witness"] = witness->str();
        }
        out << j.dump(2) << "\n";
    } else if (witness) {
        out << "not correctable: " << witness->str() << " lies in C^perp on the erasures but not in C\n";
    } else {
        out << "correctable\n";
    }
    return witness ? kNegative : kOk;
}

int cmd_plan(const Options &o, std::ostream &out) {
    Input in = load_input(o);
    PlanReport report;
    if (in.surface) {
        report = make_report(*in.surface, reduce_plan(*in.surface, split_list(o.erasures)));
    } else {
        report = make_report(*in.code, plan_measurements(*in.code, in.erasures(o.erasures)));
    }
    if (o.format == "json") {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << render_table(report);
    }
    return kOk;
}

int cmd_decode(const Options &o, std::ostream &out) {
    Input in = load_input(o);
    ErasurePattern pattern = in.erasures(o.erasures);
    const StabilizerCode &code = in.stabilizer();
    MeasurementPlan plan = [&] {
        if (!in.surface) {
            return plan_measurements(code, pattern);
        }
        SurfacePlan sp = reduce_plan(*in.surface, split_list(o.erasures));
        FpMatrix obs = plan_observables(*in.surface, sp.faces, sp.vertices);
        std::vector<std::size_t> recovering = support_of_rows(obs);
        return MeasurementPlan{pattern, std::move(obs), residual_check_basis(code, pattern), std::move(recovering)};
    }();
    Syndrome s;
    for (const auto &item : split_list(o.syndrome)) {
        std::uint64_t v = parse_uint(item, "syndrome entry");
        if (v >= code.p()) {
            throw std::invalid_argument("syndrome entry " + item + " is not in F_" + std::to_string(code.p()));
        }
        s.push_back(static_cast<fp_t>(v));
    }
    PauliVector e = decode(code, plan, s);
    if (o.format == "json") {
        std::vector<std::size_t> supp = support(e);
        out << json{{"error", e.str()}, {"erasures", in.positions(pattern)},
                    {"support", in.positions(ErasurePattern(code.n(), supp))}}
                   .dump(2)
            << "\n";
    } else {
        out << "error " << e.str() << "\n";
    }
    return kOk;
}

int cmd_locality(const Options &o, std::ostream &out) {
    if (o.surface_path.empty() || !o.code_path.empty()) {
        throw std::invalid_argument("locality needs --surface FILE");
    }
    Surface s = load_surface(o.surface_path);
    std::size_t r;
    if (o.single) {
        r = locality_single(s);
    } else {
        if (o.delta == 0) {
            throw std::invalid_argument("--delta must be at least 1 (or use --single)");
        }
        r = locality_profile(s, o.delta);
    }
    if (o.format == "json") {
        json j{{"r", r}, {"formula", o.single ? "single" : "profile"}};
        if (!o.single) {
            j["delta"] = o.delta;
        }
        out << j.dump(2) << "\n";
    } else {
        out << "r = " << r << "\n";
    }
    return kOk;
}

int cmd_worst_case(const Options &o, std::ostream &out) {
    Input in = load_input(o);
    WorstCase w = worst_case_measurements(in.stabilizer(), o.delta);
    if (o.format == "json") {
        out << json{{"delta", o.delta}, {"measurements", w.measurements}, {"witness", in.positions(w.witness)}}.dump(2)
            << "\n";
    } else {
        out << "worst case " << w.measurements << " measurements, attained at {" << joined(in.labels(w.witness))
            << "}\n";
    }
    return kOk;
}

int cmd_min_fixed(const Options &o, std::ostream &out) {
    Input in = load_input(o);
    FixedSet f = min_fixed_set(in.stabilizer(), o.delta);
    std::vector<std::string> rows;
    std::string text = matrix_rows(f.observables, &rows);
    if (o.format == "json") {
        out << json{{"delta", o.delta}, {"dim", f.dim}, {"observables", rows}}.dump(2) << "\n";
    } else {
        out << "fixed set of " << f.dim << " observables: " << (text.empty() ? "-" : text) << "\n";
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Minimal measurement plans for erasure correction in stabilizer codes", "qlr"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App *sub) {
        sub->add_option("code", o.code_path, "Stabilizer or CSS code file (JSON)");
        sub->add_option("--surface", o.surface_path, "Surface file (JSON)");
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_erasures = [&](CLI::App *sub) {
        sub->add_option("--erasures", o.erasures, "Comma-separated 1-based positions, or edge ids for surfaces")
            ->required();
    };

    CLI::App *check = app.add_subcommand("check", "Decide whether the erasures are correctable");
    add_input(check);
    add_erasures(check);
    add_format(check);

    CLI::App *plan = app.add_subcommand("plan", "Compute a minimal measurement plan");
    add_input(plan);
    add_erasures(plan);
    add_format(plan);

    CLI::App *dec = app.add_subcommand("decode", "Recover the erased error from the plan's syndrome");
    add_input(dec);
    add_erasures(dec);
    dec->add_option("--syndrome", o.syndrome, "Comma-separated values, one per plan observable")->required();
    add_format(dec);

    CLI::App *loc = app.add_subcommand("locality", "Locality of a surface code");
    loc->add_option("--surface", o.surface_path, "Surface file (JSON)")->required();
    loc->add_option("--delta", o.delta, "Number of erasures");
    loc->add_flag("--single", o.single, "Single-erasure locality");
    add_format(loc);

    CLI::App *worst = app.add_subcommand("worst-case", "Worst-case plan size over all patterns of delta erasures");
    add_input(worst);
    worst->add_option("--delta", o.delta, "Number of erasures")->required();
    add_format(worst);

    CLI::App *fixed = app.add_subcommand("min-fixed", "Smallest fixed set of observables for delta erasures");
    add_input(fixed);
    fixed->add_option("--delta", o.delta, "Number of erasures")->required();
    add_format(fixed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (plan->parsed()) {
            return cmd_plan(o, out);
        }
        if (dec->parsed()) {
            return cmd_decode(o, out);
        }
        if (loc->parsed()) {
            return cmd_locality(o, out);
        }
        if (worst->parsed()) {
            return cmd_worst_case(o, out);
        }
        return cmd_min_fixed(o, out);
    } catch (const NotCorrectableError &e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const InconsistentSyndromeError &e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const UndefinedMinimumError &e) {
        err << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const SizeLimitError &e) {
        err << "refused: " << e.what() << "\n";
        return kSizeRefused;
    } catch (const std::invalid_argument &e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace qlr::cli
