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

#include "qlr/io.h"

#include <fstream>
#include <sstream>

namespace qlr {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *key) {
    if (!j.is_object()) {
        throw InputError("expected a JSON object at the top level");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    return *it;
}

std::uint64_t unsigned_field(const json &j, const char *key) {
    const json &v = field(j, key);
    if (!v.is_number_unsigned()) {
        throw InputError(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::uint32_t prime_field(const json &j) {
    std::uint64_t p = unsigned_field(j, "p");
    if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
        throw InputError("field 'p': " + std::to_string(p) + " is not a supported prime");
    }
    return static_cast<std::uint32_t>(p);
}

FpMatrix matrix_field(const json &j, const char *key, std::uint32_t p, std::size_t cols) {
    const json &rows = field(j, key);
    if (!rows.is_array()) {
        throw InputError(std::string("field '") + key + "' must be an array of rows");
    }
    FpMatrix out(p, 0, cols);
    std::vector<fp_t> row(cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        std::string where = std::string(key) + "[" + std::to_string(r) + "]";
        const json &jr = rows[r];
        if (!jr.is_array() || jr.size() != cols) {
            throw InputError(where + " must be an array of " + std::to_string(cols) + " integers");
        }
        for (std::size_t c = 0; c < cols; c++) {
            if (!jr[c].is_number_unsigned() || jr[c].get<std::uint64_t>() >= p) {
                throw InputError(
                    where + "[" + std::to_string(c) + "] must be an integer in 0.." + std::to_string(p - 1));
            }
            row[c] = static_cast<fp_t>(jr[c].get<std::uint64_t>());
        }
        out.append_row(row);
    }
    return out;
}

std::vector<std::string> string_list(const json &v, const std::string &where) {
    if (!v.is_array()) {
        throw InputError(where + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (!v[i].is_string()) {
            throw InputError(where + "[" + std::to_string(i) + "] must be a string");
        }
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

json matrix_json(const FpMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        auto s = m.row(r);
        rows.push_back(std::vector<fp_t>(s.begin(), s.end()));
    }
    return rows;
}

template <typename F>
auto rethrow_as_input(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
}

}  // namespace

json parse_json(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        // Convert the byte offset into a line/column pair.
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
            if (text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw InputError(
            source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON (" +
            std::string(e.what()) + ")");
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

StabilizerCode stabilizer_from_json(const json &j) {
    std::uint32_t p = prime_field(j);
    std::size_t n = unsigned_field(j, "n");
    FpMatrix g = matrix_field(j, "generators", p, 2 * n);
    return rethrow_as_input([&] { return StabilizerCode(std::move(g)); });
}

CssCode css_from_json(const json &j) {
    std::uint32_t p = prime_field(j);
    std::size_t n = unsigned_field(j, "n");
    FpMatrix cx = matrix_field(j, "cx", p, n);
    FpMatrix cz = matrix_field(j, "cz", p, n);
    return rethrow_as_input([&] { return CssCode(ClassicalCode(std::move(cx)), ClassicalCode(std::move(cz))); });
}

Surface surface_from_json(const json &j) {
    std::vector<std::string> vertices = string_list(field(j, "vertices"), "vertices");
    const json &je = field(j, "edges");
    if (!je.is_array()) {
        throw InputError("field 'edges' must be an array");
    }
    std::vector<SurfaceEdge> edges;
    for (std::size_t i = 0; i < je.size(); i++) {
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!je[i].is_object() || !je[i].contains("id") || !je[i]["id"].is_string() || !je[i].contains("ends")) {
            throw InputError(where + " must be an object with string 'id' and array 'ends'");
        }
        edges.push_back(SurfaceEdge{je[i]["id"].get<std::string>(), string_list(je[i]["ends"], where + ".ends")});
    }
    const json &jf = field(j, "faces");
    if (!jf.is_array()) {
        throw InputError("field 'faces' must be an array");
    }
    std::vector<SurfaceFace> faces;
    for (std::size_t i = 0; i < jf.size(); i++) {
        std::string where = "faces[" + std::to_string(i) + "]";
        if (!jf[i].is_object() || !jf[i].contains("id") || !jf[i]["id"].is_string() || !jf[i].contains("edges")) {
            throw InputError(where + " must be an object with string 'id' and array 'edges'");
        }
        faces.push_back(SurfaceFace{jf[i]["id"].get<std::string>(), string_list(jf[i]["edges"], where + ".edges")});
    }
    std::vector<std::string> open;
    if (j.contains("open_edges")) {
        open = string_list(j["open_edges"], "open_edges");
    }
    return rethrow_as_input([&] {
        return Surface(std::move(vertices), std::move(edges), std::move(faces), std::move(open));
    });
}

json to_json(const StabilizerCode &code) {
    return json{{"p", code.p()}, {"n", code.n()}, {"generators", matrix_json(code.generators())}};
}

json to_json(const CssCode &code) {
    return json{
        {"p", code.p()},
        {"n", code.n()},
        {"cx", matrix_json(code.cx().generators())},
        {"cz", matrix_json(code.cz().generators())}};
}

json to_json(const Surface &surface) {
    json edges = json::array();
    for (const auto &e : surface.edges()) {
        edges.push_back(json{{"id", e.id}, {"ends", e.ends}});
    }
    json faces = json::array();
    for (const auto &f : surface.faces()) {
        faces.push_back(json{{"id", f.id}, {"edges", f.edges}});
    }
    return json{
        {"vertices", surface.vertices()}, {"edges", edges}, {"faces", faces}, {"open_edges", surface.open_edges()}};
}

StabilizerCode load_code(const std::string &path) {
    json j = read_json_file(path);
    try {
        if (j.is_object() && (j.contains("cx") || j.contains("cz"))) {
            return css_to_stabilizer(css_from_json(j));
        }
        return stabilizer_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

Surface load_surface(const std::string &path) {
    json j = read_json_file(path);
    try {
        return surface_from_json(j);
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace qlr
