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

#ifndef QLR_IO_H
#define QLR_IO_H

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qlr/css.h"
#include "qlr/stabilizer.h"
#include "qlr/surface.h"

namespace qlr {

/// Unreadable or malformed input file. The message names the file and the
/// offending line/column or field.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

nlohmann::json parse_json(const std::string &text, const std::string &source = "<input>");
nlohmann::json read_json_file(const std::string &path);

/// {"p": 2, "n": 2, "generators": [[1,1,0,0], [0,0,1,1]]}
StabilizerCode stabilizer_from_json(const nlohmann::json &j);
/// {"p": 2, "n": 4, "cx": [[1,1,1,1]], "cz": [[1,1,1,1]]}
CssCode css_from_json(const nlohmann::json &j);
/// {"vertices": [...], "edges": [{"id", "ends"}], "faces": [{"id", "edges"}], "open_edges": [...]}
Surface surface_from_json(const nlohmann::json &j);

nlohmann::json to_json(const StabilizerCode &code);
nlohmann::json to_json(const CssCode &code);
nlohmann::json to_json(const Surface &surface);

/// A stabilizer or CSS code file (detected by its keys) as a stabilizer code.
StabilizerCode load_code(const std::string &path);
Surface load_surface(const std::string &path);

}  // namespace qlr

#endif
