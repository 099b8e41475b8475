// Copyright 2026 The entglkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ENTGLKIT_IO_HPP
#define ENTGLKIT_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "entglkit/common.hpp"

namespace entglkit {

struct MatrixFile {
    std::vector<int> dims;
    ComplexMatrix data;
};

// ParseError messages carry "line L, offset O" for malformed JSON.
MatrixFile parse_matrix_json(const std::string &text);
MatrixFile read_matrix_file(const std::string &path);

nlohmann::json matrix_to_json(const ComplexMatrix &m, const std::vector<int> &dims);
void write_matrix_file(const std::string &path, const ComplexMatrix &m, const std::vector<int> &dims);

// Serializer that prints every floating value with 17 significant digits;
// non-finite values become null.
std::string dump_json(const nlohmann::json &j, int indent = 2);
std::string format_double(double x);

}  // namespace entglkit

#endif
