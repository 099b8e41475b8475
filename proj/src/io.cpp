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


#include "entglkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace entglkit {

namespace {

std::string locate(const std::string &text, std::size_t byte) {
    byte = std::min(byte, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", offset " + std::to_string(byte) + " (column " +
           std::to_string(col) + ")";
}

[[noreturn]] void schema_error(const std::string &what) {
    throw Error(ErrorCode::ParseError, "matrix file: " + what);
}

void escape(std::ostringstream &os, const std::string &s) {
    os << '"';
    for (unsigned char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            case '\r': os << "\\r"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

void emit(std::ostringstream &os, const nlohmann::json &j, int indent, int level) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * level), ' ') : "";
    const char *nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{' << nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',' << nl;
                first = false;
                os << pad;
                escape(os, it.key());
                os << (indent > 0 ? ": " : ":");
                emit(os, it.value(), indent, level + 1);
            }
            os << nl << close_pad << '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Short numeric arrays (e.g. [re, im]) stay on one line.
            bool flat = j.size() <= 4;
            for (const auto &e : j) flat = flat && e.is_primitive();
            os << '[' << (flat ? "" : nl);
            bool first = true;
            for (const auto &e : j) {
                if (!first) os << ',' << (flat ? (indent > 0 ? " " : "") : nl);
                first = false;
                if (!flat) os << pad;
                emit(os, e, indent, level + 1);
            }
            os << (flat ? "" : nl) << (flat ? "" : close_pad) << ']';
            return;
        }
        case nlohmann::json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        case nlohmann::json::value_t::string:
            escape(os, j.get<std::string>());
            return;
        default:
            os << j.dump();
    }
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    // snprintf honours LC_NUMERIC; force a '.' decimal separator.
    for (char &c : s)
        if (c == ',') c = '.';
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string dump_json(const nlohmann::json &j, int indent) {
    std::ostringstream os;
    emit(os, j, indent, 0);
    return os.str();
}

MatrixFile parse_matrix_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, "malformed JSON at " + locate(text, e.byte) + ": " + e.what());
    }
    if (!j.is_object()) schema_error("top level must be an object");
    if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) schema_error("missing dims");
    if (!j.contains("data") || !j["data"].is_array()) schema_error("missing data");
    MatrixFile out;
    long long n = 1;
    for (const auto &d : j["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 1) schema_error("dims must be positive integers");
        out.dims.push_back(d.get<int>());
        n *= d.get<long long>();
        if (n > 1 << 15) schema_error("dimension too large");
    }
    const auto &data = j["data"];
    if (static_cast<long long>(data.size()) != n * n)
        schema_error("data has " + std::to_string(data.size()) + " entries, expected " + std::to_string(n * n));
    out.data.resize(n, n);
    for (long long k = 0; k < n * n; ++k) {
        const auto &e = data[static_cast<std::size_t>(k)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            schema_error("entry " + std::to_string(k) + " is not a [re, im] pair");
        out.data(k / n, k % n) = cplx(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

MatrixFile read_matrix_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_json(ss.str());
}

nlohmann::json matrix_to_json(const ComplexMatrix &m, const std::vector<int> &dims) {
    nlohmann::json data = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back({m(i, k).real(), m(i, k).imag()});
    return {{"dims", dims}, {"data", data}};
}

void write_matrix_file(const std::string &path, const ComplexMatrix &m, const std::vector<int> &dims) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << dump_json(matrix_to_json(m, dims)) << '\n';
}

}  // namespace entglkit
