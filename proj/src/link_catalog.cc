// Copyright 2026 The braidgate Authors
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

#include "braidgate/link_catalog.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "braidgate/gate_names.h"

namespace braidgate {

std::filesystem::path default_link_catalog_path() {
    if (const char *env = std::getenv("BRAIDGATE_LINKS"); env != nullptr && *env != '\0') {
        return env;
    }
    return std::filesystem::path(BRAIDGATE_DATA_DIR) / "links.txt";
}

std::vector<LinkEntry> load_link_catalog(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open link catalog " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_link_catalog(buf.str());
}

std::vector<LinkEntry> parse_link_catalog(const std::string &text) {
    std::vector<LinkEntry> out;
    std::set<std::string> seen;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        line = line.substr(0, line.find('#'));
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue;
        }
        std::string rest;
        std::getline(fields, rest);
        auto start = rest.find_first_not_of(" \t");
        rest = start == std::string::npos ? "" : rest.substr(start);
        auto end = rest.find_last_not_of(" \t\r");
        rest = end == std::string::npos ? "" : rest.substr(0, end + 1);
        if (!seen.insert(name).second) {
            throw ParseError("link catalog line " + std::to_string(line_no) + ": duplicate name '" + name + "'");
        }
        try {
            out.push_back({name, rest, parse_braid(rest)});
        } catch (const ParseError &e) {
            throw ParseError("link catalog line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

const LinkEntry &find_link(const std::vector<LinkEntry> &catalog, const std::string &name) {
    for (const auto &e : catalog) {
        if (e.name == name) {
            return e;
        }
    }
    throw UnknownNameError("unknown link '" + name + "'");
}

}  // namespace braidgate
