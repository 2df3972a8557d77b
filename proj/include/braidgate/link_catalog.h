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

#ifndef BRAIDGATE_LINK_CATALOG_H
#define BRAIDGATE_LINK_CATALOG_H

#include <filesystem>
#include <string>
#include <vector>

#include "braidgate/braid_word.h"

namespace braidgate {

struct LinkEntry {
    std::string name;
    std::string braid_text;
    BraidWord braid;
};

/// $BRAIDGATE_LINKS if set, otherwise links.txt in the source data directory.
std::filesystem::path default_link_catalog_path();

/// Reads "name braid-word" lines; '#' starts a comment. Throws ParseError
/// (with the line number) on malformed entries or duplicate names.
std::vector<LinkEntry> load_link_catalog(const std::filesystem::path &path);
std::vector<LinkEntry> parse_link_catalog(const std::string &text);

/// Throws UnknownNameError if absent.
const LinkEntry &find_link(const std::vector<LinkEntry> &catalog, const std::string &name);

}  // namespace braidgate

#endif
