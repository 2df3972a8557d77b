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

#include "braidgate/braid_word.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidgate {

BraidWord::BraidWord(int n_strands, std::vector<int> letters) : n_strands_(n_strands), letters_(std::move(letters)) {
    if (n_strands_ < 1) {
        throw std::invalid_argument("braid needs at least one strand, got " + std::to_string(n_strands_));
    }
    for (int g : letters_) {
        if (g == 0) {
            throw std::invalid_argument("braid letter 0 is not a generator");
        }
        if (std::abs(g) > n_strands_ - 1) {
            throw std::invalid_argument("generator s_" + std::to_string(std::abs(g)) + " does not exist in B_" +
                                        std::to_string(n_strands_));
        }
    }
}

namespace {

int parse_int(std::string_view token) {
    int value = 0;
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') {
        digits.remove_prefix(1);
    }
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("malformed braid letter '" + std::string(token) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
    text = trim(text);
    int n = 0;
    bool explicit_n = false;
    if (text.starts_with("n=") || text.starts_with("n =")) {
        auto semi = text.find(';');
        if (semi == std::string_view::npos) {
            throw ParseError("strand prefix must end with ';'");
        }
        auto header = trim(text.substr(text.find('=') + 1, semi - text.find('=') - 1));
        n = parse_int(header);
        if (n < 1) {
            throw ParseError("strand count must be positive, got " + std::string(header));
        }
        explicit_n = true;
        text = text.substr(semi + 1);
    }

    std::vector<int> letters;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        int g = parse_int(token);
        if (g == 0) {
            throw ParseError("braid letter 0 is not a generator");
        }
        letters.push_back(g);
    }

    int needed = 1;
    for (int g : letters) {
        needed = std::max(needed, std::abs(g) + 1);
    }
    if (!explicit_n) {
        if (letters.empty()) {
            throw ParseError("empty braid word needs an explicit \"n=K;\" prefix");
        }
        n = needed;
    } else if (needed > n) {
        throw ParseError("generator s_" + std::to_string(needed - 1) + " does not exist in B_" + std::to_string(n));
    }
    return BraidWord(n, std::move(letters));
}

std::string to_string(const BraidWord &b) {
    std::string out = "n=" + std::to_string(b.n_strands()) + ";";
    for (int g : b.letters()) {
        out += " " + std::to_string(g);
    }
    return out;
}

BraidWord concat(const BraidWord &a, const BraidWord &b) {
    if (a.n_strands() != b.n_strands()) {
        throw std::invalid_argument("cannot compose braids on " + std::to_string(a.n_strands()) + " and " +
                                    std::to_string(b.n_strands()) + " strands");
    }
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.n_strands(), std::move(letters));
}

BraidWord inverse(const BraidWord &b) {
    std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
    for (int &g : letters) {
        g = -g;
    }
    return BraidWord(b.n_strands(), std::move(letters));
}

std::vector<Crossing> crossings(const BraidWord &b) {
    // at[p] = starting position of the strand currently at position p (0-based).
    std::vector<int> at(b.n_strands());
    std::iota(at.begin(), at.end(), 1);
    std::vector<Crossing> out;
    out.reserve(b.length());
    for (size_t step = 0; step < b.length(); step++) {
        int g = b.letters()[step];
        int i = std::abs(g) - 1;
        out.push_back({step, std::abs(g), g > 0 ? 1 : -1, at[i], at[i + 1]});
        std::swap(at[i], at[i + 1]);
    }
    return out;
}

std::vector<int> permutation(const BraidWord &b) {
    std::vector<int> at(b.n_strands());
    std::iota(at.begin(), at.end(), 1);
    for (int g : b.letters()) {
        int i = std::abs(g) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> perm(b.n_strands());
    for (int p = 0; p < b.n_strands(); p++) {
        perm[at[p] - 1] = p + 1;
    }
    return perm;
}

int writhe(const BraidWord &b) {
    int w = 0;
    for (int g : b.letters()) {
        w += g > 0 ? 1 : -1;
    }
    return w;
}

double ClosureInfo::linking(int comp_i, int comp_j) const {
    return crossing_sum.at(comp_i - 1).at(comp_j - 1) / 2.0;
}

int ClosureInfo::linking_number(int comp_i, int comp_j) const {
    int twice = crossing_sum.at(comp_i - 1).at(comp_j - 1);
    if (twice % 2 != 0) {
        throw std::logic_error("odd inter-component crossing sum between components " + std::to_string(comp_i) +
                               " and " + std::to_string(comp_j));
    }
    return twice / 2;
}

ClosureInfo closure_info(const BraidWord &b) {
    ClosureInfo info;
    auto perm = permutation(b);
    int n = b.n_strands();
    info.component_of_strand.assign(n, 0);
    info.component_count = 0;
    for (int start = 1; start <= n; start++) {
        if (info.component_of_strand[start - 1] != 0) {
            continue;
        }
        int id = ++info.component_count;
        // Bottom position p is glued to top position p, so the strand reaching
        // position p continues as the strand that starts there.
        for (int s = start; info.component_of_strand[s - 1] == 0; s = perm[s - 1]) {
            info.component_of_strand[s - 1] = id;
        }
    }

    info.writhe = 0;
    info.crossing_sum.assign(info.component_count, std::vector<int>(info.component_count, 0));
    for (const auto &c : crossings(b)) {
        info.writhe += c.sign;
        int ci = info.component_of_strand[c.strand_left - 1] - 1;
        int cj = info.component_of_strand[c.strand_right - 1] - 1;
        if (ci != cj) {
            info.crossing_sum[ci][cj] += c.sign;
            info.crossing_sum[cj][ci] += c.sign;
        }
    }
    return info;
}

BraidWord markov_conjugate(const BraidWord &b, const BraidWord &g) {
    return concat(concat(g, b), inverse(g));
}

BraidWord markov_stabilize(const BraidWord &b, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("stabilization sign must be +1 or -1");
    }
    std::vector<int> letters = b.letters();
    letters.push_back(sign * b.n_strands());
    return BraidWord(b.n_strands() + 1, std::move(letters));
}

BraidWord free_reduce(const BraidWord &b) {
    std::vector<int> stack;
    for (int g : b.letters()) {
        if (!stack.empty() && stack.back() == -g) {
            stack.pop_back();
        } else {
            stack.push_back(g);
        }
    }
    return BraidWord(b.n_strands(), std::move(stack));
}

nlohmann::json braid_to_json(const BraidWord &b) {
    auto info = closure_info(b);
    nlohmann::json linking = nlohmann::json::array();
    for (int i = 1; i <= info.component_count; i++) {
        for (int j = i + 1; j <= info.component_count; j++) {
            linking.push_back({i, j, info.linking_number(i, j)});
        }
    }
    return {{"n", b.n_strands()},
            {"letters", b.letters()},
            {"components", info.component_count},
            {"writhe", info.writhe},
            {"linking", linking}};
}

}  // namespace braidgate
