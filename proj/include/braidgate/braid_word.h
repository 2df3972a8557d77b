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

#ifndef BRAIDGATE_BRAID_WORD_H
#define BRAIDGATE_BRAID_WORD_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace braidgate {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A word in the Artin generators of B_n.
///
/// Letter g stands for s_|g| (positive crossing) when g > 0 and for its
/// inverse when g < 0. Letters compose top to bottom: the first letter is the
/// first crossing a strand passes through. The positive crossing is the one
/// drawn for the generators of the braid group; every derived quantity only
/// depends on this convention being applied consistently.
class BraidWord {
   public:
    /// Identity braid on one strand.
    BraidWord() : BraidWord(1, {}) {}
    BraidWord(int n_strands, std::vector<int> letters);

    static BraidWord identity(int n_strands) { return BraidWord(n_strands, {}); }

    int n_strands() const { return n_strands_; }
    const std::vector<int> &letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord &) const = default;

   private:
    int n_strands_;
    std::vector<int> letters_;
};

/// Parses whitespace-separated nonzero integers, optionally prefixed with
/// "n=K;" to fix the strand count. Without the prefix the strand count is
/// max|g| + 1 and the word must be nonempty.
BraidWord parse_braid(std::string_view text);

/// "n=K; g1 g2 ..." -- always parseable by parse_braid.
std::string to_string(const BraidWord &b);

BraidWord concat(const BraidWord &a, const BraidWord &b);

/// Reversed word with every sign flipped.
BraidWord inverse(const BraidWord &b);

/// perm[i - 1] is the bottom position (1-based) reached by the strand that
/// starts at top position i.
std::vector<int> permutation(const BraidWord &b);

/// One crossing of the word, with the two strands involved identified by
/// their starting positions (1-based).
struct Crossing {
    size_t step;
    int generator;
    int sign;
    int strand_left;
    int strand_right;
};

/// Tracks strand identities forward through the word.
std::vector<Crossing> crossings(const BraidWord &b);

struct ClosureInfo {
    int component_count;
    /// component_of_strand[i - 1] is the component id (1..component_count) of
    /// the strand starting at position i. Ids are numbered by smallest strand.
    std::vector<int> component_of_strand;
    int writhe;
    /// Signed inter-component crossing counts, symmetric, zero diagonal. The
    /// linking number of components i, j is half of entry (i-1, j-1).
    std::vector<std::vector<int>> crossing_sum;

    /// Linking number as a half-integer.
    double linking(int comp_i, int comp_j) const;
    /// Linking number as an integer; throws std::logic_error if the crossing
    /// sum is odd, which cannot happen for closed components.
    int linking_number(int comp_i, int comp_j) const;
};

ClosureInfo closure_info(const BraidWord &b);

int writhe(const BraidWord &b);

/// g b g^-1. Throws std::invalid_argument on a strand-count mismatch.
BraidWord markov_conjugate(const BraidWord &b, const BraidWord &g);

/// b s_n^{sign} in B_{n+1}. sign must be +1 or -1.
BraidWord markov_stabilize(const BraidWord &b, int sign);

/// Cancels adjacent s_i s_i^-1 pairs until none remain. Braid relations are not applied.
BraidWord free_reduce(const BraidWord &b);

/// { "n": K, "letters": [...], "components": c, "writhe": w, "linking": [[i, j, lk], ...] }
nlohmann::json braid_to_json(const BraidWord &b);

}  // namespace braidgate

#endif
