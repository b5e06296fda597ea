/*
 * Copyright 2026 the paritylab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PARITYLAB_AUTOMATA_HPP
#define PARITYLAB_AUTOMATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/index.hpp"

namespace paritylab {

struct ta_transition {
    uint32_t from;
    uint32_t letter;
    uint32_t left;
    uint32_t right;
    priority_t p0;
    priority_t p1;

    bool operator==(const ta_transition&) const = default;
};

// Nondeterministic parity tree automaton over infinite binary trees, with
// per-direction priorities on transitions. Complete by invariant: at least
// one transition per (state, letter).
struct tree_automaton {
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    uint32_t initial = 0;
    priority_index index{0, 0};
    std::vector<ta_transition> transitions;

    uint32_t num_states() const { return static_cast<uint32_t>(states.size()); }
    uint32_t num_letters() const { return static_cast<uint32_t>(alphabet.size()); }

    std::optional<uint32_t> letter_id(const std::string& name) const;
    std::optional<uint32_t> state_id(const std::string& name) const;

    // Transition ids from (state, letter), ascending. Lazily rebuilt
    // lookup; call after mutating transitions.
    const std::vector<uint32_t>& transitions_from(uint32_t state, uint32_t letter) const;
    void rebuild_lookup();

    // Completeness, reference ranges, priority containment, duplicate
    // transitions.
    void validate() const;

    // Adds a rejecting sink (all transitions looping with an odd priority)
    // wherever some (state, letter) has no transition. No-op when complete.
    void complete_with_sink();

private:
    mutable std::vector<std::vector<uint32_t>> lookup_; // [state*letters+letter]
    mutable bool lookup_valid_ = false;
};

// Finite pointed presentation of an infinite binary tree: total 0/1
// successors, labels are letter names.
struct regular_tree {
    std::vector<std::string> node_names;
    std::vector<std::string> labels;
    std::vector<uint32_t> succ0;
    std::vector<uint32_t> succ1;
    uint32_t root = 0;

    uint32_t num_nodes() const { return static_cast<uint32_t>(labels.size()); }
    uint32_t succ(uint32_t node, int dir) const { return dir == 0 ? succ0[node] : succ1[node]; }
    uint32_t node_at(const std::vector<int>& word) const;

    void validate() const;
};

// Equality as infinite trees (label bisimulation of the presentations).
bool trees_equal(const regular_tree& a, const regular_tree& b);

// JSON formats:
//   automaton: {alphabet, states, initial, index: [lo, hi],
//               transitions: [{from, letter, left, right, p0, p1}]}
//   tree:      {nodes: [{id, label, succ0, succ1}], root}
// Exact duplicates (states, letters, node ids, transitions) are errors.
tree_automaton parse_automaton(const std::string& text, bool auto_complete = false);
std::string serialize_automaton(const tree_automaton& a,
                                const std::string& provenance_json = "");
regular_tree parse_tree(const std::string& text);
std::string serialize_tree(const regular_tree& t);

} // namespace paritylab

#endif
