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

#ifndef PARITYLAB_GUIDANCE_HPP
#define PARITYLAB_GUIDANCE_HPP

#include "core/acceptance.hpp"
#include "core/automata.hpp"
#include "core/transduction.hpp"

namespace paritylab {

// Total table (state of A, transition of B) -> transition of A, compatible
// with the state and the letter.
struct guiding_function {
    uint32_t num_b_transitions = 0;
    std::vector<uint32_t> table; // [a_state * num_b_transitions + b_trans]

    uint32_t lookup(uint32_t a_state, uint32_t b_trans) const {
        return table[static_cast<size_t>(a_state) * num_b_transitions + b_trans];
    }
};

// Totality and compatibility against concrete automata.
void validate_guide(const guiding_function& g, const tree_automaton& a,
                    const tree_automaton& b);

// JSON format: [{state, from, letter, left_b, right_b, to_left, to_right}]
// keyed by (A-state, B-transition); the target A-transition
// (state, letter, to_left, to_right) must exist and be unambiguous.
guiding_function parse_guide(const std::string& text, const tree_automaton& a,
                             const tree_automaton& b);
std::string serialize_guide(const guiding_function& g, const tree_automaton& a,
                            const tree_automaton& b);

// Run of A obtained by resolving its nondeterminism along a run of B,
// together with the pairing from A-run nodes to B-run nodes.
struct guided_run {
    regular_run run;
    std::vector<uint32_t> b_node; // per run node
};

guided_run guide_run(const tree_automaton& a, const tree_automaton& b,
                     const guiding_function& g, const regular_run& rho_b);

// Desk-scale acceptance-preservation check over a corpus of trees accepted
// by B: every guided image of an accepting B-run must project to an even
// graph. Not a proof; corpus trees outside L(B) are an error.
struct preservation_violation {
    size_t tree_index;
    play witness; // odd-dominated lasso in the guided run's projection
};

struct preservation_report {
    bool ok = true;
    size_t trees_checked = 0;
    std::vector<preservation_violation> violations;
};

preservation_report check_preservation(const tree_automaton& a, const tree_automaton& b,
                                       const guiding_function& g,
                                       const std::vector<regular_tree>& corpus,
                                       unsigned threads = 1);

// Exhaustive segment check between two paired runs: every walk u -> u.v of
// the synchronized product whose endpoints repeat the (A-label, B-label)
// pair and whose B-maximum is even must have an even A-maximum.
struct pump_violation {
    uint32_t start_node;          // product node reached by `access`
    std::vector<int> access;      // direction word from the root to u
    std::vector<int> segment;     // direction word v (non-empty)
    priority_t b_max;
    priority_t a_max;
};

struct pump_report {
    bool ok = true;
    uint64_t states_explored = 0;
    std::vector<pump_violation> violations; // one (shortest) per start node
};

pump_report pump_check(const guided_run& rho_a, const regular_run& rho_b);

// The pumped tree: the subtree at u replaces, recursively, the subtrees at
// u.v^n. Finite presentation via a fresh spine along u.v whose last step
// redirects to the top of the u-subtree.
regular_tree pump_tree(const regular_tree& t, const std::vector<int>& u,
                       const std::vector<int>& v);

// Eve's guided strategy in the transduction game over the projection of
// rho_a: pick the register addressed by the observed B-priority (r_0 for
// priority 1), never escalate. Verdict: is the strategy-restricted
// expansion even from the initial configuration.
struct guided_strategy_result {
    bool verdict;
    strategy eve;         // over the expansion's configurations
    expanded_game expansion;
    std::optional<play> witness; // odd lasso when the verdict is false
};

guided_strategy_result guided_reg_strategy(const guided_run& rho_a, const regular_run& rho_b,
                                           const reg_spec& spec,
                                           const expand_options& options = {});

} // namespace paritylab

#endif
