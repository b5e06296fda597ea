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

#ifndef PARITYLAB_SYNTHESIS_HPP
#define PARITYLAB_SYNTHESIS_HPP

#include "core/acceptance.hpp"
#include "core/automata.hpp"
#include "core/transduction.hpp"

namespace paritylab {

// Automaton over the input priorities whose states are reachable
// register/counter configurations and whose transition priorities are the
// produced outputs; both directions of a transition share the successor
// configuration. Accepts a priority tree exactly when Eve wins the
// transduction game over it (node labels pushed onto outgoing edges).
struct config_automaton {
    tree_automaton automaton;
    std::vector<std::string> state_descriptions;
    uint32_t sink_state = UINT32_MAX; // rejecting trap entered on instant loss
};

config_automaton build_config_automaton(const reg_spec& spec,
                                        const expand_options& options = {});

// Product with a source automaton: states pair an A-state with a
// configuration; the per-direction priorities of the chosen A-transition
// drive the configuration, the produced outputs become the product's
// priorities. The result has every priority in the output index (the loss
// sink's odd priority excepted when that index is all-even).
struct composed_automaton {
    tree_automaton automaton;
    std::vector<std::string> state_descriptions;
    uint32_t sink_state = UINT32_MAX;
};

composed_automaton compose(const tree_automaton& a, const reg_spec& spec,
                           const expand_options& options = {});

// Corpus probe: for each N up to n_max, does Eve's transduction win over
// the acceptance game coincide with membership on every corpus tree?
struct probe_report {
    std::vector<bool> membership;             // per tree
    std::vector<std::vector<bool>> eve_wins;  // [N][tree]
    int least_agreeing_n = -1;                // -1: none up to n_max
    bool fatal = false;                       // a rejected tree won by Eve
    std::vector<std::string> fatal_notes;
    std::vector<std::string> anomalies;       // non-monotone agreement in N
};

probe_report probe_bound(const tree_automaton& a, const priority_index& output_index,
                         const std::vector<regular_tree>& corpus, uint32_t n_max,
                         const expand_options& options = {}, unsigned threads = 1);

} // namespace paritylab

#endif
