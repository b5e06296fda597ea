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

#include "core/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "core/errors.hpp"
#include "core/util.hpp"

namespace paritylab {

namespace {

void check_bounds(const gen_spec& spec) {
    if (spec.size == 0)
        throw input_error("generator size must be positive");
    if (spec.out_degree == 0)
        throw input_error("generator out-degree must be positive");
}

priority_t random_priority(rng64& rng, const priority_index& idx) {
    return static_cast<priority_t>(rng.in_range(idx.lo, idx.hi));
}

} // namespace

parity_game gen_game(const gen_spec& spec) {
    check_bounds(spec);
    rng64 rng(spec.seed);
    parity_game g;
    g.index = spec.index;
    g.initial = 0;
    for (uint32_t v = 0; v < spec.size; ++v)
        g.add_vertex(rng.coin() ? owner_t::eve : owner_t::adam);
    for (uint32_t v = 0; v < spec.size; ++v) {
        uint32_t degree = 1 + static_cast<uint32_t>(rng.below(spec.out_degree));
        for (uint32_t k = 0; k < degree; ++k)
            g.add_edge(v, static_cast<vertex_t>(rng.below(spec.size)),
                       random_priority(rng, spec.index));
    }
    g.validate();
    return g;
}

parity_game gen_lasso(const gen_spec& spec, int parity) {
    check_bounds(spec);
    priority_t target = 0;
    bool found = false;
    for (priority_t p = spec.index.hi + 1; p-- > spec.index.lo;)
        if (static_cast<int>(p & 1u) == parity) {
            target = p;
            found = true;
            break;
        }
    if (!found)
        throw input_error("index " + spec.index.str() + " has no priority of parity " +
                          std::to_string(parity));

    rng64 rng(spec.seed);
    uint32_t cycle_len = 1 + static_cast<uint32_t>(rng.below(std::max(1u, spec.size / 2)));
    uint32_t prefix_len = static_cast<uint32_t>(rng.below(spec.size - cycle_len + 1));

    parity_game g;
    g.index = spec.index;
    g.initial = 0;
    uint32_t n = prefix_len + cycle_len;
    for (uint32_t v = 0; v < n; ++v)
        g.add_vertex(owner_t::adam);
    for (uint32_t v = 0; v < prefix_len; ++v)
        g.add_edge(v, v + 1, random_priority(rng, spec.index));
    // Cycle priorities stay at or below the target maximum; one edge is
    // pinned to it so the cycle's parity is the requested one.
    uint32_t pinned = prefix_len + static_cast<uint32_t>(rng.below(cycle_len));
    for (uint32_t v = prefix_len; v < n; ++v) {
        uint32_t next = v + 1 < n ? v + 1 : prefix_len;
        priority_t p = v == pinned
                           ? target
                           : static_cast<priority_t>(rng.in_range(spec.index.lo, target));
        g.add_edge(v, next, p);
    }
    g.validate();
    return g;
}

tree_automaton gen_automaton(const gen_spec& spec) {
    check_bounds(spec);
    if (spec.alphabet.empty())
        throw input_error("generator alphabet must be non-empty");
    rng64 rng(spec.seed);
    tree_automaton a;
    a.alphabet = spec.alphabet;
    a.index = spec.index;
    for (uint32_t q = 0; q < spec.size; ++q)
        a.states.push_back("q" + std::to_string(q));
    a.initial = 0;
    std::set<std::array<uint32_t, 6>> seen;
    for (uint32_t q = 0; q < spec.size; ++q)
        for (uint32_t l = 0; l < a.alphabet.size(); ++l) {
            uint32_t count = 1 + static_cast<uint32_t>(rng.below(spec.out_degree));
            uint32_t added = 0;
            // Duplicates are re-rolled a few times; one transition per
            // (state, letter) always lands because the first draw can
            // only collide with itself.
            for (uint32_t k = 0; k < count * 3 && added < count; ++k) {
                ta_transition t{q,
                                l,
                                static_cast<uint32_t>(rng.below(spec.size)),
                                static_cast<uint32_t>(rng.below(spec.size)),
                                random_priority(rng, spec.index),
                                random_priority(rng, spec.index)};
                if (seen.insert({t.from, t.letter, t.left, t.right, t.p0, t.p1}).second) {
                    a.transitions.push_back(t);
                    ++added;
                }
            }
            if (added == 0)
                throw internal_error("generator failed to place a transition");
        }
    a.rebuild_lookup();
    a.validate();
    return a;
}

regular_tree gen_tree(const gen_spec& spec) {
    check_bounds(spec);
    if (spec.alphabet.empty())
        throw input_error("generator alphabet must be non-empty");
    rng64 rng(spec.seed);
    regular_tree t;
    for (uint32_t n = 0; n < spec.size; ++n) {
        t.node_names.push_back("n" + std::to_string(n));
        t.labels.push_back(spec.alphabet[rng.below(spec.alphabet.size())]);
        t.succ0.push_back(0);
        t.succ1.push_back(0);
    }
    for (uint32_t n = 0; n < spec.size; ++n) {
        t.succ0[n] = static_cast<uint32_t>(rng.below(spec.size));
        t.succ1[n] = static_cast<uint32_t>(rng.below(spec.size));
    }
    t.root = 0;
    t.validate();
    return t;
}

guided_pair gen_guided_pair(const gen_spec& spec, uint32_t a_states) {
    check_bounds(spec);
    if (a_states > spec.size)
        throw input_error("quotient cannot have more states than B");

    for (uint32_t attempt = 0; attempt < 32; ++attempt) {
        uint64_t seed = spec.seed * 0x9e3779b97f4a7c15ull + attempt;
        gen_spec bspec = spec;
        bspec.seed = seed;
        tree_automaton b = gen_automaton(bspec);
        emptiness_result er = is_empty(b);
        if (er.empty)
            continue;

        rng64 rng(seed ^ 0x5151515151515151ull);
        uint32_t na = a_states ? a_states : 1 + static_cast<uint32_t>(rng.below(spec.size));

        guided_pair pair;
        pair.b = std::move(b);
        tree_automaton& a = pair.a;
        a.alphabet = pair.b.alphabet;
        a.index = pair.b.index;
        for (uint32_t p = 0; p < na; ++p)
            a.states.push_back("p" + std::to_string(p));
        a.initial = pair.b.initial % na;

        // Quotient transitions keep their priorities, so guided runs look
        // exactly like the guiding runs priority-wise.
        std::map<std::array<uint32_t, 6>, uint32_t> image_id;
        for (const ta_transition& t : pair.b.transitions) {
            ta_transition img{t.from % na, t.letter, t.left % na, t.right % na, t.p0, t.p1};
            std::array<uint32_t, 6> key{img.from, img.letter, img.left, img.right, img.p0,
                                        img.p1};
            if (!image_id.count(key)) {
                image_id[key] = static_cast<uint32_t>(a.transitions.size());
                a.transitions.push_back(img);
            }
        }
        a.rebuild_lookup();
        a.validate();

        pair.guide.num_b_transitions = static_cast<uint32_t>(pair.b.transitions.size());
        pair.guide.table.assign(static_cast<size_t>(na) * pair.b.transitions.size(),
                                UINT32_MAX);
        for (uint32_t p = 0; p < na; ++p)
            for (uint32_t bt = 0; bt < pair.b.transitions.size(); ++bt) {
                const ta_transition& t = pair.b.transitions[bt];
                uint32_t at;
                if (t.from % na == p) {
                    at = image_id.at({p, t.letter, t.left % na, t.right % na, t.p0, t.p1});
                } else {
                    at = a.transitions_from(p, t.letter).front();
                }
                pair.guide.table[static_cast<size_t>(p) * pair.guide.num_b_transitions + bt] =
                    at;
            }
        validate_guide(pair.guide, a, pair.b);

        pair.corpus.push_back(std::move(*er.witness));
        for (uint32_t k = 0; k < 6 && pair.corpus.size() < 4; ++k) {
            gen_spec tspec = spec;
            tspec.seed = seed + 101 * (k + 1);
            tspec.size = 2 + static_cast<uint32_t>(rng.below(5));
            tspec.alphabet = pair.b.alphabet;
            regular_tree t = gen_tree(tspec);
            if (membership(pair.b, t))
                pair.corpus.push_back(std::move(t));
        }
        return pair;
    }
    throw input_error("no non-empty guide pair found for seed " + std::to_string(spec.seed));
}

} // namespace paritylab
