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

#include "core/acceptance.hpp"

#include <deque>

#include "core/errors.hpp"

namespace paritylab {

acceptance_game_result acceptance_game(const tree_automaton& a, const regular_tree& t) {
    a.validate();
    t.validate();

    // Resolve tree labels to letter ids once.
    std::vector<uint32_t> letter(t.num_nodes());
    for (uint32_t n = 0; n < t.num_nodes(); ++n) {
        auto id = a.letter_id(t.labels[n]);
        if (!id)
            throw input_error("tree label '" + t.labels[n] + "' outside automaton alphabet");
        letter[n] = *id;
    }

    acceptance_game_result r;
    std::unordered_map<uint64_t, vertex_t> trans_vertex;
    std::deque<vertex_t> frontier;

    auto state_key = [](uint32_t n, uint32_t q) {
        return (static_cast<uint64_t>(n) << 32) | q;
    };

    auto intern_state = [&](uint32_t n, uint32_t q) {
        uint64_t key = state_key(n, q);
        auto it = r.state_vertex.find(key);
        if (it != r.state_vertex.end())
            return it->second;
        vertex_t v = r.game.add_vertex(owner_t::eve);
        r.vertices.push_back({true, n, q});
        r.state_vertex.emplace(key, v);
        frontier.push_back(v);
        return v;
    };
    auto intern_trans = [&](uint32_t n, uint32_t e) {
        uint64_t key = (static_cast<uint64_t>(n) << 32) | e;
        auto it = trans_vertex.find(key);
        if (it != trans_vertex.end())
            return it->second;
        vertex_t v = r.game.add_vertex(owner_t::adam);
        r.vertices.push_back({false, n, e});
        trans_vertex.emplace(key, v);
        frontier.push_back(v);
        return v;
    };

    intern_state(t.root, a.initial);
    while (!frontier.empty()) {
        vertex_t v = frontier.front();
        frontier.pop_front();
        ag_vertex info = r.vertices[v];
        if (info.is_state) {
            uint32_t n = info.tree_node;
            for (uint32_t e : a.transitions_from(info.state_or_trans, letter[n])) {
                vertex_t w = intern_trans(n, e);
                r.game.add_edge(v, w, a.index.lo);
            }
        } else {
            const ta_transition& tr = a.transitions[info.state_or_trans];
            uint32_t n = info.tree_node;
            r.game.add_edge(v, intern_state(t.succ0[n], tr.left), tr.p0);
            r.game.add_edge(v, intern_state(t.succ1[n], tr.right), tr.p1);
        }
    }
    r.game.index = a.index;
    r.game.initial = 0;
    r.game.validate();
    return r;
}

bool membership(const tree_automaton& a, const regular_tree& t) {
    acceptance_game_result ag = acceptance_game(a, t);
    return solve_zielonka(ag.game).eve_wins_initial(ag.game);
}

emptiness_result is_empty(const tree_automaton& a) {
    a.validate();
    // Vertices: states (Eve, ids 0..|Q|-1), then transitions (Adam).
    parity_game g;
    g.index = a.index;
    for (uint32_t q = 0; q < a.num_states(); ++q)
        g.add_vertex(owner_t::eve);
    for (size_t e = 0; e < a.transitions.size(); ++e)
        g.add_vertex(owner_t::adam);
    for (uint32_t e = 0; e < a.transitions.size(); ++e) {
        const ta_transition& tr = a.transitions[e];
        g.add_edge(tr.from, a.num_states() + e, a.index.lo);
        g.add_edge(a.num_states() + e, tr.left, tr.p0);
        g.add_edge(a.num_states() + e, tr.right, tr.p1);
    }
    g.initial = a.initial;
    g.validate();

    solve_result sr = solve_zielonka(g);
    if (!sr.eve_wins[a.initial])
        return {true, std::nullopt};

    // Fold the positional choice into a tree: one node per state reachable
    // under the strategy, labeled with the chosen transition's letter.
    regular_tree w;
    std::vector<uint32_t> node_of(a.num_states(), UINT32_MAX);
    std::vector<uint32_t> visited;
    std::deque<uint32_t> todo{a.initial};
    node_of[a.initial] = 0;
    w.node_names.push_back(a.states[a.initial]);
    while (!todo.empty()) {
        uint32_t q = todo.front();
        todo.pop_front();
        visited.push_back(q);
        edge_t pick = sr.eve_strategy.choice[q];
        if (pick == no_edge)
            throw internal_error("emptiness witness: no strategy at winning state '" +
                                 a.states[q] + "'");
        const ta_transition& tr = a.transitions[g.edges[pick].dst - a.num_states()];
        for (uint32_t child : {tr.left, tr.right})
            if (node_of[child] == UINT32_MAX) {
                node_of[child] = static_cast<uint32_t>(w.node_names.size());
                w.node_names.push_back(a.states[child]);
                todo.push_back(child);
            }
    }
    w.labels.resize(w.node_names.size());
    w.succ0.resize(w.node_names.size());
    w.succ1.resize(w.node_names.size());
    for (uint32_t q : visited) {
        const ta_transition& tr =
            a.transitions[g.edges[sr.eve_strategy.choice[q]].dst - a.num_states()];
        uint32_t n = node_of[q];
        w.labels[n] = a.alphabet[tr.letter];
        w.succ0[n] = node_of[tr.left];
        w.succ1[n] = node_of[tr.right];
    }
    w.root = 0;
    w.validate();
    return {false, std::move(w)};
}

regular_run run_game(const tree_automaton& a, const regular_tree& t, const strategy& s) {
    acceptance_game_result ag = acceptance_game(a, t);

    regular_run r;
    r.index = a.index;
    std::unordered_map<uint64_t, uint32_t> node_of; // (tree node, state) -> run node
    std::deque<std::pair<uint32_t, uint32_t>> todo;

    auto intern = [&](uint32_t n, uint32_t q) {
        uint64_t key = (static_cast<uint64_t>(n) << 32) | q;
        auto it = node_of.find(key);
        if (it != node_of.end())
            return it->second;
        uint32_t id = r.num_nodes();
        r.labels.push_back(0);
        r.p0.push_back(0);
        r.p1.push_back(0);
        r.succ0.push_back(0);
        r.succ1.push_back(0);
        node_of.emplace(key, id);
        todo.emplace_back(n, q);
        return id;
    };

    intern(t.root, a.initial);
    while (!todo.empty()) {
        auto [n, q] = todo.front();
        todo.pop_front();
        uint32_t id = node_of.at((static_cast<uint64_t>(n) << 32) | q);
        vertex_t v = ag.vertex_of(n, q);
        if (!s.defined(v))
            throw input_error("strategy undefined at reachable pair (node '" +
                              t.node_names[n] + "', state '" + a.states[q] + "')");
        vertex_t target = ag.game.edges[s.choice[v]].dst;
        const ag_vertex& ti = ag.vertices[target];
        const ta_transition& tr = a.transitions[ti.state_or_trans];
        r.labels[id] = ti.state_or_trans;
        r.p0[id] = tr.p0;
        r.p1[id] = tr.p1;
        r.succ0[id] = intern(t.succ0[n], tr.left);
        r.succ1[id] = intern(t.succ1[n], tr.right);
    }
    validate_run(a, r);
    return r;
}

void validate_run(const tree_automaton& a, const regular_run& r) {
    if (r.labels.empty())
        throw input_error("run has no nodes");
    if (a.transitions[r.labels[r.root]].from != a.initial)
        throw input_error("run root is not labeled with an initial transition");
    for (uint32_t n = 0; n < r.num_nodes(); ++n) {
        const ta_transition& tr = a.transitions[r.labels[n]];
        if (a.transitions[r.labels[r.succ0[n]]].from != tr.left ||
            a.transitions[r.labels[r.succ1[n]]].from != tr.right)
            throw input_error("run is not locally consistent at node " + std::to_string(n));
        if (r.p0[n] != tr.p0 || r.p1[n] != tr.p1)
            throw input_error("run node " + std::to_string(n) +
                              " disagrees with its transition's priorities");
    }
}

parity_game project_priorities(const regular_run& r) {
    parity_game g;
    g.index = r.index;
    g.initial = r.root;
    for (uint32_t n = 0; n < r.num_nodes(); ++n)
        g.add_vertex(owner_t::adam);
    for (uint32_t n = 0; n < r.num_nodes(); ++n) {
        g.add_edge(n, r.succ0[n], r.p0[n]); // edge 2n
        g.add_edge(n, r.succ1[n], r.p1[n]); // edge 2n+1
    }
    g.validate();
    return g;
}

} // namespace paritylab
