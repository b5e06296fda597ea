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

#include "core/guidance.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/parallel.hpp"

namespace paritylab {

using nlohmann::json;

void validate_guide(const guiding_function& g, const tree_automaton& a,
                    const tree_automaton& b) {
    if (g.num_b_transitions != b.transitions.size() ||
        g.table.size() != static_cast<size_t>(a.num_states()) * b.transitions.size())
        throw input_error("guiding function table does not cover Q_A x Delta_B");
    for (uint32_t p = 0; p < a.num_states(); ++p)
        for (uint32_t bt = 0; bt < b.transitions.size(); ++bt) {
            uint32_t at = g.lookup(p, bt);
            if (at >= a.transitions.size())
                throw input_error("guiding function entry out of range");
            const ta_transition& target = a.transitions[at];
            if (target.from != p)
                throw input_error("guide(" + a.states[p] + ", #" + std::to_string(bt) +
                                  ") is not a transition from that state");
            if (a.alphabet[target.letter] != b.alphabet[b.transitions[bt].letter])
                throw input_error("guide(" + a.states[p] + ", #" + std::to_string(bt) +
                                  ") changes the letter");
        }
}

guiding_function parse_guide(const std::string& text, const tree_automaton& a,
                             const tree_automaton& b) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw parse_error("malformed JSON in guide file", -1);
    if (!j.is_array())
        throw input_error("guide file must be a JSON array");

    guiding_function g;
    g.num_b_transitions = static_cast<uint32_t>(b.transitions.size());
    g.table.assign(static_cast<size_t>(a.num_states()) * b.transitions.size(), UINT32_MAX);

    auto get = [](const json& e, const char* f) {
        auto it = e.find(f);
        if (it == e.end())
            throw input_error(std::string("guide entry: missing field '") + f + "'");
        return it->get<std::string>();
    };

    for (const json& e : j) {
        std::string sp = get(e, "state");
        auto p = a.state_id(sp);
        if (!p)
            throw input_error("guide entry references unknown A-state '" + sp + "'");
        auto bfrom = b.state_id(get(e, "from"));
        auto bletter = b.letter_id(get(e, "letter"));
        auto bleft = b.state_id(get(e, "left_b"));
        auto bright = b.state_id(get(e, "right_b"));
        if (!bfrom || !bletter || !bleft || !bright)
            throw input_error("guide entry references an unknown B-state or letter");
        uint32_t bt = UINT32_MAX;
        for (uint32_t cand : b.transitions_from(*bfrom, *bletter)) {
            const ta_transition& tr = b.transitions[cand];
            if (tr.left == *bleft && tr.right == *bright) {
                if (bt != UINT32_MAX)
                    throw input_error("guide entry matches several B-transitions (from '" +
                                      get(e, "from") + "' over '" + get(e, "letter") + "')");
                bt = cand;
            }
        }
        if (bt == UINT32_MAX)
            throw input_error("guide entry names a B-transition that does not exist");

        auto aleft = a.state_id(get(e, "to_left"));
        auto aright = a.state_id(get(e, "to_right"));
        if (!aleft || !aright)
            throw input_error("guide entry references an unknown A-state in its target");
        auto aletter = a.letter_id(b.alphabet[*bletter]);
        if (!aletter)
            throw input_error("letter '" + b.alphabet[*bletter] + "' missing from A's alphabet");
        uint32_t at = UINT32_MAX;
        for (uint32_t cand : a.transitions_from(*p, *aletter)) {
            const ta_transition& tr = a.transitions[cand];
            if (tr.left == *aleft && tr.right == *aright) {
                if (at != UINT32_MAX)
                    throw input_error("guide target (" + sp + ", " + b.alphabet[*bletter] +
                                      ", " + get(e, "to_left") + ", " + get(e, "to_right") +
                                      ") is ambiguous in A");
                at = cand;
            }
        }
        if (at == UINT32_MAX)
            throw input_error("guide target transition does not exist in A");

        size_t cell = static_cast<size_t>(*p) * g.num_b_transitions + bt;
        if (g.table[cell] != UINT32_MAX)
            throw input_error("duplicate guide entry for (" + sp + ", B-transition #" +
                              std::to_string(bt) + ")");
        g.table[cell] = at;
    }
    validate_guide(g, a, b);
    return g;
}

std::string serialize_guide(const guiding_function& g, const tree_automaton& a,
                            const tree_automaton& b) {
    json j = json::array();
    for (uint32_t p = 0; p < a.num_states(); ++p)
        for (uint32_t bt = 0; bt < b.transitions.size(); ++bt) {
            const ta_transition& btr = b.transitions[bt];
            const ta_transition& atr = a.transitions[g.lookup(p, bt)];
            j.push_back({{"state", a.states[p]},
                         {"from", b.states[btr.from]},
                         {"letter", b.alphabet[btr.letter]},
                         {"left_b", b.states[btr.left]},
                         {"right_b", b.states[btr.right]},
                         {"to_left", a.states[atr.left]},
                         {"to_right", a.states[atr.right]}});
        }
    return j.dump(2) + "\n";
}

guided_run guide_run(const tree_automaton& a, const tree_automaton& b,
                     const guiding_function& g, const regular_run& rho_b) {
    validate_guide(g, a, b);
    validate_run(b, rho_b);

    guided_run out;
    out.run.index = a.index;
    std::unordered_map<uint64_t, uint32_t> node_of; // (b node, a state) -> run node
    std::deque<std::pair<uint32_t, uint32_t>> todo;

    auto intern = [&](uint32_t bn, uint32_t p) {
        uint64_t key = (static_cast<uint64_t>(bn) << 32) | p;
        auto it = node_of.find(key);
        if (it != node_of.end())
            return it->second;
        uint32_t id = out.run.num_nodes();
        out.run.labels.push_back(0);
        out.run.p0.push_back(0);
        out.run.p1.push_back(0);
        out.run.succ0.push_back(0);
        out.run.succ1.push_back(0);
        out.b_node.push_back(bn);
        node_of.emplace(key, id);
        todo.emplace_back(bn, p);
        return id;
    };

    intern(rho_b.root, a.initial);
    while (!todo.empty()) {
        auto [bn, p] = todo.front();
        todo.pop_front();
        uint32_t id = node_of.at((static_cast<uint64_t>(bn) << 32) | p);
        uint32_t at = g.lookup(p, rho_b.labels[bn]);
        const ta_transition& tr = a.transitions[at];
        if (tr.from != p)
            throw input_error("guiding function incompatible at a reachable pair");
        out.run.labels[id] = at;
        out.run.p0[id] = tr.p0;
        out.run.p1[id] = tr.p1;
        out.run.succ0[id] = intern(rho_b.succ0[bn], tr.left);
        out.run.succ1[id] = intern(rho_b.succ1[bn], tr.right);
    }
    validate_run(a, out.run);
    return out;
}

preservation_report check_preservation(const tree_automaton& a, const tree_automaton& b,
                                       const guiding_function& g,
                                       const std::vector<regular_tree>& corpus,
                                       unsigned threads) {
    validate_guide(g, a, b);
    preservation_report report;
    report.trees_checked = corpus.size();
    std::vector<std::optional<preservation_violation>> found(corpus.size());
    std::vector<std::string> errors(corpus.size());

    parallel_for(corpus.size(), threads, [&](size_t i) {
        const regular_tree& t = corpus[i];
        acceptance_game_result ag = acceptance_game(b, t);
        solve_result sr = solve_zielonka(ag.game);
        if (!sr.eve_wins_initial(ag.game)) {
            errors[i] = "corpus tree #" + std::to_string(i) + " is not accepted by B";
            return;
        }
        regular_run rho_b = run_game(b, t, sr.eve_strategy);
        guided_run rho_a = guide_run(a, b, g, rho_b);
        even_check ec = is_even_graph(project_priorities(rho_a.run));
        if (!ec.even)
            found[i] = preservation_violation{i, std::move(*ec.witness)};
    });

    for (const std::string& e : errors)
        if (!e.empty())
            throw input_error(e);
    for (auto& v : found)
        if (v) {
            report.ok = false;
            report.violations.push_back(std::move(*v));
        }
    return report;
}

namespace {

// Dense relabeling of priorities occurring in a run, to keep the layered
// search over (node, max so far, max so far) small.
struct priority_table {
    std::vector<priority_t> values; // ascending

    explicit priority_table(const regular_run& r) {
        for (uint32_t n = 0; n < r.num_nodes(); ++n) {
            values.push_back(r.p0[n]);
            values.push_back(r.p1[n]);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    }

    uint32_t rank(priority_t p) const {
        return static_cast<uint32_t>(std::lower_bound(values.begin(), values.end(), p) -
                                     values.begin());
    }
};

std::vector<std::vector<int>> access_words(const regular_run& r) {
    std::vector<std::vector<int>> word(r.num_nodes());
    std::vector<bool> seen(r.num_nodes(), false);
    std::deque<uint32_t> todo{r.root};
    seen[r.root] = true;
    while (!todo.empty()) {
        uint32_t n = todo.front();
        todo.pop_front();
        for (int d = 0; d < 2; ++d) {
            uint32_t m = r.succ(n, d);
            if (!seen[m]) {
                seen[m] = true;
                word[m] = word[n];
                word[m].push_back(d);
                todo.push_back(m);
            }
        }
    }
    return word;
}

} // namespace

pump_report pump_check(const guided_run& rho_a, const regular_run& rho_b) {
    const regular_run& ra = rho_a.run;
    if (rho_a.b_node.size() != ra.num_nodes())
        throw input_error("pairing size does not match the guided run");
    for (uint32_t n = 0; n < ra.num_nodes(); ++n) {
        uint32_t bn = rho_a.b_node[n];
        if (bn >= rho_b.num_nodes())
            throw input_error("pairing references an unknown B-run node");
        for (int d = 0; d < 2; ++d)
            if (rho_a.b_node[ra.succ(n, d)] != rho_b.succ(bn, d))
                throw input_error("pairing inconsistent with guidance at node " +
                                  std::to_string(n));
    }
    if (rho_a.b_node[ra.root] != rho_b.root)
        throw input_error("pairing does not map root to root");
    if (!is_even_graph(project_priorities(ra)).even ||
        !is_even_graph(project_priorities(rho_b)).even)
        throw input_error("pump check requires two accepting runs");

    priority_table pa(ra), pb(rho_b);
    const uint32_t wa = static_cast<uint32_t>(pa.values.size());
    const uint32_t wb = static_cast<uint32_t>(pb.values.size());
    std::vector<std::vector<int>> access = access_words(ra);

    pump_report report;
    // Label pair of a product node: (A transition, B transition).
    auto label_pair = [&](uint32_t n) {
        return (static_cast<uint64_t>(ra.labels[n]) << 32) | rho_b.labels[rho_a.b_node[n]];
    };

    for (uint32_t start = 0; start < ra.num_nodes(); ++start) {
        // BFS over (node, b-max rank, a-max rank); a shortest violating
        // walk never revisits a layered state.
        const size_t n_states = static_cast<size_t>(ra.num_nodes()) * wa * wb;
        std::vector<int8_t> seen(n_states, 0);
        std::vector<uint32_t> parent(n_states, UINT32_MAX);
        std::vector<int8_t> parent_dir(n_states, 0);
        auto enc = [&](uint32_t n, uint32_t br, uint32_t ar) {
            return (static_cast<size_t>(n) * wb + br) * wa + ar;
        };
        std::deque<uint32_t> todo;
        auto step = [&](uint32_t n, uint32_t br, uint32_t ar, int d, uint32_t from_code) {
            uint32_t bn = rho_a.b_node[n];
            priority_t bp = d == 0 ? rho_b.p0[bn] : rho_b.p1[bn];
            priority_t ap = d == 0 ? ra.p0[n] : ra.p1[n];
            uint32_t nbr = std::max(br, pb.rank(bp));
            uint32_t nar = std::max(ar, pa.rank(ap));
            uint32_t m = ra.succ(n, d);
            size_t code = enc(m, nbr, nar);
            if (!seen[code]) {
                seen[code] = 1;
                parent[code] = from_code;
                parent_dir[code] = static_cast<int8_t>(d);
                todo.push_back(static_cast<uint32_t>(code));
            }
        };
        for (int d = 0; d < 2; ++d)
            step(start, 0, 0, d, UINT32_MAX);
        // Ranks of "nothing seen yet" start at the lowest occurring value;
        // the first step overwrites both maxima, so seeding rank 0 is safe.
        std::optional<pump_violation> best;
        while (!todo.empty() && !best) {
            uint32_t code = todo.front();
            todo.pop_front();
            report.states_explored += 1;
            uint32_t ar = code % wa;
            uint32_t br = (code / wa) % wb;
            uint32_t n = static_cast<uint32_t>(code / (static_cast<size_t>(wa) * wb));
            if (label_pair(n) == label_pair(start) && is_even(pb.values[br]) &&
                is_odd(pa.values[ar])) {
                pump_violation v;
                v.start_node = start;
                v.access = access[start];
                v.b_max = pb.values[br];
                v.a_max = pa.values[ar];
                for (uint32_t c = code; c != UINT32_MAX; c = parent[c])
                    v.segment.push_back(parent_dir[c]);
                std::reverse(v.segment.begin(), v.segment.end());
                best = std::move(v);
                break;
            }
            for (int d = 0; d < 2; ++d)
                step(n, br, ar, d, code);
        }
        if (best) {
            report.ok = false;
            report.violations.push_back(std::move(*best));
        }
    }
    return report;
}

regular_tree pump_tree(const regular_tree& t, const std::vector<int>& u,
                       const std::vector<int>& v) {
    t.validate();
    if (v.empty())
        throw input_error("pump segment must be non-empty");
    for (int d : u)
        if (d != 0 && d != 1)
            throw input_error("direction words must be over {0, 1}");
    for (int d : v)
        if (d != 0 && d != 1)
            throw input_error("direction words must be over {0, 1}");

    std::vector<int> path = u;
    path.insert(path.end(), v.begin(), v.end());

    regular_tree out = t;
    // Fresh spine presenting the positions along u.v; off-spine successors
    // keep pointing into the original presentation.
    std::vector<uint32_t> spine(path.size());
    uint32_t orig = t.root;
    for (size_t i = 0; i < path.size(); ++i) {
        spine[i] = out.num_nodes();
        out.node_names.push_back("pump_" + std::to_string(i));
        out.labels.push_back(t.labels[orig]);
        out.succ0.push_back(t.succ0[orig]);
        out.succ1.push_back(t.succ1[orig]);
        orig = t.succ(orig, path[i]);
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        (path[i] == 0 ? out.succ0 : out.succ1)[spine[i]] = spine[i + 1];
    }
    // The final step of v loops back to the top of the u-subtree.
    (path.back() == 0 ? out.succ0 : out.succ1)[spine.back()] = spine[u.size()];
    out.root = spine[0];
    out.validate();
    return out;
}

guided_strategy_result guided_reg_strategy(const guided_run& rho_a, const regular_run& rho_b,
                                           const reg_spec& spec,
                                           const expand_options& options) {
    parity_game projection = project_priorities(rho_a.run);
    if (!(projection.index == spec.input_index))
        throw input_error("spec input index " + spec.input_index.str() +
                          " does not match the guided run's index " + projection.index.str());

    guided_strategy_result out{false, strategy(0), expand_reg(projection, spec, options), {}};
    const expanded_game& eg = out.expansion;
    out.eve = strategy(eg.game.num_vertices());

    for (vertex_t v = 0; v < eg.game.num_vertices(); ++v) {
        const expanded_vertex& info = eg.info[v];
        if (info.is_sink)
            continue;
        if (info.phase == reg_phase::await_register) {
            // Projection edges are laid out as 2*node + direction.
            uint32_t run_node = info.pending / 2;
            int dir = static_cast<int>(info.pending % 2);
            uint32_t bn = rho_a.b_node[run_node];
            priority_t bp = dir == 0 ? rho_b.p0[bn] : rho_b.p1[bn];
            if (!spec.output_index.contains(bp))
                throw input_error("guiding run carries priority " + std::to_string(bp) +
                                  " outside the output index " + spec.output_index.str());
            uint32_t reg = bp / 2; // priority 1 addresses r_0
            size_t slot = spec.register_slot(reg);
            out.eve.choice[v] = eg.game.out[v][slot];
        } else if (info.phase == reg_phase::await_escalation) {
            out.eve.choice[v] = eg.game.out[v][0]; // i = L(e), never escalate
        }
    }

    parity_game restricted = restrict_by_strategy(eg.game, out.eve, owner_t::eve);
    out.witness = find_bad_cycle_from(restricted, restricted.initial, 1);
    out.verdict = !out.witness.has_value();
    return out;
}

} // namespace paritylab
