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

#include "core/synthesis.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/util.hpp"

namespace paritylab {

namespace {

std::string describe_state(const reg_state& s) {
    std::ostringstream out;
    out << "r=[";
    for (size_t i = 0; i < s.registers.size(); ++i)
        out << (i ? "," : "") << s.registers[i];
    out << "] c=[";
    for (size_t i = 0; i < s.counters.size(); ++i)
        out << (i ? "," : "") << s.counters[i];
    out << "]";
    return out.str();
}

std::vector<uint32_t> state_key(const reg_state& s) {
    std::vector<uint32_t> k;
    k.reserve(s.registers.size() + s.counters.size());
    for (priority_t r : s.registers)
        k.push_back(r);
    for (uint32_t c : s.counters)
        k.push_back(c);
    return k;
}

// Interning pool for configurations shared by the two constructions.
struct config_pool {
    std::unordered_map<std::vector<uint32_t>, uint32_t, u32vec_hash> ids;
    std::vector<reg_state> states;
    uint64_t cap;

    explicit config_pool(uint64_t cap_) : cap(cap_) {}

    std::pair<uint32_t, bool> intern(const reg_state& s) {
        std::vector<uint32_t> key = state_key(s);
        auto it = ids.find(key);
        if (it != ids.end())
            return {it->second, false};
        if (states.size() >= cap)
            throw state_cap_error("configuration automaton", cap);
        uint32_t id = static_cast<uint32_t>(states.size());
        ids.emplace(std::move(key), id);
        states.push_back(s);
        return {id, true};
    }
};

priority_index with_sink_priority(const priority_index& j, bool sink_used) {
    if (!sink_used)
        return j;
    priority_t sp = loss_sink_priority(j);
    return priority_index(std::min(j.lo, sp), std::max(j.hi, sp));
}

} // namespace

config_automaton build_config_automaton(const reg_spec& spec, const expand_options& options) {
    const priority_t sp = loss_sink_priority(spec.output_index);
    config_pool pool(options.state_cap);

    config_automaton out;
    tree_automaton& c = out.automaton;
    for (priority_t p = spec.input_index.lo; p <= spec.input_index.hi; ++p)
        c.alphabet.push_back(std::to_string(p));

    std::deque<uint32_t> frontier;
    auto intern = [&](const reg_state& s) {
        auto [id, fresh] = pool.intern(s);
        if (fresh) {
            c.states.push_back("c" + std::to_string(id));
            out.state_descriptions.push_back(describe_state(s));
            frontier.push_back(id);
        }
        return id;
    };

    intern(initial_reg_state(spec));
    c.initial = 0;

    bool sink_used = false;
    std::set<std::array<uint32_t, 6>> dedup;
    std::vector<ta_transition> pending_sink_edges;
    auto add_transition = [&](uint32_t from, uint32_t letter, uint32_t left, uint32_t right,
                              priority_t p0, priority_t p1) {
        if (dedup.insert({from, letter, left, right, p0, p1}).second)
            c.transitions.push_back({from, letter, left, right, p0, p1});
    };

    // The sink is interned last so configuration ids stay contiguous; its
    // transitions reference a placeholder resolved below.
    constexpr uint32_t sink_placeholder = UINT32_MAX;

    while (!frontier.empty()) {
        uint32_t id = frontier.front();
        frontier.pop_front();
        reg_state s = pool.states[id];
        for (priority_t p = spec.input_index.lo; p <= spec.input_index.hi; ++p) {
            uint32_t letter = p - spec.input_index.lo;
            for (const reg_move& m : reg_moves(spec, s, p, options.reading)) {
                if (m.instant_loss) {
                    sink_used = true;
                    add_transition(id, letter, sink_placeholder, sink_placeholder, sp, sp);
                } else {
                    uint32_t next = intern(m.next);
                    add_transition(id, letter, next, next, m.output, m.output);
                }
            }
        }
    }

    if (sink_used) {
        out.sink_state = static_cast<uint32_t>(c.states.size());
        c.states.push_back("loss_sink");
        out.state_descriptions.push_back("instant-loss sink");
        for (ta_transition& t : c.transitions) {
            if (t.left == sink_placeholder)
                t.left = out.sink_state;
            if (t.right == sink_placeholder)
                t.right = out.sink_state;
        }
        for (uint32_t letter = 0; letter < c.alphabet.size(); ++letter)
            c.transitions.push_back({out.sink_state, letter, out.sink_state, out.sink_state,
                                     sp, sp});
    }

    c.index = with_sink_priority(spec.output_index, sink_used);
    c.rebuild_lookup();
    c.validate();
    return out;
}

composed_automaton compose(const tree_automaton& a, const reg_spec& spec,
                           const expand_options& options) {
    a.validate();
    if (!(a.index == spec.input_index))
        throw input_error("automaton index " + a.index.str() + " does not match input index " +
                          spec.input_index.str());

    const priority_t sp = loss_sink_priority(spec.output_index);
    config_pool pool(options.state_cap);

    composed_automaton out;
    tree_automaton& b = out.automaton;
    b.alphabet = a.alphabet;

    // Product states (A-state, configuration), interned on discovery.
    std::unordered_map<uint64_t, uint32_t> product_ids;
    std::deque<std::pair<uint32_t, uint32_t>> frontier;
    auto intern = [&](uint32_t q, const reg_state& s) {
        uint32_t cid = pool.intern(s).first;
        uint64_t key = (static_cast<uint64_t>(q) << 32) | cid;
        auto it = product_ids.find(key);
        if (it != product_ids.end())
            return it->second;
        if (b.states.size() >= options.state_cap)
            throw state_cap_error("composed automaton", options.state_cap);
        uint32_t id = static_cast<uint32_t>(b.states.size());
        b.states.push_back(a.states[q] + "*c" + std::to_string(cid));
        out.state_descriptions.push_back(a.states[q] + " with " +
                                         describe_state(pool.states[cid]));
        product_ids.emplace(key, id);
        frontier.emplace_back(q, cid);
        return id;
    };

    intern(a.initial, initial_reg_state(spec));
    b.initial = 0;

    bool sink_used = false;
    constexpr uint32_t sink_placeholder = UINT32_MAX;
    std::set<std::array<uint32_t, 6>> dedup;
    auto add_transition = [&](uint32_t from, uint32_t letter, uint32_t left, uint32_t right,
                              priority_t p0, priority_t p1) {
        if (dedup.insert({from, letter, left, right, p0, p1}).second)
            b.transitions.push_back({from, letter, left, right, p0, p1});
    };

    while (!frontier.empty()) {
        auto [q, cid] = frontier.front();
        frontier.pop_front();
        uint32_t from = product_ids.at((static_cast<uint64_t>(q) << 32) | cid);
        reg_state s = pool.states[cid];
        for (uint32_t letter = 0; letter < a.num_letters(); ++letter) {
            for (uint32_t tid : a.transitions_from(q, letter)) {
                const ta_transition& tr = a.transitions[tid];
                std::vector<reg_move> moves0 = reg_moves(spec, s, tr.p0, options.reading);
                std::vector<reg_move> moves1 = reg_moves(spec, s, tr.p1, options.reading);
                for (const reg_move& m0 : moves0)
                    for (const reg_move& m1 : moves1) {
                        uint32_t left = sink_placeholder;
                        uint32_t right = sink_placeholder;
                        if (!m0.instant_loss)
                            left = intern(tr.left, m0.next);
                        else
                            sink_used = true;
                        if (!m1.instant_loss)
                            right = intern(tr.right, m1.next);
                        else
                            sink_used = true;
                        add_transition(from, letter, left, right,
                                       m0.instant_loss ? sp : m0.output,
                                       m1.instant_loss ? sp : m1.output);
                    }
            }
        }
    }

    if (sink_used) {
        out.sink_state = static_cast<uint32_t>(b.states.size());
        b.states.push_back("loss_sink");
        out.state_descriptions.push_back("instant-loss sink");
        for (ta_transition& t : b.transitions) {
            if (t.left == sink_placeholder)
                t.left = out.sink_state;
            if (t.right == sink_placeholder)
                t.right = out.sink_state;
        }
        for (uint32_t letter = 0; letter < b.alphabet.size(); ++letter)
            b.transitions.push_back({out.sink_state, letter, out.sink_state, out.sink_state,
                                     sp, sp});
    }

    b.index = with_sink_priority(spec.output_index, sink_used);
    b.rebuild_lookup();
    b.validate();
    return out;
}

probe_report probe_bound(const tree_automaton& a, const priority_index& output_index,
                         const std::vector<regular_tree>& corpus, uint32_t n_max,
                         const expand_options& options, unsigned threads) {
    a.validate();
    if (corpus.empty())
        throw input_error("probe corpus is empty");

    probe_report report;
    report.membership.resize(corpus.size());
    report.eve_wins.assign(n_max + 1, std::vector<bool>(corpus.size()));

    parallel_for(corpus.size(), threads, [&](size_t i) {
        acceptance_game_result ag = acceptance_game(a, corpus[i]);
        report.membership[i] = solve_zielonka(ag.game).eve_wins_initial(ag.game);
        for (uint32_t n = 0; n <= n_max; ++n) {
            reg_spec spec(a.index, output_index, n);
            expand_options local = options;
            report.eve_wins[n][i] = solve_reg(ag.game, spec, local).eve_wins;
        }
    });

    for (uint32_t n = 0; n <= n_max; ++n) {
        bool all = true;
        for (size_t i = 0; i < corpus.size(); ++i) {
            bool agree = report.eve_wins[n][i] == report.membership[i];
            all = all && agree;
            if (!report.membership[i] && report.eve_wins[n][i]) {
                report.fatal = true;
                report.fatal_notes.push_back("tree #" + std::to_string(i) +
                                             ": rejected input won by Eve at N=" +
                                             std::to_string(n));
            }
        }
        if (all && report.least_agreeing_n < 0)
            report.least_agreeing_n = static_cast<int>(n);
    }
    for (size_t i = 0; i < corpus.size(); ++i) {
        bool seen_agree = false;
        for (uint32_t n = 0; n <= n_max; ++n) {
            bool agree = report.eve_wins[n][i] == report.membership[i];
            if (seen_agree && !agree)
                report.anomalies.push_back("tree #" + std::to_string(i) +
                                           ": agreement lost again at N=" + std::to_string(n));
            seen_agree = seen_agree || agree;
        }
    }
    return report;
}

} // namespace paritylab
