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

#include "core/transduction.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/util.hpp"

namespace paritylab {

reset_reading parse_reset_reading(const std::string& s) {
    if (s == "pre")
        return reset_reading::pre;
    if (s == "post")
        return reset_reading::post;
    throw input_error("unknown reset reading '" + s + "' (expected pre or post)");
}

reg_spec::reg_spec(priority_index in, priority_index out, uint32_t n)
    : input_index(in), output_index(out), bound(n) {
    if (output_index.lo != 1 && output_index.lo != 2)
        throw input_error("output index must start at 1 or 2, got " + output_index.str());
    if (output_index.contains(1))
        registers_.push_back(0);
    for (uint32_t j = 1; 2 * j <= output_index.hi; ++j)
        if (output_index.contains(2 * j))
            registers_.push_back(j);
    odd_inputs_ = input_index.odd_members();
}

size_t reg_spec::register_slot(uint32_t j) const {
    for (size_t s = 0; s < registers_.size(); ++s)
        if (registers_[s] == j)
            return s;
    throw input_error("r_" + std::to_string(j) + " is not a register of output index " +
                      output_index.str());
}

size_t reg_spec::odd_row(priority_t p) const {
    for (size_t r = 0; r < odd_inputs_.size(); ++r)
        if (odd_inputs_[r] == p)
            return r;
    throw internal_error("no counter row for priority " + std::to_string(p));
}

reg_state initial_reg_state(const reg_spec& spec) {
    reg_state s;
    s.registers.assign(spec.registers().size(), spec.input_index.lo);
    s.counters.assign(spec.odd_inputs().size() * spec.registers().size(), 0);
    return s;
}

reg_output_result reg_output(const reg_spec& spec, const reg_state& s, uint32_t j) {
    size_t slot = spec.register_slot(j);
    reg_output_result r{0, s, false};
    if (j == 0) {
        r.output = 1;
        return r;
    }
    priority_t content = s.registers[slot];
    if (is_even(content)) {
        r.output = 2 * j;
        return r;
    }
    size_t cell = spec.odd_row(content) * spec.registers().size() + slot;
    if (s.counters[cell] == spec.bound) {
        r.output = 2 * j + 1;
        r.next.counters[cell] = 0;
        r.instant_loss = !spec.output_index.contains(2 * j + 1);
    } else {
        r.output = 2 * j;
        r.next.counters[cell] += 1;
    }
    return r;
}

reg_state reg_update(const reg_spec& spec, const reg_state& s, uint32_t j, priority_t i,
                     reset_reading reading) {
    if (!spec.input_index.contains(i))
        throw input_error("update priority " + std::to_string(i) + " outside input index " +
                          spec.input_index.str());
    size_t slot = spec.register_slot(j);
    size_t ncols = spec.registers().size();
    reg_state next = s;

    // Counter resets, in the written order: rows below i at the picked
    // column, then columns below j at the row named by the register value.
    for (size_t row = 0; row < spec.odd_inputs().size(); ++row)
        if (spec.odd_inputs()[row] < i)
            next.counters[row * ncols + slot] = 0;
    priority_t named = reading == reset_reading::pre ? s.registers[slot] : i;
    if (is_odd(named)) {
        size_t row = spec.odd_row(named);
        for (size_t col = 0; col < ncols; ++col)
            if (spec.registers()[col] < j)
                next.counters[row * ncols + col] = 0;
    }

    // Register updates: higher registers absorb i, the picked one takes it.
    for (size_t col = 0; col < ncols; ++col)
        if (spec.registers()[col] > j)
            next.registers[col] = std::max(next.registers[col], i);
    next.registers[slot] = i;
    return next;
}

void validate_escalation(const reg_spec& spec, priority_t edge_priority, priority_t i) {
    if (!spec.input_index.contains(i))
        throw input_error("priority " + std::to_string(i) + " outside input index " +
                          spec.input_index.str());
    if (is_even(edge_priority)) {
        if (i != edge_priority)
            throw input_error("even edge priority " + std::to_string(edge_priority) +
                              " cannot be replaced by " + std::to_string(i));
    } else {
        if (is_even(i))
            throw input_error("escalation of odd priority " + std::to_string(edge_priority) +
                              " must be odd, got " + std::to_string(i));
        if (i < edge_priority)
            throw input_error("escalation must not decrease the priority: " + std::to_string(i) +
                              " < " + std::to_string(edge_priority));
    }
}

std::vector<reg_move> reg_moves(const reg_spec& spec, const reg_state& s, priority_t input,
                                reset_reading reading) {
    if (!spec.input_index.contains(input))
        throw input_error("input priority " + std::to_string(input) + " outside index " +
                          spec.input_index.str());
    std::vector<reg_move> moves;
    for (uint32_t j : spec.registers()) {
        reg_output_result out = reg_output(spec, s, j);
        if (out.instant_loss) {
            moves.push_back({j, input, out.output, true, {}});
            continue;
        }
        if (is_even(input)) {
            moves.push_back({j, input, out.output, false,
                             reg_update(spec, out.next, j, input, reading)});
        } else {
            for (priority_t i = input; i <= spec.input_index.hi; i += 2)
                moves.push_back({j, i, out.output, false,
                                 reg_update(spec, out.next, j, i, reading)});
        }
    }
    return moves;
}

priority_t loss_sink_priority(const priority_index& output_index) {
    return output_index.contains(1) ? 1 : 3;
}

namespace {

struct expansion_builder {
    parity_game game;
    std::vector<expanded_vertex> info;
    std::unordered_map<std::vector<uint32_t>, vertex_t, u32vec_hash> seen;
    std::deque<vertex_t> frontier;
    uint64_t cap;
    vertex_t sink = UINT32_MAX;

    explicit expansion_builder(uint64_t cap_) : cap(cap_) {}

    static std::vector<uint32_t> key_of(const expanded_vertex& v) {
        std::vector<uint32_t> k;
        k.reserve(4 + v.state.registers.size() + v.state.counters.size());
        k.push_back(v.is_sink ? 0xffffffffu : static_cast<uint32_t>(v.phase));
        k.push_back(v.position);
        k.push_back(v.pending);
        k.push_back(v.chosen_reg);
        for (priority_t r : v.state.registers)
            k.push_back(r);
        for (uint32_t c : v.state.counters)
            k.push_back(c);
        return k;
    }

    vertex_t intern(expanded_vertex v, owner_t owner) {
        std::vector<uint32_t> key = key_of(v);
        auto it = seen.find(key);
        if (it != seen.end())
            return it->second;
        if (game.num_vertices() >= cap)
            throw state_cap_error("game expansion", cap);
        vertex_t id = game.add_vertex(owner);
        seen.emplace(std::move(key), id);
        info.push_back(std::move(v));
        frontier.push_back(id);
        return id;
    }

    vertex_t loss_sink(priority_t loop_priority) {
        if (sink == UINT32_MAX) {
            expanded_vertex v;
            v.is_sink = true;
            sink = intern(std::move(v), owner_t::adam);
            frontier.pop_back(); // expanded right here
            game.add_edge(sink, sink, loop_priority);
        }
        return sink;
    }
};

} // namespace

std::string expanded_game::describe(vertex_t v) const {
    const expanded_vertex& ev = info[v];
    if (ev.is_sink)
        return "sink";
    std::ostringstream out;
    switch (ev.phase) {
    case reg_phase::await_move:
        out << "move p=" << ev.position;
        break;
    case reg_phase::await_register:
        out << "register p=" << ev.position << " e=" << ev.pending;
        break;
    case reg_phase::await_escalation:
        out << "escalate p=" << ev.position << " e=" << ev.pending << " j=" << ev.chosen_reg;
        break;
    }
    out << " r=[";
    for (size_t i = 0; i < ev.state.registers.size(); ++i)
        out << (i ? "," : "") << ev.state.registers[i];
    out << "] c=[";
    for (size_t i = 0; i < ev.state.counters.size(); ++i)
        out << (i ? "," : "") << ev.state.counters[i];
    out << "]";
    return out.str();
}

std::string expanded_game::sidecar() const {
    std::ostringstream out;
    for (vertex_t v = 0; v < game.num_vertices(); ++v)
        out << v << '\t' << describe(v) << '\n';
    return out.str();
}

expanded_game expand_reg(const parity_game& g, const reg_spec& spec,
                         const expand_options& options) {
    g.validate();
    if (!(g.index == spec.input_index))
        throw input_error("game index " + g.index.str() + " does not match input index " +
                          spec.input_index.str());

    const priority_t neutral = spec.output_index.lo;
    expansion_builder b(options.state_cap);

    expanded_vertex init;
    init.phase = reg_phase::await_move;
    init.position = g.initial;
    init.state = initial_reg_state(spec);
    b.intern(std::move(init), g.owners[g.initial]);

    while (!b.frontier.empty()) {
        vertex_t v = b.frontier.front();
        b.frontier.pop_front();
        expanded_vertex cur = b.info[v]; // copy: intern may reallocate info

        switch (cur.phase) {
        case reg_phase::await_move: {
            for (edge_t e : g.out[cur.position]) {
                expanded_vertex next;
                next.phase = reg_phase::await_register;
                next.position = g.edges[e].dst;
                next.pending = e;
                next.state = cur.state;
                vertex_t w = b.intern(std::move(next), owner_t::eve);
                b.game.add_edge(v, w, neutral);
            }
            break;
        }
        case reg_phase::await_register: {
            priority_t observed = g.edges[cur.pending].priority;
            for (uint32_t j : spec.registers()) {
                reg_output_result out = reg_output(spec, cur.state, j);
                if (out.instant_loss) {
                    b.game.add_edge(v, b.loss_sink(loss_sink_priority(spec.output_index)),
                                    out.output);
                    continue;
                }
                expanded_vertex next;
                next.position = cur.position;
                if (is_odd(observed)) {
                    next.phase = reg_phase::await_escalation;
                    next.pending = cur.pending;
                    next.chosen_reg = j;
                    next.state = out.next;
                    vertex_t w = b.intern(std::move(next), owner_t::eve);
                    b.game.add_edge(v, w, out.output);
                } else {
                    next.phase = reg_phase::await_move;
                    next.state = reg_update(spec, out.next, j, observed, options.reading);
                    vertex_t w = b.intern(std::move(next), g.owners[next.position]);
                    b.game.add_edge(v, w, out.output);
                }
            }
            break;
        }
        case reg_phase::await_escalation: {
            priority_t observed = g.edges[cur.pending].priority;
            for (priority_t i = observed; i <= spec.input_index.hi; i += 2) {
                expanded_vertex next;
                next.phase = reg_phase::await_move;
                next.position = cur.position;
                next.state = reg_update(spec, cur.state, cur.chosen_reg, i, options.reading);
                vertex_t w = b.intern(std::move(next), g.owners[next.position]);
                b.game.add_edge(v, w, neutral);
            }
            break;
        }
        }
    }

    priority_t hi = spec.output_index.hi;
    for (const game_edge& e : b.game.edges)
        hi = std::max(hi, e.priority);
    b.game.index = priority_index(spec.output_index.lo, hi);
    b.game.initial = 0;

    expanded_game result;
    result.game = std::move(b.game);
    result.info = std::move(b.info);
    result.sink = b.sink;
    result.game.validate();
    return result;
}

reg_solution solve_reg(const parity_game& g, const reg_spec& spec,
                       const expand_options& options) {
    reg_solution r;
    r.expansion = expand_reg(g, spec, options);
    r.solution = solve_zielonka(r.expansion.game);
    r.eve_wins = r.solution.eve_wins_initial(r.expansion.game);
    return r;
}

uint32_t default_lehtinen_registers(vertex_t num_vertices) {
    uint32_t k = 1;
    while ((1ull << (k - 1)) < num_vertices) // k-1 = ceil(log2 n)
        ++k;
    return k;
}

expanded_game expand_lehtinen(const parity_game& g, uint32_t k, uint64_t state_cap) {
    g.validate();
    if (k < 1)
        throw input_error("at least one register required");

    expansion_builder b(state_cap);
    expanded_vertex init;
    init.phase = reg_phase::await_move;
    init.position = g.initial;
    init.state.registers.assign(k, 0);
    b.intern(std::move(init), g.owners[g.initial]);

    while (!b.frontier.empty()) {
        vertex_t v = b.frontier.front();
        b.frontier.pop_front();
        expanded_vertex cur = b.info[v];

        if (cur.phase == reg_phase::await_move) {
            for (edge_t e : g.out[cur.position]) {
                expanded_vertex next;
                next.phase = reg_phase::await_register;
                next.position = g.edges[e].dst;
                next.state = cur.state;
                for (priority_t& r : next.state.registers)
                    r = std::max(r, g.edges[e].priority);
                vertex_t w = b.intern(std::move(next), owner_t::eve);
                b.game.add_edge(v, w, 1);
            }
        } else {
            // Skip: no reset, output 1.
            expanded_vertex stay;
            stay.phase = reg_phase::await_move;
            stay.position = cur.position;
            stay.state = cur.state;
            vertex_t w = b.intern(std::move(stay), g.owners[cur.position]);
            b.game.add_edge(v, w, 1);
            for (uint32_t x = 1; x <= k; ++x) {
                expanded_vertex next;
                next.phase = reg_phase::await_move;
                next.position = cur.position;
                next.state = cur.state;
                for (uint32_t i = 0; i < x; ++i)
                    next.state.registers[i] = 0;
                priority_t content = cur.state.registers[x - 1];
                vertex_t t = b.intern(std::move(next), g.owners[cur.position]);
                b.game.add_edge(v, t, is_even(content) ? 2 * x : 2 * x + 1);
            }
        }
    }

    b.game.index = priority_index(1, 2 * k + 1);
    b.game.initial = 0;

    expanded_game result;
    result.game = std::move(b.game);
    result.info = std::move(b.info);
    result.game.validate();
    return result;
}

} // namespace paritylab
