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

#ifndef PARITYLAB_TRANSDUCTION_HPP
#define PARITYLAB_TRANSDUCTION_HPP

#include <string>
#include <vector>

#include "core/game.hpp"
#include "core/solve.hpp"

namespace paritylab {

// The counter-reset rule at a register pick resets the columns below the
// picked register at a row naming the picked register's value; `pre` reads
// that value before the register update (rules applied in written order),
// `post` after it.
enum class reset_reading : uint8_t { pre, post };

inline const char* reset_reading_name(reset_reading r) {
    return r == reset_reading::pre ? "pre" : "post";
}
reset_reading parse_reset_reading(const std::string& s);

// Parameters of the priority transduction game: input index I, output
// index J (lowest value 1 or 2) and counter bound N. The register set is
// derived: r_j for every even 2j in J, plus r_0 exactly when 1 is in J.
struct reg_spec {
    priority_index input_index;
    priority_index output_index;
    uint32_t bound = 0;

    reg_spec(priority_index in, priority_index out, uint32_t n);

    const std::vector<uint32_t>& registers() const { return registers_; }
    const std::vector<priority_t>& odd_inputs() const { return odd_inputs_; }
    size_t register_slot(uint32_t j) const; // throws input_error if j is not a register
    size_t odd_row(priority_t p) const;

private:
    std::vector<uint32_t> registers_;
    std::vector<priority_t> odd_inputs_;
};

// Register values and the counter matrix of one configuration. Registers
// align with reg_spec::registers(); counters are row-major over
// (odd input priority, register).
struct reg_state {
    std::vector<priority_t> registers;
    std::vector<uint32_t> counters;

    bool operator==(const reg_state&) const = default;
};

reg_state initial_reg_state(const reg_spec& spec);

struct reg_output_result {
    priority_t output;
    reg_state next; // counter effects of the pick; registers untouched
    bool instant_loss;
};

// Output of picking register j:
//   j = 0                            -> 1, counters unchanged
//   registers[j] even                -> 2j, counters unchanged
//   registers[j] odd, counter at N   -> 2j+1, counter reset, instant loss
//                                       exactly when 2j+1 is outside J
//   registers[j] odd, counter below  -> 2j, counter incremented
reg_output_result reg_output(const reg_spec& spec, const reg_state& s, uint32_t j);

// Counter resets then register updates for chosen priority i at register j.
reg_state reg_update(const reg_spec& spec, const reg_state& s, uint32_t j, priority_t i,
                     reset_reading reading);

// Enforces the escalation rule: i = L(e) when L(e) is even, otherwise an
// odd i with L(e) <= i <= max(I).
void validate_escalation(const reg_spec& spec, priority_t edge_priority, priority_t i);

// One complete Eve choice (register pick plus escalation) on reading
// priority `input`; enumerated in (register, escalation) order.
struct reg_move {
    uint32_t reg;
    priority_t escalation;
    priority_t output;
    bool instant_loss;
    reg_state next; // unspecified when instant_loss
};

std::vector<reg_move> reg_moves(const reg_spec& spec, const reg_state& s, priority_t input,
                                reset_reading reading);

// Self-loop priority of the Adam-winning trap entered on an instant loss:
// 1 when 1 is in J, else 3. Outside J only when J is all-even.
priority_t loss_sink_priority(const priority_index& output_index);

struct expand_options {
    reset_reading reading = reset_reading::pre;
    uint64_t state_cap = 10'000'000;
};

enum class reg_phase : uint8_t { await_move, await_register, await_escalation };

struct expanded_vertex {
    reg_phase phase = reg_phase::await_move;
    vertex_t position = 0;
    edge_t pending = no_edge;      // base-game edge being transduced
    uint32_t chosen_reg = 0;       // await_escalation only
    reg_state state;
    bool is_sink = false;
};

struct expanded_game {
    parity_game game;
    std::vector<expanded_vertex> info;
    vertex_t sink = UINT32_MAX; // UINT32_MAX when no loss is reachable

    std::string describe(vertex_t v) const;
    std::string sidecar() const; // one "<vertex-id>\t<description>" line per vertex
};

// Lazy reachable expansion of the transduction game over g (both players
// move in g; Eve additionally picks registers and escalations). Throws
// state_cap_error beyond options.state_cap configurations.
expanded_game expand_reg(const parity_game& g, const reg_spec& spec,
                         const expand_options& options = {});

struct reg_solution {
    bool eve_wins = false; // from the initial configuration
    solve_result solution;
    expanded_game expansion;
};

reg_solution solve_reg(const parity_game& g, const reg_spec& spec,
                       const expand_options& options = {});

// Classic register game: k registers holding the maximal priority since
// their last reset; picking register x outputs 2x (even content) or 2x+1
// (odd content) and clears registers 1..x; skipping outputs 1.
expanded_game expand_lehtinen(const parity_game& g, uint32_t k, uint64_t state_cap = 10'000'000);

uint32_t default_lehtinen_registers(vertex_t num_vertices); // ceil(log2 n) + 1

} // namespace paritylab

#endif
