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

#include "paritylab/paritylab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/game_io.hpp"
#include "core/generators.hpp"
#include "core/guidance.hpp"
#include "core/synthesis.hpp"

using nlohmann::json;
using namespace paritylab;

struct pl_game {
    parity_game g;
};
struct pl_aut {
    tree_automaton a;
};
struct pl_tree {
    regular_tree t;
};
struct pl_guide {
    guiding_function g;
    tree_automaton a; // bound copies: the table indexes their transitions
    tree_automaton b;
};

namespace {

thread_local std::string g_last_error = "ok";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn> pl_status guard(Fn&& fn) {
    try {
        fn();
        return PL_OK;
    } catch (const state_cap_error& e) {
        g_last_error = e.what();
        return PL_ERR_CAP;
    } catch (const internal_error& e) {
        g_last_error = e.what();
        return PL_ERR_INTERNAL;
    } catch (const input_error& e) {
        g_last_error = e.what();
        return PL_ERR_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PL_ERR_INPUT;
    }
}

json region_json(const solve_result& r) {
    json eve = json::array(), adam = json::array();
    for (vertex_t v = 0; v < r.eve_wins.size(); ++v)
        (r.eve_wins[v] ? eve : adam).push_back(v);
    return {{"eve", eve}, {"adam", adam}};
}

json strategy_json(const strategy& s) {
    json out = json::object();
    for (vertex_t v = 0; v < s.choice.size(); ++v)
        if (s.choice[v] != no_edge)
            out[std::to_string(v)] = s.choice[v];
    return out;
}

reset_reading reading_of(const char* s) {
    return parse_reset_reading(s ? s : "pre");
}

json tree_doc(const regular_tree& t) { return json::parse(serialize_tree(t)); }

} // namespace

extern "C" {

const char* pl_last_error(void) { return g_last_error.c_str(); }

void pl_string_free(char* s) { ::free(s); }
void pl_game_free(pl_game* g) { delete g; }
void pl_aut_free(pl_aut* a) { delete a; }
void pl_tree_free(pl_tree* t) { delete t; }
void pl_guide_free(pl_guide* g) { delete g; }

pl_status pl_game_parse(const char* text, pl_game** out) {
    return guard([&] { *out = new pl_game{parse_game(text ? text : "")}; });
}

pl_status pl_game_serialize(const pl_game* g, char** out) {
    return guard([&] { *out = dup_string(serialize_game(g->g)); });
}

pl_status pl_aut_parse(const char* text, int auto_complete, pl_aut** out) {
    return guard(
        [&] { *out = new pl_aut{parse_automaton(text ? text : "", auto_complete != 0)}; });
}

pl_status pl_aut_serialize(const pl_aut* a, const char* provenance_json, char** out) {
    return guard([&] {
        *out = dup_string(
            serialize_automaton(a->a, provenance_json ? provenance_json : ""));
    });
}

pl_status pl_tree_parse(const char* text, pl_tree** out) {
    return guard([&] { *out = new pl_tree{parse_tree(text ? text : "")}; });
}

pl_status pl_tree_serialize(const pl_tree* t, char** out) {
    return guard([&] { *out = dup_string(serialize_tree(t->t)); });
}

pl_status pl_guide_parse(const char* text, const pl_aut* a, const pl_aut* b, pl_guide** out) {
    return guard([&] {
        *out = new pl_guide{parse_guide(text ? text : "", a->a, b->a), a->a, b->a};
    });
}

pl_status pl_guide_serialize(const pl_guide* g, char** out) {
    return guard([&] { *out = dup_string(serialize_guide(g->g, g->a, g->b)); });
}

pl_status pl_solve(const pl_game* g, const char* solver, char** report_json) {
    std::string kind = solver ? solver : "zielonka";
    bool mismatch = false;
    pl_status st = guard([&] {
        json rep;
        rep["vertices"] = g->g.num_vertices();
        rep["edges"] = g->g.num_edges();
        if (kind == "zielonka" || kind == "both") {
            solve_result r = solve_zielonka(g->g);
            rep["zielonka"] = {{"winner", r.eve_wins_initial(g->g) ? "eve" : "adam"},
                               {"regions", region_json(r)},
                               {"eve_strategy", strategy_json(r.eve_strategy)},
                               {"adam_strategy", strategy_json(r.adam_strategy)}};
        }
        if (kind == "spm" || kind == "both") {
            solve_result r = solve_progress_measures(g->g);
            rep["spm"] = {{"winner", r.eve_wins_initial(g->g) ? "eve" : "adam"},
                          {"regions", region_json(r)},
                          {"eve_strategy", strategy_json(r.eve_strategy)},
                          {"adam_strategy", strategy_json(r.adam_strategy)}};
        }
        if (kind == "both") {
            // Structural diff of the two partitions.
            json diff = json::array();
            auto eve_z = rep["zielonka"]["regions"]["eve"];
            auto eve_s = rep["spm"]["regions"]["eve"];
            if (eve_z != eve_s) {
                for (const auto& v : eve_z)
                    if (std::find(eve_s.begin(), eve_s.end(), v) == eve_s.end())
                        diff.push_back(v);
                for (const auto& v : eve_s)
                    if (std::find(eve_z.begin(), eve_z.end(), v) == eve_z.end())
                        diff.push_back(v);
            }
            rep["partition_diff"] = diff;
            mismatch = !diff.empty();
        } else if (kind != "zielonka" && kind != "spm") {
            throw input_error("unknown solver '" + kind + "'");
        }
        rep["winner"] = (kind == "spm" ? rep["spm"] : rep["zielonka"])["winner"];
        *report_json = dup_string(rep.dump(2));
    });
    if (st != PL_OK)
        return st;
    if (mismatch) {
        g_last_error = "solver partitions disagree";
        return PL_ERR_INTERNAL;
    }
    return PL_OK;
}

pl_status pl_reg_solve(const pl_game* g, uint32_t j_lo, uint32_t j_hi, uint32_t n,
                       const char* reset, uint64_t state_cap, char** report_json,
                       pl_game** expansion_out, char** sidecar_out) {
    return guard([&] {
        reg_spec spec(g->g.index, priority_index(j_lo, j_hi), n);
        expand_options opt;
        opt.reading = reading_of(reset);
        if (state_cap)
            opt.state_cap = state_cap;
        reg_solution sol = solve_reg(g->g, spec, opt);
        json rep;
        rep["winner"] = sol.eve_wins ? "eve" : "adam";
        rep["configurations"] = sol.expansion.game.num_vertices();
        rep["output_index"] = {j_lo, j_hi};
        rep["bound"] = n;
        rep["reset_reading"] = reset_reading_name(opt.reading);
        if (report_json)
            *report_json = dup_string(rep.dump(2));
        if (expansion_out)
            *expansion_out = new pl_game{sol.expansion.game};
        if (sidecar_out)
            *sidecar_out = dup_string(sol.expansion.sidecar());
    });
}

pl_status pl_lehtinen_solve(const pl_game* g, uint32_t k, uint64_t state_cap,
                            char** report_json) {
    return guard([&] {
        uint32_t registers = k ? k : default_lehtinen_registers(g->g.num_vertices());
        expanded_game eg = expand_lehtinen(g->g, registers, state_cap ? state_cap : 10'000'000);
        bool eve = solve_zielonka(eg.game).eve_wins_initial(eg.game);
        bool plain = solve_zielonka(g->g).eve_wins_initial(g->g);
        json rep;
        rep["registers"] = registers;
        rep["winner"] = eve ? "eve" : "adam";
        rep["plain_winner"] = plain ? "eve" : "adam";
        rep["agrees_with_plain"] = eve == plain;
        rep["configurations"] = eg.game.num_vertices();
        *report_json = dup_string(rep.dump(2));
    });
}

pl_status pl_membership(const pl_aut* a, const pl_tree* t, int* accepted) {
    return guard([&] { *accepted = membership(a->a, t->t) ? 1 : 0; });
}

pl_status pl_is_empty(const pl_aut* a, int* empty, pl_tree** witness_out) {
    return guard([&] {
        emptiness_result r = is_empty(a->a);
        *empty = r.empty ? 1 : 0;
        if (witness_out)
            *witness_out = r.witness ? new pl_tree{std::move(*r.witness)} : nullptr;
    });
}

pl_status pl_acceptance_game(const pl_aut* a, const pl_tree* t, pl_game** out) {
    return guard([&] { *out = new pl_game{acceptance_game(a->a, t->t).game}; });
}

pl_status pl_compose(const pl_aut* a, uint32_t j_lo, uint32_t j_hi, uint32_t n,
                     const char* reset, uint64_t state_cap, pl_aut** out) {
    return guard([&] {
        reg_spec spec(a->a.index, priority_index(j_lo, j_hi), n);
        expand_options opt;
        opt.reading = reading_of(reset);
        if (state_cap)
            opt.state_cap = state_cap;
        *out = new pl_aut{compose(a->a, spec, opt).automaton};
    });
}

pl_status pl_probe(const pl_aut* a, uint32_t j_lo, uint32_t j_hi, const pl_tree* const* trees,
                   size_t n_trees, uint32_t n_max, const char* reset, uint64_t state_cap,
                   unsigned threads, char** report_json) {
    return guard([&] {
        std::vector<regular_tree> corpus;
        for (size_t i = 0; i < n_trees; ++i)
            corpus.push_back(trees[i]->t);
        expand_options opt;
        opt.reading = reading_of(reset);
        if (state_cap)
            opt.state_cap = state_cap;
        probe_report r =
            probe_bound(a->a, priority_index(j_lo, j_hi), corpus, n_max, opt, threads);
        json rep;
        rep["least_agreeing_n"] = r.least_agreeing_n;
        rep["fatal"] = r.fatal;
        rep["fatal_notes"] = r.fatal_notes;
        rep["anomalies"] = r.anomalies;
        rep["membership"] = r.membership;
        json matrix = json::array();
        for (uint32_t nn = 0; nn < r.eve_wins.size(); ++nn) {
            json row;
            row["n"] = nn;
            row["eve_wins"] = r.eve_wins[nn];
            json agree = json::array();
            for (size_t i = 0; i < corpus.size(); ++i)
                agree.push_back(r.eve_wins[nn][i] == r.membership[i]);
            row["agree"] = agree;
            matrix.push_back(row);
        }
        rep["matrix"] = matrix;
        *report_json = dup_string(rep.dump(2));
    });
}

pl_status pl_guide_apply(const pl_aut* a, const pl_aut* b, const pl_guide* g,
                         const pl_tree* t, char** report_json) {
    return guard([&] {
        acceptance_game_result ag = acceptance_game(b->a, t->t);
        solve_result sr = solve_zielonka(ag.game);
        if (!sr.eve_wins_initial(ag.game))
            throw input_error("tree is not accepted by the guiding automaton");
        regular_run rho_b = run_game(b->a, t->t, sr.eve_strategy);
        guided_run rho_a = guide_run(a->a, b->a, g->g, rho_b);
        even_check ec = is_even_graph(project_priorities(rho_a.run));
        json rep;
        rep["guided_nodes"] = rho_a.run.num_nodes();
        rep["guiding_nodes"] = rho_b.num_nodes();
        rep["guided_accepting"] = ec.even;
        json labels = json::array();
        for (uint32_t node = 0; node < rho_a.run.num_nodes(); ++node)
            labels.push_back(rho_a.run.labels[node]);
        rep["guided_labels"] = labels;
        *report_json = dup_string(rep.dump(2));
    });
}

pl_status pl_guide_preserve(const pl_aut* a, const pl_aut* b, const pl_guide* g,
                            const pl_tree* const* trees, size_t n_trees, unsigned threads,
                            char** report_json) {
    return guard([&] {
        std::vector<regular_tree> corpus;
        for (size_t i = 0; i < n_trees; ++i)
            corpus.push_back(trees[i]->t);
        preservation_report r = check_preservation(a->a, b->a, g->g, corpus, threads);
        json rep;
        rep["ok"] = r.ok;
        rep["trees_checked"] = r.trees_checked;
        json vio = json::array();
        for (const preservation_violation& v : r.violations) {
            json w;
            w["tree"] = v.tree_index;
            w["witness_prefix"] = v.witness.prefix;
            w["witness_cycle"] = v.witness.cycle;
            vio.push_back(w);
        }
        rep["violations"] = vio;
        *report_json = dup_string(rep.dump(2));
    });
}

pl_status pl_guide_pump(const pl_aut* a, const pl_aut* b, const pl_guide* g, const pl_tree* t,
                        char** report_json) {
    return guard([&] {
        acceptance_game_result ag = acceptance_game(b->a, t->t);
        solve_result sr = solve_zielonka(ag.game);
        if (!sr.eve_wins_initial(ag.game))
            throw input_error("tree is not accepted by the guiding automaton");
        regular_run rho_b = run_game(b->a, t->t, sr.eve_strategy);
        guided_run rho_a = guide_run(a->a, b->a, g->g, rho_b);
        pump_report r = pump_check(rho_a, rho_b);
        json rep;
        rep["ok"] = r.ok;
        rep["states_explored"] = r.states_explored;
        json vio = json::array();
        for (const pump_violation& v : r.violations)
            vio.push_back({{"start_node", v.start_node},
                           {"access", v.access},
                           {"segment", v.segment},
                           {"b_max", v.b_max},
                           {"a_max", v.a_max}});
        rep["violations"] = vio;
        *report_json = dup_string(rep.dump(2));
    });
}

pl_status pl_gen_game(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                      uint32_t out_degree, pl_game** out) {
    return guard([&] {
        gen_spec spec;
        spec.seed = seed;
        spec.size = size;
        spec.index = priority_index(pri_lo, pri_hi);
        if (out_degree)
            spec.out_degree = out_degree;
        *out = new pl_game{gen_game(spec)};
    });
}

pl_status pl_gen_lasso(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                       int parity, pl_game** out) {
    return guard([&] {
        gen_spec spec;
        spec.seed = seed;
        spec.size = size;
        spec.index = priority_index(pri_lo, pri_hi);
        *out = new pl_game{gen_lasso(spec, parity)};
    });
}

pl_status pl_gen_automaton(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                           uint32_t out_degree, pl_aut** out) {
    return guard([&] {
        gen_spec spec;
        spec.seed = seed;
        spec.size = size;
        spec.index = priority_index(pri_lo, pri_hi);
        if (out_degree)
            spec.out_degree = out_degree;
        *out = new pl_aut{gen_automaton(spec)};
    });
}

pl_status pl_gen_tree(uint64_t seed, uint32_t size, pl_tree** out) {
    return guard([&] {
        gen_spec spec;
        spec.seed = seed;
        spec.size = size;
        *out = new pl_tree{gen_tree(spec)};
    });
}

pl_status pl_gen_pair(uint64_t seed, uint32_t size, uint32_t pri_lo, uint32_t pri_hi,
                      pl_aut** a_out, pl_aut** b_out, char** guide_json_out,
                      char** corpus_json_out) {
    return guard([&] {
        gen_spec spec;
        spec.seed = seed;
        spec.size = size;
        spec.index = priority_index(pri_lo, pri_hi);
        guided_pair pair = gen_guided_pair(spec);
        if (guide_json_out)
            *guide_json_out = dup_string(serialize_guide(pair.guide, pair.a, pair.b));
        if (corpus_json_out) {
            json corpus = json::array();
            for (const regular_tree& t : pair.corpus)
                corpus.push_back(tree_doc(t));
            *corpus_json_out = dup_string(corpus.dump(2));
        }
        if (a_out)
            *a_out = new pl_aut{std::move(pair.a)};
        if (b_out)
            *b_out = new pl_aut{std::move(pair.b)};
    });
}

} // extern "C"
