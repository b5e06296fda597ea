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

#include "core/automata.hpp"

#include <array>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "core/errors.hpp"

namespace paritylab {

using nlohmann::json;

std::optional<uint32_t> tree_automaton::letter_id(const std::string& name) const {
    for (uint32_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name)
            return i;
    return std::nullopt;
}

std::optional<uint32_t> tree_automaton::state_id(const std::string& name) const {
    for (uint32_t i = 0; i < states.size(); ++i)
        if (states[i] == name)
            return i;
    return std::nullopt;
}

void tree_automaton::rebuild_lookup() {
    lookup_.assign(static_cast<size_t>(num_states()) * num_letters(), {});
    for (uint32_t t = 0; t < transitions.size(); ++t) {
        const ta_transition& tr = transitions[t];
        lookup_[static_cast<size_t>(tr.from) * num_letters() + tr.letter].push_back(t);
    }
    lookup_valid_ = true;
}

const std::vector<uint32_t>& tree_automaton::transitions_from(uint32_t state,
                                                              uint32_t letter) const {
    if (!lookup_valid_)
        const_cast<tree_automaton*>(this)->rebuild_lookup();
    return lookup_[static_cast<size_t>(state) * num_letters() + letter];
}

void tree_automaton::validate() const {
    if (states.empty())
        throw input_error("automaton has no states");
    if (alphabet.empty())
        throw input_error("automaton has an empty alphabet");
    if (initial >= num_states())
        throw input_error("initial state out of range");
    std::set<std::array<uint32_t, 6>> seen;
    for (const ta_transition& t : transitions) {
        if (t.from >= num_states() || t.left >= num_states() || t.right >= num_states())
            throw input_error("transition references an unknown state");
        if (t.letter >= num_letters())
            throw input_error("transition references an unknown letter");
        if (!index.contains(t.p0) || !index.contains(t.p1))
            throw input_error("transition priority (" + std::to_string(t.p0) + ", " +
                              std::to_string(t.p1) + ") outside index " + index.str());
        std::array<uint32_t, 6> k{t.from, t.letter, t.left, t.right, t.p0, t.p1};
        if (!seen.insert(k).second)
            throw input_error("exact duplicate transition from state '" + states[t.from] +
                              "' over letter '" + alphabet[t.letter] + "'");
    }
    for (uint32_t q = 0; q < num_states(); ++q)
        for (uint32_t a = 0; a < num_letters(); ++a)
            if (transitions_from(q, a).empty())
                throw input_error("incomplete automaton: no transition from state '" +
                                  states[q] + "' over letter '" + alphabet[a] + "'");
}

void tree_automaton::complete_with_sink() {
    std::vector<std::pair<uint32_t, uint32_t>> missing;
    rebuild_lookup();
    for (uint32_t q = 0; q < num_states(); ++q)
        for (uint32_t a = 0; a < num_letters(); ++a)
            if (transitions_from(q, a).empty())
                missing.emplace_back(q, a);
    if (missing.empty())
        return;
    priority_t odd = is_odd(index.hi) ? index.hi : (index.hi > index.lo ? index.hi - 1 : 0);
    if (!index.contains(odd) || !is_odd(odd)) {
        index = priority_index(index.lo, index.hi + 1);
        odd = index.hi;
    }
    std::string name = "reject_sink";
    while (state_id(name))
        name += "_";
    states.push_back(name);
    uint32_t sink = num_states() - 1;
    for (auto [q, a] : missing)
        transitions.push_back({q, a, sink, sink, odd, odd});
    for (uint32_t a = 0; a < num_letters(); ++a)
        transitions.push_back({sink, a, sink, sink, odd, odd});
    rebuild_lookup();
}

uint32_t regular_tree::node_at(const std::vector<int>& word) const {
    uint32_t n = root;
    for (int d : word)
        n = succ(n, d);
    return n;
}

void regular_tree::validate() const {
    if (labels.empty())
        throw input_error("tree has no nodes");
    if (root >= num_nodes())
        throw input_error("tree root out of range");
    for (uint32_t n = 0; n < num_nodes(); ++n)
        if (succ0[n] >= num_nodes() || succ1[n] >= num_nodes())
            throw input_error("tree node '" + node_names[n] + "' has a dangling successor");
}

bool trees_equal(const regular_tree& a, const regular_tree& b) {
    a.validate();
    b.validate();
    std::unordered_set<uint64_t> seen;
    std::deque<std::pair<uint32_t, uint32_t>> todo{{a.root, b.root}};
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop_front();
        uint64_t key = (static_cast<uint64_t>(x) << 32) | y;
        if (!seen.insert(key).second)
            continue;
        if (a.labels[x] != b.labels[y])
            return false;
        todo.emplace_back(a.succ0[x], b.succ0[y]);
        todo.emplace_back(a.succ1[x], b.succ1[y]);
    }
    return true;
}

namespace {

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw parse_error(std::string("malformed JSON in ") + what, -1);
    return j;
}

const json& field(const json& j, const char* name, const char* what) {
    auto it = j.find(name);
    if (it == j.end())
        throw input_error(std::string(what) + ": missing field '" + name + "'");
    return *it;
}

} // namespace

tree_automaton parse_automaton(const std::string& text, bool auto_complete) {
    json j = parse_json(text, "automaton file");
    tree_automaton a;

    for (const json& s : field(j, "alphabet", "automaton")) {
        std::string name = s.get<std::string>();
        if (a.letter_id(name))
            throw input_error("duplicate letter '" + name + "'");
        a.alphabet.push_back(name);
    }
    for (const json& s : field(j, "states", "automaton")) {
        std::string name = s.get<std::string>();
        if (a.state_id(name))
            throw input_error("duplicate state '" + name + "'");
        a.states.push_back(name);
    }
    const json& idx = field(j, "index", "automaton");
    if (!idx.is_array() || idx.size() != 2)
        throw input_error("automaton index must be [lo, hi]");
    a.index = priority_index(idx[0].get<priority_t>(), idx[1].get<priority_t>());

    std::string init = field(j, "initial", "automaton").get<std::string>();
    auto iid = a.state_id(init);
    if (!iid)
        throw input_error("initial state '" + init + "' is not declared");
    a.initial = *iid;

    for (const json& t : field(j, "transitions", "automaton")) {
        ta_transition tr;
        auto resolve_state = [&](const char* f) {
            std::string name = field(t, f, "transition").get<std::string>();
            auto id = a.state_id(name);
            if (!id)
                throw input_error("transition references unknown state '" + name + "'");
            return *id;
        };
        tr.from = resolve_state("from");
        std::string letter = field(t, "letter", "transition").get<std::string>();
        auto lid = a.letter_id(letter);
        if (!lid)
            throw input_error("transition references unknown letter '" + letter + "'");
        tr.letter = *lid;
        tr.left = resolve_state("left");
        tr.right = resolve_state("right");
        tr.p0 = field(t, "p0", "transition").get<priority_t>();
        tr.p1 = field(t, "p1", "transition").get<priority_t>();
        a.transitions.push_back(tr);
    }
    if (auto_complete)
        a.complete_with_sink();
    a.rebuild_lookup();
    a.validate();
    return a;
}

std::string serialize_automaton(const tree_automaton& a, const std::string& provenance_json) {
    json j;
    j["alphabet"] = a.alphabet;
    j["states"] = a.states;
    j["initial"] = a.states[a.initial];
    j["index"] = {a.index.lo, a.index.hi};
    json ts = json::array();
    for (const ta_transition& t : a.transitions)
        ts.push_back({{"from", a.states[t.from]},
                      {"letter", a.alphabet[t.letter]},
                      {"left", a.states[t.left]},
                      {"right", a.states[t.right]},
                      {"p0", t.p0},
                      {"p1", t.p1}});
    j["transitions"] = ts;
    if (!provenance_json.empty())
        j["provenance"] = json::parse(provenance_json);
    return j.dump(2) + "\n";
}

regular_tree parse_tree(const std::string& text) {
    json j = parse_json(text, "tree file");
    regular_tree t;
    std::unordered_map<std::string, uint32_t> ids;
    const json& nodes = field(j, "nodes", "tree");
    for (const json& n : nodes) {
        std::string id = field(n, "id", "tree node").get<std::string>();
        if (ids.count(id))
            throw input_error("duplicate tree node id '" + id + "'");
        ids[id] = static_cast<uint32_t>(t.node_names.size());
        t.node_names.push_back(id);
        t.labels.push_back(field(n, "label", "tree node").get<std::string>());
    }
    auto resolve = [&](const json& n, const char* f) {
        std::string id = field(n, f, "tree node").get<std::string>();
        auto it = ids.find(id);
        if (it == ids.end())
            throw input_error("tree successor references unknown node '" + id + "'");
        return it->second;
    };
    for (const json& n : nodes) {
        t.succ0.push_back(resolve(n, "succ0"));
        t.succ1.push_back(resolve(n, "succ1"));
    }
    std::string root = field(j, "root", "tree").get<std::string>();
    auto rit = ids.find(root);
    if (rit == ids.end())
        throw input_error("tree root '" + root + "' is not declared");
    t.root = rit->second;
    t.validate();
    return t;
}

std::string serialize_tree(const regular_tree& t) {
    json j;
    json nodes = json::array();
    for (uint32_t n = 0; n < t.num_nodes(); ++n)
        nodes.push_back({{"id", t.node_names[n]},
                         {"label", t.labels[n]},
                         {"succ0", t.node_names[t.succ0[n]]},
                         {"succ1", t.node_names[t.succ1[n]]}});
    j["nodes"] = nodes;
    j["root"] = t.node_names[t.root];
    return j.dump(2) + "\n";
}

} // namespace paritylab
