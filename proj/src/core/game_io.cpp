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

#include "core/game_io.hpp"

#include <cctype>
#include <sstream>

#include "core/errors.hpp"

namespace paritylab {

namespace {

struct cursor {
    const std::string& s;
    size_t pos = 0;
    long line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            throw parse_error(std::string("expected '") + c + "' " + what, line);
    }

    uint64_t number(const char* what) {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw parse_error(std::string("expected ") + what, line);
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<uint64_t>(s[pos] - '0');
            if (v > 0xffffffffull)
                throw parse_error(std::string(what) + " out of range", line);
            ++pos;
        }
        return v;
    }

    bool keyword(const char* kw) {
        skip_ws();
        size_t n = std::string(kw).size();
        if (s.compare(pos, n, kw) == 0) {
            pos += n;
            return true;
        }
        return false;
    }

    void end_of_statement() {
        expect(';', "at end of statement");
        skip_ws();
        if (pos < s.size())
            throw parse_error("trailing characters after ';'", line);
    }
};

std::string strip_comment(const std::string& line) {
    size_t h = line.find('#');
    std::string r = (h == std::string::npos) ? line : line.substr(0, h);
    if (!r.empty() && r.back() == '\r')
        r.pop_back();
    return r;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t')
            return false;
    return true;
}

} // namespace

parity_game parse_game(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    long line_no = 0;

    parity_game g;
    bool have_header = false;
    vertex_t max_id = 0;
    std::vector<bool> declared;
    // Edges are collected per declaration and inserted in file order once
    // all vertices are known.
    struct decl {
        vertex_t id;
        long line;
        std::vector<std::pair<vertex_t, priority_t>> succs;
    };
    std::vector<decl> decls;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string stmt = strip_comment(raw);
        if (blank(stmt))
            continue;
        cursor c{stmt, 0, line_no};

        if (!have_header) {
            if (!c.keyword("paritygame"))
                throw parse_error("expected 'paritygame' header", line_no);
            uint64_t mv = c.number("max vertex id");
            uint64_t lo = c.number("index lo");
            uint64_t hi = c.number("index hi");
            uint64_t init = c.number("initial vertex id");
            c.end_of_statement();
            if (lo > hi)
                throw parse_error("index lo exceeds index hi", line_no);
            max_id = static_cast<vertex_t>(mv);
            if (init > mv)
                throw parse_error("initial vertex " + std::to_string(init) +
                                      " exceeds max vertex id",
                                  line_no);
            g.index = priority_index(static_cast<priority_t>(lo), static_cast<priority_t>(hi));
            g.initial = static_cast<vertex_t>(init);
            g.owners.assign(max_id + 1, owner_t::adam);
            g.out.resize(max_id + 1);
            declared.assign(max_id + 1, false);
            have_header = true;
            continue;
        }

        decl d;
        d.line = line_no;
        uint64_t id = c.number("vertex id");
        if (id > max_id)
            throw parse_error("vertex id " + std::to_string(id) + " exceeds max vertex id " +
                                  std::to_string(max_id),
                              line_no);
        d.id = static_cast<vertex_t>(id);
        if (declared[d.id])
            throw parse_error("vertex " + std::to_string(id) + " declared twice", line_no);
        declared[d.id] = true;

        c.skip_ws();
        owner_t o;
        if (c.eat('E'))
            o = owner_t::eve;
        else if (c.eat('A'))
            o = owner_t::adam;
        else
            throw parse_error("expected owner 'E' or 'A'", line_no);
        g.owners[d.id] = o;
        c.expect(':', "after owner");

        do {
            uint64_t dst = c.number("successor vertex id");
            c.expect('@', "between successor and priority");
            uint64_t pri = c.number("priority");
            if (dst > max_id)
                throw parse_error("dangling reference to vertex " + std::to_string(dst),
                                  line_no);
            if (!g.index.contains(static_cast<priority_t>(pri)))
                throw parse_error("priority " + std::to_string(pri) + " outside index " +
                                      g.index.str(),
                                  line_no);
            d.succs.emplace_back(static_cast<vertex_t>(dst), static_cast<priority_t>(pri));
        } while (c.eat(','));
        c.end_of_statement();

        if (d.succs.empty())
            throw parse_error("vertex " + std::to_string(id) + " has no successors", line_no);
        decls.push_back(std::move(d));
    }

    if (!have_header)
        throw parse_error("missing 'paritygame' header", line_no > 0 ? line_no : 1);
    for (vertex_t v = 0; v <= max_id; ++v)
        if (!declared[v])
            throw parse_error("vertex " + std::to_string(v) +
                                  " is never declared (dead end)",
                              line_no);

    for (const decl& d : decls)
        for (auto [dst, pri] : d.succs)
            g.add_edge(d.id, dst, pri);
    g.validate();
    return g;
}

std::string serialize_game(const parity_game& g) {
    std::ostringstream out;
    out << "paritygame " << (g.num_vertices() - 1) << ' ' << g.index.lo << ' ' << g.index.hi
        << ' ' << g.initial << ";\n";
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        out << v << ' ' << owner_letter(g.owners[v]) << ':';
        bool first = true;
        for (edge_t eid : g.out[v]) {
            const game_edge& e = g.edges[eid];
            out << (first ? " " : ",") << e.dst << '@' << e.priority;
            first = false;
        }
        out << ";\n";
    }
    return out.str();
}

} // namespace paritylab
