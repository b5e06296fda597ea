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

#ifndef PARITYLAB_ERRORS_HPP
#define PARITYLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paritylab {

// Malformed or inconsistent inputs: files, specs, argument contracts.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure in a text/JSON format, with 1-based line where known.
class parse_error : public input_error {
public:
    parse_error(const std::string& msg, long line)
        : input_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Explicit resource limit hit (state caps). Never silent truncation.
class state_cap_error : public std::runtime_error {
public:
    state_cap_error(const std::string& what_exceeded, unsigned long long cap)
        : std::runtime_error(what_exceeded + ": state cap of " + std::to_string(cap) +
                             " configurations exceeded") {}
};

// Cross-checks that must agree disagreed; indicates a bug, not bad input.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace paritylab

#endif
