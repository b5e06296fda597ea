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

#ifndef PARITYLAB_GAME_IO_HPP
#define PARITYLAB_GAME_IO_HPP

#include <string>

#include "core/game.hpp"

namespace paritylab {

// Game file format, one `;`-terminated statement per line, `#` comments:
//   paritygame <max-vertex-id> <index-lo> <index-hi> <initial-vertex-id>;
//   <id> <owner>: <dst>@<priority>(,<dst>@<priority>)*;
// with owner E or A. Vertex and edge order are preserved.
parity_game parse_game(const std::string& text);

std::string serialize_game(const parity_game& g);

} // namespace paritylab

#endif
