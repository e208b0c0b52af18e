// Copyright 2026 The Conga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text format for games. See docs/game-format.md for the grammar.
//
//   game "matrix"
//   var x in 1..3
//   var y in 1..3
//   var px in {0, 1}
//   player X controls x
//   player Y controls y
//   goal X table (x y px) ((1 1 0) (1 2 1) ...)
//   goal X linear px = 1
//
// Variables are numbered in declaration order and a player's variables
// keep that order, so SerializeGame followed by ParseGame reproduces the
// game with the same numbering.

#ifndef CONGA_GAMES_GAME_FILE_H_
#define CONGA_GAMES_GAME_FILE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "conga/game/game.h"

namespace conga::games {

class GameFileError : public std::runtime_error {
 public:
  // line is 1-based; 0 when the error is not tied to one line. what() reads
  // "line 3: message", or "path:3: message" when a source is given.
  GameFileError(int line, const std::string& message,
                const std::string& source = "");

  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

Game ParseGame(std::string_view text);

// Reads and parses a file. I/O failures are reported as GameFileError with
// line 0.
Game LoadGame(const std::string& path);

std::string SerializeGame(const Game& game);

}  // namespace conga::games

#endif  // CONGA_GAMES_GAME_FILE_H_
