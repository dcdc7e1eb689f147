#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclegame/strategy.hpp"

namespace cyclegame {

inline constexpr long long kDefaultMaxCells = 10'000'000;

// The normal form of a game anchored at its initial vertex: one outcome per
// situation, stored densely. Cells are addressed by a tuple of 0-based
// strategy indices (player i's index into axes[i-1], following the
// enumerate_strategies order); the flat layout varies player 1 fastest.
struct NormalForm {
  std::vector<std::vector<Strategy>> axes;
  std::vector<int> dims;
  std::vector<long long> strides;
  std::vector<Outcome> cells;
  int num_outcomes = 0;

  long long size() const { return static_cast<long long>(cells.size()); }
  long long flat_index(std::span<const int> tuple) const;
  std::vector<int> tuple_at(long long flat) const;
  Situation situation_at(std::span<const int> tuple) const;
};

// Resolves every situation from the initial vertex. Throws SizeLimitError
// ("normal form too large") when the situation count exceeds max_cells, and
// std::invalid_argument when the game has no initial vertex.
NormalForm build_normal_form(const GameForm& game, long long max_cells = kDefaultMaxCells);

// Improver sets as player bitmasks (bit i-1 for player i) rendered as
// concatenated digits, e.g. "234"; empty for an empty set.
std::string improvers_digits(uint32_t mask);

// One row per situation in flat order: s1,...,sn (1-based strategy indices),
// outcome, improvers. The improvers column is blank unless labels are given.
std::string normal_form_csv(const GameForm& game, const NormalForm& nf,
                            const std::vector<uint32_t>* labels = nullptr);

// Grid view: rows nest the odd players (higher outside, player 1 innermost),
// columns nest the even players. For four players this gives outer rows s3,
// inner rows s1, outer column blocks s4, inner columns s2. Cells show the
// outcome name with improvers appended as ^digits.
std::string normal_form_markdown(const GameForm& game, const NormalForm& nf,
                                 const std::vector<uint32_t>* labels = nullptr);

}  // namespace cyclegame
