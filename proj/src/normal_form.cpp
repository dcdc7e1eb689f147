#include "cyclegame/normal_form.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

#include "cyclegame/errors.hpp"

namespace cyclegame {

long long NormalForm::flat_index(std::span<const int> tuple) const {
  long long flat = 0;
  for (size_t i = 0; i < dims.size(); ++i) flat += tuple[i] * strides[i];
  return flat;
}

std::vector<int> NormalForm::tuple_at(long long flat) const {
  std::vector<int> tuple(dims.size());
  for (size_t i = 0; i < dims.size(); ++i) {
    tuple[i] = static_cast<int>(flat % dims[i]);
    flat /= dims[i];
  }
  return tuple;
}

Situation NormalForm::situation_at(std::span<const int> tuple) const {
  Situation s;
  s.reserve(axes.size());
  for (size_t i = 0; i < axes.size(); ++i) s.push_back(axes[i][tuple[i]]);
  return s;
}

NormalForm build_normal_form(const GameForm& game, long long max_cells) {
  if (!game.has_initial()) {
    throw std::invalid_argument("game has no initial position");
  }
  unsigned __int128 wide = 1;
  for (int player = 1; player <= game.num_players(); ++player) {
    wide *= static_cast<unsigned __int128>(strategy_count(game, player));
  }
  long long total =
      wide > static_cast<unsigned __int128>(LLONG_MAX) ? LLONG_MAX : static_cast<long long>(wide);
  if (total > max_cells) {
    throw SizeLimitError("normal form too large", total, max_cells);
  }

  NormalForm nf;
  nf.num_outcomes = game.num_outcomes();
  long long stride = 1;
  for (int player = 1; player <= game.num_players(); ++player) {
    nf.axes.push_back(enumerate_strategies(game, player));
    nf.dims.push_back(static_cast<int>(nf.axes.back().size()));
    nf.strides.push_back(stride);
    stride *= nf.dims.back();
  }
  nf.cells.resize(static_cast<size_t>(total));

  std::vector<int> tuple(nf.dims.size(), 0);
  std::vector<int> next(game.num_vertices(), -1);
  std::vector<int> at(game.num_vertices());
  std::vector<int> touched;
  for (long long flat = 0; flat < total; ++flat) {
    for (size_t i = 0; i < nf.axes.size(); ++i) {
      for (const auto& [position, successor] : nf.axes[i][tuple[i]].moves) {
        next[position] = successor;
      }
    }
    // Inline walk from the initial vertex; `at` entries are reset afterwards
    // so the buffers carry over between cells.
    int cur = game.initial();
    touched.clear();
    Outcome outcome;
    while (true) {
      if (game.is_terminal(cur)) {
        outcome = game.outcome_at(cur);
        break;
      }
      if (at[cur] > 0) {
        outcome = Outcome::cycle();
        break;
      }
      at[cur] = 1;
      touched.push_back(cur);
      cur = next[cur];
    }
    for (int v : touched) at[v] = 0;
    nf.cells[static_cast<size_t>(flat)] = outcome;

    for (size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < nf.dims[i]) break;
      tuple[i] = 0;
    }
  }
  return nf;
}

std::string improvers_digits(uint32_t mask) {
  std::string out;
  for (int player = 1; player <= 32; ++player) {
    if ((mask >> (player - 1)) & 1) out += std::to_string(player);
  }
  return out;
}

namespace {

std::string cell_text(const GameForm& game, const NormalForm& nf, long long flat,
                      const std::vector<uint32_t>* labels) {
  std::string text = game.outcome_name(nf.cells[static_cast<size_t>(flat)]);
  if (labels && (*labels)[static_cast<size_t>(flat)] != 0) {
    text += "^" + improvers_digits((*labels)[static_cast<size_t>(flat)]);
  }
  return text;
}

}  // namespace

std::string normal_form_csv(const GameForm& game, const NormalForm& nf,
                            const std::vector<uint32_t>* labels) {
  std::ostringstream out;
  for (size_t i = 0; i < nf.dims.size(); ++i) out << "s" << i + 1 << ",";
  out << "outcome,improvers\n";
  std::vector<int> tuple(nf.dims.size(), 0);
  for (long long flat = 0; flat < nf.size(); ++flat) {
    for (int k : tuple) out << k + 1 << ",";
    out << game.outcome_name(nf.cells[static_cast<size_t>(flat)]) << ",";
    if (labels) out << improvers_digits((*labels)[static_cast<size_t>(flat)]);
    out << "\n";
    for (size_t i = 0; i < tuple.size(); ++i) {
      if (++tuple[i] < nf.dims[i]) break;
      tuple[i] = 0;
    }
  }
  return out.str();
}

std::string normal_form_markdown(const GameForm& game, const NormalForm& nf,
                                 const std::vector<uint32_t>* labels) {
  int n = static_cast<int>(nf.dims.size());
  std::vector<int> row_players, col_players;  // outermost first, 1-based
  for (int player = n; player >= 1; --player) {
    (player % 2 == 1 ? row_players : col_players).push_back(player);
  }

  auto block_tuples = [&](const std::vector<int>& players) {
    // All index tuples over the given players, outermost varying slowest.
    std::vector<std::vector<int>> out{{}};
    for (int player : players) {
      std::vector<std::vector<int>> grown;
      for (const auto& prefix : out) {
        for (int k = 0; k < nf.dims[player - 1]; ++k) {
          auto copy = prefix;
          copy.push_back(k);
          grown.push_back(std::move(copy));
        }
      }
      out = std::move(grown);
    }
    return out;
  };
  auto heading = [&](const std::vector<int>& players, const std::vector<int>& tuple) {
    std::string text;
    for (size_t i = 0; i < players.size(); ++i) {
      if (!text.empty()) text += " ";
      text += "s" + std::to_string(players[i]) + "_" + std::to_string(tuple[i] + 1);
    }
    return text.empty() ? "-" : text;
  };

  std::ostringstream out;
  out << "strategies\n\n";
  for (int player = 1; player <= n; ++player) {
    for (int k = 0; k < nf.dims[player - 1]; ++k) {
      out << "- s" << player << "_" << k + 1 << ":";
      for (const auto& [position, successor] : nf.axes[player - 1][k].moves) {
        out << " " << game.name(position) << "->" << game.name(successor);
      }
      if (nf.axes[player - 1][k].moves.empty()) out << " (no positions)";
      out << "\n";
    }
  }
  out << "\n";

  std::vector<std::vector<int>> rows = block_tuples(row_players);
  std::vector<std::vector<int>> cols = block_tuples(col_players);
  out << "| |";
  for (const auto& col : cols) out << " " << heading(col_players, col) << " |";
  out << "\n|---|";
  for (size_t i = 0; i < cols.size(); ++i) out << "---|";
  out << "\n";
  std::vector<int> tuple(nf.dims.size(), 0);
  for (const auto& row : rows) {
    out << "| " << heading(row_players, row) << " |";
    for (const auto& col : cols) {
      for (size_t i = 0; i < row_players.size(); ++i) tuple[row_players[i] - 1] = row[i];
      for (size_t i = 0; i < col_players.size(); ++i) tuple[col_players[i] - 1] = col[i];
      out << " " << cell_text(game, nf, nf.flat_index(tuple), labels) << " |";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace cyclegame
