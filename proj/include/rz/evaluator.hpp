#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "rz/board.hpp"
#include "rz/problem.hpp"

namespace rz {

struct Evaluation {
  double value = 0.0;          // in [-1, 1] for the side to move
  std::vector<double> priors;  // aligned with the offered moves; sums to 1
};

class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual Evaluation evaluate(const Position& position, const Problem& problem, std::span<const Move> moves) const = 0;
  // Optional win rates for "win within d more moves", d = 1..N. A trained
  // faster-to-live network would fill this; the heuristic does not.
  virtual std::optional<std::vector<double>> d_win_profile(const Position&, const Problem&) const { return std::nullopt; }
};

struct MoveFeatures {
  int captured = 0;        // stones removed by the move
  int ataris = 0;          // opponent blocks left with one liberty
  bool escapes = false;    // saves an own block that was in atari
  bool crucial_adjacent = false;
  int liberties = 0;       // liberties of the resulting own block
  bool self_atari = false;
  int distance = 0;        // Manhattan distance to the nearest crucial-block stone
};

MoveFeatures move_features(const Position& position, const Problem& problem, Move move);

// Softmax over hand-weighted move features; faster heuristic wins are worth
// more through gamma^plies discounting.
class HeuristicEvaluator final : public Evaluator {
 public:
  static constexpr double kGamma = 0.98;
  static constexpr double kWinScale = 0.9;
  static constexpr double kAndPassPrior = 0.05;
  static constexpr double kOrPassPrior = 0.01;

  Evaluation evaluate(const Position& position, const Problem& problem, std::span<const Move> moves) const override;

  static double logit(const MoveFeatures& f);
  static double discounted_win(int plies) { return kWinScale * std::pow(kGamma, plies); }
  // Value for the defender: positive when it looks close to living.
  static double static_defender_value(const Position& position, const Problem& problem);
};

std::vector<double> softmax(std::span<const double> logits);

}  // namespace rz
