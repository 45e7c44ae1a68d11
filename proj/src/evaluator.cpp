#include "rz/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace rz {

std::vector<double> softmax(std::span<const double> logits) {
  std::vector<double> out(logits.size(), 0.0);
  if (logits.empty()) return out;
  const double hi = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) sum += out[i] = std::exp(logits[i] - hi);
  for (double& p : out) p /= sum;
  return out;
}

namespace {

PointSet crucial_block_stones(const Position& position, const Problem& problem) {
  PointSet stones;
  (problem.crucial & position.stones_of(problem.defender)).for_each([&](int c) {
    if (!stones.test(c)) stones |= flood_block(position.grid(), position.geometry(), c);
  });
  return stones;
}

}  // namespace

MoveFeatures move_features(const Position& position, const Problem& problem, Move move) {
  MoveFeatures f;
  if (move.is_pass()) return f;
  const Geometry& geo = position.geometry();
  const int m = move.index();
  const Color me = position.to_move();
  const Color them = opponent(me);

  const PointSet crucial_stones = crucial_block_stones(position, problem);
  f.distance = 2 * geo.size();
  crucial_stones.for_each([&](int s) {
    f.distance = std::min(f.distance, std::abs(geo.col(s) - geo.col(m)) + std::abs(geo.row(s) - geo.row(m)));
  });
  for (int n : geo.neighbors(m))
    if (crucial_stones.test(n)) f.crucial_adjacent = true;

  PointSet seen;
  for (int n : geo.neighbors(m)) {
    if (position.at(n) == Color::Empty || seen.test(n)) continue;
    const Block b = position.block_at(n);
    seen |= b.stones;
    PointSet libs = b.liberties;
    libs.reset(m);
    if (b.color == them) {
      if (libs.empty()) f.captured += b.stones.count();
      if (libs.count() == 1) ++f.ataris;
    } else if (b.liberties.count() == 1) {
      f.escapes = true;
    }
  }
  if (position.is_legal(move)) {
    const Position next = position.play(move);
    f.liberties = next.block_at(m).liberties.count();
    f.self_atari = f.liberties == 1 && f.captured == 0;
    if (f.escapes && f.liberties <= 1) f.escapes = false;
  }
  return f;
}

double HeuristicEvaluator::logit(const MoveFeatures& f) {
  double x = 0.0;
  if (f.captured > 0) x += 1.5 + 0.3 * std::min(f.captured, 5);
  x += 0.8 * std::min(f.ataris, 2);
  if (f.escapes) x += 1.2;
  if (f.crucial_adjacent) x += 1.0;
  x += 0.15 * (std::clamp(f.liberties, 0, 6) - 2);
  x += 3.0 * std::exp(-0.5 * f.distance);
  if (f.self_atari) x -= 1.5;
  return x;
}

double HeuristicEvaluator::static_defender_value(const Position& position, const Problem& problem) {
  const Geometry& geo = position.geometry();
  const PointSet stones = crucial_block_stones(position, problem);
  if (stones.empty()) return -1.0;
  int eyes = 0;
  boundary_of(geo, stones).for_each([&](int p) {
    if (position.at(p) != Color::Empty) return;
    bool enclosed = true;
    for (int n : geo.neighbors(p)) enclosed = enclosed && position.at(n) == problem.defender;
    if (enclosed) ++eyes;
  });
  if (eyes >= 2) return discounted_win(2);
  int min_libs = std::numeric_limits<int>::max();
  PointSet done;
  stones.for_each([&](int s) {
    if (done.test(s)) return;
    const Block b = position.block_at(s);
    done |= b.stones;
    min_libs = std::min(min_libs, b.liberties.count());
  });
  if (min_libs <= 1 && position.to_move() == problem.attacker()) return -discounted_win(1);
  return 0.0;
}

Evaluation HeuristicEvaluator::evaluate(const Position& position, const Problem& problem, std::span<const Move> moves) const {
  Evaluation e;
  const double v = static_defender_value(position, problem);
  e.value = position.to_move() == problem.defender ? v : -v;

  std::vector<double> logits;
  logits.reserve(moves.size());
  bool has_pass = false;
  for (Move m : moves) {
    if (m.is_pass()) {
      has_pass = true;
      logits.push_back(0.0);
    } else {
      logits.push_back(logit(move_features(position, problem, m)));
    }
  }
  const double pass_prior = position.to_move() == problem.and_color() ? kAndPassPrior : kOrPassPrior;
  if (!has_pass || moves.size() == 1) {
    e.priors = softmax(logits);
    return e;
  }
  std::vector<double> board_logits;
  for (std::size_t i = 0; i < moves.size(); ++i)
    if (!moves[i].is_pass()) board_logits.push_back(logits[i]);
  const std::vector<double> board = softmax(board_logits);
  e.priors.resize(moves.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < moves.size(); ++i)
    e.priors[i] = moves[i].is_pass() ? pass_prior : (1.0 - pass_prior) * board[k++];
  return e;
}

}  // namespace rz
