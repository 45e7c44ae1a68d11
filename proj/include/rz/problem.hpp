#pragma once

// Life-and-death problems: goal model, terminal predicate, SGF setup I/O.

#include <optional>
#include <string>
#include <string_view>

#include "rz/board.hpp"
#include "rz/zone.hpp"

namespace rz {

// LiveAnyCrucial: the crucial stones' owner is the OR-player and wins by making
// any crucial block unconditionally alive. KillAllCrucial: the attacker is the
// OR-player and wins once no crucial point holds a crucial-colored stone.
enum class Goal { LiveAnyCrucial, KillAllCrucial };

std::string goal_name(Goal g);
std::optional<Goal> parse_goal(std::string_view text);

// Four consecutive passes end the game with the OR-player having failed.
inline constexpr int kPassesToEndGame = 4;

struct Problem {
  Position position{5};
  Color defender = Color::White;  // owner of the crucial stones
  Goal goal = Goal::LiveAnyCrucial;
  PointSet crucial;
  std::string label;
  std::string source;

  Color or_color() const { return goal == Goal::LiveAnyCrucial ? defender : opponent(defender); }
  Color and_color() const { return opponent(or_color()); }
  Color attacker() const { return opponent(defender); }
  GoalContext context() const { return {defender, crucial}; }
  // Distinguishes goal semantics for table keys.
  int goal_id() const { return (goal == Goal::LiveAnyCrucial ? 0 : 2) + (defender == Color::Black ? 0 : 1); }

  // Throws InvariantViolation.
  void validate() const;
};

enum class TerminalStatus { OrWins, AndWins, Ongoing };

TerminalStatus terminal_status(const Problem& problem, const Position& position);

// Terminal classification with the zone that certifies it.
struct Terminal {
  TerminalStatus status = TerminalStatus::Ongoing;
  Color winner = Color::Empty;
  Zone zone;
  bool by_passes = false;
};
Terminal classify_terminal(const Problem& problem, const Position& position);

// SGF subset: SZ, AB, AW, PL, MA (crucial stones), GN (label), C (may carry
// "goal: live" or "goal: kill"). A goal override beats the file.
Problem load_sgf(std::string_view bytes, std::optional<Goal> goal_override = std::nullopt);
Problem load_sgf_file(const std::string& path, std::optional<Goal> goal_override = std::nullopt);

// Root-node properties describing the problem (no enclosing parentheses).
std::string problem_root_properties(const Problem& problem);
std::string write_problem_sgf(const Problem& problem);

}  // namespace rz
