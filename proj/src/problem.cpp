#include "rz/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rz/life.hpp"
#include "rz/sgf.hpp"

namespace rz {

std::string goal_name(Goal g) { return g == Goal::LiveAnyCrucial ? "live" : "kill"; }

std::optional<Goal> parse_goal(std::string_view text) {
  if (text == "live") return Goal::LiveAnyCrucial;
  if (text == "kill") return Goal::KillAllCrucial;
  return std::nullopt;
}

void Problem::validate() const {
  if (crucial.empty()) throw InvariantViolation("problem has no crucial stones");
  if (defender != Color::Black && defender != Color::White) throw InvariantViolation("defender must be a color");
  crucial.for_each([&](int c) {
    if (c >= position.area() || position.at(c) != defender)
      throw InvariantViolation("crucial point " + point_name(position.geometry(), c) + " does not hold a " +
                               color_name(defender) + " stone");
  });
}

namespace {

bool any_crucial_alive(const Problem& problem, const Position& position, UcaProof* proof_out) {
  if (!(problem.crucial & position.stones_of(problem.defender)).empty()) {
    UcaProof proof = benson_uca(position, problem.defender);
    const bool alive = proof.alive_stones().intersects(problem.crucial);
    if (proof_out) *proof_out = std::move(proof);
    return alive;
  }
  return false;
}

bool all_crucial_captured(const Problem& problem, const Position& position) {
  return (problem.crucial & position.stones_of(problem.defender)).empty();
}

}  // namespace

TerminalStatus terminal_status(const Problem& problem, const Position& position) {
  const bool lives = any_crucial_alive(problem, position, nullptr);
  const bool dead = all_crucial_captured(problem, position);
  const bool or_is_defender = problem.goal == Goal::LiveAnyCrucial;
  if (lives) return or_is_defender ? TerminalStatus::OrWins : TerminalStatus::AndWins;
  if (dead) return or_is_defender ? TerminalStatus::AndWins : TerminalStatus::OrWins;
  return TerminalStatus::Ongoing;
}

Terminal classify_terminal(const Problem& problem, const Position& position) {
  Terminal t;
  const bool or_is_defender = problem.goal == Goal::LiveAnyCrucial;
  UcaProof proof;
  if (any_crucial_alive(problem, position, &proof)) {
    t.winner = problem.defender;
    t.zone = terminal_zone(position, proof, problem.crucial);
  } else if (all_crucial_captured(problem, position)) {
    t.winner = problem.attacker();
    t.zone = problem.crucial;
  } else if (position.consecutive_passes() >= kPassesToEndGame) {
    t.winner = problem.and_color();
    t.zone = position.geometry().all();
    t.by_passes = true;
  } else {
    return t;
  }
  t.status = (t.winner == problem.defender) == or_is_defender ? TerminalStatus::OrWins : TerminalStatus::AndWins;
  return t;
}

namespace {

std::optional<Goal> goal_from_comment(const std::string& comment) {
  std::string lower;
  for (char c : comment) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  const auto at = lower.find("goal:");
  if (at == std::string::npos) return std::nullopt;
  std::size_t i = at + 5;
  while (i < lower.size() && std::isspace(static_cast<unsigned char>(lower[i]))) ++i;
  std::size_t j = i;
  while (j < lower.size() && std::isalpha(static_cast<unsigned char>(lower[j]))) ++j;
  return parse_goal(std::string_view(lower).substr(i, j - i));
}

}  // namespace

Problem load_sgf(std::string_view bytes, std::optional<Goal> goal_override) {
  const auto trees = sgf::parse(bytes);
  const sgf::Node& root = trees.front().sequence.front();

  int size = 19;
  if (root.has("SZ")) {
    const std::string sz = root.value("SZ");
    try {
      size = std::stoi(sz);
    } catch (const std::exception&) {
      throw ParseError("bad SZ value '" + sz + "'", 0);
    }
  }
  if (size < Geometry::kMinSize || size > Geometry::kMaxSize) throw InvariantViolation("unsupported board size");

  std::vector<Color> grid(size * size, Color::Empty);
  auto place = [&](const char* id, Color c) {
    if (const auto* p = root.find(id))
      for (int i : sgf::decode_point_list(p->values, size)) grid[i] = c;
  };
  place("AB", Color::Black);
  place("AW", Color::White);

  Color to_move = Color::Black;
  if (root.has("PL")) {
    const std::string pl = root.value("PL");
    if (pl == "W" || pl == "w") {
      to_move = Color::White;
    } else if (pl != "B" && pl != "b") {
      throw ParseError("bad PL value '" + pl + "'", 0);
    }
  }

  Problem problem;
  problem.position = Position::setup(size, grid, to_move);
  const auto* ma = root.find("MA");
  if (!ma) throw InvariantViolation("no crucial stones marked (MA)");
  Color defender = Color::Empty;
  for (int i : sgf::decode_point_list(ma->values, size)) {
    if (grid[i] == Color::Empty)
      throw InvariantViolation("MA on empty intersection " + point_name(problem.position.geometry(), i));
    if (defender != Color::Empty && grid[i] != defender) throw InvariantViolation("crucial stones of both colors");
    defender = grid[i];
    problem.crucial.set(i);
  }
  problem.defender = defender;
  problem.goal = goal_override.value_or(goal_from_comment(root.value("C")).value_or(Goal::LiveAnyCrucial));
  problem.label = root.value("GN");
  problem.validate();
  return problem;
}

Problem load_sgf_file(const std::string& path, std::optional<Goal> goal_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Problem p = load_sgf(ss.str(), goal_override);
  p.source = path;
  if (p.label.empty()) {
    const auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    if (base.size() > 4 && base.ends_with(".sgf")) base.resize(base.size() - 4);
    p.label = base;
  }
  return p;
}

std::string problem_root_properties(const Problem& problem) {
  const Position& pos = problem.position;
  const int n = pos.size();
  std::ostringstream out;
  out << "FF[4]GM[1]SZ[" << n << "]";
  if (!problem.label.empty()) out << "GN[" << sgf::escape(problem.label) << "]";
  for (Color c : {Color::Black, Color::White}) {
    const PointSet s = pos.stones_of(c);
    if (s.empty()) continue;
    out << (c == Color::Black ? "AB" : "AW");
    s.for_each([&](int i) { out << "[" << sgf::encode_point(i, n) << "]"; });
  }
  out << "PL[" << (pos.to_move() == Color::Black ? "B" : "W") << "]";
  out << "MA";
  problem.crucial.for_each([&](int i) { out << "[" << sgf::encode_point(i, n) << "]"; });
  return out.str();
}

std::string write_problem_sgf(const Problem& problem) {
  return "(;" + problem_root_properties(problem) + "C[goal: " + goal_name(problem.goal) + "])\n";
}

}  // namespace rz
