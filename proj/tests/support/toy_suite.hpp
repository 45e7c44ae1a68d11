#pragma once

// Writes five small problems into a fresh directory under the system temp dir.

#include <filesystem>
#include <fstream>
#include <string>

#include "boards.hpp"

namespace rz::testing {

inline std::string write_toy_suite(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  struct Spec {
    const char* file;
    std::initializer_list<std::string> rows;
    Color to_move, defender;
    Goal goal;
  };
  const Spec specs[] = {
      {"a_straight3_live.sgf", {"...XO", "XXXXO", "OOOOO", ".....", "....."}, Color::Black, Color::Black, Goal::LiveAnyCrucial},
      {"b_straight3_kill.sgf", {"...XO", "XXXXO", "OOOOO", ".....", "....."}, Color::White, Color::Black, Goal::KillAllCrucial},
      {"c_straight4.sgf", {"....X", "XXXXX", "OOOOO", ".....", "....."}, Color::White, Color::Black, Goal::LiveAnyCrucial},
      {"d_enclosed.sgf", {"OOOOO", "O...O", "O.X.O", "O...O", "OOOOO"}, Color::White, Color::Black, Goal::KillAllCrucial},
      {"e_bent3.sgf", {"..XO.", "X.XO.", "XXXOO", "OOOO.", "....."}, Color::White, Color::Black, Goal::LiveAnyCrucial},
  };
  for (const Spec& s : specs) {
    Problem p = make_problem(from_rows(s.rows, s.to_move), s.defender, s.goal);
    p.label = fs::path(s.file).stem().string();
    std::ofstream(dir / s.file) << write_problem_sgf(p);
  }
  return dir.string();
}

}  // namespace rz::testing
