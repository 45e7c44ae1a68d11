#pragma once

#include <optional>
#include <string>

#include "rz/board.hpp"

namespace rz {

// Fixed-width diagram: column letters on top, row numbers on the left (row 1 at
// the bottom). Outside the zone stones are X / O and empty points '.'; inside
// the zone they are x / o and '+'.
std::string render_ascii(const Position& position, const std::optional<PointSet>& zone = std::nullopt);

}  // namespace rz
