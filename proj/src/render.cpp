#include "rz/render.hpp"

#include <cstdio>

namespace rz {

std::string render_ascii(const Position& position, const std::optional<PointSet>& zone) {
  static constexpr char kCols[] = "ABCDEFGHJKLMNOPQRST";
  const Geometry& geo = position.geometry();
  const int n = geo.size();
  std::string out = "   ";
  for (int c = 0; c < n; ++c) {
    out += ' ';
    out += kCols[c];
  }
  out += '\n';
  for (int r = 0; r < n; ++r) {
    char label[8];
    std::snprintf(label, sizeof label, "%2d ", n - r);
    out += label;
    for (int c = 0; c < n; ++c) {
      const int i = geo.index(c, r);
      const bool in = zone && zone->test(i);
      char g = '.';
      switch (position.at(i)) {
        case Color::Black: g = in ? 'x' : 'X'; break;
        case Color::White: g = in ? 'o' : 'O'; break;
        default: g = in ? '+' : '.'; break;
      }
      out += ' ';
      out += g;
    }
    out += '\n';
  }
  return out;
}

}  // namespace rz
