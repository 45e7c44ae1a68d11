#pragma once

// Minimal SGF (FF[4]) reader/writer: enough for problem setup and solution trees.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rz/errors.hpp"

namespace rz::sgf {

struct Property {
  std::string id;
  std::vector<std::string> values;
};

struct Node {
  std::vector<Property> props;

  const Property* find(std::string_view id) const;
  // First value of id, or fallback.
  std::string value(std::string_view id, std::string fallback = {}) const;
  bool has(std::string_view id) const { return find(id) != nullptr; }
};

struct GameTree {
  std::vector<Node> sequence;
  std::vector<GameTree> variations;
};

// Parses a collection; throws ParseError carrying the byte offset.
std::vector<GameTree> parse(std::string_view text);

std::string escape(std::string_view value);

// "aa" is the top-left corner; points are column-major letters as in FF[4].
int decode_point(std::string_view value, int size);
std::string encode_point(int index, int size);
// Expands both single points and "aa:cc" rectangles.
std::vector<int> decode_point_list(const std::vector<std::string>& values, int size);

}  // namespace rz::sgf
