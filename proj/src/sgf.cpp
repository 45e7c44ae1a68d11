#include "rz/sgf.hpp"

#include <cctype>

namespace rz::sgf {

const Property* Node::find(std::string_view id) const {
  for (const auto& p : props)
    if (p.id == id) return &p;
  return nullptr;
}

std::string Node::value(std::string_view id, std::string fallback) const {
  const Property* p = find(id);
  return (p && !p->values.empty()) ? p->values.front() : fallback;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<GameTree> collection() {
    std::vector<GameTree> trees;
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(') throw ParseError("expected '('", pos_);
      trees.push_back(game_tree());
      skip_ws();
    }
    if (trees.empty()) throw ParseError("empty SGF collection", pos_);
    return trees;
  }

 private:
  GameTree game_tree() {
    expect('(');
    GameTree t;
    skip_ws();
    while (peek() == ';') t.sequence.push_back(node());
    if (t.sequence.empty()) throw ParseError("game tree without nodes", pos_);
    while (peek() == '(') {
      t.variations.push_back(game_tree());
      skip_ws();
    }
    expect(')');
    return t;
  }

  Node node() {
    expect(';');
    Node n;
    skip_ws();
    while (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_]))) {
      Property p;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        if (std::isupper(static_cast<unsigned char>(text_[pos_]))) p.id.push_back(text_[pos_]);
        ++pos_;
      }
      skip_ws();
      if (peek() != '[') throw ParseError("property " + p.id + " without value", pos_);
      while (peek() == '[') {
        p.values.push_back(value());
        skip_ws();
      }
      n.props.push_back(std::move(p));
    }
    return n;
  }

  std::string value() {
    expect('[');
    std::string v;
    while (true) {
      if (pos_ >= text_.size()) throw ParseError("unterminated property value", pos_);
      const char c = text_[pos_++];
      if (c == ']') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw ParseError("dangling escape", pos_);
        const char e = text_[pos_++];
        if (e == '\n' || e == '\r') continue;  // soft line break
        v.push_back(e);
      } else {
        v.push_back(c);
      }
    }
    return v;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(std::string("unexpected end of input, expected '") + c + "'", pos_);
    if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<GameTree> parse(std::string_view text) { return Parser(text).collection(); }

std::string escape(std::string_view value) {
  std::string out;
  for (char c : value) {
    if (c == ']' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

int decode_point(std::string_view v, int size) {
  if (v.size() != 2) throw ParseError("bad point '" + std::string(v) + "'", 0);
  const int col = v[0] - 'a';
  const int row = v[1] - 'a';
  if (col < 0 || col >= size || row < 0 || row >= size) throw ParseError("point off board '" + std::string(v) + "'", 0);
  return row * size + col;
}

std::string encode_point(int index, int size) {
  return {static_cast<char>('a' + index % size), static_cast<char>('a' + index / size)};
}

std::vector<int> decode_point_list(const std::vector<std::string>& values, int size) {
  std::vector<int> out;
  for (const auto& v : values) {
    const auto colon = v.find(':');
    if (colon == std::string::npos) {
      out.push_back(decode_point(v, size));
      continue;
    }
    const int a = decode_point(std::string_view(v).substr(0, colon), size);
    const int b = decode_point(std::string_view(v).substr(colon + 1), size);
    for (int r = std::min(a / size, b / size); r <= std::max(a / size, b / size); ++r)
      for (int c = std::min(a % size, b % size); c <= std::max(a % size, b % size); ++c) out.push_back(r * size + c);
  }
  return out;
}

}  // namespace rz::sgf
