#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rz {

class ResourceExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class NoProof : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidProblem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTree : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnverifiedSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySuite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoLegalPerturbation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rz
