#ifndef TOPOMODAL_ERRORS_HPP
#define TOPOMODAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topomodal {

// Malformed input: a structure that violates one of its invariants
// (non-topology, non-singleton nominal, unknown property tag, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A brute-force sweep would exceed its size cap.  Guards are explicit:
// callers may raise the cap, but nothing is ever silently truncated.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation hit a symbol the model does not value or a variable the
// assignment does not bind.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in a formula string; `position` is a 0-based offset into
// the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace topomodal

#endif
