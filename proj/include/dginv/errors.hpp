#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dginv {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed numbers, matrix files, or unreadable input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Raising these maps to exit code 2 in the CLI; `code()` is the stable
// machine-readable reason.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string code, const std::string& msg)
      : Error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// The input digraph fails a structural hypothesis of the combinatorial
// method: not simple symmetric, not strongly connected, or outside the
// pendant-dominated class. Codes: "not_simple_symmetric",
// "not_strongly_connected", "not_in_class_d", "degenerate".
class ClassViolation : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

// No group inverse exists. Codes: "rank_condition" (rank(A) != rank(A^2),
// reported by the algebraic path) and "delta_zero" (vanishing maximum
// matching sum, reported by the combinatorial paths). For "delta_zero",
// `vanished()` lists the non-pendant vertices (0-based) whose pendant
// cycle products sum to zero.
class NoGroupInverse : public HypothesisError {
 public:
  NoGroupInverse(std::string code, const std::string& msg,
                 std::vector<int> vanished = {})
      : HypothesisError(std::move(code), msg), vanished_(std::move(vanished)) {}
  const std::vector<int>& vanished() const { return vanished_; }

 private:
  std::vector<int> vanished_;
};

// Brute-force enumeration asked for more than its configured cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

// An instance generator exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dginv
