#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ringalg {

// Rejected ring descriptor: modulus below 2, excessive nesting, bad arity.
class InvalidRingError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Operands that do not belong together: different rings, different
// dimensions, wrong argument counts.
class MismatchError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Text input rejected. Lines are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("parse error at line " + std::to_string(line) + ": " + msg),
          line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

// Substitution of endomorphisms that do not commute pairwise is ill-defined;
// the offending index pair is 0-based.
class NonCommutingArguments : public std::invalid_argument {
  public:
    NonCommutingArguments(int i, int j)
        : std::invalid_argument("arguments " + std::to_string(i) + " and " + std::to_string(j) +
                                " do not commute; substitution is ill-defined"),
          pair_(i, j) {}

    std::pair<int, int> index_pair() const noexcept { return pair_; }

  private:
    std::pair<int, int> pair_;
};

// A proposition hypothesis failed on the given instance. hypothesis() is 1
// (the linear relation) or 2 (pairwise commutation); index_pair() names the
// offending pair for hypothesis 2.
class HypothesisViolation : public std::invalid_argument {
  public:
    explicit HypothesisViolation(int hypothesis)
        : std::invalid_argument("hypothesis (" + std::to_string(hypothesis) + ") violated"),
          hypothesis_(hypothesis) {}

    HypothesisViolation(int hypothesis, int i, int j)
        : std::invalid_argument("hypothesis (" + std::to_string(hypothesis) + ") violated by pair (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")"),
          hypothesis_(hypothesis),
          pair_(std::make_pair(i, j)) {}

    int hypothesis() const noexcept { return hypothesis_; }
    std::optional<std::pair<int, int>> index_pair() const noexcept { return pair_; }

  private:
    int hypothesis_;
    std::optional<std::pair<int, int>> pair_;
};

}  // namespace ringalg
