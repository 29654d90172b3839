#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sparse_ec/rational.hpp"

namespace sparse_ec {

/// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: self-loops, duplicate pairs, unknown ids, bad sizes.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or coloring text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An algorithmic precondition does not hold for the given input
/// (edge not weak, palette below the maximum degree, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact-Δ coloring was requested for a graph with Δ(G) < 2·mad(G).
class PaletteTooSmall : public PreconditionError {
 public:
  PaletteTooSmall(Rational max_degree, Rational twice_mad)
      : PreconditionError("exact-delta palette requires max degree >= 2*mad, got max degree " + max_degree.str() +
                          " < 2*mad " + twice_mad.str()),
        max_degree_(max_degree),
        twice_mad_(twice_mad) {}
  const Rational& max_degree() const { return max_degree_; }
  const Rational& twice_mad() const { return twice_mad_; }

 private:
  Rational max_degree_;
  Rational twice_mad_;
};

/// An internal invariant broke. Never caught and retried inside the library.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sparse_ec
