#ifndef QPROB_ERRORS_HPP
#define QPROB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qprob {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

// A strict order pair closes a directed cycle.
class CycleDetected : public Error {
 public:
  using Error::Error;
};

// A declared strict pair lands inside one equivalence class.
class Contradiction : public Error {
 public:
  using Error::Error;
};

// Lifting the strict relation through the equivalence classes produced a
// cycle that the raw strict pairs alone do not contain. The quadruple holds
// the canonical text of the four events (A, A', B, B') demonstrating it.
class CongruenceViolation : public Error {
 public:
  CongruenceViolation(const std::string& what, std::vector<std::string> quad)
      : Error(what), quadruple(std::move(quad)) {}
  std::vector<std::string> quadruple;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotTotal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotElementary : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// All singletons sit in the class of the empty event, so the normalizer is 0.
class DegenerateScale : public Error {
 public:
  using Error::Error;
};

// Two events in one scale class received different numeric sums.
class IllDefinedMap : public Error {
 public:
  IllDefinedMap(const std::string& what, std::string event_a, std::string event_b)
      : Error(what), first(std::move(event_a)), second(std::move(event_b)) {}
  std::string first, second;
};

class DeflationUndefined : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line_number, const std::string& reason)
      : Error("line " + std::to_string(line_number) + ": " + reason),
        line(line_number),
        reason(reason) {}
  int line;
  std::string reason;
};

}  // namespace qprob

#endif  // QPROB_ERRORS_HPP
