#pragma once

#include <stdexcept>
#include <string>

namespace pbound {

// Malformed input text (edge lists, perturbation specs) or an invalid graph
// description such as a self-loop.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A perturbation that does not satisfy its invariants against the host graph.
class InvalidPerturbation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural precondition failed: disconnected final graph, infeasible
// regular graph, disconnected matrix handed to the Perron solver.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside a function's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative solver did not reach its tolerance within its iteration cap.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pbound
