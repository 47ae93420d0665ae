#ifndef NETIDENT_ERROR_HPP
#define NETIDENT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace netident {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class UnknownNode : public Error {
public:
  explicit UnknownNode(int node)
      : Error("unknown node id " + std::to_string(node)), node_(node) {}
  int node() const { return node_; }

private:
  int node_;
};

// Raised when a graph that must be acyclic contains a cycle. Carries one
// offending cycle as a node list (first node repeated at the end).
class CycleError : public Error {
public:
  explicit CycleError(std::vector<int> cycle);
  const std::vector<int>& cycle() const { return cycle_; }

private:
  std::vector<int> cycle_;
};

// Shift and additive constant cannot be told apart (degree < 2).
class DegreeTooLow : public Error {
public:
  using Error::Error;
};

class NotAShift : public Error {
public:
  using Error::Error;
};

class DuplicateAbscissa : public Error {
public:
  using Error::Error;
};

class InconsistentSamples : public Error {
public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
public:
  using Error::Error;
};

// Identification cannot be guaranteed for the given class / measurements.
class AmbiguityError : public Error {
public:
  using Error::Error;
};

class UnreachedEdge : public Error {
public:
  using Error::Error;
};

} // namespace netident

#endif
