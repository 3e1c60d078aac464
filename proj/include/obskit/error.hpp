#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obskit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Invalid graph document or graph construction.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An atom that does not belong to the graph it is used with.
class ForeignAtom : public Error {
 public:
  explicit ForeignAtom(const std::string& atom)
      : Error("atom `" + atom + "` is not in the graph"), atom_(atom) {}

  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// The requested operation has no decision procedure for this graph.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A size budget (bracket members, term vectors, oracle atoms) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace obskit
