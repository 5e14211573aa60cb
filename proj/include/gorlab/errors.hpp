#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorlab {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings / contexts, or shapes disagree.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Text that does not conform to a grammar. Carries a 0-based offset and,
// when the parser knows it, a 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// A homogeneity requirement was violated.
class InhomogeneousError : public Error {
 public:
  using Error::Error;
};

// A Groebner computation needed a degree above the configured cap.
// Recoverable: callers may retry with a larger cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("degree cap exceeded: needed degree " + std::to_string(degree) +
              " > cap " + std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const { return degree_; }
  int cap() const { return cap_; }

 private:
  int degree_;
  int cap_;
};

// Free-module rank, time, or similar resource limit reached.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of an operation fails (module not MCM, ring
// not Gorenstein, module not of finite length, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace gorlab
