#ifndef LP_ERRORS_HPP
#define LP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Declared covers imply p < p for some element.
class CycleError : public Error {
public:
  using Error::Error;
};

/// Raised by asRootedTree; element() names the offending element.
class NotATreeError : public Error {
public:
  NotATreeError(const std::string& message, std::string element)
      : Error(message), element_(std::move(element)) {}
  const std::string& element() const { return element_; }

private:
  std::string element_;
};

class SizeLimitError : public Error {
public:
  using Error::Error;
};

class NonSquareError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class RelationError : public Error {
public:
  using Error::Error;
};

class NotComparableError : public Error {
public:
  using Error::Error;
};

class LeafError : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class UnknownVariableError : public Error {
public:
  using Error::Error;
};

/// A configured Groebner budget (S-pairs or monomial weight) was exceeded.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

}  // namespace lp

#endif  // LP_ERRORS_HPP
