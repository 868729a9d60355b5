#pragma once

#include <stdexcept>
#include <string>

namespace bqarrow {

// Base class for every error raised by the library. Subclasses only tag the
// category; the message carries the details.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error { using Error::Error; };
class DimensionError : public Error { using Error::Error; };
class ModulusError : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };
class SizeError : public Error { using Error::Error; };
class InvalidColoring : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class TooMany : public Error { using Error::Error; };

// Gauss code parsing.
class SyntaxError : public Error { using Error::Error; };
class LabelError : public Error { using Error::Error; };
class SignMismatch : public Error { using Error::Error; };

// Files and JSON documents.
class IoError : public Error { using Error::Error; };
class FormatError : public Error { using Error::Error; };

// Knot tables.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};
class DuplicateName : public Error { using Error::Error; };

// A failure while evaluating one knot of a batch.
class RecordError : public Error {
 public:
  RecordError(const std::string& name, const std::string& what) : Error(name + ": " + what), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace bqarrow
