#pragma once

#include <stdexcept>
#include <string>

namespace halgeo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: term, formula or directive does not follow the grammar.
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// An operation symbol that the signature does not declare.
class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Variable outside its sort, or objects of different sorts combined.
class SortError : public Error {
 public:
  using Error::Error;
};

/// Algebras, terms or varieties over different signatures combined.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file (algebra, variety, system).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A point space larger than the configured cap was requested.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition on argument values failed (empty witness set, bad rank, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace halgeo
