#pragma once

#include <stdexcept>
#include <string>

namespace linext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad indices, bad text, bad arguments).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A relation that is not a strict partial order (it contains a cycle).
class NotAPartialOrder : public Error {
 public:
  NotAPartialOrder() : Error("not a partial order") {}
  explicit NotAPartialOrder(const std::string& what) : Error(what) {}
};

class InvalidGadget : public Error {
 public:
  using Error::Error;
};

/// A computation whose configured resource cap would be exceeded.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class TraceError : public Error {
 public:
  using Error::Error;
};

}  // namespace linext
