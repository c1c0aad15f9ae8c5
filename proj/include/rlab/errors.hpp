#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

// Base for everything thrown by the library. CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidPatchSpecError : public Error {
 public:
  using Error::Error;
};

class UnknownFilterError : public Error {
 public:
  using Error::Error;
};

// Removing from a patch whose ledger is empty.
class NoEventError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Remote victim failures, kept distinct so callers can tell an unreachable
// endpoint from a broken or lying one.
class TransportError : public Error {
 public:
  using Error::Error;
};

class MalformedResponseError : public Error {
 public:
  using Error::Error;
};

class SimplexViolationError : public Error {
 public:
  using Error::Error;
};

// Fine-tuning requested on a model we cannot train (remote victims).
class UnsupportedRefinementError : public Error {
 public:
  using Error::Error;
};

// Stepping a finished episode, greedy probing without budget, etc.
class EpisodeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlab
