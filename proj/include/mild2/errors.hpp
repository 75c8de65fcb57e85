#pragma once

#include <stdexcept>
#include <string>

namespace mild2 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: out-of-range integers, non-primes, malformed presentations.
class InputError : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of candidates.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Memory guard tripped; `degree` is the last degree that was completed.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, int degree) : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class EliminationError : public Error {
 public:
  using Error::Error;
};

// Non-integral or negative dimension extracted from a series; `n` names the degree.
class SeriesError : public Error {
 public:
  SeriesError(const std::string& what, int n) : Error(what), n_(n) {}
  int n() const { return n_; }

 private:
  int n_;
};

}  // namespace mild2
