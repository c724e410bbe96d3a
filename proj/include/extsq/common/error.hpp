#pragma once

#include <stdexcept>
#include <string>

namespace extsq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A trailing minor d_k vanished; k is 1-based.
class DegenerateMinor : public Error {
 public:
  explicit DegenerateMinor(int k)
      : Error("trailing minor d_" + std::to_string(k) + " vanishes"), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

// Evaluation at a pole. where() is the offending integer when there is one.
class PoleError : public Error {
 public:
  using Error::Error;
  PoleError(const std::string& what, long where) : Error(what), where_(where), has_where_(true) {}
  bool has_where() const { return has_where_; }
  long where() const { return where_; }

 private:
  long where_ = 0;
  bool has_where_ = false;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Quadrature gave up; estimate() is the error bound it did reach.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double estimate)
      : Error(what + " (achieved error estimate " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// Evaluation point too close to a Gamma pole; the caller should pick another.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

}  // namespace extsq
