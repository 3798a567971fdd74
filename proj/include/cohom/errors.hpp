#pragma once

#include <stdexcept>
#include <string>

namespace cohom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A metric function is non-positive where a strictly positive value is needed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Interior series expansion requested at a zero of some metric function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Series division by a series whose order-0 coefficient is (numerically) zero.
class DivisionByZeroSeries : public Error {
 public:
  using Error::Error;
};

/// Laurent expansion requested at a zero that is not simple.
class PoleOrderError : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class UnknownSystem : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration: wrong codimension, malformed document, bad overrides.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Metric endomorphism is numerically singular at a sample point.
class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

/// An ansatz parameter choice makes one of the metric functions vanish identically.
class DegenerateAnsatz : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohom
