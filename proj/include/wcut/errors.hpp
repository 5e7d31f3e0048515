#pragma once

#include <stdexcept>
#include <string>

namespace wcut {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveSide : Error {
  using Error::Error;
};

struct TriangleInequalityViolated : Error {
  double slack;  // b + c - a for the offending labeling
  TriangleInequalityViolated(const std::string& msg, double slack_)
      : Error(msg), slack(slack_) {}
};

struct NotInterior : Error {
  using Error::Error;
};

struct SingularFrame : Error {
  using Error::Error;
};

struct NonPositiveInput : Error {
  using Error::Error;
};

struct OutsideRegion : Error {
  using Error::Error;
};

struct NotConvex : Error {
  using Error::Error;
};

struct TooFewVertices : Error {
  using Error::Error;
};

struct DuplicateVertex : Error {
  using Error::Error;
};

struct GapDetected : Error {
  using Error::Error;
};

}  // namespace wcut
