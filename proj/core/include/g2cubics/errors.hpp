#pragma once

#include <stdexcept>
#include <string>

namespace g2cubics {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormNotThree : Error {
  explicit NormNotThree(const std::string& what = "vector norm is not 3") : Error(what) {}
};

struct ZeroTorusCoordinate : Error {
  ZeroTorusCoordinate() : Error("torus coordinate must be nonzero") {}
};

struct NotUnimodular : Error {
  NotUnimodular() : Error("matrix determinant is not 1") {}
};

struct NotARoot : Error {
  NotARoot() : Error("vector is not a norm-1 root") {}
};

struct BadIndex : Error {
  BadIndex() : Error("Fano point index must lie in 1..7") {}
};

struct OrbitTruncated : Error {
  explicit OrbitTruncated(std::size_t bound)
      : Error("braid orbit exceeded bound " + std::to_string(bound)) {}
};

struct ClosureTruncated : Error {
  explicit ClosureTruncated(std::size_t bound)
      : Error("group closure exceeded bound " + std::to_string(bound)) {}
};

struct RealizationFailed : Error {
  explicit RealizationFailed(double residual)
      : Error("triple realization did not converge, residual " + std::to_string(residual)),
        residual(residual) {}
  double residual;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace g2cubics
