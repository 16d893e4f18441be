#pragma once

#include <stdexcept>
#include <string>

namespace cevian {

/// Base class for all geometric failures raised by the library.
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoincidentPoints : GeometryError {
  CoincidentPoints() : GeometryError("join: points are projectively equal") {}
};

struct CoincidentLines : GeometryError {
  CoincidentLines() : GeometryError("meet: lines are projectively equal") {}
};

struct DegenerateInput : GeometryError {
  explicit DegenerateInput(const std::string& what) : GeometryError(what) {}
};

struct DegenerateConic : GeometryError {
  DegenerateConic() : GeometryError("conic is degenerate (det = 0)") {}
};

struct TraceAtVertex : GeometryError {
  TraceAtVertex() : GeometryError("trace coincides with a triangle vertex") {}
};

struct OnSideline : GeometryError {
  OnSideline() : GeometryError("point lies on a sideline; conjugate undefined") {}
};

struct DegenerateConfiguration : GeometryError {
  explicit DegenerateConfiguration(const std::string& what) : GeometryError(what) {}
};

/// Internal consistency failure: an incidence that holds by theorem failed.
/// Signals an implementation bug, not bad input data.
struct ConcurrencyViolation : GeometryError {
  explicit ConcurrencyViolation(const std::string& what) : GeometryError(what) {}
};

struct GeneratorExhausted : GeometryError {
  GeneratorExhausted() : GeometryError("generator: 100 consecutive rejected draws") {}
};

struct DegeneratePair : GeometryError {
  explicit DegeneratePair(const std::string& what) : GeometryError(what) {}
};

struct PointAtInfinity : GeometryError {
  PointAtInfinity() : GeometryError("operation requires a finite point") {}
};

struct HexagonPointAtInfinity : GeometryError {
  HexagonPointAtInfinity() : GeometryError("hexagon point at infinity; feet undefined") {}
};

struct TangentPole : GeometryError {
  TangentPole() : GeometryError("k*angle at a pole of tan") {}
};

struct RayMiss : GeometryError {
  explicit RayMiss(const std::string& what) : GeometryError(what) {}
};

struct PerspectorNotFound : GeometryError {
  PerspectorNotFound() : GeometryError("vertex joins are not pairwise consistent") {}
};

}  // namespace cevian
