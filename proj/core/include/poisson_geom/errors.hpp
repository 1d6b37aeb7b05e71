#pragma once

#include <stdexcept>

namespace poisson_geom {

// Base class for every failure this library reports.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The caller broke an API contract (kind mismatch, zero vector, bad flag).
struct UsageError : Error {
  using Error::Error;
};

// A chart coordinate lies outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

// A vector of the hyperbolic 3-space has null square norm; it selects no
// point on either hyperboloid.
struct ConeVectorError : Error {
  using Error::Error;
};

// Coincident or dependent inputs where independent ones are required.
struct DegenerateInputError : Error {
  using Error::Error;
};

// A triangle with a vertex dual to its opposite side; altitudes are not
// individually defined.
struct ImproperTriangleError : Error {
  using Error::Error;
};

// Zero sets that never cross on the surface.
struct NoIntersectionError : Error {
  using Error::Error;
};

// Affine view requested for a point on the line at infinity.
struct AtInfinityError : Error {
  using Error::Error;
};

// Stereographic image requested for the projection pole itself.
struct AtPoleError : Error {
  using Error::Error;
};

struct DegenerateConicError : Error {
  using Error::Error;
};

// Conic with no real points (definite coefficient matrix).
struct EmptyConicError : Error {
  using Error::Error;
};

}  // namespace poisson_geom
