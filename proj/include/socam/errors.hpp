#pragma once

#include <stdexcept>
#include <string>

namespace socam
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates a type invariant (p <= 0, eta at the b3/delta singularity, ...).
class InvalidParameter : public Error
{
  public:
    using Error::Error;
};

/// v_c has no sign change on the extended-angle bracket.
class NoRoot : public Error
{
  public:
    using Error::Error;
};

/// The bearing fit gives a non-positive pin radius (a4 <= 5 mm).
class DegeneratePin : public Error
{
  public:
    using Error::Error;
};

/// Line of action through the camshaft axis (delta = 0), f_x unbounded.
class InfiniteForce : public Error
{
  public:
    using Error::Error;
};

/// 1 - a4 * kappa_p vanishes: the roller radius equals the radius of curvature.
class UndercutSingularity : public Error
{
  public:
    using Error::Error;
};

/// No design in the requested range satisfies the constraints.
class Infeasible : public Error
{
  public:
    using Error::Error;
};

} // namespace socam
