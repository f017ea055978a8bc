#pragma once

#include <stdexcept>
#include <string>

namespace gausspr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// c <-> d weight map would overflow double range for the stored index span.
struct IndexRangeTooWide : Error {
  using Error::Error;
};

struct WindowTooSmall : Error {
  using Error::Error;
};

struct IllConditioned : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  using Error::Error;
};

struct ClusterAmbiguous : Error {
  using Error::Error;
};

struct GrowthViolation : Error {
  using Error::Error;
};

struct ZeroAtOrigin : Error {
  using Error::Error;
};

struct NormalizationSingular : Error {
  using Error::Error;
};

struct NotSelfAdjoint : Error {
  using Error::Error;
};

struct OddMultiplicity : Error {
  using Error::Error;
};

struct OddShiftOrOrigin : Error {
  using Error::Error;
};

struct NegativeSpectrum : Error {
  using Error::Error;
};

struct NoNullSpace : Error {
  using Error::Error;
};

}  // namespace gausspr
