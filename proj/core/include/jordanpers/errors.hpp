#pragma once

#include <stdexcept>
#include <string>

namespace jordanpers {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error { public: using Error::Error; };
class FieldMismatch : public Error { public: using Error::Error; };
class InvalidPrime : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class NonIntegralSolution : public Error { public: using Error::Error; };
class NegativeMultiplicity : public Error { public: using Error::Error; };

class UnknownElement : public Error { public: using Error::Error; };
class InvalidPoset : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class OverlappingSlices : public Error { public: using Error::Error; };
class NotComparable : public Error { public: using Error::Error; };

class PosetMismatch : public Error { public: using Error::Error; };
class NegativeShift : public Error { public: using Error::Error; };
class InvalidCertificate : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };

/// Malformed input file or value (CLI schema layer).
class SchemaError : public Error { public: using Error::Error; };

}  // namespace jordanpers
