#pragma once

#include <stdexcept>

namespace qsep {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// input validation
struct NotSquare : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct NotDensityMatrix : Error { using Error::Error; };
struct NotBipartite : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct InvalidQ : Error { using Error::Error; };
struct InvalidAlpha : Error { using Error::Error; };

// file handling
struct FileNotFound : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// numerical failures
struct NoConvergence : Error { using Error::Error; };
struct DegenerateDenominator : Error { using Error::Error; };
struct RootBracketFailure : Error { using Error::Error; };

}  // namespace qsep
