#pragma once

#include <cstdint>

namespace braidlab {

/// Resource limits for the combinatorial computations. Exceeding a cap is a
/// hard error (CapExceeded / TooLarge), never silent truncation.
struct Caps {
  long groupElements = 1'000'000;  // permutation-group closure size
  long moduleDim = 20'000;         // |A0| * n flattened module dimension
  long materialize = 4'096;        // m^k table size for linear/affine solutions
  long tupleSpace = 1'000'000;     // n^k for J_k tables

  /// Parse overrides from the BRAIDLAB_CAPS environment variable, e.g.
  /// BRAIDLAB_CAPS="group=500000,module=10000,materialize=1000,tuple=100000".
  static Caps fromEnv();
};

}  // namespace braidlab
