#pragma once

#include <vector>

#include "braidlab/braided_map.hpp"
#include "braidlab/caps.hpp"

namespace braidlab {

enum class CensusFilter { All, Symmetric, Injective };

struct CensusRecord {
  BraidedMap canon;     // lexicographically minimal relabeling
  long orbitSize = 0;   // distinct tables in the relabeling orbit
  bool symmetric = false;
  bool injective = false;
  int rank = 0;
  long a0Order = 0;
  long gOrder = 0;
};

/// Lexicographic minimum of the flattened table over all n! relabelings.
BraidedMap canonical_form(const BraidedMap& m);

/// Number of distinct tables in the relabeling orbit.
long orbit_size(const BraidedMap& m);

/// Every relabeling class of nondegenerate braided bijective tables on n
/// elements, exactly once, in sorted canonical order. The search walks
/// (g-row, f-column) assignments element by element, pruning on partial
/// bijectivity and on braid triples as soon as they become evaluable.
/// Output is independent of the worker count. n <= 4 (n = 4 is slow,
/// best effort); larger n is Unsupported.
std::vector<CensusRecord> enumerate_solutions(int n, CensusFilter filter = CensusFilter::All,
                                              int workers = 1, const Caps& caps = {});

}  // namespace braidlab
