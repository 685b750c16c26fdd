#pragma once

#include <gmpxx.h>

#include <vector>

namespace braidlab {

/// An integer lattice given by generating rows, reduced to a row-style
/// Hermite normal form with exact arbitrary-precision arithmetic.
/// Membership testing is exact: a vector lies in the lattice iff it reduces
/// to zero against the HNF rows.
class IntLattice {
public:
  explicit IntLattice(int dim);
  IntLattice(int dim, const std::vector<std::vector<mpz_class>>& rows);

  /// Feeds one generating row; rows are reduced immediately, so memory stays
  /// proportional to rank * dim regardless of how many rows are added.
  void addRow(std::vector<mpz_class> v);
  /// Re-establishes the reduced-above-pivot form after a batch of addRow
  /// calls. contains() and hnf() call it lazily.
  void finalize();

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(hnfRows_.size()); }
  /// Echelon rows: strictly increasing pivot columns, positive pivots,
  /// entries above each pivot reduced into [0, pivot).
  const std::vector<std::vector<mpz_class>>& hnf() const;
  const std::vector<int>& pivotColumns() const { return pivotCols_; }

  bool contains(std::vector<mpz_class> v) const;

private:
  int dim_;
  bool normalized_ = true;
  std::vector<std::vector<mpz_class>> hnfRows_;
  std::vector<int> pivotCols_;
};

}  // namespace braidlab
