#include "braidlab/int_lattice.hpp"

#include <algorithm>
#include <string>

#include "braidlab/errors.hpp"

namespace braidlab {

namespace {

bool isZero(const std::vector<mpz_class>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

IntLattice::IntLattice(int dim) : dim_(dim) {
  if (dim < 0) throw Error("MalformedInput", "lattice dimension must be nonnegative");
}

IntLattice::IntLattice(int dim, const std::vector<std::vector<mpz_class>>& rows)
    : IntLattice(dim) {
  for (const auto& row : rows) addRow(row);
  finalize();
}

// Echelon insertion: rows keep distinct pivot columns; a new row is merged
// column by column with extended-gcd row operations (unimodular, so the row
// span is preserved exactly).
void IntLattice::addRow(std::vector<mpz_class> v) {
  if (static_cast<int>(v.size()) != dim_)
    throw Error("ShapeMismatch", "lattice row has wrong dimension");
  normalized_ = false;
  for (int col = 0; col < dim_; ++col) {
    if (v[col] == 0) continue;
    auto it = std::lower_bound(pivotCols_.begin(), pivotCols_.end(), col);
    if (it != pivotCols_.end() && *it == col) {
      const size_t r = static_cast<size_t>(it - pivotCols_.begin());
      auto& pivotRow = hnfRows_[r];
      if (mpz_divisible_p(v[col].get_mpz_t(), pivotRow[col].get_mpz_t())) {
        // plain reduction, the common case
        const mpz_class q = v[col] / pivotRow[col];
        for (int j = col; j < dim_; ++j) v[j] -= q * pivotRow[j];
      } else {
        mpz_class a = pivotRow[col], b = v[col];
        mpz_class gcd, u, w;
        mpz_gcdext(gcd.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const mpz_class aOverG = a / gcd, bOverG = b / gcd;
        for (int j = col; j < dim_; ++j) {
          const mpz_class pj = pivotRow[j], vj = v[j];
          pivotRow[j] = u * pj + w * vj;
          v[j] = aOverG * vj - bOverG * pj;
        }
      }
    } else {
      if (v[col] < 0)
        for (int j = col; j < dim_; ++j) v[j] = -v[j];
      const size_t pos = static_cast<size_t>(it - pivotCols_.begin());
      pivotCols_.insert(it, col);
      hnfRows_.insert(hnfRows_.begin() + pos, std::move(v));
      return;
    }
  }
  // fully reduced to zero: nothing to insert
}

// Reduce entries above each pivot into [0, pivot).
void IntLattice::finalize() {
  if (normalized_) return;
  for (size_t r = 0; r < hnfRows_.size(); ++r) {
    const int col = pivotCols_[r];
    const mpz_class& pivot = hnfRows_[r][col];
    for (size_t above = 0; above < r; ++above) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), hnfRows_[above][col].get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (int j = col; j < dim_; ++j) hnfRows_[above][j] -= q * hnfRows_[r][j];
    }
  }
  normalized_ = true;
}

const std::vector<std::vector<mpz_class>>& IntLattice::hnf() const {
  const_cast<IntLattice*>(this)->finalize();
  return hnfRows_;
}

bool IntLattice::contains(std::vector<mpz_class> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw Error("ShapeMismatch", "membership query has wrong dimension");
  size_t r = 0;
  for (int col = 0; col < dim_; ++col) {
    while (r < pivotCols_.size() && pivotCols_[r] < col) ++r;
    if (v[col] == 0) continue;
    if (r >= pivotCols_.size() || pivotCols_[r] != col) return false;
    const auto& row = hnfRows_[r];
    if (!mpz_divisible_p(v[col].get_mpz_t(), row[col].get_mpz_t())) return false;
    const mpz_class q = v[col] / row[col];
    for (int j = col; j < dim_; ++j) v[j] -= q * row[j];
  }
  return isZero(v);
}

}  // namespace braidlab
