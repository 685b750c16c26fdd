#pragma once

#include <cstdint>
#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

using ModVec = std::vector<int64_t>;

/// A square matrix over Z_m with exact integer arithmetic. Invertibility is
/// gcd(det, m) = 1; inverses go through the adjugate, so no field assumption.
class ModMatrix {
public:
  ModMatrix(int64_t mod, int dim);  // zero matrix
  static ModMatrix identity(int64_t mod, int dim);
  static ModMatrix scalar(int64_t mod, int dim, int64_t value);
  static ModMatrix fromRows(int64_t mod, const std::vector<std::vector<int64_t>>& rows);

  int64_t mod() const { return mod_; }
  int dim() const { return dim_; }
  int64_t at(int r, int c) const { return e_[r * dim_ + c]; }
  void set(int r, int c, int64_t v) { e_[r * dim_ + c] = reduce(v); }

  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator-() const;
  bool operator==(const ModMatrix& o) const { return mod_ == o.mod_ && e_ == o.e_; }
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }

  bool isZero() const;
  bool isIdentity() const;
  int64_t det() const;
  bool invertible() const;
  ModMatrix inverse() const;  // throws NotInvertible

  ModVec apply(const ModVec& v) const;

private:
  int64_t reduce(int64_t v) const {
    v %= mod_;
    return v < 0 ? v + mod_ : v;
  }
  void checkCompatible(const ModMatrix& o) const;

  int64_t mod_;
  int dim_;
  std::vector<int64_t> e_;
};

ModVec vec_add(int64_t mod, const ModVec& a, const ModVec& b);
ModVec vec_sub(int64_t mod, const ModVec& a, const ModVec& b);
ModVec vec_zero(int dim);
bool vec_is_zero(const ModVec& v);
int64_t mod_inverse(int64_t a, int64_t mod);  // throws NotInvertible

}  // namespace braidlab
