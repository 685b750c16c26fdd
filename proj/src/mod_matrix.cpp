#include "braidlab/mod_matrix.hpp"

#include <numeric>
#include <string>

namespace braidlab {

namespace {

// Laplace expansion with mod reduction at every step: exact for any modulus,
// fine for the small dimensions this toolkit handles.
int64_t detRec(const std::vector<int64_t>& a, int dim, int64_t mod) {
  if (dim == 1) return a[0] % mod;
  if (dim == 2) {
    int64_t v = (a[0] * a[3] - a[1] * a[2]) % mod;
    return v < 0 ? v + mod : v;
  }
  int64_t acc = 0;
  std::vector<int64_t> minor((dim - 1) * (dim - 1));
  for (int c = 0; c < dim; ++c) {
    for (int r = 1; r < dim; ++r) {
      int mc = 0;
      for (int cc = 0; cc < dim; ++cc) {
        if (cc == c) continue;
        minor[(r - 1) * (dim - 1) + mc++] = a[r * dim + cc];
      }
    }
    const int64_t cof = (a[c] * detRec(minor, dim - 1, mod)) % mod;
    acc = (c % 2 == 0) ? (acc + cof) % mod : (acc - cof) % mod;
  }
  return acc < 0 ? acc + mod : acc;
}

}  // namespace

ModMatrix::ModMatrix(int64_t mod, int dim) : mod_(mod), dim_(dim), e_(dim * dim, 0) {
  if (mod < 2) throw Error("MalformedInput", "modulus must be at least 2");
  if (mod > (int64_t(1) << 31))
    throw Error("TooLarge", "modulus exceeds 2^31");
  if (dim < 1) throw Error("ShapeMismatch", "matrix dimension must be positive");
  if (dim > 10) throw Error("TooLarge", "matrix dimension capped at 10");
}

ModMatrix ModMatrix::identity(int64_t mod, int dim) {
  ModMatrix m(mod, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::scalar(int64_t mod, int dim, int64_t value) {
  ModMatrix m(mod, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, value);
  return m;
}

ModMatrix ModMatrix::fromRows(int64_t mod, const std::vector<std::vector<int64_t>>& rows) {
  const int dim = static_cast<int>(rows.size());
  ModMatrix m(mod, dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(rows[r].size()) != dim)
      throw Error("ShapeMismatch", "matrix rows must be square");
    for (int c = 0; c < dim; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void ModMatrix::checkCompatible(const ModMatrix& o) const {
  if (mod_ != o.mod_ || dim_ != o.dim_)
    throw Error("ShapeMismatch", "matrix modulus/dimension mismatch");
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  checkCompatible(o);
  ModMatrix r(mod_, dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + o.e_[i]) % mod_;
  return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  checkCompatible(o);
  ModMatrix r(mod_, dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = reduce(e_[i] - o.e_[i]);
  return r;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  checkCompatible(o);
  ModMatrix r(mod_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const int64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < dim_; ++j)
        r.e_[i * dim_ + j] = (r.e_[i * dim_ + j] + aik * o.at(k, j)) % mod_;
    }
  return r;
}

ModMatrix ModMatrix::operator-() const {
  ModMatrix r(mod_, dim_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = reduce(-e_[i]);
  return r;
}

bool ModMatrix::isZero() const {
  for (int64_t v : e_)
    if (v != 0) return false;
  return true;
}

bool ModMatrix::isIdentity() const { return *this == identity(mod_, dim_); }

int64_t ModMatrix::det() const { return detRec(e_, dim_, mod_); }

bool ModMatrix::invertible() const { return std::gcd(det(), mod_) == 1; }

int64_t mod_inverse(int64_t a, int64_t mod) {
  a %= mod;
  if (a < 0) a += mod;
  int64_t t = 0, newT = 1, r = mod, newR = a;
  while (newR != 0) {
    const int64_t q = r / newR;
    t -= q * newT;
    std::swap(t, newT);
    r -= q * newR;
    std::swap(r, newR);
  }
  if (r != 1) throw Error("NotInvertible", std::to_string(a) + " has no inverse mod " +
                                               std::to_string(mod));
  return t < 0 ? t + mod : t;
}

ModMatrix ModMatrix::inverse() const {
  const int64_t d = det();
  if (std::gcd(d, mod_) != 1)
    throw Error("NotInvertible", "determinant " + std::to_string(d) + " not a unit mod " +
                                     std::to_string(mod_));
  const int64_t dInv = mod_inverse(d, mod_);
  ModMatrix r(mod_, dim_);
  if (dim_ == 1) {
    r.set(0, 0, dInv);
    return r;
  }
  std::vector<int64_t> minor((dim_ - 1) * (dim_ - 1));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      int mr = 0;
      for (int rr = 0; rr < dim_; ++rr) {
        if (rr == i) continue;
        int mc = 0;
        for (int cc = 0; cc < dim_; ++cc) {
          if (cc == j) continue;
          minor[mr * (dim_ - 1) + mc++] = e_[rr * dim_ + cc];
        }
        ++mr;
      }
      int64_t cof = detRec(minor, dim_ - 1, mod_);
      if ((i + j) % 2 == 1) cof = reduce(-cof);
      // adjugate transposes the cofactor matrix
      r.e_[j * dim_ + i] = (cof * dInv) % mod_;
    }
  return r;
}

ModVec ModMatrix::apply(const ModVec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw Error("ShapeMismatch", "vector dimension mismatch");
  ModVec r(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    int64_t acc = 0;
    for (int j = 0; j < dim_; ++j) acc = (acc + at(i, j) * v[j]) % mod_;
    r[i] = acc;
  }
  return r;
}

ModVec vec_add(int64_t mod, const ModVec& a, const ModVec& b) {
  if (a.size() != b.size()) throw Error("ShapeMismatch", "vector dimension mismatch");
  ModVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % mod;
  return r;
}

ModVec vec_sub(int64_t mod, const ModVec& a, const ModVec& b) {
  if (a.size() != b.size()) throw Error("ShapeMismatch", "vector dimension mismatch");
  ModVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t v = (a[i] - b[i]) % mod;
    r[i] = v < 0 ? v + mod : v;
  }
  return r;
}

ModVec vec_zero(int dim) { return ModVec(dim, 0); }

bool vec_is_zero(const ModVec& v) {
  for (int64_t x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace braidlab
