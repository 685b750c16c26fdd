#include "braidlab/linear_affine.hpp"

#include <string>

namespace braidlab {

namespace {

void checkShapes(const LinearSolution& l) {
  const int64_t m = l.a.mod();
  const int k = l.a.dim();
  for (const ModMatrix* p : {&l.b, &l.c, &l.d})
    if (p->mod() != m || p->dim() != k)
      throw Error("ShapeMismatch", "a, b, c, d must share modulus and dimension");
}

ModMatrix one(const ModMatrix& like) { return ModMatrix::identity(like.mod(), like.dim()); }

}  // namespace

bool check_linear_relations(const LinearSolution& l) {
  checkShapes(l);
  const auto& a = l.a;
  const auto& b = l.b;
  const auto& c = l.c;
  const auto& d = l.d;
  if (!b.invertible() || !c.invertible()) return false;
  const ModMatrix I = one(a);
  if (a * (I - a) != b * a * c) return false;
  if (d * (I - d) != c * d * b) return false;
  if (a * b != b * a * (I - d)) return false;
  if (c * a != (I - d) * a * c) return false;
  if (d * c != c * d * (I - a)) return false;
  if (b * d != (I - a) * d * b) return false;
  if (c * b - b * c != a * d * a - d * a * d) return false;
  return true;
}

void require_valid(const LinearSolution& l) {
  if (!check_linear_relations(l))
    throw Error("NotASolution", "matrices do not satisfy the linear braid relations");
}

ModMatrix s_of(const LinearSolution& l) {
  require_valid(l);
  const ModMatrix I = one(l.a);
  return l.b * l.c - (I - l.d + l.a * l.d) * (I - l.a);
}

void validate_quadruple(const QuadrupleABDS& q) {
  const int64_t m = q.a.mod();
  const int k = q.a.dim();
  for (const ModMatrix* p : {&q.b, &q.d, &q.s})
    if (p->mod() != m || p->dim() != k)
      throw Error("ShapeMismatch", "a, b, d, s must share modulus and dimension");
  const ModMatrix I = one(q.a);
  const ModMatrix zero(m, k);
  if (!(I - q.a).invertible()) throw Error("InvariantViolation", "(i): 1-a not invertible");
  if (!(I - q.d).invertible()) throw Error("InvariantViolation", "(i): 1-d not invertible");
  if (!q.b.invertible()) throw Error("InvariantViolation", "(i): b not invertible");
  if (!(I + q.s).invertible()) throw Error("InvariantViolation", "(i): 1+s not invertible");
  if (q.s * q.a != zero || q.a * q.s != zero)
    throw Error("InvariantViolation", "(ii): sa = as = 0 fails");
  if (q.s * q.d != zero || q.d * q.s != zero)
    throw Error("InvariantViolation", "(ii): sd = ds = 0 fails");
  if (q.s * q.b != q.b * q.s) throw Error("InvariantViolation", "(ii): s does not commute with b");
  const ModMatrix bInv = q.b.inverse();
  if (q.b * q.d * bInv != (I - q.a) * q.d)
    throw Error("InvariantViolation", "(iii): b d b^{-1} != (1-a) d");
  if (bInv * q.a * q.b != q.a * (I - q.d))
    throw Error("InvariantViolation", "(iii): b^{-1} a b != a (1-d)");
}

LinearSolution quadruple_to_solution(const QuadrupleABDS& q) {
  validate_quadruple(q);
  const ModMatrix I = one(q.a);
  const ModMatrix c = q.b.inverse() * ((I - q.d + q.a * q.d) * (I - q.a) + q.s);
  LinearSolution l{q.a, q.b, c, q.d};
  require_valid(l);
  return l;
}

QuadrupleABDS quadruple_of(const LinearSolution& l) { return {l.a, l.b, l.d, s_of(l)}; }

bool is_injective_linear(const LinearSolution& l) { return s_of(l).isZero(); }

std::pair<ModMatrix, ModMatrix> phi_closed_form(const LinearSolution& l) {
  const ModMatrix s = s_of(l);
  const ModMatrix I = one(l.a);
  const ModMatrix K = (I - l.d) * (I - l.a);
  return {I - K, K + s};
}

LinearSolution hat_solution(const LinearSolution& l) {
  const ModMatrix s = s_of(l);
  LinearSolution hat{l.a, l.b, l.c, l.d - s};
  require_valid(hat);
  return hat;
}

LinearSolution breve_solution(const LinearSolution& l, const ModMatrix& s) {
  const ModMatrix base = s_of(l);
  if (!base.isZero()) throw Error("NotASolution", "breve needs an injective base solution");
  if (s.mod() != l.mod() || s.dim() != l.dim())
    throw Error("ShapeMismatch", "perturbation shape mismatch");
  const ModMatrix zero(l.mod(), l.dim());
  if (s * l.a != zero || l.a * s != zero)
    throw Error("BadPerturbation", "sa = as = 0 fails");
  if (s * l.b != l.b * s) throw Error("BadPerturbation", "sb = bs fails");
  if (s * l.d != l.d * s || s * l.d != -(s * s))
    throw Error("BadPerturbation", "sd = ds = -s^2 fails");
  if (s * l.c != l.c * s) throw Error("BadPerturbation", "sc = cs fails");
  LinearSolution breve{l.a, l.b, l.c, l.d + s};
  require_valid(breve);
  return breve;
}

void validate_triple(const TriplePQZ& t) {
  const int64_t m = t.p.mod();
  const int k = t.p.dim();
  for (const ModMatrix* x : {&t.q, &t.zauto})
    if (x->mod() != m || x->dim() != k)
      throw Error("ShapeMismatch", "p, q, z must share modulus and dimension");
  if (!t.p.invertible()) throw Error("InvariantViolation", "p not invertible");
  if (!t.q.invertible()) throw Error("InvariantViolation", "q not invertible");
  if (!t.zauto.invertible()) throw Error("InvariantViolation", "z not invertible");
  if (t.p * t.q != t.q * t.p) throw Error("InvariantViolation", "pq != qp");
  const ModMatrix lhs = t.zauto * t.zauto - t.zauto * (t.p + t.q) + t.p * t.q;
  if (!lhs.isZero()) throw Error("InvariantViolation", "z^2 - z(p+q) + pq != 0");
}

TriplePQZ pqz_from_abd(const ModMatrix& a, const ModMatrix& b, const ModMatrix& d) {
  const ModMatrix I = one(a);
  if (!b.invertible()) throw Error("InvariantViolation", "b not invertible");
  if (!(I - a).invertible()) throw Error("InvariantViolation", "1-a not invertible");
  if (!(I - d).invertible()) throw Error("InvariantViolation", "1-d not invertible");
  const ModMatrix bInv = b.inverse();
  if (b * d * bInv != (I - a) * d)
    throw Error("InvariantViolation", "b d b^{-1} != (1-a) d");
  if (bInv * a * b != a * (I - d))
    throw Error("InvariantViolation", "b^{-1} a b != a (1-d)");
  TriplePQZ t{bInv, (I - a) * (I - d) * bInv, (I - a) * bInv};
  validate_triple(t);
  return t;
}

std::array<ModMatrix, 3> abd_from_pqz(const TriplePQZ& t) {
  validate_triple(t);
  const ModMatrix I = one(t.p);
  const ModMatrix pInv = t.p.inverse();
  const ModMatrix a = I - t.zauto * pInv;
  const ModMatrix b = pInv;
  const ModMatrix d = I - t.p * t.zauto.inverse() * t.q * pInv;
  if (!(I - a).invertible() || !(I - d).invertible() || !b.invertible())
    throw Error("InvariantViolation", "recovered (a,b,d) fails invertibility");
  const ModMatrix bInv = b.inverse();
  if (b * d * bInv != (I - a) * d || bInv * a * b != a * (I - d))
    throw Error("InvariantViolation", "recovered (a,b,d) fails the conjugation identities");
  return {a, b, d};
}

LinearSolution solution_from_abd(const ModMatrix& a, const ModMatrix& b, const ModMatrix& d) {
  const ModMatrix I = one(a);
  const ModMatrix c = b.inverse() * (I - d + a * d) * (I - a);
  LinearSolution l{a, b, c, d};
  require_valid(l);
  return l;
}

bool check_affine_relations(const AffineSolution& s) {
  if (!check_linear_relations(s.lin)) return false;
  const auto& l = s.lin;
  const int64_t m = l.mod();
  const int k = l.dim();
  if (static_cast<int>(s.zvec.size()) != k || static_cast<int>(s.tvec.size()) != k)
    throw Error("ShapeMismatch", "translation vectors must have length k");
  const ModMatrix I = one(l.a);
  const ModVec r1 = vec_add(m, (l.c * l.d).apply(s.zvec), l.d.apply(s.tvec));
  const ModVec r2 = vec_add(m, l.a.apply(s.zvec), (l.b * l.a).apply(s.tvec));
  const ModVec r3 = vec_add(m, (l.c + l.d - l.a * l.d - I).apply(s.zvec),
                            (l.d * l.a + I - l.a - l.b).apply(s.tvec));
  return vec_is_zero(r1) && vec_is_zero(r2) && vec_is_zero(r3);
}

AffineSolution affine_extend(const LinearSolution& l, const ModVec& zvec, const ModVec& kvec) {
  require_valid(l);
  const int64_t m = l.mod();
  const int k = l.dim();
  if (static_cast<int>(zvec.size()) != k || static_cast<int>(kvec.size()) != k)
    throw Error("ShapeMismatch", "z and k must have length k");
  const ModMatrix I = one(l.a);
  if (!(I - l.a).invertible()) throw Error("ConstraintViolation", "1-a not invertible");
  const ModMatrix s = s_of(l);
  if (!vec_is_zero(l.a.apply(kvec))) throw Error("ConstraintViolation", "a k != 0");
  if (!vec_is_zero(l.d.apply(kvec))) throw Error("ConstraintViolation", "d k != 0");
  if ((l.b - I).apply(kvec) != s.apply(zvec))
    throw Error("ConstraintViolation", "(b-1) k != s z");
  const ModVec tvec =
      vec_add(m, (-(l.c * (I - l.a).inverse())).apply(zvec), kvec);
  AffineSolution aff{l, zvec, tvec};
  if (!check_affine_relations(aff))
    throw Error("InvariantViolation", "constructed affine solution fails the compatibility system");
  return aff;
}

ModVec affine_kvec(const AffineSolution& s) {
  const auto& l = s.lin;
  const ModMatrix I = one(l.a);
  return vec_add(l.mod(), s.tvec, (l.c * (I - l.a).inverse()).apply(s.zvec));
}

bool is_injective_affine(const AffineSolution& s) {
  return is_injective_linear(s.lin) && vec_is_zero(affine_kvec(s));
}

ModVec decode_point(int64_t mod, int dim, long index) {
  ModVec v(dim);
  for (int i = dim - 1; i >= 0; --i) {
    v[i] = index % mod;
    index /= mod;
  }
  return v;
}

long encode_point(int64_t mod, const ModVec& v) {
  long idx = 0;
  for (int64_t digit : v) idx = idx * mod + digit;
  return idx;
}

namespace {

BraidedMap materializeImpl(const LinearSolution& l, const ModVec* zvec, const ModVec* tvec,
                           const Caps& caps) {
  checkShapes(l);
  const int64_t m = l.mod();
  const int k = l.dim();
  long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= m;
    if (n > caps.materialize)
      throw Error("TooLarge", "m^k exceeds the materialization cap of " +
                                  std::to_string(caps.materialize));
  }
  std::vector<ModVec> points(n);
  for (long i = 0; i < n; ++i) points[i] = decode_point(m, k, i);
  std::vector<int> flat(2 * n * n);
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      ModVec u = vec_add(m, l.a.apply(points[x]), l.b.apply(points[y]));
      ModVec v = vec_add(m, l.c.apply(points[x]), l.d.apply(points[y]));
      if (zvec != nullptr) u = vec_add(m, u, *zvec);
      if (tvec != nullptr) v = vec_add(m, v, *tvec);
      flat[2 * (x * n + y)] = static_cast<int>(encode_point(m, u));
      flat[2 * (x * n + y) + 1] = static_cast<int>(encode_point(m, v));
    }
  return BraidedMap(static_cast<int>(n), std::move(flat));
}

}  // namespace

BraidedMap materialize(const LinearSolution& l, const Caps& caps) {
  return materializeImpl(l, nullptr, nullptr, caps);
}

BraidedMap materialize(const AffineSolution& s, const Caps& caps) {
  return materializeImpl(s.lin, &s.zvec, &s.tvec, caps);
}

}  // namespace braidlab
