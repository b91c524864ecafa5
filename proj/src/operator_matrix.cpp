#include "ybg/operator_matrix.hpp"

namespace ybg {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

OperatorMatrix::OperatorMatrix(int dim) : dim_(dim) {
  if (!power_of_two(dim))
    fail(Errc::DimensionMismatch, "operator dimension must be a power of two");
  entries_.assign(static_cast<size_t>(dim) * dim, Scalar{});
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  OperatorMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool OperatorMatrix::is_zero() const {
  for (const Scalar& s : entries_)
    if (!s.is_zero()) return false;
  return true;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "operator product");
  int n = a.dim();
  OperatorMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "operator difference");
  int n = a.dim();
  OperatorMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  int na = a.dim(), nb = b.dim();
  OperatorMatrix c(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) {
          const Scalar& bkl = b.at(k, l);
          if (!bkl.is_zero()) c.at(i * nb + k, j * nb + l) = aij * bkl;
        }
    }
  return c;
}

OperatorMatrix to_operator(const SixVertexMatrix& u) {
  OperatorMatrix m(4);
  m.at(0, 0) = u.a1;
  m.at(1, 1) = u.c1;
  m.at(1, 2) = u.b1;
  m.at(2, 1) = u.b2;
  m.at(2, 2) = u.c2;
  m.at(3, 3) = u.a2;
  return m;
}

OperatorMatrix yb_commutator(const OperatorMatrix& u, const OperatorMatrix& w,
                             const OperatorMatrix& v) {
  if (u.dim() != 4 || w.dim() != 4 || v.dim() != 4)
    fail(Errc::DimensionMismatch, "yb_commutator takes 4x4 operands");
  OperatorMatrix i2 = OperatorMatrix::identity(2);
  OperatorMatrix lhs = kron(u, i2) * kron(i2, w) * kron(v, i2);
  OperatorMatrix rhs = kron(i2, v) * kron(w, i2) * kron(i2, u);
  return lhs - rhs;
}

}  // namespace ybg
