#pragma once

#include <vector>

#include "ybg/six_vertex.hpp"

namespace ybg {

// Dense square matrix over the exact scalars; carrier for endomorphisms of
// V^(x)k with the basis order (alpha, beta) -> 2 alpha + beta extended
// lexicographically. Dimension must be a power of two.
class OperatorMatrix {
public:
  explicit OperatorMatrix(int dim);
  static OperatorMatrix identity(int dim);

  int dim() const { return dim_; }
  Scalar& at(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
  const Scalar& at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

  bool is_zero() const;

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

private:
  int dim_;
  std::vector<Scalar> entries_;
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix to_operator(const SixVertexMatrix& u);

// [[u, w, v]] = (u x I)(I x w)(v x I) - (I x v)(w x I)(I x u) on V x V x V.
// All operands must be 4x4; the result is 8x8.
OperatorMatrix yb_commutator(const OperatorMatrix& u, const OperatorMatrix& w,
                             const OperatorMatrix& v);

inline OperatorMatrix yb_commutator(const SixVertexMatrix& u, const SixVertexMatrix& w,
                                    const SixVertexMatrix& v) {
  return yb_commutator(to_operator(u), to_operator(w), to_operator(v));
}

}  // namespace ybg
