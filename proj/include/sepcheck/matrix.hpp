#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepcheck/errors.hpp"

namespace sepcheck {

using cplx = std::complex<double>;

inline constexpr double kHermTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;

/// Subsystem dimensions (d_a, d_b) of a bipartite operator. d_a indexes the
/// first (slow) tensor factor, d_b the second (fast) one, i.e. basis order
/// |0,0>, |0,1>, ..., |0,d_b-1>, |1,0>, ...
struct BipartiteLayout {
  int dim_a = 0;
  int dim_b = 0;

  int total() const { return dim_a * dim_b; }

  friend bool operator==(const BipartiteLayout&, const BipartiteLayout&) = default;
};

/// Dense complex square matrix, row-major. Optionally carries a bipartite
/// layout so partial transposition knows how to split the indices.
class Operator {
 public:
  Operator() = default;

  /// Zero matrix of the given dimension.
  explicit Operator(int dim, std::optional<BipartiteLayout> layout = std::nullopt);

  Operator(int dim, std::vector<cplx> entries,
           std::optional<BipartiteLayout> layout = std::nullopt);

  static Operator identity(int dim, std::optional<BipartiteLayout> layout = std::nullopt);

  int dim() const { return dim_; }
  const std::vector<cplx>& entries() const { return a_; }
  const std::optional<BipartiteLayout>& layout() const { return layout_; }

  Operator with_layout(BipartiteLayout layout) const;

  cplx operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }

  Operator adjoint() const;

  /// max_ij |m(i,j) - conj(m(j,i))|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermTol) const { return hermiticity_defect() <= tol; }

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(cplx s, Operator m) { return m *= s; }
  friend Operator operator*(Operator m, cplx s) { return m *= s; }
  friend Operator operator-(Operator m) { return m *= -1.0; }

  /// Matrix product.
  friend Operator operator*(const Operator& a, const Operator& b);

 private:
  int dim_ = 0;
  std::vector<cplx> a_;
  std::optional<BipartiteLayout> layout_;
};

cplx trace(const Operator& m);

/// tr(a * b) without forming the product.
cplx trace_product(const Operator& a, const Operator& b);

double frobenius_norm(const Operator& m);
double max_abs_diff(const Operator& a, const Operator& b);

/// Tensor product; the result carries layout (a.dim, b.dim).
Operator kron(const Operator& a, const Operator& b);

/// Full transpose (layout, if any, is preserved).
Operator transpose(const Operator& m);

/// Transpose of the second subsystem only:
/// result(i a, j b) = m(i b, j a). Preserves trace and Hermiticity.
Operator partial_transpose(const Operator& m, const BipartiteLayout& layout);

/// Same, using the layout stored on the operator.
Operator partial_transpose(const Operator& m);

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi:
/// rotations are applied until the off-diagonal Frobenius norm falls below
/// 1e-13 (relative to the matrix scale), at most 100 sweeps.
std::vector<double> hermitian_eigenvalues(const Operator& m, double herm_tol = kHermTol);

/// (min eigenvalue >= -psd_tol, min eigenvalue). psd_tol < 0 selects the
/// default 1e-9 * dim.
std::pair<bool, double> is_psd(const Operator& m, double psd_tol = -1.0,
                               double herm_tol = kHermTol);

struct DensityOptions {
  double herm_tol = kHermTol;
  double trace_tol = kTraceTol;
  double psd_tol = -1.0;     // < 0: use 1e-9 * dim
  bool renormalize = false;  // divide by trace before the trace check
};

/// Validated density matrix: Hermitian, unit trace and positive semidefinite
/// within the supplied tolerances. Construction never renormalizes unless
/// explicitly asked to via DensityOptions::renormalize.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator op, DensityOptions opts = {});

  const Operator& op() const { return op_; }
  int dim() const { return op_.dim(); }
  const std::optional<BipartiteLayout>& layout() const { return op_.layout(); }

 private:
  Operator op_;
};

/// Re tr(rho * m) for Hermitian m. Throws NonRealExpectation if the imaginary
/// residue of the trace exceeds imag_tol.
double expectation(const DensityMatrix& rho, const Operator& m,
                   double herm_tol = kHermTol, double imag_tol = 1e-9);

}  // namespace sepcheck
