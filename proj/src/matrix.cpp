#include "sepcheck/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sepcheck {

namespace {

void check_layout(int dim, const std::optional<BipartiteLayout>& layout) {
  if (!layout) return;
  if (layout->dim_a < 1 || layout->dim_b < 1) {
    throw ParameterOutOfRange("bipartite layout dimensions must be >= 1");
  }
  if (layout->total() != dim) {
    std::ostringstream os;
    os << "layout (" << layout->dim_a << "," << layout->dim_b
       << ") does not factor dimension " << dim;
    throw DimensionMismatch(os.str());
  }
}

void check_same_dim(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": dimensions differ (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

Operator::Operator(int dim, std::optional<BipartiteLayout> layout)
    : dim_(dim), a_(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0}), layout_(layout) {
  if (dim < 1) throw ParameterOutOfRange("operator dimension must be >= 1");
  check_layout(dim_, layout_);
}

Operator::Operator(int dim, std::vector<cplx> entries, std::optional<BipartiteLayout> layout)
    : dim_(dim), a_(std::move(entries)), layout_(layout) {
  if (dim < 1) throw ParameterOutOfRange("operator dimension must be >= 1");
  if (a_.size() != static_cast<size_t>(dim) * dim) {
    std::ostringstream os;
    os << "entry count " << a_.size() << " is not " << dim << "x" << dim;
    throw DimensionMismatch(os.str());
  }
  check_layout(dim_, layout_);
}

Operator Operator::identity(int dim, std::optional<BipartiteLayout> layout) {
  Operator m(dim, layout);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Operator Operator::with_layout(BipartiteLayout layout) const {
  check_layout(dim_, layout);
  Operator m = *this;
  m.layout_ = layout;
  return m;
}

Operator Operator::adjoint() const {
  Operator r(dim_, layout_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

double Operator::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

Operator& Operator::operator+=(const Operator& o) {
  check_same_dim(*this, o, "operator sum");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  check_same_dim(*this, o, "operator difference");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Operator& Operator::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  check_same_dim(a, b, "matrix product");
  const int n = a.dim();
  Operator r(n, a.layout() ? a.layout() : b.layout());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

cplx trace(const Operator& m) {
  cplx t{0.0, 0.0};
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

cplx trace_product(const Operator& a, const Operator& b) {
  check_same_dim(a, b, "trace product");
  cplx t{0.0, 0.0};
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) t += a(i, k) * b(k, i);
  return t;
}

double frobenius_norm(const Operator& m) {
  double s = 0.0;
  for (const auto& v : m.entries()) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs_diff(const Operator& a, const Operator& b) {
  check_same_dim(a, b, "entrywise comparison");
  double worst = 0.0;
  for (size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

Operator kron(const Operator& a, const Operator& b) {
  const int na = a.dim(), nb = b.dim();
  Operator r(na * nb, BipartiteLayout{na, nb});
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (int al = 0; al < nb; ++al)
        for (int be = 0; be < nb; ++be)
          r(i * nb + al, j * nb + be) = aij * b(al, be);
    }
  return r;
}

Operator transpose(const Operator& m) {
  Operator r(m.dim(), m.layout());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = m(j, i);
  return r;
}

Operator partial_transpose(const Operator& m, const BipartiteLayout& layout) {
  check_layout(m.dim(), layout);
  const int da = layout.dim_a, db = layout.dim_b;
  Operator r(m.dim(), layout);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int al = 0; al < db; ++al)
        for (int be = 0; be < db; ++be)
          r(i * db + al, j * db + be) = m(i * db + be, j * db + al);
  return r;
}

Operator partial_transpose(const Operator& m) {
  if (!m.layout()) {
    throw DimensionMismatch("partial transpose needs a bipartite layout");
  }
  return partial_transpose(m, *m.layout());
}

Operator commutator(const Operator& a, const Operator& b) {
  check_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Operator anticommutator(const Operator& a, const Operator& b) {
  check_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

std::vector<double> hermitian_eigenvalues(const Operator& m, double herm_tol) {
  if (!m.is_hermitian(herm_tol)) {
    std::ostringstream os;
    os << "matrix is not Hermitian (defect " << m.hermiticity_defect() << ")";
    throw NotHermitian(os.str());
  }
  const int n = m.dim();
  // Work on the exactly Hermitized copy so rounding asymmetry cannot bias
  // the rotations.
  std::vector<cplx> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(i) * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));

  auto at = [&](int i, int j) -> cplx& { return a[static_cast<size_t>(i) * n + j]; };

  double scale = 0.0;
  for (const auto& v : a) scale += std::norm(v);
  scale = std::sqrt(scale);
  const double off_threshold = 1e-13 * std::max(1.0, scale);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off += std::norm(at(i, j));
    if (std::sqrt(off) <= off_threshold) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = at(i, i).real();
      std::sort(eig.begin(), eig.end());
      return eig;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = at(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;

        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phase = apq / r;

        // A <- V^dagger A V with the plane rotation
        // V = [[c, s*phase], [-s*conj(phase), c]] on coordinates (p, q).
        for (int k = 0; k < n; ++k) {
          const cplx akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * std::conj(phase) * akq;
          at(k, q) = s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * phase * aqk;
          at(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
      }
    }
  }
  throw EigensolverFailure("Jacobi eigensolver did not converge in 100 sweeps");
}

std::pair<bool, double> is_psd(const Operator& m, double psd_tol, double herm_tol) {
  if (psd_tol < 0.0) psd_tol = 1e-9 * m.dim();
  const auto eig = hermitian_eigenvalues(m, herm_tol);
  const double min_eig = eig.front();
  return {min_eig >= -psd_tol, min_eig};
}

DensityMatrix::DensityMatrix(Operator op, DensityOptions opts) : op_(std::move(op)) {
  const double defect = op_.hermiticity_defect();
  if (defect > opts.herm_tol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max |m - m^dagger| = " << defect << ")";
    throw NotHermitian(os.str());
  }
  if (opts.renormalize) {
    const cplx t = trace(op_);
    if (std::abs(t) < 1e-300) throw NotNormalized("cannot renormalize a traceless matrix");
    op_ *= 1.0 / t;
  }
  const cplx t = trace(op_);
  if (std::abs(t - cplx{1.0, 0.0}) > opts.trace_tol) {
    std::ostringstream os;
    os << "density matrix trace is " << t.real();
    if (t.imag() != 0.0) os << (t.imag() < 0 ? "" : "+") << t.imag() << "i";
    os << ", expected 1";
    throw NotNormalized(os.str());
  }
  const double psd_tol = opts.psd_tol < 0.0 ? 1e-9 * op_.dim() : opts.psd_tol;
  const auto [ok, min_eig] = is_psd(op_, psd_tol, opts.herm_tol);
  if (!ok) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << min_eig;
    throw NotPositiveSemidefinite(os.str());
  }
}

double expectation(const DensityMatrix& rho, const Operator& m, double herm_tol,
                   double imag_tol) {
  if (rho.dim() != m.dim()) {
    std::ostringstream os;
    os << "expectation: state dim " << rho.dim() << " vs observable dim " << m.dim();
    throw DimensionMismatch(os.str());
  }
  if (!m.is_hermitian(herm_tol)) {
    std::ostringstream os;
    os << "observable is not Hermitian (defect " << m.hermiticity_defect() << ")";
    throw NotHermitian(os.str());
  }
  const cplx t = trace_product(rho.op(), m);
  if (std::abs(t.imag()) > imag_tol) {
    std::ostringstream os;
    os << "expectation has imaginary residue " << t.imag();
    throw NonRealExpectation(os.str());
  }
  return t.real();
}

}  // namespace sepcheck
