// fock.hpp — Truncated multimode Fock-space algebra: spaces, ladder
// operators, tensor embedding, states, expectations, partial trace.
//
// Basis convention: occupation (n_0, ..., n_{M-1}) maps to the row-major
// index  idx = sum_m n_m * prod_{m' > m} N_{m'}  (mode 0 slowest). All
// operators are dense complex matrices over one HilbertSpace; values are
// immutable after construction and all operations are pure functions.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace pairhop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

class HilbertSpace {
public:
    explicit HilbertSpace(std::vector<int> cutoffs);

    int modes() const { return static_cast<int>(cutoffs_.size()); }
    int cutoff(int mode) const;
    const std::vector<int>& cutoffs() const { return cutoffs_; }
    Index dim() const { return dim_; }

    // prod_{m' > mode} N_{m'}
    Index stride(int mode) const;

    Index index(std::span<const int> occupations) const;
    std::vector<int> occupations(Index idx) const;

    // Occupation of one mode at a basis index, without building the vector.
    int occupation(Index idx, int mode) const;

    bool operator==(const HilbertSpace& other) const { return cutoffs_ == other.cutoffs_; }

private:
    std::vector<int> cutoffs_;
    Index dim_ = 0;
};

struct Operator {
    HilbertSpace space;
    Matrix entries;
    bool hermitian_hint = false;
};

struct StateVector {
    HilbertSpace space;
    Vector amplitudes;

    double norm() const { return amplitudes.norm(); }
    StateVector normalized() const;
};

struct DensityMatrix {
    HilbertSpace space;
    Matrix entries;

    double trace_real() const { return entries.trace().real(); }
};

// ----------------------------- constructors --------------------------------

Operator identity(const HilbertSpace& space);
Operator zero_operator(const HilbertSpace& space);

// Annihilation operator of `mode`, tensor-embedded with identities on the
// other modes; the single-mode block has entries sqrt(n) at (n-1, n).
Operator destroy(const HilbertSpace& space, int mode);
Operator create(const HilbertSpace& space, int mode);
Operator number(const HilbertSpace& space, int mode);
// diag((-1)^n) on the chosen mode.
Operator parity(const HilbertSpace& space, int mode);

// Embeds an N_mode x N_mode single-mode matrix into the full space.
Operator embed_single_mode(const HilbertSpace& space, int mode, const Matrix& local,
                           bool hermitian_hint = false);

StateVector fock_state(const HilbertSpace& space, std::span<const int> occupations);
StateVector zero_state(const HilbertSpace& space);

// ------------------------------- algebra -----------------------------------

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex scale, const Operator& a);
inline Operator operator*(double scale, const Operator& a) { return Complex(scale, 0.0) * a; }

Operator dagger(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

StateVector apply(const Operator& op, const StateVector& psi);

// <psi|O|psi> / <psi|psi>  (renormalizing convention).
Complex expectation(const Operator& op, const StateVector& psi);
// tr(O rho) / tr(rho).
Complex expectation(const Operator& op, const DensityMatrix& rho);

// |<a|b>|^2 / (<a|a><b|b>)
double fidelity(const StateVector& a, const StateVector& b);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol = 1e-12);

// ----------------------------- reductions ----------------------------------

// Reduced density matrix of `keep_mode`; trace preserved.
DensityMatrix partial_trace(const StateVector& psi, int keep_mode);
DensityMatrix partial_trace(const DensityMatrix& rho, int keep_mode);

// tr(rho^2)
double purity(const DensityMatrix& rho);

} // namespace pairhop
