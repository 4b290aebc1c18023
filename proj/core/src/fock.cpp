#include "pairhop/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pairhop {

namespace {

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* op) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (operands live on different spaces)");
    }
}

void require_mode(const HilbertSpace& space, int mode, const char* op) {
    if (mode < 0 || mode >= space.modes()) {
        throw std::out_of_range(std::string(op) + ": mode index out of range");
    }
}

} // namespace

HilbertSpace::HilbertSpace(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
    if (cutoffs_.empty()) throw std::invalid_argument("HilbertSpace: at least one mode required");
    Index d = 1;
    for (int n : cutoffs_) {
        if (n <= 0) throw std::invalid_argument("HilbertSpace: cutoffs must be positive");
        if (d > (1 << 24) / n) throw std::invalid_argument("HilbertSpace: total dimension too large for dense storage");
        d *= n;
    }
    dim_ = d;
}

int HilbertSpace::cutoff(int mode) const {
    require_mode(*this, mode, "HilbertSpace::cutoff");
    return cutoffs_[static_cast<std::size_t>(mode)];
}

Index HilbertSpace::stride(int mode) const {
    require_mode(*this, mode, "HilbertSpace::stride");
    Index s = 1;
    for (int m = mode + 1; m < modes(); ++m) s *= cutoffs_[static_cast<std::size_t>(m)];
    return s;
}

Index HilbertSpace::index(std::span<const int> occupations) const {
    if (static_cast<int>(occupations.size()) != modes()) {
        throw std::invalid_argument("HilbertSpace::index: wrong number of occupations");
    }
    Index idx = 0;
    for (int m = 0; m < modes(); ++m) {
        const int n = occupations[static_cast<std::size_t>(m)];
        if (n < 0 || n >= cutoffs_[static_cast<std::size_t>(m)]) {
            throw std::out_of_range("HilbertSpace::index: occupation >= cutoff");
        }
        idx = idx * cutoffs_[static_cast<std::size_t>(m)] + n;
    }
    return idx;
}

std::vector<int> HilbertSpace::occupations(Index idx) const {
    if (idx < 0 || idx >= dim_) throw std::out_of_range("HilbertSpace::occupations: index out of range");
    std::vector<int> occ(static_cast<std::size_t>(modes()));
    for (int m = modes() - 1; m >= 0; --m) {
        const int n = cutoffs_[static_cast<std::size_t>(m)];
        occ[static_cast<std::size_t>(m)] = static_cast<int>(idx % n);
        idx /= n;
    }
    return occ;
}

int HilbertSpace::occupation(Index idx, int mode) const {
    require_mode(*this, mode, "HilbertSpace::occupation");
    return static_cast<int>((idx / stride(mode)) % cutoffs_[static_cast<std::size_t>(mode)]);
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("StateVector::normalized: zero state");
    return {space, amplitudes / n};
}

// ----------------------------- constructors --------------------------------

Operator identity(const HilbertSpace& space) {
    return {space, Matrix::Identity(space.dim(), space.dim()), true};
}

Operator zero_operator(const HilbertSpace& space) {
    return {space, Matrix::Zero(space.dim(), space.dim()), true};
}

Operator destroy(const HilbertSpace& space, int mode) {
    require_mode(space, mode, "destroy");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    const Index s = space.stride(mode);
    for (Index idx = 0; idx < space.dim(); ++idx) {
        const int n = space.occupation(idx, mode);
        if (n > 0) m(idx - s, idx) = std::sqrt(static_cast<double>(n));
    }
    return {space, std::move(m), false};
}

Operator create(const HilbertSpace& space, int mode) {
    return dagger(destroy(space, mode));
}

Operator number(const HilbertSpace& space, int mode) {
    require_mode(space, mode, "number");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (Index idx = 0; idx < space.dim(); ++idx) {
        m(idx, idx) = static_cast<double>(space.occupation(idx, mode));
    }
    return {space, std::move(m), true};
}

Operator parity(const HilbertSpace& space, int mode) {
    require_mode(space, mode, "parity");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    for (Index idx = 0; idx < space.dim(); ++idx) {
        m(idx, idx) = (space.occupation(idx, mode) % 2 == 0) ? 1.0 : -1.0;
    }
    return {space, std::move(m), true};
}

Operator embed_single_mode(const HilbertSpace& space, int mode, const Matrix& local,
                           bool hermitian_hint) {
    require_mode(space, mode, "embed_single_mode");
    const int n_mode = space.cutoff(mode);
    if (local.rows() != n_mode || local.cols() != n_mode) {
        throw std::invalid_argument("embed_single_mode: local matrix does not match the mode cutoff");
    }
    Matrix out = Matrix::Zero(space.dim(), space.dim());
    const Index s = space.stride(mode);
    const Index block = s * n_mode;
    for (Index hi = 0; hi < space.dim() / block; ++hi) {
        for (int row = 0; row < n_mode; ++row) {
            for (int col = 0; col < n_mode; ++col) {
                const Complex v = local(row, col);
                if (v == Complex(0.0, 0.0)) continue;
                const Index r0 = hi * block + row * s;
                const Index c0 = hi * block + col * s;
                for (Index lo = 0; lo < s; ++lo) out(r0 + lo, c0 + lo) = v;
            }
        }
    }
    return {space, std::move(out), hermitian_hint};
}

StateVector fock_state(const HilbertSpace& space, std::span<const int> occupations) {
    Vector v = Vector::Zero(space.dim());
    v(space.index(occupations)) = 1.0;
    return {space, std::move(v)};
}

StateVector zero_state(const HilbertSpace& space) {
    return {space, Vector::Zero(space.dim())};
}

// ------------------------------- algebra -----------------------------------

Operator operator+(const Operator& a, const Operator& b) {
    require_same_space(a.space, b.space, "operator+");
    return {a.space, a.entries + b.entries, a.hermitian_hint && b.hermitian_hint};
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_space(a.space, b.space, "operator-");
    return {a.space, a.entries - b.entries, a.hermitian_hint && b.hermitian_hint};
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_space(a.space, b.space, "operator*");
    return {a.space, a.entries * b.entries, false};
}

Operator operator*(Complex scale, const Operator& a) {
    return {a.space, scale * a.entries, a.hermitian_hint && scale.imag() == 0.0};
}

Operator dagger(const Operator& a) {
    return {a.space, a.entries.adjoint(), a.hermitian_hint};
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_space(a.space, b.space, "commutator");
    return {a.space, a.entries * b.entries - b.entries * a.entries, false};
}

Operator anticommutator(const Operator& a, const Operator& b) {
    require_same_space(a.space, b.space, "anticommutator");
    return {a.space, a.entries * b.entries + b.entries * a.entries, false};
}

StateVector apply(const Operator& op, const StateVector& psi) {
    require_same_space(op.space, psi.space, "apply");
    return {psi.space, op.entries * psi.amplitudes};
}

Complex expectation(const Operator& op, const StateVector& psi) {
    require_same_space(op.space, psi.space, "expectation");
    const double n2 = psi.amplitudes.squaredNorm();
    if (n2 == 0.0) throw std::invalid_argument("expectation: zero state");
    return psi.amplitudes.dot(op.entries * psi.amplitudes) / n2;
}

Complex expectation(const Operator& op, const DensityMatrix& rho) {
    require_same_space(op.space, rho.space, "expectation");
    const Complex tr = rho.entries.trace();
    if (tr == Complex(0.0, 0.0)) throw std::invalid_argument("expectation: traceless density matrix");
    return (op.entries * rho.entries).trace() / tr;
}

double fidelity(const StateVector& a, const StateVector& b) {
    require_same_space(a.space, b.space, "fidelity");
    const double na = a.amplitudes.squaredNorm();
    const double nb = b.amplitudes.squaredNorm();
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("fidelity: zero state");
    return std::norm(a.amplitudes.dot(b.amplitudes)) / (na * nb);
}

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
    const double scale = max_abs(m);
    if (scale == 0.0) return true;
    return max_abs(Matrix(m - m.adjoint())) <= rel_tol * scale;
}

// ----------------------------- reductions ----------------------------------

DensityMatrix partial_trace(const StateVector& psi, int keep_mode) {
    require_mode(psi.space, keep_mode, "partial_trace");
    const int n_keep = psi.space.cutoff(keep_mode);
    const Index s = psi.space.stride(keep_mode);
    const Index block = s * n_keep;
    Matrix rho = Matrix::Zero(n_keep, n_keep);
    for (Index hi = 0; hi < psi.space.dim() / block; ++hi) {
        for (Index lo = 0; lo < s; ++lo) {
            const Index base = hi * block + lo;
            for (int r = 0; r < n_keep; ++r) {
                const Complex ar = psi.amplitudes(base + r * s);
                if (ar == Complex(0.0, 0.0)) continue;
                for (int c = 0; c < n_keep; ++c) {
                    rho(r, c) += ar * std::conj(psi.amplitudes(base + c * s));
                }
            }
        }
    }
    return {HilbertSpace({n_keep}), std::move(rho)};
}

DensityMatrix partial_trace(const DensityMatrix& rho_in, int keep_mode) {
    require_mode(rho_in.space, keep_mode, "partial_trace");
    const int n_keep = rho_in.space.cutoff(keep_mode);
    const Index s = rho_in.space.stride(keep_mode);
    const Index block = s * n_keep;
    Matrix rho = Matrix::Zero(n_keep, n_keep);
    for (Index hi = 0; hi < rho_in.space.dim() / block; ++hi) {
        for (Index lo = 0; lo < s; ++lo) {
            const Index base = hi * block + lo;
            for (int r = 0; r < n_keep; ++r) {
                for (int c = 0; c < n_keep; ++c) {
                    rho(r, c) += rho_in.entries(base + r * s, base + c * s);
                }
            }
        }
    }
    return {HilbertSpace({n_keep}), std::move(rho)};
}

double purity(const DensityMatrix& rho) {
    return (rho.entries * rho.entries).trace().real();
}

} // namespace pairhop
