#include "hlm/spinor.hpp"

#include <random>

namespace hlm {

namespace {
const GaussRational kI = GaussRational::i();
}

DiracSet build_dirac() {
    DiracSet d;
    CMatrix g0(4, 4);
    g0(0, 0) = 1;
    g0(1, 1) = 1;
    g0(2, 2) = -1;
    g0(3, 3) = -1;
    d.gamma[0] = g0;
    for (int k = 1; k <= 3; ++k) {
        CMatrix g(4, 4);
        const CMatrix s = pauli(k);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                g(r, c + 2) = s(r, c);
                g(r + 2, c) = -s(r, c);
            }
        d.gamma[k] = g;
    }
    d.gamma5 = kI * (d.gamma[0] * d.gamma[1] * d.gamma[2] * d.gamma[3]);
    return d;
}

std::array<GaussRational, 3> resolve_kappas(const SpinorOpConfig& cfg, const ParameterPoint& point) {
    if (cfg.zeta1 != 1 && cfg.zeta1 != -1) throw ParameterError("zeta1 must be +1 or -1");
    if (cfg.zeta2 != 1 && cfg.zeta2 != -1) throw ParameterError("zeta2 must be +1 or -1");
    if (is_zero(point.mu)) throw ParameterError("the spinor operators need a finite M^2 (mu != 0)");
    const std::array<Rational, 3> squares{-point.lambda / point.mu, Rational(-1) / point.mu, point.lambda};
    const std::array<const std::optional<GaussRational>*, 3> given{&cfg.kappa1, &cfg.kappa2, &cfg.kappa3};
    std::array<GaussRational, 3> out;
    for (int k = 0; k < 3; ++k) {
        const std::string name = "kappa" + std::to_string(k + 1);
        if (*given[k]) {
            const GaussRational& v = **given[k];
            if (v * v != GaussRational(squares[k]))
                throw ParameterError(name + " = " + v.to_string() + " does not square to " + to_string(squares[k]));
            out[k] = v;
        } else if (auto r = gauss_sqrt(squares[k])) {
            out[k] = *r;
        } else {
            throw ParameterError(name + "^2 = " + to_string(squares[k]) + " has no exact root; pass --" + name);
        }
    }
    return out;
}

void MatrixWeylOperator::add(const CMatrix& m, const WeylElement& w) {
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("coefficient matrix has wrong size");
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (!m(r, c).is_zero()) (*this)(r, c) += w * m(r, c);
}

MatrixWeylOperator MatrixWeylOperator::block(std::size_t r0, std::size_t c0, std::size_t n) const {
    MatrixWeylOperator out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

MatrixWeylOperator operator*(const MatrixWeylOperator& a, const MatrixWeylOperator& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("operator dimensions differ");
    MatrixWeylOperator out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            if (a(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < a.dim_; ++c)
                if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

MatrixWeylOperator operator*(const CMatrix& s, const MatrixWeylOperator& a) {
    MatrixWeylOperator out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
        for (std::size_t k = 0; k < a.dim_; ++k) {
            if (s(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += a(k, c) * s(r, k);
        }
    return out;
}

MatrixWeylOperator operator*(const MatrixWeylOperator& a, const CMatrix& s) {
    MatrixWeylOperator out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
        for (std::size_t k = 0; k < a.dim_; ++k)
            for (std::size_t c = 0; c < a.dim_; ++c)
                if (!s(k, c).is_zero()) out(r, c) += a(r, k) * s(k, c);
    return out;
}

MatrixWeylOperator operator-(const MatrixWeylOperator& a, const MatrixWeylOperator& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("operator dimensions differ");
    MatrixWeylOperator out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
}

bool MatrixWeylOperator::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

// Each term of the operator is a sum of (4x4 matrix) x (Weyl element); kept split by type.
std::vector<std::pair<CMatrix, WeylElement>> spinor_terms(const SpinorOpConfig& cfg, const ParameterPoint& point,
                                                          const XiRepConfig& xi, int which) {
    const auto kappa = resolve_kappas(cfg, point);
    const DiracSet d = build_dirac();
    const auto img = xi_rep(xi);
    std::vector<std::pair<CMatrix, WeylElement>> out;
    const GaussRational z1(cfg.zeta1), z2(cfg.zeta2);
    switch (which) {
        case 0:  // gamma_i p^i
            for (int i = 0; i < 4; ++i) out.emplace_back(GaussRational(metric(i)) * d.gamma[i], img[idx(P(i))]);
            break;
        case 1:  // -zeta1 zeta2 kappa1 gamma_i gamma5 x^i
            for (int i = 0; i < 4; ++i)
                out.emplace_back((-z1 * z2 * kappa[0] * GaussRational(metric(i))) * (d.gamma[i] * d.gamma5),
                                 img[idx(X(i))]);
            break;
        case 2:  // -zeta2 kappa2 gamma5 I
            out.emplace_back((-z2 * kappa[1]) * d.gamma5, img[idx(Gen::Id)]);
            break;
        case 3:  // -zeta1 kappa3 sum_{i<j} gamma_i gamma_j F^ij
            for (const auto& [i, j] : kLorentzPairs)
                out.emplace_back((-z1 * kappa[2] * GaussRational(metric(i) * metric(j))) * (d.gamma[i] * d.gamma[j]),
                                 img[idx(F(i, j))]);
            break;
        case 4:  // -n
            out.emplace_back(GaussRational(-cfg.n) * CMatrix::identity(4), WeylElement(GaussRational(1)));
            break;
    }
    return out;
}

}  // namespace

MatrixWeylOperator spinor_op4(const SpinorOpConfig& cfg, const ParameterPoint& point, const XiRepConfig& xi) {
    MatrixWeylOperator op(4);
    for (int t = 0; t < 5; ++t)
        for (const auto& [m, w] : spinor_terms(cfg, point, xi, t)) op.add(m, w);
    return op;
}

MatrixWeylOperator spinor_op8(const SpinorOpConfig& cfg, const ParameterPoint& point, const XiRepConfig& xi) {
    MatrixWeylOperator op(8);
    for (int t = 0; t < 5; ++t) {
        const CMatrix sigma = pauli((t == 1 || t == 2) ? 3 : 0);
        for (const auto& [m, w] : spinor_terms(cfg, point, xi, t)) op.add(kron(sigma, m), w);
    }
    return op;
}

WeylElement parity_transform(const WeylElement& w) {
    WeylElement out;
    for (const auto& [k, c] : w.terms()) {
        unsigned odd = 0;
        for (int i = 1; i < 4; ++i) odd += k.xi[i] + k.d[i];
        out.add_term(k, odd % 2 ? -c : c);
    }
    return out;
}

MatrixWeylOperator parity_transform(const MatrixWeylOperator& op) {
    MatrixWeylOperator out(op.dim());
    for (std::size_t r = 0; r < op.dim(); ++r)
        for (std::size_t c = 0; c < op.dim(); ++c) out(r, c) = parity_transform(op(r, c));
    return out;
}

IntertwinerResult intertwiner_search(const MatrixWeylOperator& D, const MatrixWeylOperator& Dp) {
    if (D.dim() != Dp.dim()) throw std::invalid_argument("operators differ in dimension");
    const std::size_t n = D.dim();
    auto unknown = [n](std::size_t r, std::size_t c) { return r * n + c; };

    // (S Dp - D S)_{rc} = sum_k S_rk Dp_kc - D_rk S_kc; one equation per Weyl monomial.
    std::map<std::tuple<std::size_t, std::size_t, WeylKey>, std::map<std::size_t, GaussRational>> equations;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t k = 0; k < n; ++k) {
                for (const auto& [key, v] : Dp(k, c).terms()) equations[{r, c, key}][unknown(r, k)] += v;
                for (const auto& [key, v] : D(r, k).terms()) equations[{r, c, key}][unknown(k, c)] -= v;
            }
    std::vector<std::map<std::size_t, GaussRational>> rows;
    for (auto& [key, row] : equations) {
        std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
        if (!row.empty()) rows.push_back(std::move(row));
    }
    CMatrix system(std::max<std::size_t>(rows.size(), 1), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, v] : rows[r]) system(r, col) = v;

    const auto basis = nullspace(system);
    IntertwinerResult result;
    result.dim = n;
    result.solution_dim = basis.size();

    auto to_matrix = [n](const std::vector<GaussRational>& v) {
        CMatrix s(n, n);
        for (std::size_t k = 0; k < v.size(); ++k) s(k / n, k % n) = v[k];
        return s;
    };
    auto accept = [&](const CMatrix& s) {
        if (determinant(s).is_zero()) return false;
        if (!(s * Dp - D * s).is_zero()) throw std::logic_error("intertwiner candidate fails the defining equation");
        result.S = s;
        return true;
    };
    if (basis.empty()) return result;

    const CMatrix id = CMatrix::identity(n);
    if ((id * Dp - D * id).is_zero() && accept(id)) return result;
    for (const auto& v : basis)
        if (accept(to_matrix(v))) return result;
    std::vector<GaussRational> sum(n * n);
    for (const auto& v : basis)
        for (std::size_t k = 0; k < v.size(); ++k) sum[k] += v[k];
    if (accept(to_matrix(sum))) return result;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<GaussRational> comb(n * n);
        for (const auto& v : basis) {
            const GaussRational c(dist(rng));
            for (std::size_t k = 0; k < v.size(); ++k) comb[k] += c * v[k];
        }
        if (accept(to_matrix(comb))) return result;
    }
    return result;
}

}  // namespace hlm
