#pragma once

// Small quantum group U_q sl(2) at an odd root of unity q = zeta_l, l >= 3:
// generators E, F, K with E^l = F^l = 0, K^l = 1,
//     K E = q^2 E K,   K F = q^{-2} F K,   [E, F] = (K - K^{-1})/(q - q^{-1}),
// on the PBW basis F^m E^n K^k (index (m*l + n)*l + k), dim l^3.
// Scalars live in Q(zeta_{8l}): q = zeta_l, q^{1/2} = zeta_{2l}, i, sqrt(2),
// sqrt(l) all have exact representatives there.
//
// Structure maps, the universal R-matrix, the ribbon element, integrals, the
// canonical central basis built from the Casimir element, simple modules
// V_1..V_l and projective indecomposables P_1..P_{l-1}, and primitive
// idempotents (weight projector times block projector) are all constructed
// here; verification lives in the test suites.

#include "../center.hpp"
#include "common.hpp"

namespace hopfcas::families {

struct UqScalars {
    long l;      // odd, >= 3
    long h;      // l = 2h + 1
    long N;      // conductor 8l

    explicit UqScalars(long l_) : l(l_), h((l_ - 1) / 2), N(8 * l_) {}

    Cyclo q(long e) const { return Cyclo::root_of_unity(N, mod(8 * e)); }
    /// q^{e/2} as a power of zeta_{2l}.
    Cyclo qh(long e) const { return Cyclo::root_of_unity(N, mod(4 * e)); }
    /// q^{e/2} read inside mu_l: q^{(l+1)/2 * e}.  Half-integer powers in the
    /// ribbon element and its canonical decomposition use this square root.
    Cyclo qh_modl(long e) const { return q(((l + 1) / 2) * e); }
    Cyclo qint(long m) const { // [m] = (q^m - q^{-m})/(q - q^{-1})
        Cyclo num = q(m) - q(-m);
        return num / (q(1) - q(-1));
    }
    Cyclo qfact(long m) const {
        Cyclo f = Cyclo(1).embedded(N);
        for (long j = 2; j <= m; ++j) f *= qint(j);
        return f;
    }
    Cyclo qbinom(long m, long r) const { return qfact(m) / (qfact(r) * qfact(m - r)); }

private:
    long mod(long e) const { return ((e % N) + N) % N; }
};

struct UqIndex {
    long l;
    long dim() const { return l * l * l; }
    long idx(long m, long n, long k) const { return (m * l + n) * l + ((k % l) + l) % l; }
    void decode(long p, long& m, long& n, long& k) const {
        k = p % l;
        p /= l;
        n = p % l;
        m = p / l;
    }
    long e_index() const { return idx(0, 1, 0); }
    long f_index() const { return idx(1, 0, 0); }
    long k_index() const { return idx(0, 0, 1); }
    std::string label(long p) const {
        long m, n, k;
        decode(p, m, n, k);
        std::string s;
        auto app = [&](const char* g, long e) {
            if (e == 1) s += g;
            else if (e > 1) s += std::string(g) + std::to_string(e);
        };
        app("F", m);
        app("E", n);
        app("K", k);
        return s.empty() ? "1" : s;
    }
};

/// Structure-constant row via generator-wise left multiplication:
/// b_p * b_q = F^m (E^n (K^k b_q)).
inline SparseRow uqsl2_mul(const UqScalars& S, const UqIndex& ix, long p, long q) {
    long m, n, k;
    ix.decode(p, m, n, k);
    const long l = ix.l;
    SparseRow cur = sv_unit(q);
    auto apply_k = [&](const SparseRow& v) {
        SparseRow out;
        for (const auto& [b, c] : v) {
            long bm, bn, bk;
            ix.decode(b, bm, bn, bk);
            sv_add_scaled(out, c * S.q(2 * (bn - bm)), sv_unit(ix.idx(bm, bn, bk + 1)));
        }
        return out;
    };
    auto apply_f = [&](const SparseRow& v) {
        SparseRow out;
        for (const auto& [b, c] : v) {
            long bm, bn, bk;
            ix.decode(b, bm, bn, bk);
            if (bm + 1 < l) sv_add_scaled(out, c, sv_unit(ix.idx(bm + 1, bn, bk)));
        }
        return out;
    };
    auto apply_e = [&](const SparseRow& v) {
        SparseRow out;
        Cyclo denom = S.q(1) - S.q(-1);
        for (const auto& [b, c] : v) {
            long bm, bn, bk;
            ix.decode(b, bm, bn, bk);
            if (bn + 1 < l) sv_add_scaled(out, c, sv_unit(ix.idx(bm, bn + 1, bk)));
            if (bm >= 1) {
                Cyclo f = c * S.qint(bm) / denom;
                sv_add_scaled(out, f * S.q(-(bm - 1) + 2 * bn), sv_unit(ix.idx(bm - 1, bn, bk + 1)));
                sv_add_scaled(out, -f * S.q((bm - 1) - 2 * bn), sv_unit(ix.idx(bm - 1, bn, bk - 1)));
            }
        }
        return out;
    };
    for (long t = 0; t < k; ++t) cur = apply_k(cur);
    for (long t = 0; t < n; ++t) cur = apply_e(cur);
    for (long t = 0; t < m; ++t) cur = apply_f(cur);
    return cur;
}

inline std::unique_ptr<HopfAlgebra> uqsl2_algebra(long l) {
    if (l < 3 || l % 2 == 0) throw std::invalid_argument("uqsl2: parameter must be odd and >= 3");
    UqScalars S(l);
    UqIndex ix{l};
    auto H = std::make_unique<HopfAlgebra>();
    H->dim = ix.dim();
    H->conductor = S.N;
    for (long p = 0; p < H->dim; ++p) H->labels.push_back(ix.label(p));
    H->unit = sv_unit(0);
    H->generators = {ix.e_index(), ix.f_index(), ix.k_index()};
    H->basis_word_fn = [ix](long p) {
        long m, n, k;
        ix.decode(p, m, n, k);
        std::vector<long> w;
        for (long t = 0; t < m; ++t) w.push_back(ix.f_index());
        for (long t = 0; t < n; ++t) w.push_back(ix.e_index());
        for (long t = 0; t < k; ++t) w.push_back(ix.k_index());
        return w;
    };
    H->set_mult_provider([S, ix](long p, long q) { return uqsl2_mul(S, ix, p, q); }, true);

    const long d = H->dim;
    long E = ix.e_index(), F = ix.f_index(), K = ix.k_index();
    std::map<long, SparseRow> gc, ga;
    std::map<long, Cyclo> ge;
    gc[K] = sv_unit(K * d + K);
    SparseRow dE = sv_unit(0L * d + E); // 1 (x) E + E (x) K
    sv_add_scaled(dE, Cyclo(1), sv_unit(E * d + K));
    gc[E] = dE;
    SparseRow dF = sv_unit(ix.idx(0, 0, l - 1) * d + F); // K^{-1} (x) F + F (x) 1
    sv_add_scaled(dF, Cyclo(1), sv_unit(F * d + 0));
    gc[F] = dF;
    ge[E] = ge[F] = Cyclo(0).embedded(S.N);
    ge[K] = Cyclo(1).embedded(S.N);
    ga[K] = sv_unit(ix.idx(0, 0, l - 1));
    ga[E] = sv_scale(Cyclo(-1), H->mul(sv_unit(E), sv_unit(ix.idx(0, 0, l - 1)))); // -E K^{-1}
    ga[F] = sv_scale(Cyclo(-1), H->mul(sv_unit(K), sv_unit(F)));                   // -K F
    extend_structure_from_generators(*H, gc, ge, ga);
    return H;
}

/// Universal R-matrix
///   R = (1/l) sum_{m,i,j} ((q - q^{-1})^m / [m]!) q^{m(m-1)/2 + 2m(i-j) - 2ij}
///        E^m K^i (x) F^m K^j.
inline SparseRow uqsl2_r_matrix(const HopfAlgebra& H, long l) {
    UqScalars S(l);
    UqIndex ix{l};
    const long d = H.dim;
    Cyclo inv_l = Cyclo(Rat(1, l)).embedded(S.N);
    SparseRow R;
    for (long m = 0; m < l; ++m) {
        Cyclo base = inv_l * (S.q(1) - S.q(-1)).pow(m) / S.qfact(m);
        for (long i = 0; i < l; ++i)
            for (long j = 0; j < l; ++j) {
                Cyclo c = base * S.qh(m * (m - 1) + 4 * m * (i - j) - 4 * i * j);
                if (c.is_zero()) continue;
                sv_add_scaled(R, c, sv_unit(ix.idx(0, m, i) * d + ix.idx(m, 0, j)));
            }
    }
    return R;
}

/// Ribbon element
///   theta = (1/l)(sum_r q^{h r^2}) sum_{m,j} ((q - q^{-1})^m/[m]!) (-1)^m
///            q^{-m/2 + mj + (j+1)^2/2} F^m E^m K^j,
/// half-integer q-powers taken inside mu_l (q^{1/2} = q^{(l+1)/2}); with that
/// reading theta equals K^{-1} u exactly and satisfies the Q^{-1}-orientation
/// twist axiom.
inline SparseRow uqsl2_ribbon(const HopfAlgebra& H, long l) {
    UqScalars S(l);
    UqIndex ix{l};
    Cyclo gauss = Cyclo(0).embedded(S.N);
    for (long r = 0; r < l; ++r) gauss += S.q(S.h * r * r);
    Cyclo pref = gauss * Cyclo(Rat(1, l)).embedded(S.N);
    SparseRow v;
    for (long m = 0; m < l; ++m) {
        Cyclo base = pref * (S.q(1) - S.q(-1)).pow(m) / S.qfact(m);
        if (m % 2) base = -base;
        for (long j = 0; j < l; ++j) {
            Cyclo c = base * S.qh_modl(-m + 2 * m * j + (j + 1) * (j + 1));
            if (!c.is_zero()) sv_add_scaled(v, c, sv_unit(ix.idx(m, m, j)));
        }
    }
    return v;
}

/// Integral Lambda = zeta F^{l-1} E^{l-1} sum_j K^j with zeta =
/// sqrt(l)/([l-1]!)^2.  The cointegral used by the Lyubashenko-Majid maps is
/// the (id (x) lambda)-sided one, supported at F^{l-1} E^{l-1} K^{l-1};
/// the (lambda (x) id)-sided cointegral is supported at F^{l-1} E^{l-1} K
/// instead (that is the displayed closed form) and is returned separately.
struct UqIntegralData {
    SparseRow Lambda;
    SparseRow lambda_lm;    // (id (x) lambda) Delta = lambda(.) 1, lambda(Lambda) = 1
    SparseRow lambda_other; // (lambda (x) id) Delta = lambda(.) 1
};

inline UqIntegralData uqsl2_integrals(const HopfAlgebra& H, long l) {
    UqScalars S(l);
    UqIndex ix{l};
    Cyclo zeta = Cyclo::sqrt_integer(l, S.N) / (S.qfact(l - 1) * S.qfact(l - 1));
    UqIntegralData d;
    for (long j = 0; j < l; ++j) sv_add_scaled(d.Lambda, zeta, sv_unit(ix.idx(l - 1, l - 1, j)));
    d.lambda_lm = sv_unit(ix.idx(l - 1, l - 1, l - 1), zeta.inverse());
    d.lambda_other = sv_unit(ix.idx(l - 1, l - 1, 1), zeta.inverse());
    return d;
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

/// Simple module V_r (r = 1..l): highest weight q^{r-1}, dim r.
inline ModuleRep uqsl2_simple(const HopfAlgebra& H, long l, long r) {
    UqScalars S(l);
    UqIndex ix{l};
    Mat km(r, r), em(r, r), fm(r, r);
    for (long n = 0; n < r; ++n) {
        km(n, n) = S.q(r - 1 - 2 * n);
        if (n + 1 < r) fm(n + 1, n) = Cyclo(1).embedded(S.N);
        if (n >= 1) em(n - 1, n) = S.qint(n) * S.qint(r - n);
    }
    std::map<long, Mat> act{{ix.k_index(), km}, {ix.e_index(), em}, {ix.f_index(), fm}};
    return module_from_generators(H, "V" + std::to_string(r), r, std::move(act), r == l);
}

/// Projective indecomposable P_r (r = 1..l-1), dim 2l, on the basis
/// x_0..x_{l-r-1}, y_0..y_{l-r-1}, a_0..a_{r-1}, b_0..b_{r-1}.
inline ModuleRep uqsl2_projective(const HopfAlgebra& H, long l, long r) {
    UqScalars S(l);
    UqIndex ix{l};
    const long s = l - r;       // dim of the x/y blocks
    const long d = 2 * l;
    auto X = [&](long k) { return k; };
    auto Y = [&](long k) { return s + k; };
    auto A = [&](long n) { return 2 * s + n; };
    auto B = [&](long n) { return 2 * s + r + n; };
    Mat km(d, d), em(d, d), fm(d, d);
    for (long k = 0; k < s; ++k) {
        km(X(k), X(k)) = S.q(l - r - 1 - 2 * k);
        km(Y(k), Y(k)) = S.q(l - r - 1 - 2 * k);
    }
    for (long n = 0; n < r; ++n) {
        km(A(n), A(n)) = S.q(r - 1 - 2 * n);
        km(B(n), B(n)) = S.q(r - 1 - 2 * n);
    }
    for (long k = 1; k < s; ++k) {
        em(X(k - 1), X(k)) = S.qint(k) * S.qint(l - r - k);
        em(Y(k - 1), Y(k)) = S.qint(k) * S.qint(l - r - k);
    }
    em(A(r - 1), Y(0)) = Cyclo(1).embedded(S.N);
    for (long n = 1; n < r; ++n) {
        em(A(n - 1), A(n)) = S.qint(n) * S.qint(r - n);
        em(B(n - 1), B(n)) = S.qint(n) * S.qint(r - n);
        em(A(n - 1), B(n)) = Cyclo(1).embedded(S.N);
    }
    em(X(s - 1), B(0)) = Cyclo(1).embedded(S.N);
    for (long k = 0; k + 1 < s; ++k) {
        fm(X(k + 1), X(k)) = Cyclo(1).embedded(S.N);
        fm(Y(k + 1), Y(k)) = Cyclo(1).embedded(S.N);
    }
    fm(A(0), X(s - 1)) = Cyclo(1).embedded(S.N);
    for (long n = 0; n + 1 < r; ++n) {
        fm(A(n + 1), A(n)) = Cyclo(1).embedded(S.N);
        fm(B(n + 1), B(n)) = Cyclo(1).embedded(S.N);
    }
    fm(Y(0), B(r - 1)) = Cyclo(1).embedded(S.N);
    std::map<long, Mat> act{{ix.k_index(), km}, {ix.e_index(), em}, {ix.f_index(), fm}};
    return module_from_generators(H, "P" + std::to_string(r), d, std::move(act), true);
}

// ---------------------------------------------------------------------------
// Canonical central basis from the Casimir element
// ---------------------------------------------------------------------------

struct UqCenterData {
    SparseRow casimir;                 // C = EF + (q^{-1}K + qK^{-1})/(q-q^{-1})^2
    std::vector<Cyclo> bval;           // bval[0] = Steinberg eigenvalue, bval[j] = (q^j+q^{-j})/(q-q^{-1})^2
    std::vector<SparseRow> P;          // block projectors P_0..P_h
    std::vector<SparseRow> Nj;         // nilpotents N_1..N_h (index 1..h; [0] unused)
    std::vector<SparseRow> Nplus, Nminus;
    std::vector<SparseRow> chi;        // chi[r] = Drinfeld image of qCh(V_r), r = 1..l
    std::vector<SparseRow> phi;        // phi[r] = Radford image of qCh(V_r), r = 1..l
    std::vector<SparseRow> nu;         // nu[r], r = 0..h
    std::vector<SparseRow> rho;        // rho[r], r = 1..h ([0] unused)
    std::vector<SparseRow> vphi;       // vphi[r], r = 1..h ([0] unused)
};

inline SparseRow uqsl2_weight_projector(const HopfAlgebra& H, long l, long w) {
    UqScalars S(l);
    UqIndex ix{l};
    SparseRow out;
    for (long i = 0; i < l; ++i)
        sv_add_scaled(out, S.q(-w * i) * Cyclo(Rat(1, l)).embedded(S.N), sv_unit(ix.idx(0, 0, i)));
    return out;
}

inline UqCenterData uqsl2_center_data(const HopfAlgebra& H, long l, const SparseRow& R,
                                      const SparseRow& Lambda,
                                      const std::vector<ModuleRep>& simples) {
    UqScalars S(l);
    UqIndex ix{l};
    const long h = S.h;
    UqCenterData Z;

    Cyclo dd = (S.q(1) - S.q(-1)).pow(2);
    SparseRow cas = H.mul(sv_unit(ix.e_index()), sv_unit(ix.f_index()));
    sv_add_scaled(cas, S.q(-1) / dd, sv_unit(ix.idx(0, 0, 1)));
    sv_add_scaled(cas, S.q(1) / dd, sv_unit(ix.idx(0, 0, l - 1)));
    Z.casimir = cas;

    Z.bval.resize(h + 1);
    Z.bval[0] = (S.q(l) + S.q(-l)) / dd; // = 2/(q-q^{-1})^2, the Steinberg block
    for (long j = 1; j <= h; ++j) Z.bval[j] = (S.q(j) + S.q(-j)) / dd;

    // powers of the Casimir
    std::vector<SparseRow> cpow(l + 1);
    cpow[0] = H.unit;
    for (long t = 1; t <= l; ++t) cpow[t] = H.mul(cpow[t - 1], cas);
    auto eval_poly = [&](const std::vector<Cyclo>& coeffs) {
        SparseRow out;
        for (size_t t = 0; t < coeffs.size(); ++t)
            if (!coeffs[t].is_zero()) sv_add_scaled(out, coeffs[t], cpow[t]);
        return out;
    };
    // phi_j(x) = prod over roots != b_j, with multiplicity (Steinberg simple,
    // others double); returns polynomial coefficients
    auto poly_mul_lin = [&](std::vector<Cyclo> p, const Cyclo& root) {
        // multiply by (x - root)
        std::vector<Cyclo> out(p.size() + 1, Cyclo(0).embedded(S.N));
        for (size_t t = 0; t < p.size(); ++t) {
            out[t + 1] += p[t];
            out[t] -= root * p[t];
        }
        return out;
    };
    auto phi_poly = [&](long j) {
        std::vector<Cyclo> p{Cyclo(1).embedded(S.N)};
        for (long i = 0; i <= h; ++i) {
            if (i == j) continue;
            p = poly_mul_lin(p, Z.bval[i]);
            if (i != 0) p = poly_mul_lin(p, Z.bval[i]); // non-Steinberg roots are double
        }
        return p;
    };
    auto poly_eval = [&](const std::vector<Cyclo>& p, const Cyclo& x) {
        Cyclo acc = Cyclo(0).embedded(S.N);
        for (size_t t = p.size(); t-- > 0;) acc = acc * x + p[t];
        return acc;
    };
    auto poly_deriv = [&](const std::vector<Cyclo>& p) {
        std::vector<Cyclo> d1;
        for (size_t t = 1; t < p.size(); ++t) d1.push_back(Cyclo(Rat(static_cast<long>(t))) * p[t]);
        return d1;
    };

    Z.P.resize(h + 1);
    Z.Nj.resize(h + 1);
    Z.Nplus.resize(h + 1);
    Z.Nminus.resize(h + 1);
    for (long j = 0; j <= h; ++j) {
        auto pj = phi_poly(j);
        Cyclo pj_at = poly_eval(pj, Z.bval[j]);
        Cyclo dpj_at = poly_eval(poly_deriv(pj), Z.bval[j]);
        SparseRow phiC = eval_poly(pj);
        // P_j = phi_j(C)/phi_j(b_j) - phi_j'(b_j)/phi_j(b_j)^2 (C - b_j) phi_j(C)
        SparseRow cb = H.mul(cas, phiC);
        sv_add_scaled(cb, -Z.bval[j], phiC); // (C - b_j) phi_j(C)
        SparseRow Pj = sv_scale(pj_at.inverse(), phiC);
        sv_add_scaled(Pj, -dpj_at / (pj_at * pj_at), cb);
        Z.P[j] = std::move(Pj);
        if (j >= 1) {
            Z.Nj[j] = sv_scale(pj_at.inverse(), cb);
            SparseRow piplus; // sum over the weights of V_j
            for (long n = 0; n < j; ++n)
                sv_add_scaled(piplus, Cyclo(1), uqsl2_weight_projector(H, l, j - 1 - 2 * n));
            Z.Nplus[j] = H.mul(piplus, Z.Nj[j]);
            Z.Nminus[j] = Z.Nj[j];
            sv_add_scaled(Z.Nminus[j], Cyclo(-1), Z.Nplus[j]);
        }
    }

    // chi(r) = Drinfeld image of the q-character of V_r, phi(r) its Radford image
    SparseRow Q = drinfeld_matrix(H, R);
    SparseRow Ginv = sv_unit(ix.idx(0, 0, l - 1)); // K^{-1}
    Z.chi.resize(l + 1);
    Z.phi.resize(l + 1);
    for (long r = 1; r <= l; ++r) {
        SparseRow qch = qcharacter(simples[r - 1], Ginv);
        Z.chi[r] = drinfeld_map(H, Q, qch);
        Z.phi[r] = radford_map(H, Lambda, qch);
    }
    Z.nu.resize(h + 1);
    Z.rho.resize(h + 1);
    Z.vphi.resize(h + 1);
    Z.nu[0] = Z.chi[l];
    for (long r = 1; r <= h; ++r) {
        Z.nu[r] = Z.chi[r];
        sv_add_scaled(Z.nu[r], Cyclo(1), Z.chi[l - r]);
        Z.rho[r] = sv_scale(Cyclo(Rat(l - r, l)), Z.chi[r]);
        sv_add_scaled(Z.rho[r], Cyclo(Rat(-r, l)), Z.chi[l - r]);
    }
    Cyclo inv_sqrt_l = Cyclo::sqrt_integer(l, S.N).inverse();
    for (long r = 1; r <= h; ++r) {
        SparseRow acc;
        for (long j = 1; j <= h; ++j) {
            SparseRow psi_j = sv_scale(Cyclo(Rat(l - j, l)), Z.phi[j]);
            sv_add_scaled(psi_j, Cyclo(Rat(-j, l)), Z.phi[l - j]);
            sv_add_scaled(acc, S.q(j * r) - S.q(-j * r), psi_j);
        }
        Z.vphi[r] = sv_scale(inv_sqrt_l, acc);
    }
    return Z;
}

/// Primitive idempotent with H e isomorphic to P_r (r < l) or V_l (r = l):
/// the K-weight projector at the highest weight of V_r times the Casimir
/// block projector of its linkage class.
inline SparseRow uqsl2_primitive_idempotent(const HopfAlgebra& H, long l, const UqCenterData& Z,
                                            long r) {
    long block = (r == l) ? 0 : std::min(r, l - r);
    return H.mul(uqsl2_weight_projector(H, l, r - 1), Z.P[block]);
}

} // namespace hopfcas::families
