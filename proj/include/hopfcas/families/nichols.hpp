#pragma once

// Nichols Hopf algebras K_n: the 2^(n+1)-dimensional Hopf algebra generated
// by a grouplike K with K^2 = 1 and n anticommuting skew-primitive nilpotents
// x_1..x_n with K x_i = -x_i K.  K_1 is Sweedler's four-dimensional Hopf
// algebra.  Basis: K^a x(S) for a in {0,1} and S an ascending word bitmask;
// index = a * 2^n + S.
//
// For even member count m = 2n the algebra K_m carries the quasitriangular
// structure induced from the double of K_n via K, Kbar -> K, with an explicit
// ribbon element; K_m is never factorizable.

#include "common.hpp"

namespace hopfcas::families {

struct NicholsIndex {
    long n;
    long words() const { return 1L << n; }
    long dim() const { return 2L << n; }
    long idx(long a, unsigned long mask) const { return a * words() + static_cast<long>(mask); }
    long k_index() const { return idx(1, 0); }
    long xi_index(long i) const { return idx(0, 1UL << (i - 1)); } // i = 1..n
    std::string label(long b) const {
        long a = b / words();
        unsigned long mask = static_cast<unsigned long>(b % words());
        std::string s = a ? "K" : "";
        for (long i = 1; i <= n; ++i)
            if (mask & (1UL << (i - 1))) s += "x" + std::to_string(i);
        return s.empty() ? "1" : s;
    }
};

/// Structure-constant row for (K^a x(S)) * (K^b x(T)).
inline SparseRow nichols_mul(const NicholsIndex& ix, long p, long q) {
    long a = p / ix.words(), b = q / ix.words();
    unsigned long S = static_cast<unsigned long>(p % ix.words());
    unsigned long T = static_cast<unsigned long>(q % ix.words());
    if (S & T) return {};
    int sign = interleave_sign(S, T);
    if (b && (popcount(S) % 2)) sign = -sign; // x(S) K = (-1)^{|S|} K x(S)
    return sv_unit(ix.idx((a + b) % 2, S | T), Cyclo(sign));
}

inline std::unique_ptr<HopfAlgebra> nichols_algebra(long n, long conductor = 8) {
    if (n < 1) throw std::invalid_argument("nichols: n must be >= 1");
    NicholsIndex ix{n};
    auto H = std::make_unique<HopfAlgebra>();
    H->dim = ix.dim();
    H->conductor = conductor;
    for (long b = 0; b < H->dim; ++b) H->labels.push_back(ix.label(b));
    H->unit = sv_unit(0);
    H->generators.push_back(ix.k_index());
    for (long i = 1; i <= n; ++i) H->generators.push_back(ix.xi_index(i));
    H->basis_word_fn = [ix](long b) {
        std::vector<long> w;
        if (b / ix.words()) w.push_back(ix.k_index());
        unsigned long mask = static_cast<unsigned long>(b % ix.words());
        for (long i = 1; i <= ix.n; ++i)
            if (mask & (1UL << (i - 1))) w.push_back(ix.xi_index(i));
        return w;
    };
    H->set_mult_provider([ix](long p, long q) { return nichols_mul(ix, p, q); }, true);

    const long d = H->dim;
    long K = ix.k_index();
    std::map<long, SparseRow> gc, ga;
    std::map<long, Cyclo> ge;
    gc[K] = sv_unit(K * d + K);
    ge[K] = Cyclo(1);
    ga[K] = sv_unit(K);
    for (long i = 1; i <= n; ++i) {
        long xi = ix.xi_index(i);
        SparseRow dx = sv_unit(K * d + xi);
        sv_add_scaled(dx, Cyclo(1), sv_unit(xi * d + 0));
        gc[xi] = dx;
        ge[xi] = Cyclo(0);
        ga[xi] = sv_unit(ix.idx(1, 1UL << (i - 1)), Cyclo(-1)); // -K x_i
    }
    extend_structure_from_generators(*H, gc, ge, ga);
    return H;
}

/// R-matrix on K_m for even m = 2n, induced from the double of K_n by the
/// quotient identifying the two grouplikes: the first n generators play the
/// unbarred role and the last n the barred one.
inline SparseRow nichols_r_matrix(const HopfAlgebra& H, long m) {
    if (m % 2 != 0) throw std::invalid_argument("induced R-matrix needs an even member count");
    long n = m / 2;
    NicholsIndex ix{m};
    const long d = H.dim;
    long K = ix.k_index();
    SparseRow R;
    for (unsigned long w = 0; w < (1UL << n); ++w) {
        int len = popcount(w);
        Cyclo c((len / 2) % 2 ? -1 : 1);
        // w (x) pi(wbar) K^{|w|}
        SparseRow second = H.mul(sv_unit(ix.idx(0, w << n)), sv_unit(ix.idx(len % 2, 0)));
        for (const auto& [j, cj] : second)
            sv_add_scaled(R, c * cj, sv_unit(ix.idx(0, w) * d + j));
    }
    // multiply by (id (x) pi)(Z) = (1(x)1 + K(x)1 + 1(x)K - K(x)K)/2
    SparseRow Z;
    Cyclo half(1, 2);
    sv_add_scaled(Z, half, sv_unit(0 * d + 0));
    sv_add_scaled(Z, half, sv_unit(K * d + 0));
    sv_add_scaled(Z, half, sv_unit(0 * d + K));
    sv_add_scaled(Z, -half, sv_unit(K * d + K));
    return H.ten_mul(R, Z);
}

/// Ribbon element for the induced R-matrix on K_{2n}.
inline SparseRow nichols_ribbon(const HopfAlgebra& H, long m) {
    if (m % 2 != 0) throw std::invalid_argument("induced ribbon needs an even member count");
    long n = m / 2;
    NicholsIndex ix{m};
    SparseRow v;
    for (unsigned long w = 0; w < (1UL << n); ++w) {
        int len = popcount(w);
        Cyclo c(((len + 1) / 2) % 2 ? -1 : 1);
        sv_add_scaled(v, c, sv_unit(ix.idx(0, w | (w << n))));
    }
    return v;
}

/// The four indecomposables of K_n-mod: trivial and sign simples of
/// dimension 1, and their projective covers of dimension 2^n.
struct NicholsModules {
    ModuleRep v_triv, v_sign, p_triv, p_sign;
};

inline NicholsModules nichols_modules(const HopfAlgebra& H, long n) {
    NicholsIndex ix{n};
    long K = ix.k_index();
    NicholsModules M;
    {
        std::map<long, Mat> act;
        Mat one(1, 1), minus(1, 1), zero(1, 1);
        one(0, 0) = Cyclo(1);
        minus(0, 0) = Cyclo(-1);
        act[K] = one;
        for (long i = 1; i <= n; ++i) act[ix.xi_index(i)] = zero;
        M.v_triv = module_from_generators(H, "Ve", 1, act);
        act[K] = minus;
        M.v_sign = module_from_generators(H, "VKb", 1, act);
    }
    // P_eps = (exterior words) (1+K), P_Kbar with (1-K); basis indexed by mask
    for (int sign_module = 0; sign_module < 2; ++sign_module) {
        long w = ix.words();
        std::map<long, Mat> act;
        Mat km(w, w);
        for (long mask = 0; mask < w; ++mask) {
            int s = popcount(static_cast<unsigned long>(mask)) % 2 ? -1 : 1;
            if (sign_module) s = -s;
            km(mask, mask) = Cyclo(s);
        }
        act[K] = km;
        for (long i = 1; i <= n; ++i) {
            Mat xm(w, w);
            unsigned long bit = 1UL << (i - 1);
            for (long mask = 0; mask < w; ++mask) {
                if (mask & static_cast<long>(bit)) continue;
                int s = interleave_sign(bit, static_cast<unsigned long>(mask));
                xm(mask | static_cast<long>(bit), mask) = Cyclo(s);
            }
            act[ix.xi_index(i)] = xm;
        }
        ModuleRep P = module_from_generators(H, sign_module ? "PKb" : "Pe", w, act, true);
        (sign_module ? M.p_sign : M.p_triv) = std::move(P);
    }
    return M;
}

} // namespace hopfcas::families
