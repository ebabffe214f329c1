#pragma once

// Doubled Nichols Hopf algebras DK_n, presented on generators K, Kb (both
// grouplike, squaring to 1, commuting) and skew-primitives x_1..x_n (over K)
// and y_1..y_n (over Kb), subject to
//     x_i^2 = y_i^2 = 0,     all generators anticommute pairwise except
//     x_i y_i = 1 - K Kb - y_i x_i.
// Basis: K^a Kb^b x(S) y(T); index = ((a*2+b) * W + S) * W + T, W = 2^n.
// dim = 2^(2n+2).
//
// The quasitriangular structure is
//     R = sum_w (-1)^{floor(|w|/2)} (x(w) (x) y(w) Kb^{|w|}) Z,
//     Z = (1(x)1 + K(x)1 + 1(x)Kb - K(x)Kb)/2,
// with ribbon element (even n only)
//     v = (1 + K - Kb + K Kb) sum_w (-1)^{floor((|w|+1)/2)}/2 x(w) y(w).
// The balancing element is K.

#include "common.hpp"

namespace hopfcas::families {

struct DNicholsIndex {
    long n;
    long words() const { return 1L << n; }
    long dim() const { return 4L * words() * words(); }
    long idx(long a, long b, unsigned long s, unsigned long t) const {
        return ((a * 2 + b) * words() + static_cast<long>(s)) * words() + static_cast<long>(t);
    }
    void decode(long p, long& a, long& b, unsigned long& s, unsigned long& t) const {
        t = static_cast<unsigned long>(p % words());
        p /= words();
        s = static_cast<unsigned long>(p % words());
        p /= words();
        b = p % 2;
        a = p / 2;
    }
    long k_index() const { return idx(1, 0, 0, 0); }
    long kb_index() const { return idx(0, 1, 0, 0); }
    long xi_index(long i) const { return idx(0, 0, 1UL << (i - 1), 0); }
    long yi_index(long i) const { return idx(0, 0, 0, 1UL << (i - 1)); }
    std::string label(long p) const {
        long a, b;
        unsigned long s, t;
        decode(p, a, b, s, t);
        std::string out = (a ? std::string("K") : std::string("")) + (b ? "Kb" : "");
        for (long i = 1; i <= n; ++i)
            if (s & (1UL << (i - 1))) out += "x" + std::to_string(i);
        for (long i = 1; i <= n; ++i)
            if (t & (1UL << (i - 1))) out += "y" + std::to_string(i);
        return out.empty() ? "1" : out;
    }
};

namespace detail {

/// A term c * (K Kb)^p * x(A) y(B) arising while straightening y-letters
/// across x-words.
struct CrossTerm {
    int kkbar;
    unsigned long xmask, ymask;
    int coeff; // always +-1
};

/// y_t x(S): either a plain anticommutation or, when t occurs in S,
///   (+-)(1 - K Kb) x(S \ t)  (+-) x(S) y_t.
inline std::vector<CrossTerm> cross_single(long t_bitpos, unsigned long S) {
    unsigned long tbit = 1UL << t_bitpos;
    if (!(S & tbit)) {
        int sign = popcount(S) % 2 ? -1 : 1;
        return {{0, S, tbit, sign}};
    }
    unsigned long below = S & (tbit - 1);
    unsigned long above = S & ~(tbit | (tbit - 1));
    int sa = popcount(below) % 2 ? -1 : 1;
    int sab = popcount(below | above) % 2 ? -1 : 1;
    return {{0, S & ~tbit, 0, sa}, {1, S & ~tbit, 0, -sa}, {0, S, tbit, -sab}};
}

/// Full straightening y(T) x(S) = sum coeff (K Kb)^p x(A) y(B).
inline std::vector<CrossTerm> cross(unsigned long T, unsigned long S) {
    if (T == 0) return {{0, S, 0, 1}};
    long t_bitpos = 63 - __builtin_clzl(T); // last y-letter is adjacent to x(S)
    unsigned long rest = T & ~(1UL << t_bitpos);
    std::vector<CrossTerm> out;
    for (const auto& t0 : cross_single(t_bitpos, S))
        for (const auto& t1 : cross(rest, t0.xmask)) {
            // y(B1) y(B0): B0 is a single letter above everything in B1
            out.push_back({(t0.kkbar + t1.kkbar) % 2, t1.xmask, t1.ymask | t0.ymask,
                           t0.coeff * t1.coeff});
        }
    return out;
}

} // namespace detail

inline SparseRow dnichols_mul(const DNicholsIndex& ix, long p, long q) {
    long a, b, a2, b2;
    unsigned long S, T, S2, T2;
    ix.decode(p, a, b, S, T);
    ix.decode(q, a2, b2, S2, T2);
    int sign = ((a2 + b2) * (popcount(S) + popcount(T))) % 2 ? -1 : 1;
    SparseRow out;
    for (const auto& term : detail::cross(T, S2)) {
        if (S & term.xmask) continue;
        if (T2 & term.ymask) continue;
        int s = sign * term.coeff * interleave_sign(S, term.xmask) *
                interleave_sign(term.ymask, T2);
        long aa = (a + a2 + term.kkbar) % 2, bb = (b + b2 + term.kkbar) % 2;
        sv_add_scaled(out, Cyclo(s), sv_unit(ix.idx(aa, bb, S | term.xmask, term.ymask | T2)));
    }
    return out;
}

inline std::unique_ptr<HopfAlgebra> dnichols_algebra(long n, long conductor = 8) {
    if (n < 1) throw std::invalid_argument("dnichols: n must be >= 1");
    DNicholsIndex ix{n};
    auto H = std::make_unique<HopfAlgebra>();
    H->dim = ix.dim();
    H->conductor = conductor;
    for (long p = 0; p < H->dim; ++p) H->labels.push_back(ix.label(p));
    H->unit = sv_unit(0);
    H->generators = {ix.k_index(), ix.kb_index()};
    for (long i = 1; i <= n; ++i) H->generators.push_back(ix.xi_index(i));
    for (long i = 1; i <= n; ++i) H->generators.push_back(ix.yi_index(i));
    H->basis_word_fn = [ix](long p) {
        long a, b;
        unsigned long s, t;
        ix.decode(p, a, b, s, t);
        std::vector<long> w;
        if (a) w.push_back(ix.k_index());
        if (b) w.push_back(ix.kb_index());
        for (long i = 1; i <= ix.n; ++i)
            if (s & (1UL << (i - 1))) w.push_back(ix.xi_index(i));
        for (long i = 1; i <= ix.n; ++i)
            if (t & (1UL << (i - 1))) w.push_back(ix.yi_index(i));
        return w;
    };
    H->set_mult_provider([ix](long p, long q) { return dnichols_mul(ix, p, q); }, n <= 3);

    const long d = H->dim;
    long K = ix.k_index(), Kb = ix.kb_index();
    std::map<long, SparseRow> gc, ga;
    std::map<long, Cyclo> ge;
    gc[K] = sv_unit(K * d + K);
    gc[Kb] = sv_unit(Kb * d + Kb);
    ge[K] = ge[Kb] = Cyclo(1);
    ga[K] = sv_unit(K);
    ga[Kb] = sv_unit(Kb);
    for (long i = 1; i <= n; ++i) {
        long xi = ix.xi_index(i), yi = ix.yi_index(i);
        SparseRow dx = sv_unit(K * d + xi);
        sv_add_scaled(dx, Cyclo(1), sv_unit(xi * d + 0));
        gc[xi] = dx;
        SparseRow dy = sv_unit(Kb * d + yi);
        sv_add_scaled(dy, Cyclo(1), sv_unit(yi * d + 0));
        gc[yi] = dy;
        ge[xi] = ge[yi] = Cyclo(0);
        ga[xi] = sv_unit(ix.idx(1, 0, 1UL << (i - 1), 0), Cyclo(-1)); // -K x_i
        ga[yi] = sv_unit(ix.idx(0, 1, 0, 1UL << (i - 1)), Cyclo(-1)); // -Kb y_i
    }
    extend_structure_from_generators(*H, gc, ge, ga);
    return H;
}

inline SparseRow dnichols_r_matrix(const HopfAlgebra& H, long n) {
    DNicholsIndex ix{n};
    const long d = H.dim;
    SparseRow pre;
    for (unsigned long w = 0; w < (1UL << n); ++w) {
        int len = popcount(w);
        Cyclo c((len / 2) % 2 ? -1 : 1);
        // x(w) (x) y(w) Kb^{|w|}
        SparseRow second = H.mul(sv_unit(ix.idx(0, 0, 0, w)), sv_unit(ix.idx(0, len % 2, 0, 0)));
        for (const auto& [j, cj] : second)
            sv_add_scaled(pre, c * cj, sv_unit(ix.idx(0, 0, w, 0) * d + j));
    }
    SparseRow Z;
    Cyclo half(1, 2);
    sv_add_scaled(Z, half, sv_unit(0L * d + 0));
    sv_add_scaled(Z, half, sv_unit(ix.k_index() * d + 0));
    sv_add_scaled(Z, half, sv_unit(0L * d + ix.kb_index()));
    sv_add_scaled(Z, -half, sv_unit(ix.k_index() * d + ix.kb_index()));
    return H.ten_mul(pre, Z);
}

/// Ribbon element; the formula is only a ribbon element for even n (the
/// failure for odd n is checked, not assumed).
inline SparseRow dnichols_ribbon_candidate(const HopfAlgebra& H, long n) {
    DNicholsIndex ix{n};
    SparseRow core;
    for (unsigned long w = 0; w < (1UL << n); ++w) {
        int len = popcount(w);
        Cyclo c(Rat(((len + 1) / 2) % 2 ? -1 : 1, 2));
        sv_add_scaled(core, c, H.mul(sv_unit(ix.idx(0, 0, w, 0)), sv_unit(ix.idx(0, 0, 0, w))));
    }
    SparseRow grp = sv_unit(0L);
    sv_add_scaled(grp, Cyclo(1), sv_unit(ix.k_index()));
    sv_add_scaled(grp, Cyclo(-1), sv_unit(ix.kb_index()));
    sv_add_scaled(grp, Cyclo(1), sv_unit(ix.idx(1, 1, 0, 0)));
    return H.mul(grp, core);
}

/// Integral pair: Lambda = (1+K+Kb+KKb) x(full) y(full) / 2 and
/// lambda = 2 (x(full) y(full))^*; normalized so lambda(Lambda) = 1.
inline std::pair<SparseRow, SparseRow> dnichols_integrals(const HopfAlgebra& H, long n) {
    DNicholsIndex ix{n};
    unsigned long full = (1UL << n) - 1;
    SparseRow grp = sv_unit(0L);
    sv_add_scaled(grp, Cyclo(1), sv_unit(ix.k_index()));
    sv_add_scaled(grp, Cyclo(1), sv_unit(ix.kb_index()));
    sv_add_scaled(grp, Cyclo(1), sv_unit(ix.idx(1, 1, 0, 0)));
    SparseRow Lambda = sv_scale(Cyclo(1, 2), H.mul(grp, sv_unit(ix.idx(0, 0, full, full))));
    SparseRow lambda = sv_unit(ix.idx(0, 0, full, full), Cyclo(2));
    return {Lambda, lambda};
}

struct DNicholsIdempotents {
    SparseRow e1, ekk, ek, ekb; // projective classes 1, KKb, K, Kb
};

inline DNicholsIdempotents dnichols_idempotents(const HopfAlgebra& H, long n) {
    DNicholsIndex ix{n};
    unsigned long full = (1UL << n) - 1;
    auto group_combo = [&](int cK, int cKb, int cKKb) {
        SparseRow g = sv_unit(0L);
        sv_add_scaled(g, Cyclo(cK), sv_unit(ix.k_index()));
        sv_add_scaled(g, Cyclo(cKb), sv_unit(ix.kb_index()));
        sv_add_scaled(g, Cyclo(cKKb), sv_unit(ix.idx(1, 1, 0, 0)));
        return g;
    };
    DNicholsIdempotents E;
    E.e1 = sv_scale(Cyclo(1, 4), group_combo(1, 1, 1));
    E.ekk = sv_scale(Cyclo(1, 4), group_combo(-1, -1, 1));
    Cyclo pref(Rat((n / 2) % 2 ? -1 : 1, 1L << (n + 2)));
    E.ek = sv_scale(pref, H.mul(group_combo(1, -1, -1), sv_unit(ix.idx(0, 0, full, full))));
    E.ekb = sv_scale(pref, H.mul(group_combo(-1, 1, -1), sv_unit(ix.idx(0, 0, full, full))));
    auto check_idem = [&](const SparseRow& e, const char* name) {
        if (H.mul(e, e) != e)
            throw std::logic_error(std::string("dnichols idempotent failed: ") + name);
    };
    check_idem(E.e1, "e1");
    check_idem(E.ekk, "eKKb");
    check_idem(E.ek, "eK");
    check_idem(E.ekb, "eKb");
    return E;
}

struct DNicholsModules {
    ModuleRep v1, vkk, vk, vkb;   // simples
    ModuleRep p1, pkk;            // projective covers of the one-dimensionals
    bool have_projectives = false;
};

inline DNicholsModules dnichols_modules(const HopfAlgebra& H, long n, bool build_projectives = true) {
    DNicholsIndex ix{n};
    long K = ix.k_index(), Kb = ix.kb_index();
    DNicholsModules M;
    { // one-dimensional simples
        for (int sign_module = 0; sign_module < 2; ++sign_module) {
            std::map<long, Mat> act;
            Mat s(1, 1), zero(1, 1);
            s(0, 0) = Cyclo(sign_module ? -1 : 1);
            act[K] = s;
            act[Kb] = s;
            for (long i = 1; i <= n; ++i) {
                act[ix.xi_index(i)] = zero;
                act[ix.yi_index(i)] = zero;
            }
            (sign_module ? M.vkk : M.v1) =
                module_from_generators(H, sign_module ? "VKKb" : "V1", 1, act, sign_module == 0 ? false : false);
        }
    }
    { // Steinberg simples V_K, V_Kb via Pauli-style tensor matrices
        long w = 1L << n;
        Mat sz(2, 2), xi(2, 2), id2 = Mat::identity(2);
        sz(0, 0) = Cyclo(1);
        sz(1, 1) = Cyclo(-1);
        xi(0, 1) = Cyclo::sqrt_integer(2, H.conductor);
        Mat Z = Mat::identity(1);
        for (long i = 0; i < n; ++i) Z = kron(Z, sz);
        std::vector<Mat> Xi(n + 1), Xib(n + 1);
        for (long i = 1; i <= n; ++i) {
            Mat a = Mat::identity(1), b = Mat::identity(1);
            for (long j = 1; j < i; ++j) { a = kron(a, sz); b = kron(b, sz); }
            a = kron(a, xi);
            b = kron(b, xi.transpose());
            for (long j = i + 1; j <= n; ++j) { a = kron(a, id2); b = kron(b, id2); }
            Xi[i] = a;
            Xib[i] = b;
        }
        for (int bar = 0; bar < 2; ++bar) {
            std::map<long, Mat> act;
            act[K] = bar ? Cyclo(-1) * Z : Z;
            act[Kb] = bar ? Z : Cyclo(-1) * Z;
            for (long i = 1; i <= n; ++i) {
                act[ix.xi_index(i)] = Xi[i];
                act[ix.yi_index(i)] = Xib[i];
            }
            (bar ? M.vkb : M.vk) =
                module_from_generators(H, bar ? "VKb" : "VK", w, act, true);
        }
    }
    if (build_projectives) {
        // P_1 / P_KKb on the basis x(S) y(T) (1 +- K +- Kb + K Kb)
        long w = 1L << n;
        long dm = w * w;
        for (int sign_module = 0; sign_module < 2; ++sign_module) {
            std::map<long, Mat> act;
            Mat km(dm, dm), kbm(dm, dm);
            for (long S = 0; S < w; ++S)
                for (long T = 0; T < w; ++T) {
                    int s = (popcount(static_cast<unsigned long>(S)) +
                             popcount(static_cast<unsigned long>(T))) % 2 ? -1 : 1;
                    if (sign_module) s = -s;
                    km(S * w + T, S * w + T) = Cyclo(s);
                    kbm(S * w + T, S * w + T) = Cyclo(s);
                }
            act[K] = km;
            act[Kb] = kbm;
            for (long i = 1; i <= n; ++i) {
                unsigned long bit = 1UL << (i - 1);
                Mat xm(dm, dm), ym(dm, dm);
                for (long S = 0; S < w; ++S)
                    for (long T = 0; T < w; ++T) {
                        unsigned long Su = static_cast<unsigned long>(S), Tu = static_cast<unsigned long>(T);
                        if (!(Su & bit)) {
                            int s = interleave_sign(bit, Su);
                            xm((S | static_cast<long>(bit)) * w + T, S * w + T) = Cyclo(s);
                        }
                        // y_i x(S) y(T) e: crossing collapses since (1 - K Kb) e = 0
                        if (Su & bit) {
                            unsigned long below = Su & (bit - 1), above = Su & ~(bit | (bit - 1));
                            if (!(Tu & bit)) {
                                int s = -(popcount(below | above) % 2 ? -1 : 1) *
                                        interleave_sign(bit, Tu);
                                ym(S * w + (T | static_cast<long>(bit)), S * w + T) = Cyclo(s);
                            }
                        } else if (!(Tu & bit)) {
                            int s = (popcount(Su) % 2 ? -1 : 1) * interleave_sign(bit, Tu);
                            ym(S * w + (T | static_cast<long>(bit)), S * w + T) = Cyclo(s);
                        }
                    }
                act[ix.xi_index(i)] = xm;
                act[ix.yi_index(i)] = ym;
            }
            ModuleRep P = module_from_generators(H, sign_module ? "PKKb" : "P1", dm, act, true,
                                                 /*check=*/n <= 2);
            (sign_module ? M.pkk : M.p1) = std::move(P);
        }
        M.have_projectives = true;
    }
    return M;
}

} // namespace hopfcas::families
