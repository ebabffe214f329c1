#pragma once

// Quadratic modules on cyclic groups, Gauss sums, Weil representations,
// pointed modular data, the even/odd decomposition, and congruence-level
// certification of projective SL(2,Z) pairs by explicit equivalences with
// direct sums of reference pieces.

#include "modular.hpp"

namespace hopfcas {

/// Quadratic form Q(a) = c a^2 on Z/m (m a prime power), valued in Q/Z.
struct QuadraticModule {
    long m = 1;
    Rat c;

    QuadraticModule(long modulus, Rat coeff) : m(modulus), c(std::move(coeff)) {
        c.canonicalize();
        if (m < 1) throw std::invalid_argument("modulus must be positive");
        long mm = m, p = smallest_prime(m);
        while (mm > 1) {
            if (mm % p != 0) throw std::invalid_argument("modulus must be a prime power");
            mm /= p;
        }
        // well-definedness of c a^2 mod 1 on Z/m
        Rat t1 = c * 2 * m, t2 = c * m * m;
        t1.canonicalize();
        t2.canonicalize();
        if (t1.get_den() != 1 || t2.get_den() != 1)
            throw std::invalid_argument("quadratic coefficient is not defined modulo the group");
    }

    Rat q_value(long a) const {
        Rat v = c * a * a;
        return frac(v);
    }
    Rat b_value(long a, long b) const { // B(x,y) = Q(x+y) - Q(x) - Q(y) = 2 c x y
        Rat v = c * 2 * a * b;
        return frac(v);
    }
    bool nondegenerate() const {
        for (long x = 1; x < m; ++x) {
            bool all_zero = true;
            for (long y = 0; y < m && all_zero; ++y) all_zero = b_value(x, y) == 0;
            if (all_zero) return false;
        }
        return true;
    }
    /// conductor housing all values e^{2 pi i Q}, e^{2 pi i B}
    long field_conductor() const {
        long N = 1;
        for (long a = 0; a < m; ++a) {
            N = std::lcm(N, static_cast<long>(q_value(a).get_den().get_si()));
            N = std::lcm(N, static_cast<long>(b_value(1, a).get_den().get_si()));
        }
        return N;
    }

    static Rat frac(Rat v) {
        v.canonicalize();
        Int num = v.get_num(), den = v.get_den();
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Rat out(r, den);
        out.canonicalize();
        return out;
    }
    static long smallest_prime(long n) {
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) return p;
        return n;
    }
};

inline Cyclo unity_from_fraction(const Rat& f, long N) {
    Rat r = QuadraticModule::frac(f);
    long den = static_cast<long>(r.get_den().get_si());
    long num = static_cast<long>(r.get_num().get_si());
    if (N % den != 0) throw std::invalid_argument("conductor too small for the phase");
    return Cyclo::root_of_unity(N, (N / den) * num % N);
}

/// Gauss sum tau_{M,Q} = sum_a e^{2 pi i Q(a)}.
inline Cyclo gauss_sum(const QuadraticModule& M, long N = 0) {
    if (N == 0) N = M.field_conductor();
    Cyclo t = Cyclo(0).embedded(N);
    for (long a = 0; a < M.m; ++a) t += unity_from_fraction(M.q_value(a), N);
    return t;
}

struct WeilRep {
    Mat S, T;
};

/// Weil representation on C^M:
///   t f(x) = e^{2 pi i Q(x)} f(x),
///   s^{-1} f(x) = (tau/|M|) sum_y e^{2 pi i B(x,y)} f(y).
inline WeilRep weil_rep(const QuadraticModule& M, long N = 0) {
    if (N == 0) N = M.field_conductor();
    const long m = M.m;
    Mat T(m, m), Sinv(m, m);
    Cyclo pref = gauss_sum(M, N) / Cyclo(Rat(m)).embedded(N);
    for (long x = 0; x < m; ++x) {
        T(x, x) = unity_from_fraction(M.q_value(x), N);
        for (long y = 0; y < m; ++y) Sinv(x, y) = pref * unity_from_fraction(M.b_value(x, y), N);
    }
    return WeilRep{Sinv.inverse(), T};
}

/// Modular data of the pointed category of (M, Q):
///   S_{x,y} = e^{-2 pi i B(x,y)},  T_{x,y} = delta_{x,y} e^{2 pi i Q(x)}.
inline WeilRep pointed_modular_data(const QuadraticModule& M, long N = 0) {
    if (N == 0) N = M.field_conductor();
    const long m = M.m;
    Mat S(m, m), T(m, m);
    for (long x = 0; x < m; ++x) {
        T(x, x) = unity_from_fraction(M.q_value(x), N);
        for (long y = 0; y < m; ++y) S(x, y) = unity_from_fraction(-M.b_value(x, y), N);
    }
    return WeilRep{S, T};
}

/// Projective SL(2,Z) identities for a (S, T) pair: S^4 scalar, (ST)^3
/// proportional to S^2.
inline bool verify_projective_pair(const Mat& S, const Mat& T) {
    Mat s2 = S * S, s4 = s2 * s2;
    Cyclo c = s4(0, 0);
    if (s4 != c * Mat::identity(S.rows())) return false;
    try {
        verify_modular_identities(S, T);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

struct EvenOddSplit {
    Mat S_even, T_even; // (h+1) x (h+1)
    Mat S_odd, T_odd;   // h x h
    Mat change_of_basis;
};

/// Decomposition of the l-dimensional pointed pair S = (q^{ab}),
/// T = diag(q^{-h a^2}) (q = zeta_l, l = 2h+1) over the symmetric and
/// antisymmetric combinations delta_a (+-) delta_{l-a}.
inline EvenOddSplit even_odd_split(long l) {
    if (l < 3 || l % 2 == 0) throw std::invalid_argument("even_odd_split needs odd l >= 3");
    const long h = (l - 1) / 2;
    Mat S(l, l), T(l, l), P(l, l);
    for (long a = 0; a < l; ++a) {
        T(a, a) = Cyclo::root_of_unity(l, ((-h * a * a) % l + l * l) % l);
        for (long b = 0; b < l; ++b) S(a, b) = Cyclo::root_of_unity(l, (a * b) % l);
    }
    // columns of P: w0 = delta_0, w_a^+ = (delta_a + delta_{l-a})/2,
    // then w_a^- = (delta_a - delta_{l-a})/2, a = 1..h
    P(0, 0) = Cyclo(1);
    for (long a = 1; a <= h; ++a) {
        P(a, a) = Cyclo(1, 2);
        P(l - a, a) = Cyclo(1, 2);
        P(a, h + a) = Cyclo(1, 2);
        P(l - a, h + a) = Cyclo(-1, 2);
    }
    Mat Pi = P.inverse();
    Mat Sb = Pi * S * P, Tb = Pi * T * P;
    EvenOddSplit out;
    out.change_of_basis = P;
    out.S_even = Mat(h + 1, h + 1);
    out.T_even = Mat(h + 1, h + 1);
    out.S_odd = Mat(h, h);
    out.T_odd = Mat(h, h);
    for (long i = 0; i <= h; ++i)
        for (long j = 0; j <= h; ++j) {
            out.S_even(i, j) = Sb(i, j);
            out.T_even(i, j) = Tb(i, j);
        }
    for (long i = 0; i < h; ++i)
        for (long j = 0; j < h; ++j) {
            out.S_odd(i, j) = Sb(h + 1 + i, h + 1 + j);
            out.T_odd(i, j) = Tb(h + 1 + i, h + 1 + j);
        }
    // off-blocks must vanish exactly
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j) {
            bool ie = i <= h, je = j <= h;
            if (ie != je && (!Sb(i, j).is_zero() || !Tb(i, j).is_zero()))
                throw std::logic_error("even/odd split has nonzero off-blocks");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Reference pieces and congruence certification
// ---------------------------------------------------------------------------

struct RefPiece {
    std::string name;
    Mat S, T;
    long t_order; // 0 when T has infinite order (standard representation factors)
};

inline RefPiece trivial_rep() {
    Mat one = Mat::identity(1);
    return {"triv", one, one, 1};
}

inline RefPiece standard_rep() {
    Mat s(2, 2), t(2, 2);
    s(0, 1) = Cyclo(-1);
    s(1, 0) = Cyclo(1);
    t(0, 0) = t(0, 1) = t(1, 1) = Cyclo(1);
    return {"std", s, t, 0};
}

inline RefPiece tensor_piece(const RefPiece& a, const RefPiece& b, const std::string& name) {
    long ord = (a.t_order == 0 || b.t_order == 0) ? 0 : std::lcm(a.t_order, b.t_order);
    return {name, kron(a.S, b.S), kron(a.T, b.T), ord};
}

/// The two-dimensional level-2 Weil piece: the nontrivial irreducible
/// subrepresentation of the Weil representation of the hyperbolic quadratic
/// form on (Z/2)^2 (tests rebuild it from scratch and check the equivalence).
inline RefPiece n1_level2() {
    Mat s(2, 2), t(2, 2);
    s(0, 0) = Cyclo(1, 2);
    s(0, 1) = Cyclo(3, 2);
    s(1, 0) = Cyclo(1, 2);
    s(1, 1) = Cyclo(-1, 2);
    t(0, 0) = Cyclo(1);
    t(1, 1) = Cyclo(-1);
    return {"N1", s, t, 2};
}

/// The even part of the pointed module on Z/l with Q(a) = -h a^2 / l.
inline RefPiece pointed_even_piece(long l) {
    auto sp = even_odd_split(l);
    return {"pointed_even(" + std::to_string(l) + ")", sp.S_even, sp.T_even,
            diagonal_order(sp.T_even)};
}

struct CongruenceCertificate {
    bool found = false;
    std::vector<std::string> pieces;
    long level = 0;         // lcm of the finite T-orders of the pieces
    bool has_std = false;   // standard-representation factors present (no finite level)
    Sl2zCertificate equivalence;
    long t_order_input = 0; // ord of the (diagonalizable) input T, 0 if not finite
};

/// Certify a congruence kernel by exhibiting a projective equivalence with a
/// direct sum of reference pieces.  Each summand is a projective piece, so a
/// sign twist per piece is enumerated on the S side (a global scalar pair is
/// part of the equivalence search itself).  A failed search is inconclusive,
/// not a disproof.
inline CongruenceCertificate congruence_certify(const Mat& S, const Mat& T,
                                                const std::vector<RefPiece>& pieces) {
    CongruenceCertificate cert;
    for (const auto& p : pieces) {
        cert.pieces.push_back(p.name);
        if (p.t_order == 0) cert.has_std = true;
        else cert.level = cert.level == 0 ? p.t_order : std::lcm(cert.level, p.t_order);
    }
    if (T.is_diagonal()) {
        try {
            cert.t_order_input = diagonal_order(T);
        } catch (const std::exception&) {
            cert.t_order_input = 0;
        }
    }
    const size_t k = pieces.size();
    for (unsigned long twist = 0; twist < (1UL << k); ++twist) {
        Mat S2(0, 0), T2(0, 0);
        for (size_t i = 0; i < k; ++i) {
            Mat Sp = (twist >> i) & 1 ? Cyclo(-1) * pieces[i].S : pieces[i].S;
            S2 = S2.rows() == 0 ? Sp : block_diag(S2, Sp);
            T2 = T2.rows() == 0 ? pieces[i].T : block_diag(T2, pieces[i].T);
        }
        cert.equivalence = sl2z_equivalence(S, T, S2, T2);
        if (cert.equivalence.found) {
            cert.found = true;
            return cert;
        }
    }
    return cert;
}

} // namespace hopfcas
