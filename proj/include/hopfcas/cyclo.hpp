#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A scalar is stored as its coordinate vector in the power basis
// {1, zeta, ..., zeta^(phi(N)-1)} reduced modulo the N-th cyclotomic
// polynomial Phi_N, with exact rational coefficients.  Reduction mod Phi_N
// (rather than mod x^N - 1) makes the representation canonical, so equality
// is coefficient-wise.  Numeric embeddings (zeta_N -> e^{2 pi i / N}) are
// used only for display and sign disambiguation, never for equality.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfcas {

using Rat = mpq_class;
using Int = mpz_class;

inline long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Per-conductor data shared by all scalars of that conductor: the cyclotomic
/// polynomial and the reduction table x^k mod Phi_N for 0 <= k < N.
class CycloField {
public:
    long n;                                  // conductor
    long phi;                                // degree = euler_phi(n)
    std::vector<Int> poly;                   // Phi_n, coefficients 0..phi, monic
    std::vector<std::vector<Int>> pow_table; // x^k mod Phi_n, k = 0..n-1

    static const CycloField& get(long n) {
        if (n < 1) throw std::invalid_argument("conductor must be positive");
        static std::map<long, std::unique_ptr<CycloField>> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
        return *it->second;
    }

private:
    explicit CycloField(long n_) : n(n_), phi(euler_phi(n_)) {
        poly = cyclotomic_poly(n);
        pow_table.resize(n);
        for (long k = 0; k < n; ++k) {
            pow_table[k].assign(phi, 0);
            if (k < phi) {
                pow_table[k][k] = 1;
            } else {
                // x^k = x * x^(k-1), then reduce the overflow coefficient.
                const auto& prev = pow_table[k - 1];
                std::vector<Int> shifted(phi + 1, 0);
                for (long j = 0; j < phi; ++j) shifted[j + 1] = prev[j];
                Int top = shifted[phi];
                for (long j = 0; j < phi; ++j)
                    pow_table[k][j] = shifted[j] - top * poly[j];
            }
        }
    }

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact integer division.
    static std::vector<Int> cyclotomic_poly(long n) {
        std::vector<Int> f(n + 1, 0);
        f[0] = -1;
        f[n] = 1;
        for (long d : divisors_of(n)) {
            if (d == n) continue;
            std::vector<Int> g = cyclotomic_poly_cached(d);
            f = exact_div(f, g);
        }
        return f;
    }

    static std::vector<Int> cyclotomic_poly_cached(long d) {
        static std::map<long, std::vector<Int>> cache;
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, cyclotomic_poly(d)).first;
        return it->second;
    }

    static std::vector<Int> exact_div(const std::vector<Int>& num, const std::vector<Int>& den) {
        long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
        std::vector<Int> rem = num, quot(dn - dd + 1, 0);
        for (long k = dn - dd; k >= 0; --k) {
            quot[k] = rem[k + dd]; // den is monic
            if (quot[k] != 0)
                for (long j = 0; j <= dd; ++j) rem[k + j] -= quot[k] * den[j];
        }
        for (const auto& c : rem)
            if (c != 0) throw std::logic_error("cyclotomic division not exact");
        return quot;
    }
};

/// An exact element of Q(zeta_N).  Conductor 1 means a plain rational.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    explicit Cyclo(const Rat& r) : n_(1), c_(1, r) { c_[0].canonicalize(); }
    Cyclo(long num, long den = 1) : n_(1), c_(1, Rat(num, den)) { c_[0].canonicalize(); }

    Cyclo(long conductor, std::vector<Rat> coeffs) : n_(conductor), c_(std::move(coeffs)) {
        const auto& F = CycloField::get(n_);
        if (static_cast<long>(c_.size()) != F.phi)
            throw std::invalid_argument("coefficient vector length must equal phi(N)");
        for (auto& x : c_) x.canonicalize();
    }

    /// zeta_N^k, reduced.
    static Cyclo root_of_unity(long n, long k) {
        const auto& F = CycloField::get(n);
        k %= n;
        if (k < 0) k += n;
        std::vector<Rat> c(F.phi, Rat(0));
        for (long j = 0; j < F.phi; ++j) c[j] = Rat(F.pow_table[k][j]);
        Cyclo z(n, std::move(c));
        return z;
    }

    static Cyclo zero(long n = 1) { return Cyclo(Rat(0)).embedded(n); }
    static Cyclo one(long n = 1) { return Cyclo(Rat(1)).embedded(n); }
    static Cyclo i(long n = 4) {
        if (n % 4 != 0) throw std::invalid_argument("i requires a conductor divisible by 4");
        return root_of_unity(n, n / 4);
    }

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (c_[j] != 0) return false;
        return true;
    }
    /// The rational value, if is_rational(); throws otherwise.
    Rat rational_value() const {
        if (!is_rational()) throw std::logic_error("scalar is not rational");
        return c_[0];
    }

    /// Re-express at conductor m (requires conductor() | m); zeta_N = zeta_M^{M/N}.
    Cyclo embedded(long m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw std::invalid_argument("embed: target conductor not a multiple");
        const auto& F = CycloField::get(m);
        std::vector<Rat> out(F.phi, Rat(0));
        long stride = m / n_;
        for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
            if (c_[j] == 0) continue;
            const auto& row = F.pow_table[(j * stride) % m];
            for (long k = 0; k < F.phi; ++k)
                if (row[k] != 0) out[k] += c_[j] * Rat(row[k]);
        }
        return Cyclo(m, std::move(out));
    }

    /// Attempt to re-express at a divisor conductor m.  Returns false when the
    /// element does not lie in Q(zeta_m).
    bool try_project(long m, Cyclo& out) const {
        if (n_ % m != 0) return false;
        if (m == n_) {
            out = *this;
            return true;
        }
        const auto& Fm = CycloField::get(m);
        // Solve sum_k y_k * embed(zeta_m^k) = *this over Q by Gaussian elimination.
        const auto& Fn = CycloField::get(n_);
        long rows = Fn.phi, cols = Fm.phi;
        std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols + 1, Rat(0)));
        long stride = n_ / m;
        for (long k = 0; k < cols; ++k) {
            const auto& row = Fn.pow_table[(k * stride) % n_];
            for (long r = 0; r < rows; ++r) A[r][k] = Rat(row[r]);
        }
        for (long r = 0; r < rows; ++r) A[r][cols] = c_[r];
        // plain elimination; the system is tiny
        long rank = 0;
        for (long col = 0; col < cols && rank < rows; ++col) {
            long piv = -1;
            for (long r = rank; r < rows; ++r)
                if (A[r][col] != 0) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(A[rank], A[piv]);
            Rat inv = 1 / A[rank][col];
            for (long j = col; j <= cols; ++j) A[rank][j] *= inv;
            for (long r = 0; r < rows; ++r) {
                if (r == rank || A[r][col] == 0) continue;
                Rat f = A[r][col];
                for (long j = col; j <= cols; ++j) A[r][j] -= f * A[rank][j];
            }
            ++rank;
        }
        // consistency + read off solution
        std::vector<Rat> y(cols, Rat(0));
        for (long r = 0; r < rows; ++r) {
            long lead = -1;
            for (long j = 0; j < cols; ++j)
                if (A[r][j] != 0) { lead = j; break; }
            if (lead < 0) {
                if (A[r][cols] != 0) return false; // inconsistent: not in subfield
            } else {
                y[lead] = A[r][cols];
            }
        }
        out = Cyclo(m, std::move(y));
        return true;
    }

    /// Smallest divisor m of the conductor with this element in Q(zeta_m).
    long minimal_conductor() const {
        Cyclo tmp;
        for (long d : divisors_of(n_))
            if (try_project(d, tmp)) return d;
        return n_;
    }

    /// Galois action zeta -> zeta^k for gcd(k, N) = 1; k = -1 is complex conjugation.
    Cyclo galois(long k) const {
        long kk = ((k % n_) + n_) % n_;
        if (std::gcd(kk == 0 ? n_ : kk, n_) != 1)
            throw std::invalid_argument("galois exponent not coprime to conductor");
        const auto& F = CycloField::get(n_);
        std::vector<Rat> out(F.phi, Rat(0));
        for (long j = 0; j < F.phi; ++j) {
            if (c_[j] == 0) continue;
            const auto& row = F.pow_table[(j * kk) % n_];
            for (long t = 0; t < F.phi; ++t)
                if (row[t] != 0) out[t] += c_[j] * Rat(row[t]);
        }
        return Cyclo(n_, std::move(out));
    }
    Cyclo conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        long m = std::lcm(a.n_, b.n_);
        return a.embedded(m).c_ == b.embedded(m).c_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo operator-() const {
        Cyclo r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) {
            Cyclo x = a;
            for (size_t j = 0; j < x.c_.size(); ++j)
                if (b.c_[j] != 0) x.c_[j] += b.c_[j];
            return x;
        }
        auto [x, y] = aligned(a, b);
        for (size_t j = 0; j < x.c_.size(); ++j) x.c_[j] += y.c_[j];
        return x;
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        // rational factors scale coordinate-wise, with no convolution
        if (a.is_rational() || b.is_rational()) {
            const Cyclo& scalar = a.is_rational() ? a : b;
            const Cyclo& big = a.is_rational() ? b : a;
            long target;
            if (a.n_ == b.n_) target = a.n_;
            else if (b.n_ % a.n_ == 0) target = b.n_;
            else if (a.n_ % b.n_ == 0) target = a.n_;
            else
                throw std::invalid_argument("conductor mismatch: " + std::to_string(a.n_) +
                                            " vs " + std::to_string(b.n_));
            const Rat& s = scalar.c_[0];
            if (s == 0) return Cyclo(0).embedded(target);
            Cyclo out = big.embedded(target);
            for (auto& c : out.c_)
                if (c != 0) c *= s;
            return out;
        }
        if (a.n_ != b.n_) {
            auto [x, y] = aligned(a, b);
            return x * y;
        }
        const auto& F = CycloField::get(a.n_);
        long phi = F.phi;
        std::vector<Rat> conv(2 * phi - 1, Rat(0));
        for (long i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (long j = 0; j < phi; ++j)
                if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
        }
        std::vector<Rat> out(conv.begin(), conv.begin() + phi);
        for (long k = phi; k < 2 * phi - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = F.pow_table[k % a.n_];
            for (long j = 0; j < phi; ++j)
                if (row[j] != 0) out[j] += conv[k] * Rat(row[j]);
        }
        return Cyclo(a.n_, std::move(out));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (n_ == 1) return Cyclo(Rat(1) / c_[0]);
        const auto& F = CycloField::get(n_);
        std::vector<Rat> a(F.poly.size());
        for (size_t j = 0; j < F.poly.size(); ++j) a[j] = Rat(F.poly[j]);
        std::vector<Rat> b = c_;
        trim(b);
        // extended gcd: s*a + t*b = g, g constant since Phi_N is irreducible
        std::vector<Rat> t0, t1{Rat(1)};
        std::vector<Rat> r0 = a, r1 = b;
        while (!r1.empty()) {
            auto [q, r] = poly_divmod(r0, r1);
            auto t2 = poly_sub(t0, poly_mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
        Rat ginv = 1 / r0[0];
        std::vector<Rat> out(F.phi, Rat(0));
        for (size_t j = 0; j < t0.size() && j < out.size(); ++j) out[j] = t0[j] * ginv;
        return Cyclo(n_, std::move(out));
    }

    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

    Cyclo pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclo acc = Cyclo::one(n_), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// exact sqrt of a positive integer, built from quadratic Gauss sums.
    /// Requires Q(zeta_N) to contain sqrt(l); the thrown message names a
    /// sufficient conductor when it does not.
    static Cyclo sqrt_integer(long l, long n) {
        if (l <= 0) throw std::invalid_argument("sqrt_integer needs a positive integer");
        long square = 1, free_part = 1, m = l;
        for (long p = 2; p * p <= m; ++p)
            while (m % (p * p) == 0) { square *= p; m /= p * p; }
        free_part = m;
        long needed = 1;
        if (free_part % 2 == 0) needed = std::lcm(needed, 8L);
        for (long p = 3, f = free_part; p <= f; p += 2)
            if (f % p == 0) { needed = std::lcm(needed, 4 * p); while (f % p == 0) f /= p; }
        if (free_part > 1 && n % needed != 0)
            throw std::invalid_argument("sqrt(" + std::to_string(l) +
                                        ") needs a conductor divisible by " + std::to_string(needed));
        Cyclo r = Cyclo(Rat(square)).embedded(n);
        long f = free_part;
        if (f % 2 == 0) {
            // sqrt(2) = zeta_8 + zeta_8^{-1}
            r *= root_of_unity(n, n / 8) + root_of_unity(n, n - n / 8);
            f /= 2;
        }
        for (long p = 3; p <= f; p += 2) {
            if (f % p != 0) continue;
            f /= p;
            // Gauss sum g_p = sum_t zeta_p^(t^2); equals sqrt(p) or i*sqrt(p).
            Cyclo g = Cyclo::zero(n);
            for (long t = 0; t < p; ++t) g += root_of_unity(n, (n / p) * ((t * t) % p));
            if (p % 4 == 3) g *= -Cyclo::i(n); // divide out the i
            r *= g;
        }
        // fix the sign so the real embedding is positive
        if (r.approx_double().real() < 0) r = -r;
        return r;
    }

    /// Low-precision embedding for sign checks (never for equality).
    std::complex<double> approx_double() const {
        std::complex<double> z = 0;
        for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
            if (c_[j] == 0) continue;
            double ang = 2.0 * 3.14159265358979323846 * double(j) / double(n_);
            z += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

    /// Numeric embedding as decimal strings (re, im), correct to `digits`
    /// significant digits; computed with MPFR at extended precision.
    std::pair<std::string, std::string> approx(long digits) const {
        if (digits < 1) throw std::invalid_argument("digits must be >= 1");
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.4) + 96;
        mpfr_t re, im, ang, c, s, coef, pi, l1;
        mpfr_inits2(prec, re, im, ang, c, s, coef, pi, l1, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
        mpfr_set_zero(l1, 1);
        mpfr_const_pi(pi, MPFR_RNDN);
        for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
            if (c_[j] == 0) continue;
            mpfr_set_q(coef, c_[j].get_mpq_t(), MPFR_RNDN);
            mpfr_mul_si(ang, pi, 2 * j, MPFR_RNDN);
            mpfr_div_si(ang, ang, n_, MPFR_RNDN);
            mpfr_cos(c, ang, MPFR_RNDN);
            mpfr_sin(s, ang, MPFR_RNDN);
            mpfr_fma(re, coef, c, re, MPFR_RNDN);
            mpfr_fma(im, coef, s, im, MPFR_RNDN);
            mpfr_abs(coef, coef, MPFR_RNDN);
            mpfr_add(l1, l1, coef, MPFR_RNDN);
        }
        // anything below the summation error bound is an exact zero
        mpfr_t bound;
        mpfr_init2(bound, prec);
        mpfr_mul_si(bound, l1, 16 * (static_cast<long>(c_.size()) + 4), MPFR_RNDN);
        mpfr_mul_2si(bound, bound, -(prec - 8), MPFR_RNDN);
        auto to_str = [&](mpfr_t v) {
            mpfr_abs(c, v, MPFR_RNDN);
            if (mpfr_cmp(c, bound) <= 0) return std::string("0");
            char* raw = nullptr;
            mpfr_asprintf(&raw, "%.*Rg", static_cast<int>(digits), v);
            std::string s1(raw);
            mpfr_free_str(raw);
            return s1;
        };
        std::string rs = to_str(re), is = to_str(im);
        mpfr_clears(re, im, ang, c, s, coef, pi, l1, bound, static_cast<mpfr_ptr>(nullptr));
        return {rs, is};
    }

    std::string to_string() const {
        std::string s;
        bool first = true;
        for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
            if (c_[j] == 0) continue;
            std::string term = c_[j].get_str();
            if (j > 0) {
                if (term == "1") term = "";
                else if (term == "-1") term = "-";
                term += "z" + std::to_string(n_) + (j > 1 ? "^" + std::to_string(j) : "");
            }
            if (!first && term[0] != '-') s += "+";
            s += term;
            first = false;
        }
        return first ? "0" : s;
    }

private:
    long n_;
    std::vector<Rat> c_;

    static std::pair<Cyclo, Cyclo> aligned(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) return {a, b};
        if (b.n_ % a.n_ == 0) return {a.embedded(b.n_), b};
        if (a.n_ % b.n_ == 0) return {a, b.embedded(a.n_)};
        throw std::invalid_argument("conductor mismatch: " + std::to_string(a.n_) + " vs " +
                                    std::to_string(b.n_));
    }

    static void trim(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        trim(r);
        return r;
    }
    static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r = a;
        if (r.size() < b.size()) r.resize(b.size(), Rat(0));
        for (size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
        trim(r);
        return r;
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        std::vector<Rat> q(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
        while (num.size() >= den.size() && !num.empty()) {
            Rat f = num.back() / den.back();
            size_t shift = num.size() - den.size();
            q[shift] = f;
            for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
            trim(num);
            if (num.size() >= den.size() && num.size() > 0 && num.back() == 0) trim(num);
        }
        trim(q);
        return {q, num};
    }
};

inline Cyclo operator*(const Rat& r, const Cyclo& z) { return Cyclo(r) * z; }
inline Cyclo operator*(long r, const Cyclo& z) { return Cyclo(Rat(r)) * z; }

} // namespace hopfcas
