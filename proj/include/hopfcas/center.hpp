#pragma once

// Centers, integrals, cointegrals, q-character spaces, the Higman trace map
// and Higman ideal, and the Radford / Frobenius maps -- all by exact sparse
// linear algebra over the cyclotomic scalars.

#include "ribbon.hpp"

namespace hopfcas {

namespace detail {
/// Scatter columns (image vectors of the standard basis) into constraint
/// rows indexed by output coordinate.
inline void scatter_columns(std::vector<SparseRow>& rows, long row_offset,
                            const std::vector<SparseRow>& cols) {
    for (long j = 0; j < static_cast<long>(cols.size()); ++j)
        for (const auto& [i, c] : cols[j]) {
            auto& row = rows[row_offset + i];
            row.emplace_back(j, c);
        }
}
inline void sort_rows(std::vector<SparseRow>& rows) {
    for (auto& r : rows) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow merged;
        for (auto& [i, c] : r) {
            if (!merged.empty() && merged.back().first == i) merged.back().second += c;
            else merged.emplace_back(i, std::move(c));
        }
        SparseRow clean;
        for (auto& [i, c] : merged)
            if (!c.is_zero()) clean.emplace_back(i, std::move(c));
        r = std::move(clean);
    }
}
} // namespace detail

/// Exact basis of the center: common kernel of the commutator maps with a
/// generating set.
inline std::vector<SparseRow> center_basis(const HopfAlgebra& H) {
    const long d = H.dim;
    std::vector<long> gens = H.generators;
    if (gens.empty())
        for (long i = 0; i < d; ++i) gens.push_back(i);
    std::vector<SparseRow> rows(gens.size() * d);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<SparseRow> cols(d);
        for (long j = 0; j < d; ++j) {
            cols[j] = H.mul(sv_unit(gens[gi]), sv_unit(j));
            sv_add_scaled(cols[j], Cyclo(-1), H.mul(sv_unit(j), sv_unit(gens[gi])));
        }
        detail::scatter_columns(rows, static_cast<long>(gi) * d, cols);
    }
    detail::sort_rows(rows);
    auto ns = sparse_nullspace(std::move(rows), d);
    std::vector<SparseRow> basis;
    for (const auto& v : ns) {
        SparseRow z;
        for (long i = 0; i < d; ++i)
            if (!v[i].is_zero()) z.emplace_back(i, v[i]);
        basis.push_back(std::move(z));
    }
    return basis;
}

/// One-dimensional space of left (or right) integrals; throws when the
/// integral space does not have dimension one.
inline SparseRow integral_element(const HopfAlgebra& H, bool left) {
    const long d = H.dim;
    std::vector<long> gens = H.generators;
    if (gens.empty())
        for (long i = 0; i < d; ++i) gens.push_back(i);
    std::vector<SparseRow> rows(gens.size() * d);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<SparseRow> cols(d);
        for (long j = 0; j < d; ++j) {
            cols[j] = left ? H.mul(sv_unit(gens[gi]), sv_unit(j)) : H.mul(sv_unit(j), sv_unit(gens[gi]));
            sv_add_scaled(cols[j], -H.counit_vec[gens[gi]], sv_unit(j));
        }
        detail::scatter_columns(rows, static_cast<long>(gi) * d, cols);
    }
    detail::sort_rows(rows);
    auto ns = sparse_nullspace(std::move(rows), d);
    if (ns.size() != 1)
        throw std::domain_error("integral space has dimension " + std::to_string(ns.size()));
    SparseRow out;
    for (long i = 0; i < d; ++i)
        if (!ns[0][i].is_zero()) out.emplace_back(i, ns[0][i]);
    return out;
}
inline SparseRow left_integral(const HopfAlgebra& H) { return integral_element(H, true); }
inline SparseRow right_integral(const HopfAlgebra& H) { return integral_element(H, false); }

inline bool is_unimodular(const HopfAlgebra& H) {
    SparseRow l = left_integral(H), r = right_integral(H);
    if (l.size() != r.size()) return false;
    // proportional?
    Cyclo ratio = r.front().second / l.front().second;
    for (size_t i = 0; i < l.size(); ++i)
        if (l[i].first != r[i].first || ratio * l[i].second != r[i].second) return false;
    return true;
}

/// Cointegrals: functionals with (id (x) lambda)Delta(x) = lambda(x) 1
/// ("right" side collects on the left tensor slot) or the mirror condition.
inline SparseRow cointegral_element(const HopfAlgebra& H, bool collect_left) {
    const long d = H.dim;
    std::vector<SparseRow> rows(d * d); // constraint per (x, output coordinate)
    for (long x = 0; x < d; ++x) {
        for (const auto& [k, c] : H.comult_rows[x]) {
            long k1 = k / d, k2 = k % d;
            long out = collect_left ? k1 : k2;   // surviving slot
            long arg = collect_left ? k2 : k1;   // slot eaten by lambda
            rows[x * d + out].emplace_back(arg, c);
        }
        for (const auto& [u, cu] : H.unit) rows[x * d + u].emplace_back(x, -cu);
    }
    detail::sort_rows(rows);
    auto ns = sparse_nullspace(std::move(rows), d);
    if (ns.size() != 1)
        throw std::domain_error("cointegral space has dimension " + std::to_string(ns.size()));
    SparseRow out;
    for (long i = 0; i < d; ++i)
        if (!ns[0][i].is_zero()) out.emplace_back(i, ns[0][i]);
    return out;
}

struct IntegralPair {
    SparseRow integral;   // Lambda
    SparseRow cointegral; // lambda, normalized so lambda(Lambda) = 1
    bool unimodular = false;
};

inline Cyclo dual_pair(const SparseRow& lambda, const SparseRow& x) {
    Cyclo c(0);
    size_t i = 0, j = 0;
    while (i < lambda.size() && j < x.size()) {
        if (lambda[i].first < x[j].first) ++i;
        else if (lambda[i].first > x[j].first) ++j;
        else c += lambda[i++].second * x[j++].second;
    }
    return c;
}

inline IntegralPair normalize_pair(SparseRow Lambda, SparseRow lambda, bool unimodular) {
    Cyclo p = dual_pair(lambda, Lambda);
    if (p.is_zero()) throw std::domain_error("lambda(Lambda) = 0, cannot normalize");
    return IntegralPair{std::move(Lambda), sv_scale(p.inverse(), lambda), unimodular};
}

/// Space of q-characters {beta : beta(xy) = beta(S^2(y) x)}, imposed for all
/// basis x and generators y (sufficient by multiplicativity of both sides in y).
inline std::vector<SparseRow> qchar_space(const HopfAlgebra& H) {
    const long d = H.dim;
    std::vector<long> gens = H.generators;
    if (gens.empty())
        for (long i = 0; i < d; ++i) gens.push_back(i);
    std::vector<SparseRow> rows;
    rows.reserve(gens.size() * d);
    for (long y : gens) {
        SparseRow s2y = H.antipode_apply(H.antipode_rows[y]);
        for (long x = 0; x < d; ++x) {
            SparseRow diff = H.mul(sv_unit(x), sv_unit(y));
            sv_add_scaled(diff, Cyclo(-1), H.mul(s2y, sv_unit(x)));
            if (!diff.empty()) rows.push_back(std::move(diff));
        }
    }
    auto ns = sparse_nullspace(std::move(rows), d);
    std::vector<SparseRow> basis;
    for (const auto& v : ns) {
        SparseRow b;
        for (long i = 0; i < d; ++i)
            if (!v[i].is_zero()) b.emplace_back(i, v[i]);
        basis.push_back(std::move(b));
    }
    return basis;
}

/// The Higman trace map tau(x) = sum S(Lambda_(2)) x Lambda_(1) G^{-1} and
/// the Higman ideal it generates.  Caches Delta(Lambda) and G^{-1}.
class TraceMap {
public:
    TraceMap(const HopfAlgebra& H, SparseRow G, const SparseRow& Lambda) : H_(H) {
        SparseRow ginv = element_inverse(H, G);
        const long d = H.dim;
        for (const auto& [k, c] : H.comult(Lambda)) {
            long k1 = k / d, k2 = k % d;
            terms_.push_back({H_.mul(sv_unit(k1), ginv), H.antipode_rows[k2], c});
        }
    }

    SparseRow apply(const SparseRow& x) const {
        SvAccum out;
        for (const auto& t : terms_)
            out.add_scaled(t.coeff, H_.mul(t.s_l2, H_.mul(x, t.l1_ginv)));
        return out.take();
    }

private:
    struct Term {
        SparseRow l1_ginv; // Lambda_(1) G^{-1}
        SparseRow s_l2;    // S(Lambda_(2))
        Cyclo coeff;
    };
    const HopfAlgebra& H_;
    std::vector<Term> terms_;
};

inline std::vector<SparseRow> higman_ideal(const HopfAlgebra& H, const TraceMap& tau) {
    std::vector<std::vector<Cyclo>> vecs;
    for (long i = 0; i < H.dim; ++i) {
        SparseRow t = tau.apply(sv_unit(i));
        if (t.empty()) continue;
        std::vector<Cyclo> v(H.dim, Cyclo(0));
        for (const auto& [j, c] : t) v[j] = c;
        vecs.push_back(std::move(v));
    }
    echelon_basis(vecs);
    std::vector<SparseRow> basis;
    for (const auto& v : vecs) {
        SparseRow b;
        for (long i = 0; i < H.dim; ++i)
            if (!v[i].is_zero()) b.emplace_back(i, v[i]);
        basis.push_back(std::move(b));
    }
    return basis;
}

/// Radford map phi(alpha) = sum alpha(Lambda_(1)) Lambda_(2).
inline SparseRow radford_map(const HopfAlgebra& H, const SparseRow& Lambda, const SparseRow& alpha) {
    SparseRow out;
    const long d = H.dim;
    for (const auto& [k, c] : H.comult(Lambda)) {
        Cyclo a = sv_get(alpha, k / d);
        if (!a.is_zero()) sv_add_scaled(out, c * a, sv_unit(k % d));
    }
    return out;
}

/// Frobenius map Psi(a)(b) = lambda(S(a) b).
inline SparseRow frobenius_map(const HopfAlgebra& H, const SparseRow& lambda, const SparseRow& a) {
    SparseRow sa = H.antipode_apply(a);
    SparseRow out;
    for (long b = 0; b < H.dim; ++b) {
        Cyclo c = dual_pair(lambda, H.mul(sa, sv_unit(b)));
        if (!c.is_zero()) out.emplace_back(b, c);
    }
    return out;
}

/// Is x in the span of the given sparse vectors?
inline bool in_span(const std::vector<SparseRow>& span, const SparseRow& x, long dim) {
    std::vector<std::vector<Cyclo>> cols;
    for (const auto& s : span) {
        std::vector<Cyclo> v(dim, Cyclo(0));
        for (const auto& [i, c] : s) v[i] = c;
        cols.push_back(std::move(v));
    }
    std::vector<Cyclo> b(dim, Cyclo(0));
    for (const auto& [i, c] : x) b[i] = c;
    return solve_columns(cols, b).has_value();
}

/// Coordinates of x in a list of sparse basis vectors (throws if outside).
inline std::vector<Cyclo> coords_in_basis(const std::vector<SparseRow>& basis, const SparseRow& x,
                                          long dim) {
    std::vector<std::vector<Cyclo>> cols;
    for (const auto& s : basis) {
        std::vector<Cyclo> v(dim, Cyclo(0));
        for (const auto& [i, c] : s) v[i] = c;
        cols.push_back(std::move(v));
    }
    std::vector<Cyclo> b(dim, Cyclo(0));
    for (const auto& [i, c] : x) b[i] = c;
    auto sol = solve_columns(cols, b);
    if (!sol) throw std::domain_error("element is outside the spanning set");
    return *sol;
}

} // namespace hopfcas
