#pragma once

// Modules over a Hopf algebra given by generator matrices: characters,
// tensor products, Hom spaces, Krull-Schmidt decomposition against a known
// indecomposable list, Cartan matrices, and the Hopf-link S-matrix of the
// semi-simplification.

#include "ribbon.hpp"

#include <map>
#include <mutex>
#include <set>

namespace hopfcas {

class ModuleRep {
public:
    const HopfAlgebra* parent = nullptr;
    std::string name;
    long dim = 0;
    std::map<long, Mat> gen_action; // generator index -> matrix
    bool projective = false;

    ModuleRep() = default;

    /// Matrix of an arbitrary basis element, expanded through its normal-form
    /// generator word; memoized behind a lock for concurrent readers.
    const Mat& action_of_basis(long i) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = word_cache_.find(i);
        if (it != word_cache_.end()) return it->second;
        Mat m = Mat::identity(dim);
        for (long g : parent->basis_word(i)) m = m * gen_action.at(g);
        return word_cache_.emplace(i, std::move(m)).first->second;
    }

    Mat action_of(const SparseRow& x) const {
        Mat m(dim, dim);
        for (const auto& [i, c] : x) m = m + c * action_of_basis(i);
        return m;
    }

    ModuleRep(const ModuleRep& o)
        : parent(o.parent), name(o.name), dim(o.dim), gen_action(o.gen_action),
          projective(o.projective) {}
    ModuleRep& operator=(const ModuleRep& o) {
        parent = o.parent;
        name = o.name;
        dim = o.dim;
        gen_action = o.gen_action;
        projective = o.projective;
        return *this;
    }
    ModuleRep(ModuleRep&& o) noexcept
        : parent(o.parent), name(std::move(o.name)), dim(o.dim),
          gen_action(std::move(o.gen_action)), projective(o.projective),
          word_cache_(std::move(o.word_cache_)) {}
    ModuleRep& operator=(ModuleRep&& o) noexcept {
        parent = o.parent;
        name = std::move(o.name);
        dim = o.dim;
        gen_action = std::move(o.gen_action);
        projective = o.projective;
        word_cache_ = std::move(o.word_cache_);
        return *this;
    }

private:
    mutable std::map<long, Mat> word_cache_;
    mutable std::mutex mu_;
};

/// Build a module from generator matrices, checking that left multiplication
/// by every generator agrees with the algebra's structure constants; since
/// each basis element is a normal-form generator word, this is equivalent to
/// checking every defining relation of the presentation.
inline ModuleRep module_from_generators(const HopfAlgebra& H, std::string name, long dim,
                                        std::map<long, Mat> actions, bool projective = false,
                                        bool check = true) {
    ModuleRep M;
    M.parent = &H;
    M.name = std::move(name);
    M.dim = dim;
    M.gen_action = std::move(actions);
    M.projective = projective;
    for (long g : H.generators)
        if (!M.gen_action.count(g))
            throw std::invalid_argument("module " + M.name + ": no action for generator " + H.labels[g]);
    if (check) {
        for (long g : H.generators) {
            for (long b = 0; b < H.dim; ++b) {
                Mat lhs = M.gen_action.at(g) * M.action_of_basis(b);
                Mat rhs(dim, dim);
                for (const auto& [k, c] : H.mul_basis(g, b)) rhs = rhs + c * M.action_of_basis(k);
                if (lhs != rhs)
                    throw std::invalid_argument("module " + M.name + ": relation violated at " +
                                                H.labels[g] + " * " + H.labels[b]);
            }
        }
    }
    return M;
}

/// Trivial module: every generator acts by its counit value.
inline ModuleRep trivial_module(const HopfAlgebra& H) {
    std::map<long, Mat> act;
    for (long g : H.generators) {
        Mat m(1, 1);
        m(0, 0) = H.counit_vec[g];
        act[g] = m;
    }
    return module_from_generators(H, "1", 1, std::move(act));
}

/// Tensor product module: generators act through the comultiplication.
inline ModuleRep tensor_module(const ModuleRep& M, const ModuleRep& N) {
    if (M.parent != N.parent) throw std::invalid_argument("tensor_module: different parents");
    const HopfAlgebra& H = *M.parent;
    ModuleRep T;
    T.parent = &H;
    T.name = M.name + "(x)" + N.name;
    T.dim = M.dim * N.dim;
    T.projective = M.projective || N.projective;
    for (long g : H.generators) {
        Mat act(T.dim, T.dim);
        for (const auto& [k, c] : H.comult_rows[g]) {
            long a = k / H.dim, b = k % H.dim;
            act = act + c * kron(M.action_of_basis(a), N.action_of_basis(b));
        }
        T.gen_action[g] = std::move(act);
    }
    return T;
}

/// Ordinary character as a dual vector: chi_M(b_i) = Tr rho(b_i).
inline SparseRow character(const ModuleRep& M) {
    SparseRow chi;
    for (long i = 0; i < M.parent->dim; ++i) {
        Cyclo t = M.action_of_basis(i).trace();
        if (!t.is_zero()) chi.emplace_back(i, t);
    }
    return chi;
}

inline Cyclo trace_of_product(const Mat& a, const Mat& b) {
    Cyclo t(0);
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !b(k, i).is_zero()) t += a(i, k) * b(k, i);
    return t;
}

/// q-character Tr(rho(G^{-1}) rho(-)).
inline SparseRow qcharacter(const ModuleRep& M, const SparseRow& Ginv) {
    Mat gm = M.action_of(Ginv);
    SparseRow chi;
    for (long i = 0; i < M.parent->dim; ++i) {
        Cyclo t = trace_of_product(gm, M.action_of_basis(i));
        if (!t.is_zero()) chi.emplace_back(i, t);
    }
    return chi;
}

/// Convolution product of characters through Delta: (f*g)(b) = (f (x) g)(Delta b).
inline SparseRow char_convolve(const HopfAlgebra& H, const SparseRow& f, const SparseRow& g) {
    SparseRow out;
    for (long i = 0; i < H.dim; ++i) {
        Cyclo acc(0);
        for (const auto& [k, c] : H.comult_rows[i]) {
            Cyclo a = sv_get(f, k / H.dim);
            if (a.is_zero()) continue;
            Cyclo b = sv_get(g, k % H.dim);
            if (!b.is_zero()) acc += c * a * b;
        }
        if (!acc.is_zero()) out.emplace_back(i, acc);
    }
    return out;
}

/// Character of a tensor product without materializing the big module.
inline SparseRow tensor_character(const HopfAlgebra& H, const SparseRow& chiM, const SparseRow& chiN) {
    return char_convolve(H, chiM, chiN);
}

/// dim Hom_H(M, N), as the exact nullity of the intertwiner system
/// X rho_M(g) = rho_N(g) X over all generators.
inline long hom_space_dim(const ModuleRep& M, const ModuleRep& N) {
    if (M.parent != N.parent) throw std::invalid_argument("hom_space_dim: different parents");
    const HopfAlgebra& H = *M.parent;
    const long rowsN = N.dim, colsM = M.dim;
    const long unknowns = rowsN * colsM; // X_{ik}, i < rowsN, k < colsM
    std::vector<SparseRow> rows;
    rows.reserve(H.generators.size() * unknowns);
    for (long g : H.generators) {
        const Mat& mg = M.gen_action.at(g);
        const Mat& ng = N.gen_action.at(g);
        for (long i = 0; i < rowsN; ++i)
            for (long j = 0; j < colsM; ++j) {
                SparseRow r;
                for (long k = 0; k < colsM; ++k)
                    if (!mg(k, j).is_zero()) r.emplace_back(i * colsM + k, mg(k, j));
                for (long k = 0; k < rowsN; ++k)
                    if (!ng(i, k).is_zero()) sv_add_scaled(r, Cyclo(-1), sv_unit(k * colsM + j, ng(i, k)));
                if (!r.empty()) rows.push_back(std::move(r));
            }
    }
    return unknowns - sparse_rank(std::move(rows));
}

/// Character table of a family: q-characters of the simples and of their
/// projective covers, in a fixed order.
struct CharacterTable {
    std::vector<SparseRow> irr_qchars;
    std::vector<SparseRow> irr_chars; // ordinary characters (pre-S pairings)
    std::vector<SparseRow> proj_qchars;
    std::vector<long> simple_dims;
    std::vector<long> proj_dims;
    std::vector<bool> steinberg;
    std::vector<std::string> simple_names;
    std::vector<std::string> proj_names;
    long rank() const { return static_cast<long>(irr_qchars.size()); }
};

/// c-multiplicities [M : V_k]: the unique integral solution of
/// chi_M = sum_k g_k chi_k against the irreducible characters.
inline std::vector<long> grothendieck_multiplicities(const HopfAlgebra& H, const SparseRow& chiM,
                                                     const CharacterTable& table) {
    const long r = table.rank();
    std::vector<std::vector<Cyclo>> cols(r, std::vector<Cyclo>(H.dim, Cyclo(0)));
    for (long k = 0; k < r; ++k)
        for (const auto& [i, c] : table.irr_qchars[k]) cols[k][i] = c;
    std::vector<Cyclo> b(H.dim, Cyclo(0));
    for (const auto& [i, c] : chiM) b[i] = c;
    auto x = solve_columns(cols, b);
    if (!x) throw std::domain_error("character does not lie in the span of irreducible characters");
    std::vector<long> g(r);
    for (long k = 0; k < r; ++k) {
        Cyclo v = (*x)[k];
        if (!v.is_rational() || v.rational_value().get_den() != 1)
            throw std::domain_error("non-integral composition multiplicity");
        g[k] = static_cast<long>(v.rational_value().get_num().get_si());
        if (g[k] < 0) throw std::domain_error("negative composition multiplicity");
    }
    return g;
}

/// Cartan matrix C_{ij} = [P_i : V_j], solved from p_{e_j} = sum_i c_{ij} chi_i.
inline Mat cartan_matrix(const HopfAlgebra& H, const CharacterTable& table) {
    const long r = table.rank();
    Mat C(r, r);
    for (long j = 0; j < r; ++j) {
        auto g = grothendieck_multiplicities(H, table.proj_qchars[j], table);
        for (long i = 0; i < r; ++i) C(j, i) = Cyclo(g[i]); // row j = [P_j : V_i]
    }
    if (C != C.transpose()) throw std::logic_error("Cartan matrix is not symmetric");
    return C;
}

struct Decomposition {
    std::map<std::string, long> summands; // module name -> multiplicity
    std::vector<long> simple_mults;       // per simple index (Steinbergs counted here)
    std::vector<long> proj_mults;         // per simple index, 0 at Steinberg slots
};

/// Decompose a module known to split into family simples and projective
/// indecomposables, from (i) composition multiplicities and (ii) top counts
/// dim Hom(M, V_k); Steinberg multiplicities are read from the top counts.
inline Decomposition decompose(const ModuleRep& M, const std::vector<ModuleRep>& simples,
                               const std::vector<ModuleRep>& projectives, const CharacterTable& table,
                               const Mat& cartan, const SparseRow& Ginv) {
    const HopfAlgebra& H = *M.parent;
    const long r = table.rank();
    SparseRow chiM = qcharacter(M, Ginv);
    auto g = grothendieck_multiplicities(H, chiM, table);
    std::vector<long> h(r);
    for (long k = 0; k < r; ++k) h[k] = hom_space_dim(M, simples[k]);

    std::vector<long> nonst;
    for (long k = 0; k < r; ++k)
        if (!table.steinberg[k]) nonst.push_back(k);
    const long m = static_cast<long>(nonst.size());
    // (C' - I) m = g - h on non-Steinberg rows
    Mat A(m, m);
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b)
            A(a, b) = cartan(nonst[b], nonst[a]) - (a == b ? Cyclo(1) : Cyclo(0));
    std::vector<std::vector<Cyclo>> cols(m, std::vector<Cyclo>(m));
    for (long b = 0; b < m; ++b)
        for (long a = 0; a < m; ++a) cols[b][a] = A(a, b);
    std::vector<Cyclo> rhs(m);
    for (long a = 0; a < m; ++a) rhs[a] = Cyclo(g[nonst[a]] - h[nonst[a]]);
    auto sol = solve_columns(cols, rhs);
    if (!sol) throw std::domain_error("not quasi-dominated by the family list");

    Decomposition D;
    D.simple_mults.assign(r, 0);
    D.proj_mults.assign(r, 0);
    for (long a = 0; a < m; ++a) {
        Cyclo v = (*sol)[a];
        if (!v.is_rational() || v.rational_value().get_den() != 1 || v.rational_value() < 0)
            throw std::domain_error("not quasi-dominated by the family list");
        D.proj_mults[nonst[a]] = static_cast<long>(v.rational_value().get_num().get_si());
    }
    for (long k = 0; k < r; ++k) {
        if (table.steinberg[k]) D.simple_mults[k] = h[k];
        else D.simple_mults[k] = h[k] - D.proj_mults[k];
        if (D.simple_mults[k] < 0) throw std::domain_error("not quasi-dominated by the family list");
    }
    // verification: dimensions and exact character identity
    long total = 0;
    SparseRow chi_check;
    for (long k = 0; k < r; ++k) {
        total += D.simple_mults[k] * table.simple_dims[k] + D.proj_mults[k] * table.proj_dims[k];
        if (D.simple_mults[k])
            sv_add_scaled(chi_check, Cyclo(D.simple_mults[k]), table.irr_qchars[k]);
        if (D.proj_mults[k]) sv_add_scaled(chi_check, Cyclo(D.proj_mults[k]), table.proj_qchars[k]);
    }
    if (total != M.dim) throw std::logic_error("decompose: dimension count mismatch");
    if (chi_check != chiM) throw std::logic_error("decompose: character identity fails");
    for (long k = 0; k < r; ++k) {
        if (D.simple_mults[k]) D.summands[simples[k].name] += D.simple_mults[k];
        if (D.proj_mults[k]) D.summands[projectives[k].name] += D.proj_mults[k];
    }
    return D;
}

/// Hopf-link S-matrix of a list of simples: entry (X, Y) is the quantum trace
/// of the double braiding, computed as (qCh_X (x) qCh_Y)(Q); unnormalized.
inline std::pair<Mat, long> hopf_link_s_matrix(const HopfAlgebra& H,
                                               const std::vector<const ModuleRep*>& simples,
                                               const SparseRow& Q, const SparseRow& Ginv) {
    const long n = static_cast<long>(simples.size());
    std::vector<SparseRow> qch(n);
    for (long i = 0; i < n; ++i) qch[i] = qcharacter(*simples[i], Ginv);
    Mat S(n, n);
    for (const auto& [k, c] : Q) {
        long a = k / H.dim, b = k % H.dim;
        for (long i = 0; i < n; ++i) {
            Cyclo xa = sv_get(qch[i], a);
            if (xa.is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                Cyclo yb = sv_get(qch[j], b);
                if (!yb.is_zero()) S(i, j) += c * xa * yb;
            }
        }
    }
    return {S, S.rank()};
}

} // namespace hopfcas
