#pragma once

// Assembled family instances: algebra, quasitriangular/ribbon data,
// integrals, modules, character table, primitive idempotents, and the
// Higman-class data (ordering, basis functionals, socle dimensions) that the
// modular-data pipeline consumes.

#include "center.hpp"
#include "families/dnichols.hpp"
#include "families/nichols.hpp"
#include "families/uqsl2.hpp"

namespace hopfcas::families {

struct HigmanClass {
    std::string label;
    long simple_index = 0;    // representative simple
    SparseRow chi_functional; // q-character functional feeding the Drinfeld-map basis
    SparseRow tau_element;    // weighted idempotent feeding the trace-map basis
    long socle_dim = 1;
    bool steinberg = false;
};

struct FamilyInstance {
    std::string family;
    long param = 0;
    std::unique_ptr<HopfAlgebra> algebra;
    RibbonData ribbon;          // R; v in the Q^{-1} orientation when has_ribbon
    SparseRow displayed_ribbon; // closed-form element as printed (the inverse of v here)
    IntegralPair integrals;
    std::vector<ModuleRep> simples;
    std::vector<ModuleRep> projectives; // aligned with simples; Steinberg slots repeat the simple
    CharacterTable table;
    std::vector<SparseRow> idempotents; // primitive, one per simple (empty entries allowed)
    std::vector<HigmanClass> higman;
    std::shared_ptr<UqCenterData> uq;   // canonical central basis (uqsl2 only)
    std::vector<SparseRow> z_lambda;    // complement of the Higman ideal in the center
                                        // (doubled Nichols family only)

    const HopfAlgebra& H() const { return *algebra; }
    SparseRow balancing_inverse() const { return element_inverse(*algebra, ribbon.G); }
};

inline CharacterTable make_table(const HopfAlgebra& H, const std::vector<ModuleRep>& simples,
                                 const std::vector<ModuleRep>& projectives,
                                 const std::vector<bool>& steinberg, const SparseRow& Ginv) {
    CharacterTable t;
    for (size_t i = 0; i < simples.size(); ++i) {
        t.irr_qchars.push_back(qcharacter(simples[i], Ginv));
        t.irr_chars.push_back(character(simples[i]));
        t.proj_qchars.push_back(qcharacter(projectives[i], Ginv));
        t.simple_dims.push_back(simples[i].dim);
        t.proj_dims.push_back(projectives[i].dim);
        t.simple_names.push_back(simples[i].name);
        t.proj_names.push_back(projectives[i].name);
        t.steinberg.push_back(steinberg[i]);
    }
    return t;
}

inline FamilyInstance uqsl2(long l) {
    FamilyInstance F;
    F.family = "uqsl2";
    F.param = l;
    F.algebra = uqsl2_algebra(l);
    const HopfAlgebra& H = *F.algebra;
    UqIndex ix{l};
    const long h = (l - 1) / 2;

    F.ribbon.R = uqsl2_r_matrix(H, l);
    F.ribbon.v = uqsl2_ribbon(H, l);
    F.displayed_ribbon = F.ribbon.v;
    F.ribbon.G = sv_unit(ix.k_index());
    F.ribbon.has_ribbon = true;

    auto ints = uqsl2_integrals(H, l);
    SparseRow Lambda = ints.Lambda;
    F.integrals = IntegralPair{ints.Lambda, ints.lambda_lm, true};

    for (long r = 1; r <= l; ++r) F.simples.push_back(uqsl2_simple(H, l, r));
    for (long r = 1; r < l; ++r) F.projectives.push_back(uqsl2_projective(H, l, r));
    F.projectives.push_back(F.simples.back()); // Steinberg V_l is its own cover
    std::vector<bool> st(l, false);
    st[l - 1] = true;
    SparseRow Ginv = sv_unit(ix.idx(0, 0, l - 1));
    F.table = make_table(H, F.simples, F.projectives, st, Ginv);

    F.uq = std::make_shared<UqCenterData>(uqsl2_center_data(H, l, F.ribbon.R, Lambda, F.simples));
    for (long r = 1; r <= l; ++r)
        F.idempotents.push_back(uqsl2_primitive_idempotent(H, l, *F.uq, r));

    {
        HigmanClass c;
        c.label = "St";
        c.simple_index = l - 1;
        c.chi_functional = F.table.irr_qchars[l - 1];
        c.tau_element = F.idempotents[l - 1];
        c.socle_dim = l;
        c.steinberg = true;
        F.higman.push_back(std::move(c));
    }
    for (long r = 1; r <= h; ++r) {
        HigmanClass c;
        c.label = "[P" + std::to_string(r) + "]";
        c.simple_index = r - 1;
        c.chi_functional = F.table.irr_qchars[r - 1];
        sv_add_scaled(c.chi_functional, Cyclo(1), F.table.irr_qchars[l - r - 1]);
        c.tau_element = sv_scale(Cyclo(1, 2), F.idempotents[r - 1]);
        c.socle_dim = r;
        c.steinberg = false;
        F.higman.push_back(std::move(c));
    }
    return F;
}

inline FamilyInstance nichols(long n) {
    FamilyInstance F;
    F.family = "nichols";
    F.param = n;
    F.algebra = nichols_algebra(n);
    const HopfAlgebra& H = *F.algebra;
    NicholsIndex ix{n};

    F.ribbon.G = sv_unit(ix.k_index());
    if (n % 2 == 0) {
        F.ribbon.R = nichols_r_matrix(H, n);
        F.displayed_ribbon = nichols_ribbon(H, n);
        F.ribbon.v = element_inverse(H, F.displayed_ribbon);
        F.ribbon.has_ribbon = true;
    } else {
        F.ribbon.has_ribbon = false;
    }

    // integrals computed generically; K_n is unimodular iff n is even
    SparseRow Lambda = left_integral(H);
    bool uni = is_unimodular(H);
    SparseRow lambda;
    for (bool side : {true, false}) {
        SparseRow cand = cointegral_element(H, side);
        if (!dual_pair(cand, Lambda).is_zero()) {
            lambda = cand;
            break;
        }
    }
    auto pair = normalize_pair(Lambda, lambda, uni);
    F.integrals = std::move(pair);

    auto M = nichols_modules(H, n);
    F.simples = {M.v_triv, M.v_sign};
    F.projectives = {M.p_triv, M.p_sign};
    SparseRow Ginv = sv_unit(ix.k_index());
    F.table = make_table(H, F.simples, F.projectives, {false, false}, Ginv);
    return F;
}

inline FamilyInstance dnichols(long n, bool build_projective_modules = true) {
    FamilyInstance F;
    F.family = "dnichols";
    F.param = n;
    F.algebra = dnichols_algebra(n);
    const HopfAlgebra& H = *F.algebra;
    DNicholsIndex ix{n};

    F.ribbon.R = dnichols_r_matrix(H, n);
    F.ribbon.G = sv_unit(ix.k_index());
    F.displayed_ribbon = dnichols_ribbon_candidate(H, n);
    if (n % 2 == 0) {
        F.ribbon.v = element_inverse(H, F.displayed_ribbon);
        F.ribbon.has_ribbon = true;
    } else {
        F.ribbon.has_ribbon = false;
    }

    auto [Lambda, lambda] = dnichols_integrals(H, n);
    F.integrals = IntegralPair{Lambda, lambda, true};

    auto M = dnichols_modules(H, n, build_projective_modules);
    F.simples = {M.v1, M.vkk, M.vk, M.vkb};
    if (build_projective_modules) F.projectives = {M.p1, M.pkk, M.vk, M.vkb};
    SparseRow Ginv = sv_unit(ix.k_index());
    if (build_projective_modules) {
        F.table = make_table(H, F.simples, F.projectives, {false, false, true, true}, Ginv);
    } else {
        // projective characters of the big covers from the regular action on He
        F.table = CharacterTable{};
        for (size_t i = 0; i < F.simples.size(); ++i) {
            F.table.irr_qchars.push_back(qcharacter(F.simples[i], Ginv));
            F.table.irr_chars.push_back(character(F.simples[i]));
            F.table.simple_dims.push_back(F.simples[i].dim);
            F.table.simple_names.push_back(F.simples[i].name);
        }
        F.table.steinberg = {false, false, true, true};
        F.table.proj_dims = {1L << (2 * n), 1L << (2 * n), 1L << n, 1L << n};
        F.table.proj_names = {"P1", "PKKb", "VK", "VKb"};
    }

    auto E = dnichols_idempotents(H, n);
    F.idempotents = {E.e1, E.ekk, E.ek, E.ekb};

    if (!build_projective_modules) {
        // chi_{He}(x) = sum_i coefficient of b_i in x b_i e, shifted by G^{-1}
        auto left_ideal_qchar = [&](const SparseRow& e) {
            SparseRow chi;
            for (long b = 0; b < H.dim; ++b) {
                Cyclo acc(0);
                SparseRow gb = H.mul(Ginv, sv_unit(b));
                for (long i = 0; i < H.dim; ++i)
                    acc += sv_get(H.mul(H.mul(gb, sv_unit(i)), e), i);
                if (!acc.is_zero()) chi.emplace_back(b, acc);
            }
            return chi;
        };
        F.table.proj_qchars.resize(4);
        F.table.proj_qchars[0] = left_ideal_qchar(E.e1);
        F.table.proj_qchars[1] = left_ideal_qchar(E.ekk);
        F.table.proj_qchars[2] = F.table.irr_qchars[2];
        F.table.proj_qchars[3] = F.table.irr_qchars[3];
    }

    {
        HigmanClass c;
        c.label = "[P1]";
        c.simple_index = 0;
        c.chi_functional = F.table.proj_qchars[0];
        c.tau_element = E.e1;
        c.socle_dim = 1;
        F.higman.push_back(std::move(c));
    }
    {
        HigmanClass c;
        c.label = "VK";
        c.simple_index = 2;
        c.chi_functional = F.table.irr_qchars[2];
        c.tau_element = E.ek;
        c.socle_dim = 1L << n;
        c.steinberg = true;
        F.higman.push_back(std::move(c));
    }
    {
        HigmanClass c;
        c.label = "VKb";
        c.simple_index = 3;
        c.chi_functional = F.table.irr_qchars[3];
        c.tau_element = E.ekb;
        c.socle_dim = 1L << n;
        c.steinberg = true;
        F.higman.push_back(std::move(c));
    }
    // Z_Lambda: the complement of the Higman ideal inside the center,
    // span{(1 + K Kb) w wbar' : |w| + |w'| even}
    for (unsigned long s = 0; s < (1UL << n); ++s)
        for (unsigned long t = 0; t < (1UL << n); ++t) {
            if ((popcount(s) + popcount(t)) % 2) continue;
            SparseRow grp = sv_unit(0L);
            sv_add_scaled(grp, Cyclo(1), sv_unit(ix.idx(1, 1, 0, 0)));
            F.z_lambda.push_back(H.mul(grp, sv_unit(ix.idx(0, 0, s, t))));
        }
    return F;
}

} // namespace hopfcas::families
