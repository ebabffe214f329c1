#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcas/families/uqsl2.hpp>

using namespace hopfcas;
using namespace hopfcas::families;

TEST_CASE("uqsl2 parameter validation") {
    CHECK_THROWS(uqsl2_algebra(4));
    CHECK_THROWS(uqsl2_algebra(1));
}

TEST_CASE("uqsl2(3) passes all Hopf axioms over the full basis") {
    auto H = uqsl2_algebra(3);
    CHECK(H->dim == 27);
    auto rep = H->verify_hopf_axioms();
    INFO(rep.summary());
    CHECK(rep.all_pass());
}

TEST_CASE("uqsl2(5) passes the Hopf axioms (generator-reduced mode)") {
    auto H = uqsl2_algebra(5);
    CHECK(H->dim == 125);
    auto rep = H->verify_hopf_axioms();
    INFO(rep.summary());
    CHECK(rep.all_pass());
}

TEST_CASE("defining relations") {
    long l = 5;
    UqScalars S(l);
    UqIndex ix{l};
    auto H = uqsl2_algebra(l);
    long E = ix.e_index(), F = ix.f_index(), K = ix.k_index();
    // E F = F E + (K - K^{-1})/(q - q^{-1})
    SparseRow rhs = H->mul_basis(F, E);
    Cyclo denom = S.q(1) - S.q(-1);
    sv_add_scaled(rhs, denom.inverse(), sv_unit(ix.idx(0, 0, 1)));
    sv_add_scaled(rhs, -denom.inverse(), sv_unit(ix.idx(0, 0, l - 1)));
    CHECK(H->mul_basis(E, F) == rhs);
    // K E = q^2 E K
    CHECK(H->mul(sv_unit(K), sv_unit(E)) == sv_scale(S.q(2), H->mul(sv_unit(E), sv_unit(K))));
    // truncations
    CHECK(H->mul(sv_unit(ix.idx(0, l - 1, 0)), sv_unit(E)).empty());
    CHECK(H->mul(sv_unit(ix.idx(l - 1, 0, 0)), sv_unit(F)).empty());
    CHECK(H->mul(sv_unit(ix.idx(0, 0, l - 1)), sv_unit(K)) == H->unit);
    // Delta(K) = K (x) K
    CHECK(H->comult_rows[K] == sv_unit(K * H->dim + K));
}

TEST_CASE("comultiplication matches the closed q-binomial formula") {
    long l = 3;
    UqScalars S(l);
    UqIndex ix{l};
    auto H = uqsl2_algebra(l);
    const long d = H->dim;
    for (long p = 0; p < d; ++p) {
        long m, n, k;
        ix.decode(p, m, n, k);
        SparseRow expect;
        for (long r = 0; r <= m; ++r)
            for (long s = 0; s <= n; ++s) {
                Cyclo c = S.q(2 * (n - s) * (r - m) + r * (m - r) + s * (n - s)) * S.qbinom(m, r) *
                          S.qbinom(n, s);
                long left = ix.idx(r, n - s, r - m + k);
                long right = ix.idx(m - r, s, n - s + k);
                sv_add_scaled(expect, c, sv_unit(left * d + right));
            }
        CHECK(H->comult_rows[p] == expect);
    }
    // and Delta(F*E) = Delta(F)Delta(E) through the tensor product algebra
    long fe = ix.idx(1, 1, 0);
    CHECK(H->comult_rows[fe] ==
          H->ten_mul(H->comult_rows[ix.f_index()], H->comult_rows[ix.e_index()]));
}

TEST_CASE("R-matrix is quasitriangular and theta is a ribbon element") {
    for (long l : {3L}) {
        auto H = uqsl2_algebra(l);
        SparseRow R = uqsl2_r_matrix(*H, l);
        auto rep = verify_quasitriangular(*H, R);
        INFO(rep.summary());
        CHECK(rep.all_pass());
        SparseRow theta = uqsl2_ribbon(*H, l);
        auto rrep = verify_ribbon(*H, R, theta, /*q_inverse=*/true);
        INFO(rrep.summary());
        CHECK(rrep.all_pass());
    }
}

TEST_CASE("uqsl2(3) is factorizable of full rank") {
    auto H = uqsl2_algebra(3);
    SparseRow R = uqsl2_r_matrix(*H, 3);
    auto f = is_factorizable(*H, R);
    CHECK(f.factorizable);
    CHECK(f.rank == 27);
}

TEST_CASE("integrals") {
    for (long l : {3L, 5L}) {
        auto H = uqsl2_algebra(l);
        auto uq_ints = uqsl2_integrals(*H, l);
        SparseRow Lambda = uq_ints.Lambda, lambda = uq_ints.lambda_lm;
        for (long g : H->generators) {
            CHECK(H->mul(sv_unit(g), Lambda) == sv_scale(H->counit_vec[g], Lambda));
            CHECK(H->mul(Lambda, sv_unit(g)) == sv_scale(H->counit_vec[g], Lambda));
        }
        CHECK(dual_pair(lambda, Lambda) == Cyclo(1).embedded(8 * l));
        // both cointegral flavors are proportional to their computed spaces
        SparseRow lam_l = cointegral_element(*H, true), lam_r = cointegral_element(*H, false);
        CHECK(sv_scale(lam_l.front().second.inverse(), lam_l) ==
              sv_scale(lambda.front().second.inverse(), lambda));
        CHECK(sv_scale(lam_r.front().second.inverse(), lam_r) ==
              sv_scale(uq_ints.lambda_other.front().second.inverse(), uq_ints.lambda_other));
    }
}

TEST_CASE("K is the balancing element") {
    long l = 3;
    auto H = uqsl2_algebra(l);
    UqIndex ix{l};
    CHECK(verify_balancing(*H, sv_unit(ix.k_index())));
}

TEST_CASE("simple module actions match the stated formulas") {
    long l = 3;
    UqScalars S(l);
    auto H = uqsl2_algebra(l);
    ModuleRep V2 = uqsl2_simple(*H, l, 2);
    UqIndex ix{l};
    const Mat& K = V2.gen_action.at(ix.k_index());
    const Mat& E = V2.gen_action.at(ix.e_index());
    const Mat& F = V2.gen_action.at(ix.f_index());
    CHECK(K(0, 0) == S.q(1));
    CHECK(F(1, 0) == Cyclo(1).embedded(S.N));
    CHECK(E(0, 1) == S.qint(1) * S.qint(1));
}

TEST_CASE("projective modules satisfy the presentation; characters stack up") {
    for (long l : {3L, 5L}) {
        auto H = uqsl2_algebra(l);
        UqIndex ix{l};
        SparseRow Ginv = sv_unit(ix.idx(0, 0, l - 1));
        std::vector<SparseRow> qchars;
        for (long r = 1; r <= l; ++r) qchars.push_back(qcharacter(uqsl2_simple(*H, l, r), Ginv));
        for (long r = 1; r < l; ++r) {
            ModuleRep P = uqsl2_projective(*H, l, r);
            CHECK(P.dim == 2 * l);
            SparseRow pch = qcharacter(P, Ginv);
            SparseRow expect = sv_scale(Cyclo(2), qchars[r - 1]);
            sv_add_scaled(expect, Cyclo(2), qchars[l - r - 1]);
            CHECK(pch == expect);
        }
    }
}

TEST_CASE("canonical central basis") {
    long l = 5;
    UqScalars S(l);
    long h = S.h;
    auto H = uqsl2_algebra(l);
    SparseRow R = uqsl2_r_matrix(*H, l);
    auto uq_ints = uqsl2_integrals(*H, l);
    SparseRow Lambda = uq_ints.Lambda, lambda = uq_ints.lambda_lm;
    std::vector<ModuleRep> simples;
    for (long r = 1; r <= l; ++r) simples.push_back(uqsl2_simple(*H, l, r));
    auto Z = uqsl2_center_data(*H, l, R, Lambda, simples);

    // minimal polynomial: (C - b_0) prod_j (C - b_j)^2 = 0
    SparseRow mp = Z.casimir;
    sv_add_scaled(mp, -Z.bval[0], H->unit);
    for (long j = 1; j <= h; ++j) {
        SparseRow lin = Z.casimir;
        sv_add_scaled(lin, -Z.bval[j], H->unit);
        mp = H->mul(mp, H->mul(lin, lin));
    }
    CHECK(mp.empty());

    // orthogonality of blocks and nilpotents
    for (long i = 0; i <= h; ++i)
        for (long j = 0; j <= h; ++j) {
            SparseRow prod = H->mul(Z.P[i], Z.P[j]);
            if (i == j) CHECK(prod == Z.P[j]);
            else CHECK(prod.empty());
            if (j >= 1) {
                SparseRow pn = H->mul(Z.P[i], Z.Nj[j]);
                if (i == j) CHECK(pn == Z.Nj[j]);
                else CHECK(pn.empty());
            }
        }
    for (long i = 1; i <= h; ++i)
        for (long j = 1; j <= h; ++j) {
            CHECK(H->mul(Z.Nplus[i], Z.Nplus[j]).empty());
            CHECK(H->mul(Z.Nplus[i], Z.Nminus[j]).empty());
            CHECK(H->mul(Z.Nminus[i], Z.Nminus[j]).empty());
        }
    // sum of the block projectors is the unit
    SparseRow sum;
    for (long j = 0; j <= h; ++j) sv_add_scaled(sum, Cyclo(1), Z.P[j]);
    CHECK(sum == H->unit);

    // ribbon element in canonical coordinates
    SparseRow theta = uqsl2_ribbon(*H, l);
    SparseRow expect;
    for (long r = 0; r <= h; ++r) {
        Cyclo c = S.qh(-(r * r - 1));
        if (r % 2 == 0) c = -c; // (-1)^{r+1}
        sv_add_scaled(expect, c, Z.P[r]);
        if (r >= 1) {
            Cyclo base = (S.q(1) - S.q(-1)) * c;
            sv_add_scaled(expect, -base * Cyclo(Rat(l - r)) / S.qint(l - r), Z.Nplus[r]);
            sv_add_scaled(expect, -base * Cyclo(Rat(r)) / S.qint(r), Z.Nminus[r]);
        }
    }
    CHECK(theta == expect);

    // Chebyshev route to the chi basis: chi(1) = 1, chi(2) = (q-q^{-1})^2 C,
    // chi(r+1) = chi(2) chi(r) - chi(r-1)
    std::vector<SparseRow> cheb(l + 1);
    cheb[1] = H->unit;
    Cyclo dd = (S.q(1) - S.q(-1)).pow(2);
    cheb[2] = sv_scale(dd, Z.casimir);
    for (long r = 3; r <= l; ++r) {
        cheb[r] = H->mul(cheb[2], cheb[r - 1]);
        sv_add_scaled(cheb[r], Cyclo(-1), cheb[r - 2]);
    }
    for (long r = 1; r <= l; ++r) CHECK(Z.chi[r] == cheb[r]);

    // phi(r) golden values
    Cyclo lsq = Cyclo(Rat(l)) * Cyclo::sqrt_integer(l, S.N);
    for (long r = 1; r <= h; ++r)
        CHECK(Z.phi[r] == sv_scale(lsq / (S.qint(r) * S.qint(r)), Z.Nplus[r]));
    for (long r = h + 1; r <= 2 * h; ++r)
        CHECK(Z.phi[r] == sv_scale(lsq / (S.qint(r) * S.qint(r)), Z.Nminus[l - r]));
    CHECK(Z.phi[l] == sv_scale(lsq, Z.P[0]));

    // nu(r) = l P_0 + l sum_j (q^{jr} + q^{-jr})/[j]^2 N_j
    for (long r = 0; r <= h; ++r) {
        SparseRow ex = sv_scale(Cyclo(Rat(l)), Z.P[0]);
        for (long j = 1; j <= h; ++j)
            sv_add_scaled(ex, Cyclo(Rat(l)) * (S.q(j * r) + S.q(-j * r)) / (S.qint(j) * S.qint(j)),
                          Z.Nj[j]);
        CHECK(Z.nu[r] == ex);
    }
}

TEST_CASE("primitive idempotents") {
    long l = 3;
    auto H = uqsl2_algebra(l);
    SparseRow R = uqsl2_r_matrix(*H, l);
    auto uq_ints = uqsl2_integrals(*H, l);
    SparseRow Lambda = uq_ints.Lambda, lambda = uq_ints.lambda_lm;
    std::vector<ModuleRep> simples;
    for (long r = 1; r <= l; ++r) simples.push_back(uqsl2_simple(*H, l, r));
    auto Z = uqsl2_center_data(*H, l, R, Lambda, simples);
    std::vector<SparseRow> es;
    for (long r = 1; r <= l; ++r) es.push_back(uqsl2_primitive_idempotent(*H, l, Z, r));
    for (long r = 0; r < l; ++r) {
        CHECK(H->mul(es[r], es[r]) == es[r]);
        for (long s = 0; s < l; ++s) {
            if (s != r) CHECK(H->mul(es[r], es[s]).empty());
            // dim Hom(H e_r, V_s) = Tr_{V_s} rho(e_r) = delta_{rs}
            Cyclo tr = simples[s].action_of(es[r]).trace();
            CHECK(tr == Cyclo(r == s ? 1 : 0).embedded(H->conductor));
        }
    }
}
