#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcas/hopf.hpp>

using namespace hopfcas;

namespace {

// group algebra C[Z/n] with basis g^0..g^{n-1}
std::unique_ptr<HopfAlgebra> group_algebra(long n) {
    auto H = std::make_unique<HopfAlgebra>();
    H->dim = n;
    H->conductor = 1;
    for (long i = 0; i < n; ++i) H->labels.push_back("g^" + std::to_string(i));
    H->unit = sv_unit(0);
    H->comult_rows.resize(n);
    H->counit_vec.assign(n, Cyclo(1));
    H->antipode_rows.resize(n);
    for (long i = 0; i < n; ++i) {
        H->comult_rows[i] = sv_unit(i * n + i);
        H->antipode_rows[i] = sv_unit((n - i) % n);
    }
    H->set_mult_provider([n](long i, long j) { return sv_unit((i + j) % n); }, true);
    H->generators = {1 % n};
    return H;
}

} // namespace

TEST_CASE("group algebra passes all axioms") {
    for (long n : {2L, 3L, 6L}) {
        auto H = group_algebra(n);
        auto rep = H->verify_hopf_axioms();
        INFO(rep.summary());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("corrupted antipode is detected with a witness") {
    auto H = group_algebra(3);
    H->antipode_rows[1] = sv_unit(1); // wrong: S(g) must be g^2
    auto rep = H->verify_hopf_axioms();
    bool antipode_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "antipode" && !c.pass && !c.witness.empty()) antipode_failed = true;
    CHECK(antipode_failed);
}

TEST_CASE("element arithmetic and parent checks") {
    auto H = group_algebra(4);
    auto K = group_algebra(4);
    AlgElem a = H->basis_elem(1), b = H->basis_elem(3);
    CHECK(H->mul(a, b).v == H->unit);
    CHECK(H->counit_apply(a.v) == Cyclo(1));
    CHECK_THROWS(H->mul(a, K->basis_elem(1)));
    // iterated comultiplication of a grouplike is g (x) g (x) g
    SparseRow d3 = H->iterated_comult(sv_unit(1), 3);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].first == 1 * 16 + 1 * 4 + 1);
}

TEST_CASE("dual_cop of a group algebra") {
    auto H = group_algebra(3);
    auto D = dual_cop(*H);
    CHECK(D->dim == 3);
    // unit of the dual is the counit vector of H (all ones here)
    CHECK(D->unit.size() == 3);
    auto rep = D->verify_hopf_axioms();
    INFO(rep.summary());
    CHECK(rep.all_pass());
    // dual of C[Z/n] is the function algebra: delta_i * delta_j = delta_{ij} delta_i
    CHECK(D->mul_basis(1, 1) == sv_unit(1));
    CHECK(D->mul_basis(1, 2).empty());
}

TEST_CASE("drinfeld double of a group algebra") {
    auto H = group_algebra(2);
    auto dd = drinfeld_double(*H);
    CHECK(dd.algebra->dim == 4);
    auto rep = dd.algebra->verify_hopf_axioms();
    INFO(rep.summary());
    CHECK(rep.all_pass());
    // the canonical R has one term per basis element of H against the dual
    CHECK_FALSE(dd.canonical_r.empty());
}
