#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hopfcas/golden.hpp>

#include <random>

using namespace hopfcas;
using namespace hopfcas::families;

TEST_CASE("scalar JSON round trip") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (long n : {1L, 8L, 24L}) {
        const auto& Fld = CycloField::get(n);
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<Rat> c(Fld.phi);
            for (auto& x : c) x = Rat(num(rng), den(rng));
            Cyclo a(n, std::move(c));
            CHECK(cyclo_from_json(to_json(a)) == a);
        }
    }
    // big numerators survive the string encoding
    Rat huge(Int("123456789012345678901234567890"), Int("9876543210987654321"));
    huge.canonicalize();
    Cyclo big{huge};
    CHECK(cyclo_from_json(to_json(big)) == big);
}

TEST_CASE("algebra JSON round trip is lossless and canonical") {
    auto H = nichols_algebra(2);
    json j = to_json(*H);
    auto H2 = algebra_from_json(j);
    CHECK(H2->dim == H->dim);
    CHECK(H2->labels == H->labels);
    for (long i = 0; i < H->dim; ++i) {
        CHECK(H2->comult_rows[i] == H->comult_rows[i]);
        CHECK(H2->antipode_rows[i] == H->antipode_rows[i]);
        CHECK(H2->counit_vec[i] == H->counit_vec[i]);
        for (long k = 0; k < H->dim; ++k) CHECK(H2->mul_basis(i, k) == H->mul_basis(i, k));
    }
    CHECK(H2->verify_hopf_axioms().all_pass());
    // byte-identical re-export
    CHECK(canonical_dump(to_json(*H2)) == canonical_dump(j));
}

TEST_CASE("matrix JSON with approximations") {
    Mat m(1, 2);
    m(0, 0) = Cyclo(1, 2);
    m(0, 1) = Cyclo::i(4);
    json j = to_json(m, 5);
    CHECK(j["approx"][0][0][0] == "0.5");
    CHECK(j["approx"][0][1][1] == "1");
    CHECK(mat_from_json(j) == m);
}

TEST_CASE("module export schema") {
    auto H = nichols_algebra(1);
    auto M = nichols_modules(*H, 1);
    json j = to_json(M.p_triv);
    CHECK(j["name"] == "Pe");
    CHECK(j["dim"] == 2);
    CHECK(j["generators"].contains("K"));
    CHECK(j["generators"].contains("x1"));
}

TEST_CASE("instance round trip feeds the pipeline") {
    FamilyInstance F = dnichols(1);
    json j = instance_to_json(F);
    FamilyInstance F2 = instance_from_json(j);
    CHECK(F2.H().verify_hopf_axioms().all_pass());
    CHECK(F2.higman.size() == 3);
    // quasitriangularity carries over
    CHECK(verify_quasitriangular(F2.H(), F2.ribbon.R).all_pass());
    CHECK(canonical_dump(instance_to_json(F2)) == canonical_dump(j));
}

TEST_CASE("bundle export carries the headline fields") {
    FamilyInstance F = uqsl2(3);
    auto B = compute_modular_bundle(F);
    json j = bundle_to_json(B, 6);
    CHECK(j["center_dim"] == 4);
    CHECK(j["higman_dim"] == 2);
    CHECK(j["t_cw_order"] == 3);
    CHECK(j.contains("kappa"));
    CHECK(j.contains("s_cw"));
    CHECK(j["s_cw"].contains("approx"));
    CHECK(mat_from_json(j["s_cw"]) == B.S_CW);
}
