#pragma once

// JSON serialization: exact scalars as {"conductor", "coeffs": [[num, den]...]}
// with numerator/denominator as decimal strings (lossless), sparse structure
// constants as index/scalar quadruples, matrices with exact entries and
// optional decimal approximations.  Serialization is canonical (sorted keys,
// fixed formatting), so export -> import -> recompute -> export is
// byte-identical.

#include "pipeline.hpp"

#include <json.hpp>

namespace hopfcas {

using json = nlohmann::json;

inline json to_json(const Cyclo& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs())
        coeffs.push_back(json::array({q.get_num().get_str(), q.get_den().get_str()}));
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline Cyclo cyclo_from_json(const json& j) {
    long n = j.at("conductor").get<long>();
    std::vector<Rat> coeffs;
    for (const auto& p : j.at("coeffs")) {
        Rat q(Int(p.at(0).get<std::string>()), Int(p.at(1).get<std::string>()));
        q.canonicalize();
        coeffs.push_back(q);
    }
    return Cyclo(n, std::move(coeffs));
}

inline json to_json(const SparseRow& v) {
    json out = json::array();
    for (const auto& [i, c] : v) out.push_back(json::array({i, to_json(c)}));
    return out;
}

inline SparseRow sparse_from_json(const json& j) {
    SparseRow out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<long>(), cyclo_from_json(e.at(1)));
    return out;
}

inline json to_json(const Mat& m, int approx_digits = 0) {
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    json out{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
    if (approx_digits > 0) {
        json ap = json::array();
        for (long i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (long j = 0; j < m.cols(); ++j) {
                auto [re, im] = m(i, j).approx(approx_digits);
                row.push_back(json::array({re, im}));
            }
            ap.push_back(row);
        }
        out["approx"] = ap;
        out["approx_digits"] = approx_digits;
    }
    return out;
}

inline Mat mat_from_json(const json& j) {
    Mat m(j.at("rows").get<long>(), j.at("cols").get<long>());
    const auto& rows = j.at("entries");
    for (long i = 0; i < m.rows(); ++i)
        for (long jj = 0; jj < m.cols(); ++jj) m(i, jj) = cyclo_from_json(rows.at(i).at(jj));
    return m;
}

/// Algebra schema: {"dim", "labels", "mult": [[i,j,k,scalar]...],
/// "comult": [[i,j,k,scalar]...], "counit": [...], "antipode": [[i,j,scalar]...]}.
inline json to_json(const HopfAlgebra& H) {
    json mult = json::array();
    for (long i = 0; i < H.dim; ++i)
        for (long j = 0; j < H.dim; ++j)
            for (const auto& [k, c] : H.mul_basis(i, j))
                mult.push_back(json::array({i, j, k, to_json(c)}));
    json comult = json::array();
    for (long i = 0; i < H.dim; ++i)
        for (const auto& [key, c] : H.comult_rows[i])
            comult.push_back(json::array({i, key / H.dim, key % H.dim, to_json(c)}));
    json counit = json::array();
    for (long i = 0; i < H.dim; ++i) counit.push_back(to_json(H.counit_vec[i]));
    json antipode = json::array();
    for (long i = 0; i < H.dim; ++i)
        for (const auto& [j, c] : H.antipode_rows[i]) antipode.push_back(json::array({i, j, to_json(c)}));
    return json{{"dim", H.dim},           {"conductor", H.conductor}, {"labels", H.labels},
                {"unit", to_json(H.unit)}, {"mult", mult},            {"comult", comult},
                {"counit", counit},       {"antipode", antipode},     {"generators", H.generators}};
}

inline std::unique_ptr<HopfAlgebra> algebra_from_json(const json& j) {
    auto H = std::make_unique<HopfAlgebra>();
    H->dim = j.at("dim").get<long>();
    H->conductor = j.at("conductor").get<long>();
    H->labels = j.at("labels").get<std::vector<std::string>>();
    H->unit = sparse_from_json(j.at("unit"));
    H->generators = j.at("generators").get<std::vector<long>>();
    const long d = H->dim;
    auto table = std::make_shared<std::vector<SparseRow>>(static_cast<size_t>(d) * d);
    for (const auto& e : j.at("mult"))
        (*table)[static_cast<size_t>(e.at(0).get<long>()) * d + e.at(1).get<long>()].emplace_back(
            e.at(2).get<long>(), cyclo_from_json(e.at(3)));
    for (auto& row : *table)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    H->set_mult_provider([table, d](long i, long j2) { return (*table)[static_cast<size_t>(i) * d + j2]; },
                         true);
    H->comult_rows.assign(d, {});
    for (const auto& e : j.at("comult"))
        H->comult_rows[e.at(0).get<long>()].emplace_back(
            e.at(1).get<long>() * d + e.at(2).get<long>(), cyclo_from_json(e.at(3)));
    for (auto& row : H->comult_rows)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    H->counit_vec.clear();
    for (const auto& e : j.at("counit")) H->counit_vec.push_back(cyclo_from_json(e));
    H->antipode_rows.assign(d, {});
    for (const auto& e : j.at("antipode"))
        H->antipode_rows[e.at(0).get<long>()].emplace_back(e.at(1).get<long>(), cyclo_from_json(e.at(2)));
    for (auto& row : H->antipode_rows)
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return H;
}

inline json to_json(const ModuleRep& M) {
    json gens = json::object();
    for (const auto& [g, mat] : M.gen_action) gens[M.parent->labels[g]] = to_json(mat);
    return json{{"name", M.name}, {"dim", M.dim}, {"generators", gens}};
}

/// Everything the modular pipeline needs, without the modules.
inline json instance_to_json(const families::FamilyInstance& F) {
    json out;
    out["family"] = F.family;
    out["param"] = F.param;
    out["algebra"] = to_json(F.H());
    out["ribbon"] = json{{"R", to_json(F.ribbon.R)},
                         {"v", to_json(F.ribbon.v)},
                         {"G", to_json(F.ribbon.G)},
                         {"has_ribbon", F.ribbon.has_ribbon}};
    out["integrals"] = json{{"integral", to_json(F.integrals.integral)},
                            {"cointegral", to_json(F.integrals.cointegral)},
                            {"unimodular", F.integrals.unimodular}};
    json classes = json::array();
    for (const auto& c : F.higman)
        classes.push_back(json{{"label", c.label},
                               {"simple_index", c.simple_index},
                               {"chi_functional", to_json(c.chi_functional)},
                               {"tau_element", to_json(c.tau_element)},
                               {"socle_dim", c.socle_dim},
                               {"steinberg", c.steinberg}});
    out["higman_classes"] = classes;
    json table;
    table["irr_qchars"] = json::array();
    table["irr_chars"] = json::array();
    table["proj_qchars"] = json::array();
    for (const auto& x : F.table.irr_qchars) table["irr_qchars"].push_back(to_json(x));
    for (const auto& x : F.table.irr_chars) table["irr_chars"].push_back(to_json(x));
    for (const auto& x : F.table.proj_qchars) table["proj_qchars"].push_back(to_json(x));
    table["simple_dims"] = F.table.simple_dims;
    table["proj_dims"] = F.table.proj_dims;
    table["steinberg"] = F.table.steinberg;
    table["simple_names"] = F.table.simple_names;
    table["proj_names"] = F.table.proj_names;
    out["table"] = table;
    json idem = json::array();
    for (const auto& e : F.idempotents) idem.push_back(to_json(e));
    out["idempotents"] = idem;
    return out;
}

inline families::FamilyInstance instance_from_json(const json& j) {
    families::FamilyInstance F;
    F.family = j.at("family").get<std::string>();
    F.param = j.at("param").get<long>();
    F.algebra = algebra_from_json(j.at("algebra"));
    F.ribbon.R = sparse_from_json(j.at("ribbon").at("R"));
    F.ribbon.v = sparse_from_json(j.at("ribbon").at("v"));
    F.ribbon.G = sparse_from_json(j.at("ribbon").at("G"));
    F.ribbon.has_ribbon = j.at("ribbon").at("has_ribbon").get<bool>();
    F.integrals.integral = sparse_from_json(j.at("integrals").at("integral"));
    F.integrals.cointegral = sparse_from_json(j.at("integrals").at("cointegral"));
    F.integrals.unimodular = j.at("integrals").at("unimodular").get<bool>();
    for (const auto& c : j.at("higman_classes")) {
        families::HigmanClass hc;
        hc.label = c.at("label").get<std::string>();
        hc.simple_index = c.at("simple_index").get<long>();
        hc.chi_functional = sparse_from_json(c.at("chi_functional"));
        hc.tau_element = sparse_from_json(c.at("tau_element"));
        hc.socle_dim = c.at("socle_dim").get<long>();
        hc.steinberg = c.at("steinberg").get<bool>();
        F.higman.push_back(std::move(hc));
    }
    const auto& t = j.at("table");
    for (const auto& x : t.at("irr_qchars")) F.table.irr_qchars.push_back(sparse_from_json(x));
    for (const auto& x : t.at("irr_chars")) F.table.irr_chars.push_back(sparse_from_json(x));
    for (const auto& x : t.at("proj_qchars")) F.table.proj_qchars.push_back(sparse_from_json(x));
    F.table.simple_dims = t.at("simple_dims").get<std::vector<long>>();
    F.table.proj_dims = t.at("proj_dims").get<std::vector<long>>();
    F.table.steinberg = t.at("steinberg").get<std::vector<bool>>();
    F.table.simple_names = t.at("simple_names").get<std::vector<std::string>>();
    F.table.proj_names = t.at("proj_names").get<std::vector<std::string>>();
    for (const auto& e : j.at("idempotents")) F.idempotents.push_back(sparse_from_json(e));
    return F;
}

inline json bundle_to_json(const ModularBundle& B, int digits = 8) {
    json out;
    out["schema_version"] = 1;
    out["center_dim"] = B.center.size();
    out["higman_dim"] = B.hig.size();
    out["kappa"] = to_json(B.kappa);
    {
        auto [re, im] = B.kappa.approx(digits);
        out["kappa_approx"] = json::array({re, im});
    }
    out["s_cw"] = to_json(B.S_CW, digits);
    out["t_cw"] = to_json(B.T_CW, digits);
    out["t_cw_order"] = B.t_cw_order;
    out["cartan"] = to_json(B.cartan);
    json mf = json::array();
    for (const auto& m : B.mixed_fusion) mf.push_back(to_json(m));
    out["mixed_fusion"] = mf;
    out["pre_s_tilde"] = to_json(B.pre_s_tilde, digits);
    out["socle_dims"] = B.socle_dims;
    return out;
}

/// Canonical dump: two-space indentation, sorted keys (nlohmann default).
inline std::string canonical_dump(const json& j) { return j.dump(2); }

} // namespace hopfcas
