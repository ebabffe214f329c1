// Command-line front end: construct a family instance, run verification and
// computation tasks, export exact JSON (or lossy CSV) reports, and reproduce
// the full reference-table suite in one command.

#include <hopfcas/golden.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

using namespace hopfcas;

namespace {

struct TaskRow {
    std::string instance, task, status, witness;
    json artifact;
};

json rows_to_json(const std::vector<TaskRow>& rows) {
    json out;
    out["schema_version"] = 1;
    out["results"] = json::array();
    for (const auto& r : rows) {
        json e{{"instance", r.instance}, {"task", r.task}, {"status", r.status}};
        if (!r.witness.empty()) e["witness"] = r.witness;
        if (!r.artifact.is_null()) e["artifact"] = r.artifact;
        out["results"].push_back(e);
    }
    return out;
}

void flatten_csv(std::ostream& os, const std::string& prefix, const json& j, int digits) {
    if (j.is_object()) {
        if (j.contains("conductor") && j.contains("coeffs")) {
            auto [re, im] = cyclo_from_json(j).approx(digits);
            os << prefix << "," << re << "," << im << "\n";
            return;
        }
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten_csv(os, prefix + "." + it.key(), it.value(), digits);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten_csv(os, prefix + "[" + std::to_string(i) + "]", j[i], digits);
    } else {
        os << prefix << "," << j.dump() << ",\n";
    }
}

void write_report(const std::vector<TaskRow>& rows, const std::string& out_path,
                  const std::string& format, int digits) {
    json report = rows_to_json(rows);
    std::string payload;
    if (format == "csv") {
        std::ostringstream os;
        os << "# lossy decimal approximations; the JSON format is the lossless one\n";
        os << "key,value_or_re,im\n";
        flatten_csv(os, "report", report, digits);
        payload = os.str();
    } else {
        payload = canonical_dump(report) + "\n";
    }
    if (out_path.empty() || out_path == "-") {
        if (format != "pretty") std::cout << payload;
    } else {
        std::ofstream f(out_path);
        f << payload;
        if (const char* cache = std::getenv("HOPFCAS_CACHE_DIR")) {
            std::string base = out_path.substr(out_path.find_last_of('/') + 1);
            std::ofstream m(std::string(cache) + "/" + base);
            m << payload;
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular data for factorizable ribbon Hopf algebras"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "construct one instance and run tasks");
    std::string family;
    long param = 0;
    long conductor = 0;
    std::vector<std::string> tasks{"axioms"};
    std::string out_path, format = "pretty";
    int digits = 8;
    bool stretch = false;
    compute->add_option("--family", family, "uqsl2 | nichols | dnichols")->required();
    compute->add_option("--param", param, "family parameter (odd l >= 3, or n >= 1)")->required();
    compute->add_option("--conductor", conductor,
                        "cyclotomic conductor override (nichols/dnichols only; multiple of 8)");
    compute
        ->add_option("--tasks", tasks,
                     "axioms,ribbon,center,higman,cartan,fusion,modular,congruence,golden")
        ->delimiter(',');
    compute->add_option("--out", out_path, "report file (default: stdout)");
    compute->add_option("--format", format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    compute->add_option("--digits", digits, "decimal digits for approximations");
    compute->add_flag("--stretch", stretch, "allow the larger stretch instances");

    auto* reproduce = app.add_subcommand("reproduce-paper", "run the full reference-table suite");
    bool rep_stretch = false, inject = false;
    reproduce->add_flag("--stretch", rep_stretch, "add uqsl2(7) and dnichols(4)");
    reproduce->add_flag("--inject-corruption", inject,
                        "test mode: corrupt one R-matrix coefficient first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*reproduce) {
            GoldenReport rep = reproduce_all(rep_stretch, inject);
            std::cout << rep.summary();
            std::cout << (rep.all_pass() ? "all tables reproduced\n"
                                         : std::to_string(rep.failures()) + " table(s) FAILED\n");
            return rep.all_pass() ? 0 : 2;
        }

        std::set<std::string> valid{"axioms", "ribbon",  "center",     "higman", "cartan",
                                    "fusion", "modular", "congruence", "golden"};
        for (const auto& t : tasks)
            if (!valid.count(t)) {
                std::cerr << "unknown task: " << t << "\n";
                return 1;
            }
        families::FamilyInstance F;
        try {
        if (family == "uqsl2") {
            if (conductor != 0 && conductor != 8 * param) {
                std::cerr << "uqsl2 instances are built at conductor 8l\n";
                return 1;
            }
            if (param >= 7 && !stretch) {
                std::cerr << "uqsl2 with l >= 7 needs --stretch\n";
                return 1;
            }
            F = families::uqsl2(param);
        } else if (family == "nichols") {
            if (conductor != 0 && (conductor % 8 != 0 || conductor < 8)) {
                std::cerr << "conductor must be a positive multiple of 8\n";
                return 1;
            }
            F = families::nichols(param);
        } else if (family == "dnichols") {
            if (conductor != 0 && (conductor % 8 != 0 || conductor < 8)) {
                std::cerr << "conductor must be a positive multiple of 8\n";
                return 1;
            }
            if (param >= 3 && !stretch) {
                std::cerr << "dnichols with n >= 3 needs --stretch\n";
                return 1;
            }
            F = families::dnichols(param, param <= 2);
        } else {
            std::cerr << "unknown family: " << family << "\n";
            return 1;
        }
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 1;
        }

        const std::string inst = family + "(" + std::to_string(param) + ")";
        std::vector<TaskRow> rows;
        bool any_fail = false;
        auto add = [&](const std::string& task, bool pass, const std::string& witness, json art) {
            rows.push_back({inst, task, pass ? "pass" : "FAIL", witness, std::move(art)});
            any_fail = any_fail || !pass;
            if (format == "pretty")
                std::cout << (pass ? "[pass] " : "[FAIL] ") << inst << " :: " << task
                          << (witness.empty() ? "" : "  (" + witness + ")") << "\n";
        };

        ModularBundle B;
        bool have_bundle = false;
        auto need_bundle = [&]() {
            if (!have_bundle) {
                B = compute_modular_bundle(F);
                have_bundle = true;
            }
        };

        for (const auto& task : tasks) {
            if (task == "axioms") {
                auto a = F.H().verify_hopf_axioms();
                json art = json::array();
                for (const auto& c : a.checks)
                    art.push_back(json{{"axiom", c.name}, {"pass", c.pass}, {"witness", c.witness}});
                add(task, a.all_pass(), a.all_pass() ? "" : a.summary(), art);
            } else if (task == "ribbon") {
                if (F.ribbon.R.empty()) {
                    add(task, true, "no quasitriangular structure on this instance", {});
                    continue;
                }
                auto q = verify_quasitriangular(F.H(), F.ribbon.R);
                bool rv = true;
                std::string wit;
                if (F.ribbon.has_ribbon) {
                    auto rr = verify_ribbon(F.H(), F.ribbon.R, F.ribbon.v, true);
                    rv = rr.all_pass();
                    if (!rv) wit = rr.summary();
                }
                auto fac = is_factorizable(F.H(), F.ribbon.R);
                json art{{"factorizable", fac.factorizable},
                         {"drinfeld_rank", fac.rank},
                         {"has_ribbon", F.ribbon.has_ribbon}};
                add(task, q.all_pass() && rv, q.all_pass() ? wit : q.summary(), art);
            } else if (task == "center") {
                auto Z = center_basis(F.H());
                json art{{"dimension", Z.size()}};
                json els = json::array();
                for (const auto& z : Z) els.push_back(to_json(z));
                art["basis"] = els;
                add(task, true, "", art);
            } else if (task == "higman") {
                TraceMap tau(F.H(), F.ribbon.G, F.integrals.integral);
                auto hig = higman_ideal(F.H(), tau);
                json art{{"dimension", hig.size()}};
                json els = json::array();
                for (const auto& z : hig) els.push_back(to_json(z));
                art["basis"] = els;
                add(task, true, "", art);
            } else if (task == "cartan") {
                Mat C = cartan_matrix(F.H(), F.table);
                add(task, true, "", json{{"cartan", to_json(C)}, {"rank", C.rank()}});
            } else if (task == "fusion") {
                auto N = mixed_fusion_matrices(F.H(), F.table, F.higman);
                json art = json::array();
                for (const auto& m : N) art.push_back(to_json(m));
                add(task, true, "", json{{"mixed_fusion", art}});
            } else if (task == "modular") {
                need_bundle();
                add(task, true, "", bundle_to_json(B, digits));
            } else if (task == "congruence") {
                need_bundle();
                CongruenceCertificate cert;
                if (family == "uqsl2")
                    cert = congruence_certify(B.S_CW, B.T_CW, {pointed_even_piece(param)});
                else
                    cert = congruence_certify(B.S_CW, B.T_CW, {trivial_rep(), n1_level2()});
                json art{{"found", cert.found},
                         {"pieces", cert.pieces},
                         {"level", cert.level},
                         {"t_cw_order", cert.t_order_input}};
                if (cert.found) {
                    art["intertwiner"] = to_json(cert.equivalence.intertwiner);
                    art["alpha"] = to_json(cert.equivalence.alpha);
                    art["beta"] = to_json(cert.equivalence.beta);
                }
                add(task, cert.found, cert.found ? "" : "no certificate over the candidate set", art);
            } else if (task == "golden") {
                auto rep = golden_compare(F);
                json art = json::array();
                for (const auto& r : rep.rows)
                    art.push_back(json{{"table", r.table}, {"status", r.status}, {"witness", r.witness}});
                add(task, rep.all_pass(), rep.all_pass() ? "" : "see table rows", art);
            }
        }
        write_report(rows, out_path, format, digits);
        return any_fail ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
