// Command-line front end: eta-quotient expansion, Hecke action, Frobenius
// splitting data, end-to-end newform verification and projective-image
// classification, driven by the JSON catalog in data/.

#include "etaforms/catalog.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace etaforms;

namespace {

std::string data_dir_default() {
    if (const char* env = std::getenv("ETAFORMS_DATA")) return env;
    return ETAFORMS_DATA_DIR;
}

struct QuotientRef {
    catalog::NewformEntry entry;
    catalog::Constituent constituent;
};

QuotientRef find_quotient(const std::string& dir, const std::string& name) {
    for (const auto& e : catalog::load_catalog(dir))
        for (const auto& c : e.constituents)
            if (c.name == name) return {e, c};
    throw std::runtime_error("unknown quotient " + name +
                             " (names look like f1_1152; see the catalog files)");
}

catalog::NewformEntry find_entry(const std::string& dir, const std::string& name) {
    for (const auto& e : catalog::load_catalog(dir))
        if (e.name == name) return e;
    throw std::runtime_error("unknown form " + name + "; catalog has F576, F1152, F5760, F1080, F9216, F23040");
}

std::vector<galois::IntPoly> parse_polys(const std::vector<std::string>& specs) {
    std::vector<galois::IntPoly> polys;
    for (const std::string& s : specs) {
        if (!s.empty() && s[0] == '@') {
            std::ifstream in(s.substr(1));
            if (!in) throw std::runtime_error("cannot open polynomial file " + s.substr(1));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                polys.push_back(galois::IntPoly::parse(line));
            }
        } else {
            polys.push_back(galois::IntPoly::parse(s));
        }
    }
    return polys;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight-1 newforms from eta quotients: expansion, Hecke action, "
                 "Frobenius splitting, verification, classification"};
    app.require_subcommand(1);

    std::string data_dir = data_dir_default();
    unsigned threads = 0;
    app.add_option("--data", data_dir, "catalog directory")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (0 = all cores)");

    // ---- expand ----------------------------------------------------------
    auto* cmd_expand = app.add_subcommand("expand", "expand a catalog eta quotient at scale 24");
    std::string ex_quotient;
    long long ex_prec = 100;
    bool ex_q_grid = false;
    cmd_expand->add_option("--quotient", ex_quotient, "quotient name, e.g. f1_1152")->required();
    cmd_expand->add_option("--prec", ex_prec, "coefficients to compute")->capture_default_str();
    cmd_expand->add_flag("--q-grid", ex_q_grid,
                         "emit the rescaled form on the integer q-grid instead");

    // ---- hecke -----------------------------------------------------------
    auto* cmd_hecke = app.add_subcommand("hecke", "apply T_p to a quotient or series file");
    std::string hk_quotient, hk_series_file;
    long long hk_level = 0, hk_disc = 0, hk_prime = 0, hk_prec = 2000, hk_rescale = 1;
    cmd_hecke->add_option("--level", hk_level, "level N (defaults from the catalog entry)");
    cmd_hecke->add_option("--disc", hk_disc, "character discriminant D (defaults from the entry)");
    cmd_hecke->add_option("--prime", hk_prime, "prime p coprime to N")->required();
    cmd_hecke->add_option("--quotient", hk_quotient, "catalog quotient name");
    cmd_hecke->add_option("--series", hk_series_file, "series dump file (scale 1)");
    cmd_hecke->add_option("--prec", hk_prec, "input precision")->capture_default_str();
    cmd_hecke->add_option("--rescale", hk_rescale, "rescale factor applied before T_p");

    // ---- frobenius -------------------------------------------------------
    auto* cmd_frob = app.add_subcommand("frobenius", "factor polynomials mod p up to a bound");
    std::vector<std::string> fr_polys;
    long long fr_pmax = 100;
    cmd_frob->add_option("--poly", fr_polys,
                         "polynomial, low-to-high comma separated (or @file, one per line); repeatable")
        ->required();
    cmd_frob->add_option("--pmax", fr_pmax, "largest prime")->capture_default_str();

    // ---- verify ----------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the full verification pipeline");
    std::string vf_form = "all";
    long long vf_pmax = 10000;
    bool vf_json = false, vf_table = false;
    cmd_verify->add_option("--form", vf_form, "form name or 'all'")->capture_default_str();
    cmd_verify->add_option("--pmax", vf_pmax, "census horizon")->capture_default_str();
    cmd_verify->add_flag("--json", vf_json, "emit the report as JSON");
    cmd_verify->add_flag("--table", vf_table, "emit the report as a table (default)");

    // ---- splitting-table -------------------------------------------------
    auto* cmd_split = app.add_subcommand("splitting-table",
                                         "per-prime (a_p, f_p, splits) rows as CSV");
    std::string sp_form;
    long long sp_pmax = 1000;
    cmd_split->add_option("--form", sp_form, "form name")->required();
    cmd_split->add_option("--pmax", sp_pmax, "largest prime")->capture_default_str();

    // ---- classify --------------------------------------------------------
    auto* cmd_classify = app.add_subcommand("classify", "projective image from c = a_p^2/chi(p)");
    std::string cl_form;
    long long cl_pmax = 10000;
    bool cl_json = false;
    cmd_classify->add_option("--form", cl_form, "form name")->required();
    cmd_classify->add_option("--pmax", cl_pmax, "prime horizon")->capture_default_str();
    cmd_classify->add_flag("--json", cl_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_expand) {
            auto ref = find_quotient(data_dir, ex_quotient);
            if (ex_q_grid) {
                QSeries f = catalog::constituent_q_expansion(ref.entry, ref.constituent, ex_prec);
                dump(f, std::cout);
            } else {
                QSeries f = eta::expand(ref.constituent.quotient, ex_prec);
                dump(f, std::cout);
            }
            return 0;
        }

        if (*cmd_hecke) {
            std::optional<QSeries> input;
            if (!hk_quotient.empty()) {
                auto ref = find_quotient(data_dir, hk_quotient);
                if (hk_level == 0) hk_level = ref.entry.level;
                if (hk_disc == 0) hk_disc = ref.entry.disc;
                eta::EtaQuotient q = ref.constituent.quotient.rescaled(hk_rescale);
                if (((q.exponent_sum() % 24) + 24) % 24 != 0)
                    throw std::runtime_error(
                        "quotient does not live on the integer q-grid; pass --rescale (e.g. 24)");
                input = eta::expand_q(q, hk_prec);
            } else if (!hk_series_file.empty()) {
                std::ifstream in(hk_series_file);
                if (!in) throw std::runtime_error("cannot open " + hk_series_file);
                input = parse_dump(in);
                if (hk_rescale != 1) input = rescale(*input, hk_rescale);
            } else {
                throw std::runtime_error("hecke: need --quotient or --series");
            }
            if (hk_level == 0 || hk_disc == 0)
                throw std::runtime_error("hecke: --level and --disc are required with --series");
            hecke::HeckeContext ctx(hk_level, 1, hk_disc);
            QSeries image = hecke::hecke_tp(*input, hk_prime, ctx);
            dump(image, std::cout);
            return 0;
        }

        if (*cmd_frob) {
            auto polys = parse_polys(fr_polys);
            auto ps = primes_up_to(fr_pmax);
            struct Row {
                long long p;
                std::optional<long long> f_p;
                std::string types;
            };
            std::vector<Row> rows(ps.size());
            parallel_for(ps.size(), threads, [&](std::size_t i) {
                Row r;
                r.p = ps[i];
                bool ramified = false;
                std::string types;
                long long f_p = 1;
                for (std::size_t k = 0; k < polys.size(); ++k) {
                    auto st = galois::split_type(polys[k], ps[i]);
                    if (!st) {
                        ramified = true;
                        break;
                    }
                    long long l = 1;
                    std::string t;
                    for (int d : *st) {
                        l = std::lcm(l, static_cast<long long>(d));
                        if (!t.empty()) t += "+";
                        t += std::to_string(d);
                    }
                    f_p = std::lcm(f_p, l);
                    if (k) types += "|";
                    types += t;
                }
                if (!ramified) {
                    r.f_p = f_p;
                    r.types = types;
                }
                rows[i] = std::move(r);
            });
            std::cout << "p,f_p,split_type\n";
            for (auto& r : rows) {
                if (r.f_p)
                    std::cout << r.p << "," << *r.f_p << "," << r.types << "\n";
                else
                    std::cout << r.p << ",," << "RAMIFIED" << "\n";
            }
            return 0;
        }

        if (*cmd_verify) {
            std::vector<catalog::NewformEntry> targets;
            if (vf_form == "all") targets = catalog::load_catalog(data_dir);
            else targets.push_back(find_entry(data_dir, vf_form));
            catalog::VerifyOptions opt;
            opt.pmax = vf_pmax;
            opt.threads = threads;
            bool all_pass = true;
            catalog::json out = catalog::json::array();
            for (const auto& e : targets) {
                auto rep = catalog::verify_entry(e, opt);
                all_pass = all_pass && rep.pass;
                if (vf_json) out.push_back(catalog::report_to_json(rep));
                else std::cout << catalog::report_to_table(rep) << "\n";
            }
            if (vf_json) std::cout << out.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }

        if (*cmd_split) {
            auto e = find_entry(data_dir, sp_form);
            QSeries f = catalog::build_form(e, sp_pmax + 1, threads);
            auto ps = primes_up_to(sp_pmax);
            std::vector<std::optional<catalog::SplitRow>> rows(ps.size());
            parallel_for(ps.size(), threads, [&](std::size_t i) {
                rows[i] = catalog::splitting_table_row(e, f, ps[i]);
            });
            std::cout << "p,a_p,f_p,splits_into,ramified_flag\n";
            for (std::size_t i = 0; i < ps.size(); ++i) {
                if (rows[i])
                    std::cout << ps[i] << "," << rows[i]->a_p.str() << "," << rows[i]->f_p << ","
                              << rows[i]->splits_into << ",ok\n";
                else
                    std::cout << ps[i] << ",,,," << (e.level % ps[i] == 0 ? "level" : "ramified")
                              << "\n";
            }
            return 0;
        }

        if (*cmd_classify) {
            auto e = find_entry(data_dir, cl_form);
            QSeries f = catalog::build_form(e, cl_pmax + 1, threads);
            std::set<long long> exclude;
            for (long long p : prime_factors(e.level)) exclude.insert(p);
            auto dist = classify::empirical_c(f, e.disc, cl_pmax, exclude);
            auto result = classify::classify(dist);
            if (cl_json) {
                catalog::json jd = catalog::json::object();
                for (auto& [c, v] : dist.proportions) jd[c.str()] = v.str();
                catalog::json jo = catalog::json::object();
                for (auto& [o, v] : result.order_proportions) jo[std::to_string(o)] = v.str();
                catalog::json j{{"form", e.name},
                                {"pmax", cl_pmax},
                                {"samples", dist.samples},
                                {"distribution", jd},
                                {"mapped_orders", jo},
                                {"verdict", classify::verdict_name(result.verdict)},
                                {"distance", result.tv_distance.str()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << e.name << ": " << classify::verdict_name(result.verdict)
                          << " (samples " << dist.samples << ", c=0 mass "
                          << result.dihedral_mass.str() << ", distance "
                          << result.tv_distance.str() << ")\n";
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
