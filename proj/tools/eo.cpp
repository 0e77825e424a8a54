#include <CLI11.hpp>

#include <iostream>

#include "eo/algebra/json.hpp"
#include "eo/catalan/counts.hpp"
#include "eo/catalan/curve.hpp"
#include "eo/catalan/free_energy.hpp"
#include "eo/catalan/s_coeff.hpp"
#include "eo/cli/cache.hpp"
#include "eo/cli/report.hpp"
#include "eo/cli/suites.hpp"
#include "eo/errors.hpp"
#include "eo/hurwitz/counts.hpp"
#include "eo/hurwitz/free_energy.hpp"
#include "eo/hurwitz/s_coeff.hpp"
#include "eo/schur/symmetric.hpp"
#include "eo/wkb/hierarchy.hpp"

using nlohmann::json;
namespace cli = eo::cli;

namespace {

struct Config {
    std::string format = "auto";
    int jobs = 0;
    double tolerance = 1e-8;
    std::string cache;
    int g = 0, n = 1, m = 2, order = 4, max_degree = 12;
    int max_order = 4, max_weight = 6, s_order = 6;
    std::vector<int> mu, lambda;
    std::string model = "catalan", suite = "all";

    eo::parallel::Exec exec() const { return jobs == 1 ? eo::parallel::Exec::serial : eo::parallel::Exec::parallel; }
    cli::SuiteOptions suite_options() const { return {max_order, max_weight, s_order, tolerance}; }
};

json echo(const std::string& command, const Config& c) {
    return {{"command", command}, {"format", c.format}, {"jobs", c.jobs}, {"tolerance", c.tolerance}, {"g", c.g}, {"n", c.n}, {"m", c.m},
            {"mu", c.mu}, {"lambda", c.lambda}, {"model", c.model}, {"suite", c.suite}, {"order", c.order}, {"max_order", c.max_order},
            {"max_weight", c.max_weight}, {"s_order", c.s_order}, {"max_degree", c.max_degree}};
}

int emit_value(const std::string& command, const Config& c, const json& value) {
    if (c.format == "json") {
        std::cout << json{{"command", command}, {"version", cli::kVersion}, {"config", echo(command, c)}, {"value", value}}.dump(1) << '\n';
    } else if (c.format == "csv") {
        std::cout << "command,value\n" << command << ',' << (value.is_string() ? value.get<std::string>() : "\"" + value.dump() + "\"") << '\n';
    } else {
        std::cout << (value.is_string() ? value.get<std::string>() : value.dump(1)) << '\n';
    }
    return 0;
}

int emit_report(cli::Report rep, const std::string& command, const Config& c) {
    rep.config = echo(command, c);
    if (c.format == "csv")
        std::cout << rep.to_csv();
    else if (c.format == "pretty")
        std::cout << rep.to_pretty();
    else
        std::cout << rep.to_json().dump(1) << '\n';
    return rep.pass() ? 0 : 1;
}

void require_profile(const Config& c) {
    if (c.mu.empty()) throw eo::UsageError("--mu is required");
    if (static_cast<int>(c.mu.size()) != c.n) throw eo::UsageError("--mu has " + std::to_string(c.mu.size()) + " parts but --n is " + std::to_string(c.n));
}

// Loads the model cache when one is configured and returns its path.
std::optional<std::filesystem::path> open_cache(const Config& c, eo::wkb::Model model) {
    auto path = cli::resolve_cache_path(c.cache, model);
    if (!path) return path;
    auto load = cli::load_cache(*path, model);
    for (const auto& w : load.warnings) std::cerr << "warning: " << w << '\n';
    return path;
}

cli::Report report_from(const std::string& suite, const std::string& prefix, const Config& c) {
    std::vector<cli::Check> checks;
    for (auto& ch : cli::suite_checks(suite, c.suite_options()))
        if (ch.id.rfind(prefix, 0) == 0) checks.push_back(std::move(ch));
    return cli::run_checks(suite, checks, c.exec());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumerative invariants, spectral curves and quantum curves"};
    app.require_subcommand(1);
    Config c;
    app.add_option("--format", c.format, "json, csv, pretty or auto (values pretty, reports json)")
        ->check(CLI::IsMember({"auto", "json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--jobs", c.jobs, "threads; 0 = runtime default, 1 = serial")->capture_default_str();
    app.add_option("--tolerance", c.tolerance, "relative tolerance of floating probes")->capture_default_str();
    app.add_option("--cache", c.cache, "cache file (default $EO_CACHE_DIR/<model>.json)");
    app.fallthrough();

    std::function<int()> action;
    auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };
    auto add_g = [&](CLI::App* s) { s->add_option("--g", c.g, "genus")->required(); };
    auto add_n = [&](CLI::App* s) { s->add_option("--n", c.n, "number of boundaries")->required(); };
    auto add_mu = [&](CLI::App* s) { s->add_option("--mu", c.mu, "profile, comma separated")->delimiter(',')->required(); };
    auto add_model = [&](CLI::App* s) { s->add_option("--model", c.model, "catalan or hurwitz")->check(CLI::IsMember({"catalan", "hurwitz"}))->required(); };

    // catalan
    auto* cat = app.add_subcommand("catalan", "Catalan numbers of cellular graphs")->require_subcommand(1);
    auto* cat_count = cat->add_subcommand("count", "C_{g,n}(mu)");
    add_g(cat_count), add_n(cat_count), add_mu(cat_count);
    on(cat_count, [&] {
        require_profile(c);
        auto path = open_cache(c, eo::wkb::Model::catalan);
        auto v = eo::catalan::catalan_count(c.g, c.n, c.mu);
        if (path) cli::store_cache(*path, eo::wkb::Model::catalan);
        return emit_value("catalan count", c, eo::algebra::to_string(v));
    });
    auto* cat_fe = cat->add_subcommand("free-energy", "F^C_{g,n} in t_1..t_n");
    add_g(cat_fe), add_n(cat_fe);
    on(cat_fe, [&] { return emit_value("catalan free-energy", c, eo::algebra::to_json(eo::catalan::free_energy_C(c.g, c.n).poly)); });
    auto* cat_s = cat->add_subcommand("s-coeff", "S_m of the WKB expansion");
    cat_s->add_option("--m", c.m, "order")->required();
    on(cat_s, [&] {
        if (c.m < 0) throw eo::UsageError("--m must be non-negative");
        json v{{"dS_dx", eo::algebra::to_json(eo::catalan::s_x(c.m))}};
        if (c.m >= 2) {
            auto s = eo::catalan::s_coeff_C_assembled(c.m).value;
            v["t"] = eo::algebra::to_json(s);
            v["z"] = eo::algebra::to_json(eo::catalan::to_z(s));
        }
        return emit_value("catalan s-coeff", c, v);
    });
    auto* cat_sch = cat->add_subcommand("verify-schrodinger", "hbar-expansion of the Schrodinger equation");
    cat_sch->add_option("--max-order", c.max_order)->capture_default_str();
    on(cat_sch, [&] { return emit_report(report_from("catalan", "catalan.schrodinger", c), "catalan verify-schrodinger", c); });

    // hurwitz
    auto* hur = app.add_subcommand("hurwitz", "simple Hurwitz numbers")->require_subcommand(1);
    auto* hur_num = hur->add_subcommand("number", "H_{g,n}(mu)");
    add_g(hur_num), add_n(hur_num), add_mu(hur_num);
    on(hur_num, [&] {
        require_profile(c);
        auto path = open_cache(c, eo::wkb::Model::hurwitz);
        auto v = eo::hurwitz::hurwitz_number(c.g, c.n, c.mu);
        if (path) cli::store_cache(*path, eo::wkb::Model::hurwitz);
        return emit_value("hurwitz number", c, eo::algebra::to_string(v));
    });
    auto* hur_fe = hur->add_subcommand("free-energy", "F^H_{g,n} in t_1..t_n");
    add_g(hur_fe), add_n(hur_fe);
    on(hur_fe, [&] { return emit_value("hurwitz free-energy", c, eo::algebra::to_json(eo::hurwitz::free_energy_H(c.g, c.n))); });
    auto* hur_s = hur->add_subcommand("s-coeff", "S^H_m of the WKB expansion");
    hur_s->add_option("--m", c.m, "order")->required();
    on(hur_s, [&] {
        if (c.m < 0) throw eo::UsageError("--m must be non-negative");
        json v{{"x_dS_dx", eo::algebra::to_json(eo::hurwitz::s_xdx(c.m))}};
        if (c.m >= 2) v["t"] = eo::algebra::to_json(eo::hurwitz::s_coeff_H(c.m).value);
        return emit_value("hurwitz s-coeff", c, v);
    });
    auto* hur_v = hur->add_subcommand("verify", "Hurwitz verification suites");
    std::string hur_suite = "all";
    hur_v->add_option("--suite", hur_suite, "recursion, heat, zhou, commutator, lambert or all")
        ->check(CLI::IsMember({"recursion", "heat", "zhou", "commutator", "lambert", "all"}))
        ->capture_default_str();
    hur_v->add_option("--max-order", c.max_order)->capture_default_str();
    on(hur_v, [&] {
        c.suite = hur_suite;
        std::string s = hur_suite == "all" ? "hurwitz" : "hurwitz." + hur_suite;
        return emit_report(report_from(s, "", c), "hurwitz verify", c);
    });

    // wkb
    auto* wkb = app.add_subcommand("wkb", "quantum curve from the WKB hierarchy")->require_subcommand(1);
    auto* wkb_a = wkb->add_subcommand("corrections", "A_1..A_R, all expected to vanish");
    add_model(wkb_a);
    wkb_a->add_option("--order", c.order)->capture_default_str();
    on(wkb_a, [&] {
        if (c.order < 1) throw eo::UsageError("--order must be positive");
        auto A = eo::wkb::recover_corrections(eo::wkb::parse_model(c.model), c.order);
        std::vector<cli::Check> checks;
        for (std::size_t k = 0; k < A.size(); ++k)
            checks.push_back({"wkb.A[" + std::to_string(k + 1) + "]", "correction A_" + std::to_string(k + 1) + " of the quantum curve",
                              [a = A[k]] { return cli::Outcome{a.is_zero(), eo::algebra::to_json(a)}; }});
        return emit_report(cli::run_checks("wkb.corrections", checks, eo::parallel::Exec::serial), "wkb corrections", c);
    });
    auto* wkb_s = wkb->add_subcommand("s-prime", "dS_n/dx in z from D_n A = 0");
    add_model(wkb_s);
    wkb_s->add_option("--n", c.n, "order")->required();
    on(wkb_s, [&] {
        if (c.n < 2) throw eo::UsageError("--n must be at least 2");
        return emit_value("wkb s-prime", c, eo::algebra::to_json(eo::wkb::s_prime_from_hierarchy(eo::wkb::parse_model(c.model), c.n)));
    });

    // schur
    auto* sch = app.add_subcommand("schur", "Schur functions and the Hurwitz tau-function")->require_subcommand(1);
    auto* sch_v = sch->add_subcommand("verify", "symmetric-function identities");
    sch_v->add_option("--max-weight", c.max_weight)->capture_default_str();
    sch_v->add_option("--s-order", c.s_order)->capture_default_str();
    on(sch_v, [&] { return emit_report(report_from("schur", "", c), "schur verify", c); });
    auto* sch_c = sch->add_subcommand("character", "chi_mu(lambda)");
    sch_c->add_option("--mu", c.mu)->delimiter(',')->required();
    sch_c->add_option("--lambda", c.lambda)->delimiter(',')->required();
    on(sch_c, [&] {
        auto mu = eo::schur::canonical(c.mu), la = eo::schur::canonical(c.lambda);
        if (eo::schur::size(mu) != eo::schur::size(la)) throw eo::UsageError("|mu| and |lambda| differ");
        return emit_value("schur character", c, eo::algebra::to_string(eo::schur::character(mu, la)));
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", c.suite)->check(CLI::IsMember(cli::suite_names()))->capture_default_str();
    ver->add_option("--max-order", c.max_order)->capture_default_str();
    ver->add_option("--max-weight", c.max_weight)->capture_default_str();
    ver->add_option("--s-order", c.s_order)->capture_default_str();
    on(ver, [&] { return emit_report(report_from(c.suite, "", c), "verify", c); });

    // cache
    auto* cache = app.add_subcommand("cache", "persistent count cache")->require_subcommand(1);
    auto* exp = cache->add_subcommand("export", "fill the count table and write it");
    add_model(exp), add_g(exp), add_n(exp);
    exp->add_option("--max-degree", c.max_degree)->capture_default_str();
    on(exp, [&] {
        auto model = eo::wkb::parse_model(c.model);
        auto path = cli::resolve_cache_path(c.cache, model);
        if (!path) throw eo::UsageError("no cache path: pass --cache or set EO_CACHE_DIR");
        json table = cli::table_json(model, c.g, c.n, c.max_degree, c.exec());
        cli::store_cache(*path, model);
        return emit_value("cache export", c, json{{"path", path->string()}, {"entries", table.size()}});
    });
    auto* imp = cache->add_subcommand("import", "load and validate a cache file");
    add_model(imp);
    on(imp, [&] {
        auto model = eo::wkb::parse_model(c.model);
        auto path = cli::resolve_cache_path(c.cache, model);
        if (!path) throw eo::UsageError("no cache path: pass --cache or set EO_CACHE_DIR");
        auto load = cli::load_cache(*path, model);
        for (const auto& w : load.warnings) std::cerr << "warning: " << w << '\n';
        json rejected = json::array();
        for (const auto& key : load.rejected) {
            json entry{{"key", key}};
            try {
                std::vector<int> f;
                std::stringstream ss(key);
                for (std::string item; std::getline(ss, item, ',');) f.push_back(std::stoi(item));
                std::vector<int> mu(f.begin() + 2, f.end());
                entry["recomputed"] = model == eo::wkb::Model::catalan ? eo::algebra::to_string(eo::catalan::catalan_count(f[0], f[1], mu))
                                                                        : eo::algebra::to_string(eo::hurwitz::hurwitz_number(f[0], f[1], mu));
            } catch (const std::exception&) {
                entry["recomputed"] = nullptr;
            }
            rejected.push_back(entry);
        }
        return emit_value("cache import", c, json{{"missing", load.missing}, {"loaded", load.loaded}, {"rejected", rejected}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        eo::parallel::set_threads(c.jobs);
        return action();
    } catch (const eo::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const eo::InvalidProfile& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const eo::SizeMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const eo::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
