#include "ascart/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <stdexcept>

#include "ascart/bounds.hpp"
#include "ascart/cartier.hpp"
#include "ascart/curve.hpp"
#include "ascart/families.hpp"
#include "ascart/holo.hpp"
#include "ascart/linalg.hpp"
#include "ascart/report.hpp"
#include "ascart/search.hpp"

namespace ascart {

namespace {

struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

std::string json_value_to_token(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string joined;
        for (const auto& elem : v) {
            if (!joined.empty()) joined += ',';
            joined += elem.is_string() ? elem.get<std::string>() : elem.dump();
        }
        return joined;
    }
    return v.dump();
}

/// Replaces each "--json-args FILE" (or --json-args=FILE) with the flags
/// from that JSON object, in place, so flags written after it still win
/// under the take-last policy.
std::vector<std::string> expand_json_args(std::vector<std::string> args) {
    for (std::size_t i = 0; i < args.size();) {
        std::string file;
        std::size_t consumed = 0;
        if (args[i] == "--json-args") {
            if (i + 1 >= args.size())
                throw std::invalid_argument("--json-args needs a file path");
            file = args[i + 1];
            consumed = 2;
        } else if (args[i].rfind("--json-args=", 0) == 0) {
            file = args[i].substr(std::string("--json-args=").size());
            consumed = 1;
        } else {
            ++i;
            continue;
        }
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open argument file: " + file);
        nlohmann::json doc = nlohmann::json::parse(in);
        if (!doc.is_object())
            throw std::invalid_argument("argument file must hold a JSON object: " + file);
        std::vector<std::string> expanded;
        for (const auto& [key, value] : doc.items()) {
            if (value.is_null()) continue;
            expanded.push_back("--" + key);
            expanded.push_back(json_value_to_token(value));
        }
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                   args.begin() + static_cast<std::ptrdiff_t>(i + consumed));
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(i), expanded.begin(),
                    expanded.end());
        i += expanded.size();
    }
    return args;
}

nlohmann::ordered_json report_json(const InvariantReport& rep) {
    return nlohmann::ordered_json::parse(rep.to_json());
}

Curve curve_from_flags(std::int64_t p, const std::string& poly_text) {
    PrimeModulus pm(p);
    return make_curve(FpPoly::parse(pm, poly_text));
}

void add_invariants(CLI::App& app, std::ostream& out) {
    auto* sub = app.add_subcommand("invariants",
                                   "Genus, a-number, p-rank, and bounds of y^p - y = f(x)");
    auto p = std::make_shared<std::int64_t>(0);
    auto poly = std::make_shared<std::string>();
    sub->add_option("--p", *p, "odd prime p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--poly", *poly, "f(x), e.g. \"x^7 + 2*x^4\" or \"[0,1,2]\"")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->callback([&out, p, poly]() {
        out << invariants(curve_from_flags(*p, *poly)).to_json() << "\n";
    });
}

void add_matrix(CLI::App& app, std::ostream& out) {
    auto* sub =
        app.add_subcommand("matrix", "Cartier matrix on the holomorphic basis, row-major");
    auto p = std::make_shared<std::int64_t>(0);
    auto poly = std::make_shared<std::string>();
    sub->add_option("--p", *p, "odd prime p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--poly", *poly, "f(x)")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->callback([&out, p, poly]() {
        Curve c = curve_from_flags(*p, *poly);
        CartierMatrix cm = cartier_matrix(c);
        nlohmann::ordered_json j;
        j["p"] = c.p().value();
        j["d"] = c.d();
        j["f"] = c.f().to_string();
        j["genus"] = genus(c.p(), c.d());
        nlohmann::ordered_json basis = nlohmann::ordered_json::array();
        for (const auto& b : cm.basis.elements())
            basis.push_back(nlohmann::ordered_json::array({b.i, b.j}));
        j["basis"] = std::move(basis);
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < cm.mat.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t col = 0; col < cm.mat.cols(); ++col)
                row.push_back(cm.mat.at(r, col));
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        out << j.dump(2) << "\n";
    });
}

void add_bounds(CLI::App& app, std::ostream& out) {
    auto* sub = app.add_subcommand("bounds", "Lower and upper a-number bounds from (p, d)");
    auto p = std::make_shared<std::int64_t>(0);
    auto d = std::make_shared<std::int64_t>(0);
    auto multi = std::make_shared<std::vector<std::int64_t>>();
    sub->add_option("--p", *p, "odd prime p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    auto* d_opt = sub->add_option("--d", *d, "single ramification break")
                      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    auto* multi_opt = sub->add_option("--multi", *multi,
                                      "comma-separated breaks d1,d2,... (several branch points)")
                          ->delimiter(',')
                          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    d_opt->excludes(multi_opt);
    sub->callback([&out, sub, p, d, multi]() {
        const bool single = sub->count("--d") > 0;
        if (!single && multi->empty())
            throw std::invalid_argument("bounds needs --d or --multi");
        PrimeModulus pm(*p);
        nlohmann::ordered_json j;
        j["p"] = pm.value();
        std::vector<std::int64_t> breaks = single ? std::vector<std::int64_t>{*d} : *multi;
        j["D"] = breaks;
        std::int64_t up = 0;
        for (std::int64_t b : breaks) up += upper_bound(pm, b, 0);
        j["lower"] =
            single ? lower_bound_single(pm, *d) : lower_bound_multi(pm, breaks);
        j["upper"] = up;
        out << j.dump(2) << "\n";
    });
}

void add_family(CLI::App& app, std::ostream& out, int& exit_code) {
    auto* sub = app.add_subcommand("family", "Verify one member of a minimal-a-number family");
    auto name = std::make_shared<std::string>();
    auto p = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(1);
    auto deg = std::make_shared<std::int64_t>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto poly = std::make_shared<std::string>();
    sub->add_option("--name", *name, "bc-minus | bc-plus | farnell | experiment")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--p", *p, "odd prime p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--n", *n, "experiment index n >= 1")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--deg", *deg, "farnell degree (default p-1)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--seed", *seed, "seed for the generated farnell polynomial")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--poly", *poly, "explicit farnell polynomial")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->callback([&out, &exit_code, sub, name, p, n, deg, seed, poly]() {
        FamilyId id;
        id.name = family_from_name(*name);
        id.p = *p;
        id.n = *n;
        id.deg = *deg;
        id.seed = *seed;
        if (sub->count("--poly") > 0)
            id.poly = FpPoly::parse(PrimeModulus(*p), *poly);
        InvariantReport rep = family_verify(id);
        nlohmann::ordered_json j = report_json(rep);
        j["family"] = *name;
        out << j.dump(2) << "\n";
        if (!rep.attains_lower) exit_code = 2;
    });
}

void add_search(CLI::App& app, std::ostream& out, std::ostream& err) {
    auto* sub = app.add_subcommand(
        "search", "Look for degree-d curves whose a-number attains the lower bound");
    auto cfg = std::make_shared<SearchConfig>();
    auto strategy = std::make_shared<std::string>("random");
    auto format = std::make_shared<std::string>("json");
    sub->add_option("--p", cfg->p, "odd prime p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--d", cfg->d, "polynomial degree, coprime to p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--budget", cfg->budget, "maximum number of trials")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--seed", cfg->seed, "64-bit seed")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--threads", cfg->threads, "worker threads")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--strategy", *strategy, "random | exhaustive-small")
        ->check(CLI::IsMember({"random", "exhaustive-small"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--out", *format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->callback([&out, &err, cfg, strategy, format]() {
        cfg->strategy = *strategy == "random" ? SearchStrategy::Random
                                              : SearchStrategy::ExhaustiveSmall;
        SearchResult res = search_minimal(*cfg);

        if (res.witness) {
            // Recheck through the full pipeline, not the search loop.
            InvariantReport rep = invariants(res.witness->curve);
            if (rep.a_number != res.witness->a || !rep.attains_lower)
                throw VerificationFailure(
                    "witness recheck mismatch: search reported a = " +
                    std::to_string(res.witness->a) + ", recomputation gives " +
                    std::to_string(rep.a_number) + " against L = " +
                    std::to_string(rep.lower_bound));
        } else {
            err << "no witness within " << res.stats.trials << " trials; min a seen "
                << res.stats.min_a << " (target " << res.lower << ")\n";
        }

        if (*format == "csv") {
            PrimeModulus pm(cfg->p);
            const std::int64_t g = genus(pm, cfg->d);
            out << "trial,poly,a,L,attained\n";
            for (std::int64_t i = 0; i < res.stats.trials; ++i) {
                FpPoly f = trial_poly(*cfg, i);
                const std::int64_t a =
                    g - static_cast<std::int64_t>(rank(cartier_matrix(make_curve(f)).mat));
                out << i << ",\"" << f.to_string() << "\"," << a << ',' << res.lower
                    << ',' << (a == res.lower ? "true" : "false") << "\n";
            }
        } else {
            nlohmann::ordered_json j;
            j["p"] = cfg->p;
            j["d"] = cfg->d;
            j["strategy"] = *strategy;
            j["seed"] = cfg->seed;
            j["budget"] = cfg->budget;
            j["threads"] = cfg->threads;
            j["lower"] = res.lower;
            j["upper"] = res.upper;
            if (res.witness) {
                nlohmann::ordered_json w;
                w["trial"] = res.witness->trial;
                w["f"] = res.witness->curve.f().to_string();
                w["a"] = res.witness->a;
                w["L"] = res.witness->lower;
                w["trials_used"] = res.witness->trials_used;
                w["seed"] = res.witness->seed;
                w["elapsed_seconds"] = res.witness->elapsed_seconds;
                j["witness"] = std::move(w);
            } else {
                j["witness"] = nullptr;
            }
            nlohmann::ordered_json stats;
            stats["trials"] = res.stats.trials;
            stats["min_a"] = res.stats.min_a;
            nlohmann::ordered_json hist = nlohmann::ordered_json::object();
            for (const auto& [a, count] : res.stats.histogram)
                hist[std::to_string(a)] = count;
            stats["histogram"] = std::move(hist);
            j["stats"] = std::move(stats);
            out << j.dump(2) << "\n";
        }
    });
}

void add_conjecture(CLI::App& app, std::ostream& out, std::ostream& err, int& exit_code) {
    auto* sub = app.add_subcommand(
        "conjecture", "Check that the experiment family attains L(n*p^2 - 1) for n = 1..N");
    auto p = std::make_shared<std::int64_t>(0);
    auto n_max = std::make_shared<std::int64_t>(1);
    sub->add_option("--p", *p, "odd prime p")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--n-max", *n_max, "largest n to test")
        ->required()
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->callback([&out, &err, &exit_code, p, n_max]() {
        if (*n_max < 1) throw std::invalid_argument("--n-max must be at least 1");
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        bool all_ok = true;
        for (std::int64_t n = 1; n <= *n_max; ++n) {
            FamilyId id;
            id.name = Family::Experiment;
            id.p = *p;
            id.n = n;
            InvariantReport rep = family_verify(id);
            err << "n = " << n << ": d = " << rep.d << ", genus " << rep.genus << ", a = "
                << rep.a_number << ", L = " << rep.lower_bound
                << (rep.attains_lower ? " (attained)" : " (NOT attained)") << "\n";
            nlohmann::ordered_json cell;
            cell["n"] = n;
            cell["d"] = rep.d;
            cell["genus"] = rep.genus;
            cell["a_number"] = rep.a_number;
            cell["lower_bound"] = rep.lower_bound;
            cell["attained"] = rep.attains_lower;
            cells.push_back(std::move(cell));
            all_ok = all_ok && rep.attains_lower;
        }
        nlohmann::ordered_json j;
        j["p"] = *p;
        j["n_max"] = *n_max;
        j["cells"] = std::move(cells);
        j["all_attained"] = all_ok;
        out << j.dump(2) << "\n";
        if (!all_ok) exit_code = 2;
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of Artin-Schreier covers y^p - y = f(x) over F_p"};
    app.set_version_flag("--version", "ascart 0.1.0");
    app.require_subcommand(1);
    int exit_code = 0;

    add_invariants(app, out);
    add_matrix(app, out);
    add_bounds(app, out);
    add_family(app, out, exit_code);
    add_search(app, out, err);
    add_conjecture(app, out, err, exit_code);

    try {
        std::vector<std::string> expanded = expand_json_args(args);
        std::vector<const char*> argv;
        argv.reserve(expanded.size() + 1);
        argv.push_back("ascart");
        for (const auto& a : expanded) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const VerificationFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace ascart
