// rjd - batch verification harness
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rjd/algebras.hpp"
#include "rjd/zoo.hpp"
#include "suites.hpp"

namespace {

using rjd::suites::SuiteConfig;
using rjd::suites::UsageError;

int cmd_run(const std::string& suite, const SuiteConfig& cfg, const std::string& format, const std::string& json_path) {
    auto rep = rjd::suites::run_suite(suite, cfg);
    auto j = rep.to_json();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw UsageError("cannot write " + json_path);
        out << j.dump(2) << "\n";
    }
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << rep.text();
    return rep.ok() ? 0 : 1;
}

int cmd_dump_basis(const std::string& preset, int exp_bound) {
    if (preset == "basic") {
        for (auto& t : rjd::BasicAlgebraData::load().basis_text) std::cout << t << "\n";
        return 0;
    }
    rjd::CompletionOptions opt;
    opt.exponent_bound = exp_bound;
    auto a = rjd::Algebra::build(preset, opt);
    if (!a->finite()) throw UsageError(preset + " is infinite-dimensional");
    for (auto& w : a->basis()) std::cout << (w.empty() ? "1" : a->alphabet().str(w)) << "\n";
    return 0;
}

int cmd_dump_module(const SuiteConfig& cfg) {
    if (!cfg.family) throw UsageError("dump-module needs --family");
    auto fam = rjd::parse_family(*cfg.family);
    if (!fam) throw UsageError("unknown family " + *cfg.family);
    rjd::Field f = rjd::make_field(cfg.field_ext);
    if (cfg.lambda >= f.size()) throw UsageError("--lambda outside the field");
    rjd::StringBandSpec s{*fam};
    s.r = cfg.r;
    s.t = cfg.t;
    s.n = cfg.n;
    s.lambda = static_cast<rjd::fe>(cfg.lambda);
    rjd::Module m;
    try {
        m = rjd::make_module(s, f);
    } catch (const rjd::InputError& e) {
        throw UsageError(e.what());
    }
    std::cout << rjd::dump_module(m, s.label(f));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rjd: verification suites for u(m), D(H) and their modules"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string family;
    std::string format = "text", json_path, suite, preset;

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--field-ext", cfg.field_ext, "work over GF(2^k)")->check(CLI::Range(1, 16));
        sub->add_option("--exp-bound", cfg.exp_bound, "exponent bound E")->check(CLI::Range(1, 10));
        sub->add_option("--range", cfg.range, "r, t <= R for string families")->check(CLI::Range(1, 5));
        sub->add_option("--nmax", cfg.nmax, "n <= Nmax for bands")->check(CLI::Range(1, 5));
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--family", family, "targeted family tag");
        sub->add_option("--r", cfg.r, "family parameter r")->check(CLI::Range(1, 64));
        sub->add_option("--t", cfg.t, "family parameter t")->check(CLI::Range(0, 64));
        sub->add_option("--n", cfg.n, "band parameter n")->check(CLI::Range(1, 64));
        sub->add_option("--lambda", cfg.lambda, "band parameter as a field element bitmask");
    };

    auto* run = app.add_subcommand("run", "run a named suite");
    run->add_option("suite", suite, "suite name")->required();
    add_config(run);
    run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--json", json_path, "also write the JSON report to a file");

    auto* list = app.add_subcommand("list", "list suite names");

    auto* dump_basis = app.add_subcommand("dump-basis", "print the normal-form basis of a preset");
    dump_basis->add_option("preset", preset, "preset name")->required();
    dump_basis->add_option("--exp-bound", cfg.exp_bound, "exponent bound E")->check(CLI::Range(1, 10));

    auto* dump_module = app.add_subcommand("dump-module", "print the action graph of a family member");
    add_config(dump_module);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!family.empty()) cfg.family = family;

    try {
        if (*list) {
            for (auto& n : rjd::suites::suite_names()) std::cout << n << "\n";
            return 0;
        }
        if (*dump_basis) return cmd_dump_basis(preset, cfg.exp_bound);
        if (*dump_module) return cmd_dump_module(cfg);
        return cmd_run(suite, cfg, format, json_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const rjd::InputError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
