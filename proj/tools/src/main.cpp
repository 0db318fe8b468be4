#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"
#include "simcore/errors.hpp"
#include "simcore/gd_path.hpp"
#include "simcore/partition.hpp"
#include "simcore/rect_path.hpp"
#include "simcore/verify.hpp"

using namespace simcore;
using namespace simcore::cli;

namespace {

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain}, {"json", Format::Json}, {"dot", Format::Dot}, {"svg", Format::Svg}};

CLI::Option* add_format(CLI::App* app, Format& target) {
    return app->add_option("--format", target, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->default_str("plain");
}

void add_modes(CLI::App* app, bool& count_only, bool& list) {
    auto* c = app->add_flag("--count-only", count_only, "Print only the number of items");
    auto* l = app->add_flag("--list", list, "List every item (default)");
    c->excludes(l);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gap posets of numerical semigroups, simultaneous cores, lattice paths and their identities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "simcore 0.1.0");

    std::function<int()> action;

    PosetArgs poset;
    auto* poset_cmd = app.add_subcommand("poset", "Gaps and cover relations of P_S");
    poset_cmd->add_option("--gens", poset.gens, "Generators, comma separated")->delimiter(',');
    add_format(poset_cmd, poset.format);
    poset_cmd->add_flag("--reduce", poset.reduce, "Hasse diagram: drop covers implied by transitivity");
    poset_cmd->add_option("--from-file", poset.from_file, "Check a poset JSON file against a fresh computation")
        ->check(CLI::ExistingFile);
    poset_cmd->callback([&] { action = [&] { return run_poset(poset); }; });

    IdealArgs ideals;
    auto* ideals_cmd = app.add_subcommand("ideals", "Lower ideals of P_S");
    ideals_cmd->add_option("--gens", ideals.gens, "Generators, comma separated")->delimiter(',');
    add_modes(ideals_cmd, ideals.count_only, ideals.list);
    add_format(ideals_cmd, ideals.format);
    ideals_cmd->add_option("--max-items", ideals.max_items, "Enumeration cap (default 1000000)");
    ideals_cmd->add_option("--from-file", ideals.from_file, "Check a list of ideals in JSON")->check(CLI::ExistingFile);
    ideals_cmd->callback([&] { action = [&] { return run_ideals(ideals); }; });

    IdealArgs cores;
    auto* cores_cmd = app.add_subcommand("cores", "Simultaneous S-cores via lower ideals of P_S");
    cores_cmd->add_option("--gens", cores.gens, "Generators, comma separated")->delimiter(',');
    add_modes(cores_cmd, cores.count_only, cores.list);
    cores_cmd->add_flag("--total-size", cores.total_size, "Sum of |core| over all S-cores")
        ->excludes("--count-only")
        ->excludes("--list");
    add_format(cores_cmd, cores.format);
    cores_cmd->add_option("--max-items", cores.max_items,
                          "Enumeration cap (default 1000000 for --list, 10000000 for --total-size)");
    cores_cmd->add_option("--from-file", cores.from_file, "Check a list of cores in JSON")->check(CLI::ExistingFile);
    cores_cmd->callback([&] { action = [&] { return run_cores(cores); }; });

    auto* paths_cmd = app.add_subcommand("paths", "Lattice paths");
    paths_cmd->require_subcommand(1);

    RectArgs rect;
    auto* rect_cmd = paths_cmd->add_subcommand("rect", "(s,t)-Dyck paths in the s x t rectangle");
    rect_cmd->add_option("--s", rect.s, "Width");
    rect_cmd->add_option("--t", rect.t, "Height");
    add_modes(rect_cmd, rect.count_only, rect.list);
    add_format(rect_cmd, rect.format);
    rect_cmd->add_option("--svg", rect.svg, "Write the paths as SVG panels to FILE");
    rect_cmd->add_option("--columns", rect.columns, "Panels per row in the SVG")->check(CLI::PositiveNumber);
    rect_cmd->add_option("--max-items", rect.max_items, "Enumeration cap (default 1000000)");
    rect_cmd->add_option("--from-file", rect.from_file, "Check a list of paths in JSON")->check(CLI::ExistingFile);
    rect_cmd->callback([&] { action = [&] { return run_rect(rect); }; });

    GdArgs gd;
    auto* gd_cmd = paths_cmd->add_subcommand("gd", "Generalized Dyck paths with steps N_k, E_k, D_1..D_(k-1)");
    gd_cmd->add_option("--n", gd.n, "Size");
    gd_cmd->add_option("--k", gd.k, "Step length")->default_str("1");
    add_modes(gd_cmd, gd.count_only, gd.list);
    add_format(gd_cmd, gd.format);
    gd_cmd->add_option("--svg", gd.svg, "Write the paths as SVG panels to FILE");
    gd_cmd->add_option("--columns", gd.columns, "Panels per row in the SVG")->check(CLI::PositiveNumber);
    gd_cmd->add_option("--max-items", gd.max_items, "Enumeration cap (default 1000000)");
    gd_cmd->add_option("--from-file", gd.from_file, "Check a list of paths in JSON")->check(CLI::ExistingFile);
    gd_cmd->callback([&] { action = [&] { return run_gd(gd); }; });

    auto* count_cmd = app.add_subcommand("count", "Closed forms and recursions");
    count_cmd->require_subcommand(1);
    long cs = 0;
    long cp = 1;
    long ct = 0;
    auto* mc_cmd = count_cmd->add_subcommand("multi-catalan", "C_s^(p), the number of lower ideals of T_{s,p}");
    mc_cmd->add_option("--s", cs, "Index")->required();
    mc_cmd->add_option("--p", cp, "Parameter p >= 1")->required();
    mc_cmd->callback([&] {
        action = [&] {
            std::cout << multi_catalan(cs, cp) << "\n";
            return 0;
        };
    });
    auto* cr_cmd = count_cmd->add_subcommand("rect", "C(s+t,s)/(s+t), the number of (s,t)-Dyck paths");
    cr_cmd->add_option("--s", cs, "Width")->required();
    cr_cmd->add_option("--t", ct, "Height")->required();
    cr_cmd->callback([&] {
        action = [&] {
            std::cout << count_rect_paths(cs, ct) << "\n";
            return 0;
        };
    });
    auto* cg_cmd = count_cmd->add_subcommand("gd", "GD_{n,k} by the first-return recursion");
    cg_cmd->add_option("--n", cs, "Size")->required();
    cg_cmd->add_option("--k", cp, "Step length")->required();
    cg_cmd->callback([&] {
        action = [&] {
            if (cp < 1) {
                throw DomainError("k must be at least 1");
            }
            std::cout << count_gd(cs, cp) << "\n";
            return 0;
        };
    });

    std::vector<long> shape;
    Format qdet_format = Format::Plain;
    auto* qdet_cmd = app.add_subcommand("qdet", "Coarea polynomial of a shape as a q-determinant");
    qdet_cmd->add_option("--shape", shape, "Partition, comma separated")->delimiter(',')->required();
    add_format(qdet_cmd, qdet_format);
    qdet_cmd->callback([&] {
        action = [&] {
            const Partition lambda(shape);
            const QPolynomial q = qdet_coarea(lambda);
            if (qdet_format == Format::Json) {
                nlohmann::json coeffs = nlohmann::json::array();
                for (long i = 0; i <= q.degree(); ++i) {
                    coeffs.push_back(big(q.coeff(i)));
                }
                std::cout << nlohmann::json{{"shape", shape}, {"coefficients", coeffs}}.dump(2) << "\n";
            } else {
                for (long i = 0; i <= q.degree(); ++i) {
                    std::cout << (i ? " " : "") << q.coeff(i);
                }
                std::cout << "\n";
            }
            return 0;
        };
    });

    bool english = false;
    bool with_hooks = false;
    auto* diagram_cmd = app.add_subcommand("diagram", "Ferrers diagram of a shape");
    diagram_cmd->add_option("--shape", shape, "Partition, comma separated")->delimiter(',')->required();
    diagram_cmd->add_flag("--english", english, "Largest row on top (default: french, largest row at the bottom)");
    diagram_cmd->add_flag("--hooks", with_hooks, "Print hook lengths in the cells");
    diagram_cmd->callback([&] {
        action = [&] {
            std::cout << render_diagram(Partition(shape), english ? Orientation::English : Orientation::French,
                                        with_hooks);
            return 0;
        };
    });

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities over parameter ranges");
    verify_cmd->add_option("suite", verify.suite, "Suite to run")
        ->check(CLI::IsMember({"all", "kreweras", "qdet", "coarea", "identity", "popoviciu", "symmetry",
                               "multi-catalan", "gf", "gd", "conjecture", "equinumerous", "anchors"}))
        ->default_str("all");
    add_format(verify_cmd, verify.format);
    verify_cmd->add_flag("--verbose,-v", verify.verbose, "Print every instance");
    verify_cmd->add_option("--jobs,-j", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--min-s", verify.min_s, "Lower bound on s (conjecture)");
    verify_cmd->add_option("--max-s", verify.max_s, "Upper bound on s (symmetry, multi-catalan, conjecture)");
    verify_cmd->add_option("--max-t", verify.max_t, "Upper bound on t (popoviciu)");
    verify_cmd->add_option("--max-n", verify.max_n, "Upper bound on n (identity, gd)");
    verify_cmd->add_option("--max-k", verify.max_k, "Upper bound on k (gd)");
    verify_cmd->add_option("--max-p", verify.max_p, "Upper bound on p (multi-catalan, gf)");
    verify_cmd->add_option("--max-sum", verify.max_sum, "Upper bound on s+t (equinumerous, coarea, kreweras)");
    verify_cmd->add_option("--box", verify.box, "Shapes inside a box of this size (kreweras, qdet)");
    verify_cmd->add_option("--terms", verify.terms, "Series terms (gf)");
    verify_cmd->callback([&] { action = [&] { return run_verify(verify); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return action ? action() : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
