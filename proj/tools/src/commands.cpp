#include <fstream>
#include <iostream>

#include "cli.hpp"
#include "simcore/errors.hpp"
#include "simcore/gd_path.hpp"
#include "simcore/rect_path.hpp"
#include "simcore/svg.hpp"
#include "simcore/verify.hpp"

namespace simcore::cli {

namespace {

using nlohmann::json;

unsigned long long cap_or(unsigned long long given, unsigned long long fallback) {
    return given == 0 ? fallback : given;
}

json ints(std::span<const long> v) { return json(std::vector<long>(v.begin(), v.end())); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_plain_or_json(Format f, const std::string& what) {
    if (f != Format::Plain && f != Format::Json) {
        throw DomainError(what + " supports --format plain or json");
    }
}

}  // namespace

std::string big(const Integer& v) { return v.get_str(); }

GeneratorSet finite_generators(const std::vector<long>& gens) {
    if (gens.empty()) {
        throw DomainError("--gens is required (e.g. --gens 5,7,13)");
    }
    return GeneratorSet(gens);
}

int run_poset(const PosetArgs& a) {
    if (!a.from_file.empty()) {
        return check_poset_file(a.from_file, a.format);
    }
    if (a.format == Format::Svg) {
        throw DomainError("poset supports --format plain, json or dot");
    }
    const GapPoset p = build_gap_poset(finite_generators(a.gens));
    switch (a.format) {
        case Format::Json:
            std::cout << to_json(p) << "\n";
            break;
        case Format::Dot:
            std::cout << to_dot(p, a.reduce);
            break;
        default: {
            std::cout << "generators " << p.generators().to_string() << "\n";
            std::cout << "gaps " << p.size() << ":";
            for (long g : p.gaps()) {
                std::cout << " " << g;
            }
            std::cout << "\nfrobenius " << p.frobenius() << "\n";
            const auto edges = a.reduce ? p.hasse_edges() : std::vector<GapPoset::Cover>(p.covers().begin(), p.covers().end());
            std::cout << (a.reduce ? "hasse edges " : "covers ") << edges.size() << ":";
            for (const auto& [hi, lo] : edges) {
                std::cout << " " << hi << ">" << lo;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_ideals(const IdealArgs& a) {
    if (!a.from_file.empty()) {
        return check_ideals_file(a.from_file, a.format);
    }
    require_plain_or_json(a.format, "ideals");
    const GapPoset p = build_gap_poset(finite_generators(a.gens));
    if (a.count_only) {
        const Integer n = count_lower_ideals(p);
        if (a.format == Format::Json) {
            print_json({{"generators", ints(p.generators().values())}, {"count", big(n)}});
        } else {
            std::cout << n << "\n";
        }
        return 0;
    }
    const auto ideals = enumerate_lower_ideals(p, cap_or(a.max_items, kListCap));
    if (a.format == Format::Json) {
        json list = json::array();
        for (const auto& i : ideals) {
            list.push_back(ints(i.elements()));
        }
        print_json({{"generators", ints(p.generators().values())},
                    {"count", std::to_string(ideals.size())},
                    {"ideals", list}});
    } else {
        for (const auto& i : ideals) {
            std::cout << i.to_string() << "\n";
        }
    }
    return 0;
}

int run_cores(const IdealArgs& a) {
    if (!a.from_file.empty()) {
        return check_cores_file(a.from_file, a.format);
    }
    require_plain_or_json(a.format, "cores");
    const GapPoset p = build_gap_poset(finite_generators(a.gens));
    const json gens = ints(p.generators().values());
    if (a.count_only) {
        const Integer n = count_lower_ideals(p);
        if (a.format == Format::Json) {
            print_json({{"generators", gens}, {"count", big(n)}});
        } else {
            std::cout << n << "\n";
        }
        return 0;
    }
    if (a.total_size) {
        Integer total = 0;
        unsigned long count = 0;
        for_each_lower_ideal(
            p,
            [&](const LowerIdeal& i) {
                total += ideal_to_core(p, i).size();
                ++count;
            },
            cap_or(a.max_items, kCountCap));
        if (a.format == Format::Json) {
            print_json({{"generators", gens}, {"count", std::to_string(count)}, {"total_size", big(total)}});
        } else {
            std::cout << total << "\n";
        }
        return 0;
    }
    const auto ideals = enumerate_lower_ideals(p, cap_or(a.max_items, kListCap));
    std::vector<Partition> cores;
    cores.reserve(ideals.size());
    for (const auto& i : ideals) {
        cores.push_back(ideal_to_core(p, i));
    }
    std::sort(cores.begin(), cores.end(), [](const Partition& x, const Partition& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    if (a.format == Format::Json) {
        json list = json::array();
        for (const auto& c : cores) {
            list.push_back(ints(c.parts()));
        }
        print_json({{"generators", gens}, {"count", std::to_string(cores.size())}, {"cores", list}});
    } else {
        for (const auto& c : cores) {
            std::cout << c.to_string() << "\n";
        }
    }
    return 0;
}

int run_rect(const RectArgs& a) {
    if (!a.from_file.empty()) {
        return check_rect_file(a.from_file, a.format);
    }
    require_plain_or_json(a.format, "paths rect");
    if (a.count_only) {
        const Integer n = count_rect_paths(a.s, a.t);
        if (a.format == Format::Json) {
            print_json({{"s", a.s}, {"t", a.t}, {"count", big(n)}});
        } else {
            std::cout << n << "\n";
        }
        return 0;
    }
    const auto paths = enumerate_rect_paths(a.s, a.t, cap_or(a.max_items, kListCap));
    if (!a.svg.empty()) {
        write_file(a.svg, paths.size() == 1 ? rect_path_svg(paths.front(), {24.0, 12.0, true})
                                             : rect_paths_grid_svg(paths, a.columns, {16.0, 8.0, true}));
    }
    if (!a.svg.empty() && !a.list) {
        return 0;
    }
    if (a.format == Format::Json) {
        json list = json::array();
        for (const auto& p : paths) {
            json steps = json::array();
            for (Step st : p.steps()) {
                steps.push_back(step_name(st));
            }
            list.push_back({{"steps", steps}, {"coarea", coarea(p)}});
        }
        print_json({{"s", a.s}, {"t", a.t}, {"count", std::to_string(paths.size())}, {"paths", list}});
    } else {
        for (const auto& p : paths) {
            std::cout << p.to_string() << "  coarea " << coarea(p) << "\n";
        }
    }
    return 0;
}

int run_gd(const GdArgs& a) {
    if (!a.from_file.empty()) {
        return check_gd_file(a.from_file, a.format);
    }
    require_plain_or_json(a.format, "paths gd");
    if (a.n < 1 || a.k < 1) {
        throw DomainError("generalized Dyck paths need n >= 1 and k >= 1");
    }
    if (a.count_only) {
        const Integer n = count_gd(a.n, a.k);
        if (a.format == Format::Json) {
            print_json({{"n", a.n}, {"k", a.k}, {"count", big(n)}});
        } else {
            std::cout << n << "\n";
        }
        return 0;
    }
    const auto paths = enumerate_gd(a.n, a.k, cap_or(a.max_items, kListCap));
    if (!a.svg.empty()) {
        write_file(a.svg, paths.size() == 1 ? gd_path_svg(paths.front(), {24.0, 12.0, true})
                                             : gd_paths_grid_svg(paths, a.columns, {16.0, 8.0, true}));
    }
    if (!a.svg.empty() && !a.list) {
        return 0;
    }
    if (a.format == Format::Json) {
        json list = json::array();
        for (const auto& p : paths) {
            json steps = json::array();
            for (const auto& st : p.steps()) {
                steps.push_back(step_name(st));
            }
            list.push_back({{"steps", steps}, {"ideal", ints(gd_to_ideal(p).elements())}});
        }
        print_json({{"n", a.n}, {"k", a.k}, {"count", std::to_string(paths.size())}, {"paths", list}});
    } else {
        for (const auto& p : paths) {
            std::cout << p.to_string() << "  -> " << gd_to_ideal(p).to_string() << "\n";
        }
    }
    return 0;
}

int emit_reports(const std::vector<CheckReport>& reports, Format format, bool verbose) {
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed();
    }
    if (format == Format::Json) {
        std::cout << to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << to_text(r, verbose);
        }
        std::cout << (ok ? "all checks passed" : "counterexample found") << "\n";
    }
    return ok ? 0 : 2;
}

int run_verify(const VerifyArgs& a) {
    require_plain_or_json(a.format, "verify");
    SuiteOptions o;
    o.jobs = std::max(1u, a.jobs);
    auto set = [](long v, std::initializer_list<long*> fields) {
        if (v >= 0) {
            for (long* f : fields) {
                *f = v;
            }
        }
    };
    set(a.max_s, {&o.symmetry_max_s, &o.multi_catalan_max_s, &o.motzkin_max_s, &o.conjecture_max_s});
    set(a.min_s, {&o.conjecture_min_s});
    set(a.max_t, {&o.popoviciu_max_t});
    set(a.max_n, {&o.identity_max_n, &o.hessenberg_max_n, &o.gd_max_n, &o.gd_bijection_max_n});
    set(a.max_k, {&o.gd_max_k, &o.gd_bijection_max_k, &o.gd_power_max});
    set(a.max_p, {&o.multi_catalan_max_p, &o.gf_max_p});
    set(a.max_sum, {&o.pair_max_sum, &o.coarea_max_sum});
    set(a.box, {&o.kreweras_box, &o.qdet_box});
    if (a.terms >= 0) {
        o.gf_terms = static_cast<std::size_t>(a.terms);
    }
    if (a.suite == "symmetry" && a.max_s >= 0 && a.max_s < 3) {
        throw DomainError("symmetry needs odd s >= 3; --max-s " + std::to_string(a.max_s) + " leaves nothing to check");
    }

    std::vector<CheckReport> reports;
    const std::string& s = a.suite;
    if (s == "all") {
        reports = run_all(o);
    } else if (s == "kreweras") {
        reports = {check_kreweras(o), check_diagonal_kreweras(o)};
    } else if (s == "qdet") {
        reports = {check_qdet(o)};
    } else if (s == "coarea") {
        reports = {check_coarea(o)};
    } else if (s == "identity") {
        reports = {check_catalan_identity(o), check_hessenberg(o)};
    } else if (s == "popoviciu") {
        reports = {check_popoviciu(o), check_frobenius_sylvester(o)};
    } else if (s == "symmetry") {
        reports = {check_symmetry(o)};
    } else if (s == "multi-catalan") {
        reports = {check_multi_catalan(o), check_motzkin(o)};
    } else if (s == "gf") {
        reports = {check_gf(o)};
    } else if (s == "gd") {
        reports = {check_gd_counts(o), check_gd_small(o), check_gd_bijection(o)};
    } else if (s == "conjecture") {
        reports = {check_conjecture(o)};
    } else if (s == "equinumerous") {
        reports = {check_equinumerous_pairs(o), check_equinumerous_consecutive(o)};
    } else if (s == "anchors") {
        reports = {check_anchor_values(o)};
    } else {
        throw DomainError("unknown suite '" + s + "'");
    }
    return emit_reports(reports, a.format, a.verbose || s == "conjecture");
}

}  // namespace simcore::cli
