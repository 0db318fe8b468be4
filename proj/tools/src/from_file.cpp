#include <fstream>
#include <set>

#include "cli.hpp"
#include "simcore/errors.hpp"
#include "simcore/gd_path.hpp"
#include "simcore/rect_path.hpp"

namespace simcore::cli {

namespace {

using nlohmann::json;

std::string join(const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
}

// Items from the emitting command are either bare step arrays or {"steps": [...]}.
const json& steps_of(const json& item) { return item.is_object() ? item.at("steps") : item; }

// One instance per item, then one for completeness: the items are distinct and
// as many as the expected count.
template <typename Key, typename Check>
CheckReport item_report(const std::string& id, const std::string& range, const json& items, const Integer& expected,
                        Check check) {
    std::vector<Key> keys(items.size());
    std::vector<bool> valid(items.size(), false);
    CheckReport r = run_check(id, range, items.size() + 1, [&](std::size_t i) {
        if (i < items.size()) {
            CheckInstance inst{"#" + std::to_string(i), false, ""};
            try {
                keys[i] = check(items[i], inst);
                valid[i] = inst.pass;
            } catch (const Error& e) {
                inst.pass = false;
                inst.detail = e.what();
            }
            return inst;
        }
        return CheckInstance{"count", false, ""};
    });
    // completeness needs every item, so it is filled in after the parallel part
    std::set<Key> distinct;
    bool all_valid = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
        all_valid = all_valid && valid[i];
        if (valid[i]) {
            distinct.insert(keys[i]);
        }
    }
    auto& last = r.instances.back();
    last.pass = all_valid && distinct.size() == items.size() && expected == distinct.size();
    last.detail = std::to_string(distinct.size()) + " distinct valid of " + std::to_string(items.size()) +
                  " listed, expected " + expected.get_str();
    return r;
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

int check_poset_file(const std::string& path, Format format) {
    const json j = read_json_file(path);
    try {
        const GapPoset p = build_gap_poset(finite_generators(j.at("generators").get<std::vector<long>>()));
        const auto gaps = j.at("gaps").get<std::vector<long>>();
        const auto covers = j.at("covers").get<std::vector<std::pair<long, long>>>();
        const std::vector<long> want_gaps(p.gaps().begin(), p.gaps().end());
        const std::vector<std::pair<long, long>> want_covers(p.covers().begin(), p.covers().end());
        CheckReport r{"from-file-poset", p.generators().to_string(), {}, 0.0};
        r.instances.push_back({"gaps", gaps == want_gaps, "file " + join(gaps) + ", recomputed " + join(want_gaps)});
        r.instances.push_back({"covers", covers == want_covers,
                               std::to_string(covers.size()) + " in file, " + std::to_string(want_covers.size()) +
                                   " recomputed"});
        return emit_reports({r}, format, true);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

int check_ideals_file(const std::string& path, Format format) {
    const json j = read_json_file(path);
    try {
        const GapPoset p = build_gap_poset(finite_generators(j.at("generators").get<std::vector<long>>()));
        const auto r = item_report<std::vector<long>>(
            "from-file-ideals", p.generators().to_string(), j.at("ideals"), count_lower_ideals(p),
            [&](const json& item, CheckInstance& inst) {
                auto elems = item.get<std::vector<long>>();
                inst.pass = std::is_sorted(elems.begin(), elems.end()) && p.is_lower_ideal(elems);
                inst.detail = "{" + join(elems) + "}" + (inst.pass ? "" : " is not a lower ideal");
                return elems;
            });
        return emit_reports({r}, format, false);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

int check_cores_file(const std::string& path, Format format) {
    const json j = read_json_file(path);
    try {
        const GapPoset p = build_gap_poset(finite_generators(j.at("generators").get<std::vector<long>>()));
        const auto r = item_report<std::vector<long>>(
            "from-file-cores", p.generators().to_string(), j.at("cores"), count_lower_ideals(p),
            [&](const json& item, CheckInstance& inst) {
                auto parts = item.get<std::vector<long>>();
                const Partition lambda(parts);
                inst.pass = is_multicore(lambda, p.generators().values());
                inst.detail = lambda.to_string() + (inst.pass ? "" : " is not a simultaneous core");
                if (inst.pass) {
                    inst.pass = ideal_to_core(p, core_to_ideal(lambda, p)) == lambda;
                }
                return parts;
            });
        return emit_reports({r}, format, false);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

int check_rect_file(const std::string& path, Format format) {
    const json j = read_json_file(path);
    try {
        const long s = j.at("s").get<long>();
        const long t = j.at("t").get<long>();
        const auto r = item_report<std::vector<Step>>(
            "from-file-rect-paths", "(" + std::to_string(s) + "," + std::to_string(t) + ")", j.at("paths"),
            count_rect_paths(s, t), [&](const json& item, CheckInstance& inst) {
                std::vector<Step> steps;
                for (const auto& name : steps_of(item)) {
                    steps.push_back(parse_step(name.get<std::string>()));
                }
                const RectPath path(s, t, steps);
                inst.pass = true;
                inst.detail = path.to_string();
                return steps;
            });
        return emit_reports({r}, format, false);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

int check_gd_file(const std::string& path, Format format) {
    const json j = read_json_file(path);
    try {
        const long n = j.at("n").get<long>();
        const long k = j.at("k").get<long>();
        const auto r = item_report<std::vector<GdStep>>(
            "from-file-gd-paths", "(" + std::to_string(n) + "," + std::to_string(k) + ")", j.at("paths"),
            count_gd(n, k), [&](const json& item, CheckInstance& inst) {
                std::vector<GdStep> steps;
                for (const auto& name : steps_of(item)) {
                    steps.push_back(parse_gd_step(name.get<std::string>(), k));
                }
                const GeneralizedDyckPath path(n, k, steps);
                inst.pass = true;
                inst.detail = path.to_string();
                return steps;
            });
        return emit_reports({r}, format, false);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

}  // namespace simcore::cli
