#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "simcore/gap_poset.hpp"
#include "simcore/report.hpp"

namespace simcore::cli {

enum class Format { Plain, Json, Dot, Svg };

inline constexpr unsigned long long kListCap = 1'000'000;
inline constexpr unsigned long long kCountCap = 10'000'000;

struct PosetArgs {
    std::vector<long> gens;
    Format format = Format::Plain;
    bool reduce = false;
    std::string from_file;
};

struct IdealArgs {
    std::vector<long> gens;
    Format format = Format::Plain;
    bool count_only = false;
    bool list = false;
    bool total_size = false;
    unsigned long long max_items = 0;  // 0: pick the default for the mode
    std::string from_file;
};

struct RectArgs {
    long s = 0;
    long t = 0;
    Format format = Format::Plain;
    bool count_only = false;
    bool list = false;
    std::string svg;
    int columns = 6;
    unsigned long long max_items = 0;
    std::string from_file;
};

struct GdArgs {
    long n = 0;
    long k = 1;
    Format format = Format::Plain;
    bool count_only = false;
    bool list = false;
    std::string svg;
    int columns = 4;
    unsigned long long max_items = 0;
    std::string from_file;
};

struct VerifyArgs {
    std::string suite = "all";
    Format format = Format::Plain;
    bool verbose = false;
    unsigned jobs = 1;
    long min_s = -1;
    long max_s = -1;
    long max_t = -1;
    long max_n = -1;
    long max_k = -1;
    long max_p = -1;
    long max_sum = -1;
    long box = -1;
    long terms = -1;
};

GeneratorSet finite_generators(const std::vector<long>& gens);

int run_poset(const PosetArgs& a);
int run_ideals(const IdealArgs& a);
int run_cores(const IdealArgs& a);
int run_rect(const RectArgs& a);
int run_gd(const GdArgs& a);
int run_verify(const VerifyArgs& a);

// --from-file oracle checks; each returns the exit code
int check_poset_file(const std::string& path, Format format);
int check_ideals_file(const std::string& path, Format format);
int check_cores_file(const std::string& path, Format format);
int check_rect_file(const std::string& path, Format format);
int check_gd_file(const std::string& path, Format format);

/// Prints the reports and returns 0 if all passed, 2 otherwise.
int emit_reports(const std::vector<CheckReport>& reports, Format format, bool verbose);

nlohmann::json read_json_file(const std::string& path);
std::string big(const Integer& v);

}  // namespace simcore::cli
