// Command-line front end: spectra, constructions, verification suites,
// energy reports, cube bounds, profiles and the forcing relation, with
// reproducible seeds and machine-readable output.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatspec/analysis.hpp"
#include "flatspec/constructions.hpp"
#include "flatspec/counting.hpp"
#include "flatspec/field.hpp"
#include "flatspec/hypercube.hpp"
#include "flatspec/io.hpp"
#include "flatspec/numerals.hpp"
#include "flatspec/verify.hpp"
#include "flatspec/version.hpp"

namespace {

using namespace flatspec;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string format = "json";
    std::optional<std::string> output;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output,-o", flags.output, "Write the report to this file");
    cmd->add_option("--seed", flags.seed, "Seed for randomized commands (fixed default)");
    cmd->add_option("--jobs,-j", flags.jobs, "Worker count for exhaustive searches")
        ->check(CLI::PositiveNumber);
}

void emit(const Json& report, const std::vector<std::pair<std::string, std::string>>& csv_rows,
          const CommonFlags& flags) {
    std::string text;
    if (flags.format == "json") {
        text = report.dump(2);
        text += "\n";
    } else {
        std::ostringstream os;
        os << "key,value\n";
        for (const auto& [k, v] : csv_rows) os << csv_escape(k) << "," << csv_escape(v) << "\n";
        text = os.str();
    }
    write_output(text, flags.output, std::cout);
}

template <typename Container>
std::string join_values(const Container& xs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << " ";
        first = false;
        os << x;
    }
    return os.str();
}

int run_spectrum(int n, int k, int t, bool allow_n5, const CommonFlags& flags) {
    ForcesOptions opts;
    opts.jobs = flags.jobs;
    opts.allow_n5 = allow_n5;
    const Spectrum sp = spectrum(n, k, t, opts);
    const auto closed = closed_form_spectrum(n, k, t);
    std::string cross = "NONE";
    if (closed) cross = (closed->members == sp.members) ? "MATCH" : "MISMATCH";

    Json report = report_envelope("spectrum", {{"n", n}, {"k", k}, {"t", t}, {"jobs", flags.jobs}});
    report["spectrum"] = to_json(sp);
    report["closed_form"] = cross;

    if (flags.format == "csv") {
        // one row per m
        std::ostringstream os;
        os << "m,forced\n";
        std::size_t idx = 0;
        for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m) {
            const bool member = idx < sp.members.size() && sp.members[idx] == m;
            if (member) ++idx;
            os << m << "," << (member ? 1 : 0) << "\n";
        }
        write_output(os.str(), flags.output, std::cout);
    } else {
        emit(report, {}, flags);
    }
    if (cross == "MISMATCH") {
        std::cerr << "spectrum: exhaustive search disagrees with the closed form\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_forces(int n, std::uint64_t m, int k, int t, bool allow_n5, bool prune,
               const CommonFlags& flags) {
    ForcesOptions opts;
    opts.allow_n5 = allow_n5;
    opts.orbit_prune = prune;
    opts.jobs = flags.jobs;
    const ForcesResult r = forces(n, m, k, t, opts);
    Json report = report_envelope(
        "forces", {{"n", n}, {"m", m}, {"k", k}, {"t", t}, {"orbit_prune", prune}});
    report["forced"] = r.forced;
    report["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    std::vector<std::pair<std::string, std::string>> rows{{"forced", r.forced ? "1" : "0"}};
    if (r.witness) rows.push_back({"witness", join_values(r.witness->points())});
    emit(report, rows, flags);
    return kExitOk;
}

int run_profile(const std::string& input, int k, const CommonFlags& flags) {
    const PointSet s = load_point_set(input);
    const Profile p = profile(s, k);
    Json report = report_envelope("profile", {{"input", input}, {"k", k}});
    report["n"] = s.dim();
    report["m"] = s.size();
    report["sizes"] = p.sizes;
    emit(report, {{"sizes", join_values(p.sizes)}}, flags);
    return kExitOk;
}

int run_construct(const std::string& kind, int n, std::uint64_t m, int k, int c,
                  const CommonFlags& flags) {
    Json params{{"n", n}};
    Json certificate;
    Json extra;
    PointSet result(1);

    if (kind == "lex") {
        params["m"] = m;
        result = lexicographic(n, m);
        certificate["decomposition_dims"] = supp(m);
    } else if (kind == "bose") {
        result = bose_set(n);
        const SidonCheck sc = is_sidon(result);
        certificate["sidon"] = sc.sidon;
        certificate["witness"] = sc.witness ? to_json(*sc.witness) : Json(nullptr);
    } else if (kind == "evasive") {
        params["k"] = k;
        params["c"] = c;
        const EvasiveResult ev = evasive_random({n, k, c, flags.seed});
        result = ev.set;
        const EvasiveCheck chk = is_evasive(result, k, c);
        certificate["evasive"] = chk.evasive;
        certificate["witness"] = chk.witness ? to_json(*chk.witness) : Json(nullptr);
        extra["sample_size"] = ev.sample_size;
        extra["expected_size_floor"] = ev.expected_size_floor;
        extra["attempts"] = ev.attempts;
        extra["floor_met"] = ev.floor_met;
    } else if (kind == "combine-union" || kind == "combine-diff") {
        params["m"] = m;
        params["k"] = k;
        params["c"] = c;
        const CombinedSet cs = (kind == "combine-union") ? combine_union(n, m, k, c, flags.seed)
                                                         : combine_difference(n, m, k, c, flags.seed);
        result = cs.result;
        const EvasiveCheck chk = is_evasive(cs.evasive_part, k, c);
        certificate["evasive"] = chk.evasive;
        certificate["witness"] = chk.witness ? to_json(*chk.witness) : Json(nullptr);
        extra["translate"] = cs.translate;
        extra["evasive_part"] = to_json(cs.evasive_part);
        extra["result_size"] = cs.result.size();
    } else {
        std::cerr << "construct: unknown kind " << kind << "\n";
        return kExitUsage;
    }

    Json report = report_envelope("construct", params);
    report["construction"] = kind;
    report["seed"] = flags.seed;
    report["set"] = to_json(result);
    report["certificate"] = certificate;
    if (!extra.is_null()) report["details"] = extra;

    std::vector<std::pair<std::string, std::string>> rows;
    rows.push_back({"construction", kind});
    rows.push_back({"size", std::to_string(result.size())});
    rows.push_back({"points", join_values(result.points())});
    emit(report, rows, flags);

    if (certificate.contains("evasive") && !certificate["evasive"].get<bool>()) return kExitMismatch;
    if (certificate.contains("sidon") && !certificate["sidon"].get<bool>()) return kExitMismatch;
    return kExitOk;
}

int run_verify(const std::string& suite, const CommonFlags& flags) {
    const CheckList checks = verify_suite(suite, flags.seed);
    std::size_t failed = 0;
    std::string first_failure;
    for (const auto& c : checks) {
        if (!c.pass && first_failure.empty()) first_failure = c.name;
        failed += c.pass ? 0 : 1;
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " - " << c.detail;
        std::cout << "\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";

    if (flags.output || flags.format == "csv") {
        Json report = report_envelope("verify", {{"suite", suite}, {"seed", flags.seed}});
        Json arr = Json::array();
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& c : checks) {
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            rows.push_back({c.name, c.pass ? "PASS" : "FAIL"});
        }
        report["checks"] = arr;
        report["failed"] = failed;
        emit(report, rows, flags);
    }
    if (failed) {
        std::cerr << "verify: first failing assertion: " << first_failure << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_energy(const std::string& input, double alpha, double eps, const CommonFlags& flags) {
    const PointSet s = load_point_set(input);
    const BigInt energy = additive_energy(s);
    const BigInt f23_energy = f23_from_energy(s);
    const auto hist = flat_statistics(s, 2);
    const BigInt f23_direct = hist[3];
    const DiffCounts dc = diff_counts(s);

    // histogram of p_v multiplicities
    std::map<std::uint32_t, std::uint64_t> diff_hist;
    for (std::uint64_t v = 1; v < dc.counts.size(); ++v) ++diff_hist[dc.counts[v]];

    Json report = report_envelope("energy", {{"input", input}, {"alpha", alpha}, {"eps", eps}});
    report["n"] = s.dim();
    report["m"] = s.size();
    report["energy"] = energy.str();
    report["f23_direct"] = f23_direct.str();
    report["f23_from_energy"] = f23_energy.str();
    report["routes_match"] = f23_direct == f23_energy;
    Json dh = Json::array();
    for (const auto& [p, cnt] : diff_hist) dh.push_back({{"p_v", p}, {"directions", cnt}});
    report["diff_histogram"] = dh;

    if (!s.empty()) {
        const EnergyBoundReport ebr = energy_bound_check(s, alpha, eps);
        Json eb;
        eb["k"] = ebr.k;
        eb["residue_modulus"] = ebr.residue_modulus;
        eb["residue"] = ebr.residue;
        eb["residue_threshold"] = ebr.residue_threshold;
        eb["premise_holds"] = ebr.premise_holds;
        eb["weak_bound"] = ebr.weak_bound.str();
        eb["weak_bound_holds"] = ebr.weak_bound_holds;
        eb["strong_bound"] = ebr.strong_bound;
        eb["conclusion_holds"] = ebr.conclusion_holds;
        report["energy_bound"] = eb;
    }

    std::vector<std::pair<std::string, std::string>> rows{
        {"m", std::to_string(s.size())},
        {"energy", energy.str()},
        {"f23_direct", f23_direct.str()},
        {"f23_from_energy", f23_energy.str()},
        {"routes_match", f23_direct == f23_energy ? "1" : "0"},
    };
    emit(report, rows, flags);
    return f23_direct == f23_energy ? kExitOk : kExitMismatch;
}

int run_cube(int n, std::optional<std::uint64_t> t, const std::optional<std::string>& input,
             const CommonFlags& flags) {
    Json report = report_envelope("cube", {{"n", n}});
    std::vector<std::pair<std::string, std::string>> rows;
    if (input) {
        const PointSet ts = load_point_set(*input);
        if (ts.dim() != n) {
            std::cerr << "cube: input dimension disagrees with -n\n";
            return kExitUsage;
        }
        const CubeCut cut = make_cube_cut(n, ts);
        report["t"] = ts.size();
        report["induced_edges"] = cut.internal_edges_a;
        report["crossing_edges"] = cut.crossing;
        const bool handshake =
            2 * cut.internal_edges_a + cut.crossing == static_cast<std::uint64_t>(n) * ts.size();
        report["handshake"] = handshake;
        rows = {{"induced_edges", std::to_string(cut.internal_edges_a)},
                {"crossing_edges", std::to_string(cut.crossing)}};
        if (!ts.empty() && ts.size() < ts.universe_size()) {
            report["min_cut_at_size"] = min_cut_size(n, ts.size()).str();
            rows.push_back({"min_cut_at_size", min_cut_size(n, ts.size()).str()});
        }
        emit(report, rows, flags);
        return handshake ? kExitOk : kExitMismatch;
    }
    if (!t) {
        std::cerr << "cube: need -t or --input\n";
        return kExitUsage;
    }
    report["t"] = *t;
    report["psi"] = psi(*t).str();
    report["min_cut"] = min_cut_size(n, *t).str();
    rows = {{"psi", psi(*t).str()}, {"min_cut", min_cut_size(n, *t).str()}};
    Json bounds = Json::array();
    for (int d = 0; d <= n - 1; ++d) bounds.push_back(cut_lower_bound(n, d));
    report["cut_lower_bounds"] = bounds;
    if (n <= 10) {
        // lexicographic sets attain the compression bound
        const bool tight = BigInt(induced_edges(n, lexicographic(n, *t))) == psi(*t);
        report["lexicographic_tight"] = tight;
        rows.push_back({"lexicographic_tight", tight ? "1" : "0"});
        emit(report, rows, flags);
        return tight ? kExitOk : kExitMismatch;
    }
    emit(report, rows, flags);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + " " + kVersion +
                 " - intersection spectra, evasive constructions and cube bounds in F_2^n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "Exhaustive forcing spectrum for (n,k,t)");
    int sp_n = 3, sp_k = 1, sp_t = 0;
    bool sp_n5 = false;
    CommonFlags sp_flags;
    sp->add_option("-n", sp_n, "Ambient dimension")->required();
    sp->add_option("-k", sp_k, "Flat dimension")->required();
    sp->add_option("-t", sp_t, "Intersection size")->required();
    sp->add_flag("--allow-n5", sp_n5, "Opt into the n=5 search (orbit pruning engaged)");
    add_common(sp, sp_flags);

    // forces
    auto* fo = app.add_subcommand("forces", "Decide whether [n,m] forces [k,t]");
    int fo_n = 3, fo_k = 1, fo_t = 0;
    std::uint64_t fo_m = 0;
    bool fo_n5 = false, fo_prune = false;
    CommonFlags fo_flags;
    fo->add_option("-n", fo_n)->required();
    fo->add_option("-m", fo_m)->required();
    fo->add_option("-k", fo_k)->required();
    fo->add_option("-t", fo_t)->required();
    fo->add_flag("--allow-n5", fo_n5, "Opt into the n=5 search (orbit pruning engaged)");
    fo->add_flag("--prune-orbits", fo_prune, "Restrict to linearly normalized representatives");
    add_common(fo, fo_flags);

    // profile
    auto* pr = app.add_subcommand("profile", "Intersection sizes of a set with all k-flats");
    std::string pr_input;
    int pr_k = 1;
    CommonFlags pr_flags;
    pr->add_option("--input,-i", pr_input, "Point set JSON file")->required();
    pr->add_option("-k", pr_k, "Flat dimension")->required();
    add_common(pr, pr_flags);

    // construct
    auto* co = app.add_subcommand("construct", "Build a point set and certify it");
    std::string co_kind;
    int co_n = 4, co_k = 2, co_c = 3;
    std::uint64_t co_m = 0;
    CommonFlags co_flags;
    co->add_option("kind", co_kind, "lex | bose | evasive | combine-union | combine-diff")
        ->required()
        ->check(CLI::IsMember({"lex", "bose", "evasive", "combine-union", "combine-diff"}));
    co->add_option("-n", co_n, "Ambient dimension")->required();
    co->add_option("-m", co_m, "Lexicographic size (lex, combine-*)");
    co->add_option("-k", co_k, "Flat dimension to evade (evasive, combine-*)");
    co->add_option("-c", co_c, "Maximum intersection size (evasive, combine-*)");
    add_common(co, co_flags);

    // verify
    auto* ve = app.add_subcommand("verify", "Run a named assertion suite");
    std::string ve_suite;
    CommonFlags ve_flags;
    ve->add_option("suite", ve_suite, "small-spectra | profiles | energy | cube | numerals | all")
        ->required()
        ->check(CLI::IsMember({"small-spectra", "profiles", "energy", "cube", "numerals", "all"}));
    add_common(ve, ve_flags);

    // energy
    auto* en = app.add_subcommand("energy", "Additive energy report for a point set file");
    std::string en_input;
    double en_alpha = 0.5, en_eps = 0.25;
    CommonFlags en_flags;
    en->add_option("--input,-i", en_input, "Point set JSON file")->required();
    en->add_option("--alpha", en_alpha, "Energy bound exponent, in [1/2, 1)");
    en->add_option("--eps", en_eps, "Energy bound slack, with alpha+eps < 1");
    add_common(en, en_flags);

    // cube
    auto* cu = app.add_subcommand("cube", "Hypercube edge and cut bounds");
    int cu_n = 4;
    std::optional<std::uint64_t> cu_t;
    std::optional<std::string> cu_input;
    CommonFlags cu_flags;
    cu->add_option("-n", cu_n, "Cube dimension")->required();
    cu->add_option("-t", cu_t, "Side size for the minimum cut");
    cu->add_option("--input,-i", cu_input, "Point set JSON file (one cut side)");
    add_common(cu, cu_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sp->parsed()) return run_spectrum(sp_n, sp_k, sp_t, sp_n5, sp_flags);
        if (fo->parsed()) return run_forces(fo_n, fo_m, fo_k, fo_t, fo_n5, fo_prune, fo_flags);
        if (pr->parsed()) return run_profile(pr_input, pr_k, pr_flags);
        if (co->parsed()) return run_construct(co_kind, co_n, co_m, co_k, co_c, co_flags);
        if (ve->parsed()) return run_verify(ve_suite, ve_flags);
        if (en->parsed()) return run_energy(en_input, en_alpha, en_eps, en_flags);
        if (cu->parsed()) return run_cube(cu_n, cu_t, cu_input, cu_flags);
    } catch (const std::invalid_argument& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
