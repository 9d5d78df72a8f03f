#include "qpt/experiment.hpp"

#include <algorithm>
#include <set>

#include "qpt/json_io.hpp"
#include "qpt/parser.hpp"
#include "qpt/psh.hpp"
#include "qpt/rng.hpp"

namespace qpt {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
    throw std::invalid_argument("config key '" + key + "': " + what);
}

std::size_t to_count(const ExperimentConfig& cfg, const std::string& key) {
    const std::string v = cfg.at(key);
    try {
        const long long x = std::stoll(v);
        if (x <= 0) bad_key(key, "must be positive");
        return static_cast<std::size_t>(x);
    } catch (const std::invalid_argument&) {
        bad_key(key, "not an integer: " + v);
    } catch (const std::out_of_range&) {
        bad_key(key, "out of range: " + v);
    }
}

int to_int(const ExperimentConfig& cfg, const std::string& key) {
    const std::string v = cfg.at(key);
    try {
        return static_cast<int>(std::stoll(v));
    } catch (const std::exception&) {
        bad_key(key, "not an integer: " + v);
    }
}

double to_real(const ExperimentConfig& cfg, const std::string& key) {
    const std::string v = cfg.at(key);
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        bad_key(key, "not a number: " + v);
    }
}

std::uint64_t to_seed(const ExperimentConfig& cfg) {
    const std::string v = cfg.at("seed");
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        bad_key("seed", "not an unsigned integer: " + v);
    }
}

Field to_field(const ExperimentConfig& cfg, const std::string& key) {
    try {
        return parse_field(cfg.at(key));
    } catch (const std::invalid_argument& e) {
        bad_key(key, e.what());
    }
}

void validate_keys(const ExperimentConfig& cfg, const std::set<std::string>& allowed,
                   const std::vector<std::string>& required) {
    for (const auto& [k, v] : cfg.entries)
        if (!allowed.count(k)) throw std::invalid_argument("config key '" + k + "': unknown key");
    std::string missing;
    for (const auto& k : required)
        if (!cfg.find(k)) missing += (missing.empty() ? "" : ", ") + k;
    if (!missing.empty()) throw std::invalid_argument("config: missing required keys: " + missing);
}

ExperimentOutcome run_weak_limit(const ExperimentConfig& cfg, const std::string& prefix) {
    validate_keys(cfg,
                  {"experiment", "u", "phi", "n", "halfwidth", "points", "eps0", "levels", "seed"},
                  {"u", "phi", "n", "halfwidth", "points", "eps0", "levels"});
    const std::size_t n = to_count(cfg, "n");
    const Grid g = Grid::cube(4 * n, to_real(cfg, "halfwidth"), to_count(cfg, "points"), true);
    const WeakLimitReport rep = weak_convergence_experiment(
        to_field(cfg, "u"), to_field(cfg, "phi"), n, g, to_real(cfg, "eps0"),
        to_int(cfg, "levels"));
    ExperimentOutcome out;
    write_text_file(prefix + ".csv", csv_weak_limit(rep));
    write_text_file(prefix + ".json", json_weak_limit(rep));
    out.artifacts = {prefix + ".csv", prefix + ".json"};
    out.summary = "extrapolated pairing " + format_double17(rep.extrapolated);
    return out;
}

ExperimentOutcome run_ball_mass(const ExperimentConfig& cfg, const std::string& prefix) {
    validate_keys(
        cfg, {"experiment", "u", "n", "halfwidth", "points", "radius", "eps0", "levels", "seed"},
        {"u", "n", "halfwidth", "points", "radius", "eps0", "levels"});
    const std::size_t n = to_count(cfg, "n");
    const Grid g = Grid::cube(4 * n, to_real(cfg, "halfwidth"), to_count(cfg, "points"), true);
    const WeakLimitReport rep =
        ball_mass_experiment(to_field(cfg, "u"), n, g, to_real(cfg, "radius"),
                             to_real(cfg, "eps0"), to_int(cfg, "levels"));
    ExperimentOutcome out;
    write_text_file(prefix + ".csv", csv_weak_limit(rep));
    write_text_file(prefix + ".json", json_weak_limit(rep));
    out.artifacts = {prefix + ".csv", prefix + ".json"};
    out.summary = "extrapolated ball mass " + format_double17(rep.extrapolated);
    return out;
}

ExperimentOutcome run_cln_mass(const ExperimentConfig& cfg, const std::string& prefix) {
    std::set<std::string> allowed = {"experiment",   "n",           "inner_halfwidth",
                                     "inner_points", "outer_halfwidth", "outer_points",
                                     "eps",          "seed"};
    const std::size_t n = to_count(cfg, "n");
    for (std::size_t i = 1; i <= n; ++i) allowed.insert("u" + std::to_string(i));
    std::vector<std::string> required = {"n", "inner_halfwidth", "inner_points",
                                         "outer_halfwidth", "outer_points"};
    for (std::size_t i = 1; i <= n; ++i) required.push_back("u" + std::to_string(i));
    validate_keys(cfg, allowed, required);
    const Grid inner =
        Grid::cube(4 * n, to_real(cfg, "inner_halfwidth"), to_count(cfg, "inner_points"));
    const Grid outer =
        Grid::cube(4 * n, to_real(cfg, "outer_halfwidth"), to_count(cfg, "outer_points"));
    MassReport rep;
    if (cfg.find("eps")) {
        if (n != 1)
            throw std::invalid_argument("config: the mollified variant takes a single potential");
        rep = cln_mass_mollified(to_field(cfg, "u1"), n, inner, outer, to_real(cfg, "eps"));
    } else {
        std::vector<Field> us;
        for (std::size_t i = 1; i <= n; ++i) us.push_back(to_field(cfg, "u" + std::to_string(i)));
        rep = cln_mass(us, n, inner, outer);
    }
    ExperimentOutcome out;
    write_text_file(prefix + ".json", json_mass_report(rep));
    out.artifacts = {prefix + ".json"};
    out.summary = "mass " + format_double17(rep.mass) + ", ratio " + format_double17(rep.ratio);
    return out;
}

ExperimentOutcome run_psh_check(const ExperimentConfig& cfg, const std::string& prefix) {
    validate_keys(cfg, {"experiment", "f", "n", "halfwidth", "points", "margin", "seed"},
                  {"f", "n", "halfwidth", "points"});
    const std::size_t n = to_count(cfg, "n");
    const Grid g = Grid::cube(4 * n, to_real(cfg, "halfwidth"), to_count(cfg, "points"));
    const double margin = cfg.find("margin") ? to_real(cfg, "margin") : 1e-8;
    const PshVerdict v = is_psh_c2(to_field(cfg, "f"), n, g, margin);
    ExperimentOutcome out;
    write_text_file(prefix + ".json", json_psh_verdict(v));
    out.artifacts = {prefix + ".json"};
    out.summary = "psh check: " + std::string(v.status == PshStatus::StrictlyPsh ? "strictly-psh"
                                              : v.status == PshStatus::Psh       ? "psh"
                                              : v.status == PshStatus::NotPsh    ? "not-psh"
                                                                                 : "inconclusive");
    out.verdict_negative = v.status == PshStatus::NotPsh;
    return out;
}

ExperimentOutcome run_cone_sweep(const ExperimentConfig& cfg, const std::string& prefix) {
    validate_keys(cfg, {"experiment", "n", "k", "count", "budget", "seed"},
                  {"n", "k", "count", "budget", "seed"});
    const std::size_t n = to_count(cfg, "n");
    const std::size_t k = static_cast<std::size_t>(to_int(cfg, "k"));
    if (k > n) throw std::invalid_argument("config key 'k': must be at most n");
    const std::size_t count = to_count(cfg, "count");
    const std::size_t budget = to_count(cfg, "budget");
    const std::uint64_t seed = to_seed(cfg);

    // sums of strong generators are strong, hence weakly positive; a
    // refutation here would certify a library bug, so the sweep doubles as a
    // soundness alarm
    std::size_t refuted = 0, confirmed_unknown = 0;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < count; ++i) {
        const auto gens = strong_generators(k, n, 3, seed + 7919 * i);
        Form sum(2 * n);
        for (const auto& g : gens) sum += g.form;
        const ConstForm2k target = const_form(sum, n, k);
        const ConeCertificate cert = weak_positive_test(target, budget, seed + 7919 * i + 1);
        std::string verdict = cert.verdict == ConeVerdict::Member      ? "member"
                              : cert.verdict == ConeVerdict::NonMember ? "refuted"
                                                                       : "not-refuted";
        if (cert.verdict == ConeVerdict::NonMember)
            ++refuted;
        else
            ++confirmed_unknown;
        rows.push_back({std::to_string(i), verdict,
                        cert.pairing ? format_rational(*cert.pairing) : ""});
    }
    ExperimentOutcome out;
    write_text_file(prefix + ".csv", csv_table({"index", "verdict", "pairing"}, rows));
    std::string summary_json = "{\n  \"count\": " + std::to_string(count) +
                               ",\n  \"refuted\": " + std::to_string(refuted) + "\n}\n";
    write_text_file(prefix + ".json", summary_json);
    out.artifacts = {prefix + ".csv", prefix + ".json"};
    out.summary = std::to_string(refuted) + " of " + std::to_string(count) +
                  " strong sums refuted by the pairing sweep";
    out.verdict_negative = refuted > 0;
    return out;
}

}  // namespace

const std::string* ExperimentConfig::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

std::string ExperimentConfig::at(const std::string& key) const {
    const std::string* v = find(key);
    if (!v) throw std::invalid_argument("config: missing required keys: " + key);
    return *v;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::size_t lineno = 0, start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string line = trim(text.substr(start, end - start));
        start = end + 1;
        ++lineno;
        if (line.empty() || line[0] == '#') {
            if (end == text.size()) break;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        if (cfg.find(key))
            throw std::invalid_argument("config key '" + key + "': duplicated");
        cfg.entries.emplace_back(key, value);
        if (end == text.size()) break;
    }
    return cfg;
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg, const std::string& out_prefix) {
    const std::string* kind = cfg.find("experiment");
    if (!kind) throw std::invalid_argument("config: missing required keys: experiment");
    if (*kind == "weak-limit") return run_weak_limit(cfg, out_prefix);
    if (*kind == "ball-mass") return run_ball_mass(cfg, out_prefix);
    if (*kind == "cln-mass") return run_cln_mass(cfg, out_prefix);
    if (*kind == "psh-check") return run_psh_check(cfg, out_prefix);
    if (*kind == "cone-sweep") return run_cone_sweep(cfg, out_prefix);
    throw std::invalid_argument("config key 'experiment': unknown experiment '" + *kind + "'");
}

}  // namespace qpt
