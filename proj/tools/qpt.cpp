// Command line front end. Subcommands map one-to-one onto library entry
// points; all output formatting lives in json_io so artifacts stay
// byte-stable across runs.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
// 3 internal failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpt/cones.hpp"
#include "qpt/experiment.hpp"
#include "qpt/hkt.hpp"
#include "qpt/json_io.hpp"
#include "qpt/ma.hpp"
#include "qpt/parser.hpp"
#include "qpt/quat_field.hpp"
#include "qpt/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    bool exact = false;
    bool approx = false;
    std::uint64_t seed = 20260823ull;
    std::string out;
};

// arguments starting with '@' name a file holding the real payload
std::string slurp(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return qpt::read_text_file(arg.substr(1));
    return arg;
}

void write_artifact(const GlobalOpts& g, const std::string& text) {
    if (!g.out.empty()) qpt::write_text_file(g.out, text);
}

std::string dumped(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_point(const std::string& text) {
    auto pt = qpt::parse_double_list(text);
    if (pt.empty()) throw std::invalid_argument("empty evaluation point");
    return pt;
}

qpt::Grid vertex_cube(std::size_t n, double halfwidth, std::size_t points) {
    if (halfwidth <= 0.0) throw std::invalid_argument("halfwidth must be positive");
    if (points < 2) throw std::invalid_argument("need at least 2 grid points per axis");
    return qpt::Grid::cube(4 * n, halfwidth, points);
}

std::string format_dquat(const qpt::DQuaternion& q) {
    std::string s = qpt::format_double17(q.t);
    s += " + " + qpt::format_double17(q.x) + " i";
    s += " + " + qpt::format_double17(q.y) + " j";
    s += " + " + qpt::format_double17(q.z) + " k";
    return s;
}

std::string format_qrpoly(const qpt::QRPoly& q) {
    std::string s = "(" + qpt::format_rpoly(q.t) + ")";
    s += " + (" + qpt::format_rpoly(q.x) + ") i";
    s += " + (" + qpt::format_rpoly(q.y) + ") j";
    s += " + (" + qpt::format_rpoly(q.z) + ") k";
    return s;
}

qpt::Matrix<qpt::DQuaternion> to_numeric(const qpt::HyperhermitianMatrix& a) {
    qpt::Matrix<qpt::DQuaternion> m(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const qpt::Quaternion& q = a(i, j);
            m(i, j) = {q.t.convert_to<double>(), q.x.convert_to<double>(),
                       q.y.convert_to<double>(), q.z.convert_to<double>()};
        }
    return m;
}

int cmd_verify(const GlobalOpts& g, const std::string& filter, bool timings) {
    qpt::IdentitySuiteReport report = qpt::run_verify_suite(filter);
    for (const auto& rec : report.records) {
        if (rec.pass) {
            std::printf("PASS %s (%.3fs)\n", rec.name.c_str(), rec.seconds);
        } else {
            std::printf("FAIL %s: %s\n", rec.name.c_str(), rec.counterexample.c_str());
        }
    }
    if (report.records.empty()) {
        std::printf("no identity blocks match filter \"%s\"\n", filter.c_str());
        return 2;
    }
    std::printf("%s: %zu/%zu blocks\n", report.all_pass ? "PASS" : "FAIL",
                report.records.size() -
                    static_cast<std::size_t>(std::count_if(report.records.begin(),
                                                           report.records.end(),
                                                           [](const auto& r) { return !r.pass; })),
                report.records.size());
    write_artifact(g, qpt::json_identity_report(report, timings));
    return report.all_pass ? 0 : 1;
}

int cmd_moore_det(const GlobalOpts& g, const std::string& matrix_arg) {
    qpt::HyperhermitianMatrix a = qpt::parse_hherm_json(slurp(matrix_arg));
    ordered_json j;
    j["n"] = a.size();
    if (g.approx) {
        double det = qpt::moore_det_numeric(to_numeric(a));
        std::printf("%s\n", qpt::format_double17(det).c_str());
        j["moore_det"] = det;
    } else {
        qpt::Rational det = qpt::moore_det(a);
        std::printf("%s\n", qpt::format_rational(det).c_str());
        j["moore_det"] = qpt::format_rational(det);
    }
    write_artifact(g, dumped(j));
    return 0;
}

int cmd_mixed_det(const GlobalOpts& g, const std::string& matrices_arg) {
    ordered_json outer;
    try {
        outer = ordered_json::parse(slurp(matrices_arg));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matrices: invalid JSON: ") + e.what());
    }
    if (!outer.is_array()) throw std::invalid_argument("matrices: expected a JSON array");
    std::vector<qpt::HyperhermitianMatrix> as;
    as.reserve(outer.size());
    for (const auto& elem : outer) as.push_back(qpt::parse_hherm_json(elem.dump()));
    ordered_json j;
    j["n"] = as.empty() ? 0 : as.front().size();
    if (g.approx) {
        std::vector<qpt::Matrix<qpt::DQuaternion>> ms;
        ms.reserve(as.size());
        for (const auto& a : as) ms.push_back(to_numeric(a));
        double det = qpt::mixed_det_numeric(ms);
        std::printf("%s\n", qpt::format_double17(det).c_str());
        j["mixed_det"] = det;
    } else {
        qpt::Rational det = qpt::mixed_det(as);
        std::printf("%s\n", qpt::format_rational(det).c_str());
        j["mixed_det"] = qpt::format_rational(det);
    }
    write_artifact(g, dumped(j));
    return 0;
}

int cmd_psd_check(const GlobalOpts& g, const std::string& matrix_arg) {
    qpt::HyperhermitianMatrix a = qpt::parse_hherm_json(slurp(matrix_arg));
    qpt::PositivityCertificate cert = qpt::positivity(a);
    const char* verdict = cert.verdict == qpt::Definiteness::PositiveDefinite
                              ? "positive-definite"
                              : cert.verdict == qpt::Definiteness::PositiveSemidefinite
                                    ? "positive-semidefinite"
                                    : "indefinite";
    std::printf("%s (eigenvalue signs over H: %zu positive, %zu negative, %zu zero)\n", verdict,
                cert.positive, cert.negative, cert.zero);
    ordered_json j;
    j["n"] = a.size();
    j["verdict"] = verdict;
    j["positive"] = cert.positive;
    j["negative"] = cert.negative;
    j["zero"] = cert.zero;
    if (cert.witness) {
        ordered_json w = ordered_json::array();
        for (const auto& q : *cert.witness)
            w.push_back({qpt::format_rational(q.t), qpt::format_rational(q.x),
                         qpt::format_rational(q.y), qpt::format_rational(q.z)});
        j["witness"] = w;
        j["witness_value"] = qpt::format_rational(*cert.witness_value);
    }
    write_artifact(g, dumped(j));
    return cert.verdict == qpt::Definiteness::Indefinite ? 1 : 0;
}

int cmd_field_eval(const GlobalOpts& g, const std::string& expr, const std::string& at) {
    qpt::Field f = qpt::parse_field(slurp(expr));
    std::vector<double> pt = parse_point(at);
    ordered_json j;
    if (g.exact) {
        auto poly = f.to_rpoly(pt.size());
        if (!poly)
            throw std::invalid_argument(
                "--exact needs a polynomial field (no sqrt, exp, log, pospart, step)");
        std::vector<qpt::Rational> rpt = qpt::parse_rational_list(at);
        qpt::Rational v = qpt::eval_rpoly(*poly, rpt);
        std::printf("%s\n", qpt::format_rational(v).c_str());
        j["value"] = qpt::format_rational(v);
    } else {
        double v = f.eval(pt);
        std::printf("%s\n", qpt::format_double17(v).c_str());
        j["value"] = v;
    }
    write_artifact(g, dumped(j));
    return 0;
}

int cmd_hessian(const GlobalOpts& g, const std::string& expr, std::size_t n,
                const std::string& at) {
    qpt::Field f = qpt::parse_field(slurp(expr));
    ordered_json j;
    j["n"] = n;
    if (!at.empty()) {
        std::vector<double> pt = parse_point(at);
        if (pt.size() != 4 * n) throw std::invalid_argument("point size must be 4n");
        qpt::Matrix<qpt::DQuaternion> h = qpt::HessianEvaluator(f, n).at(pt);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k) {
                std::printf("H(%zu,%zu) = %s\n", i, k, format_dquat(h(i, k)).c_str());
                row.push_back({h(i, k).t, h(i, k).x, h(i, k).y, h(i, k).z});
            }
            rows.push_back(row);
        }
        j["hessian"] = rows;
    } else {
        auto poly = f.to_rpoly(4 * n);
        if (!poly)
            throw std::invalid_argument(
                "symbolic Hessian needs a polynomial field; pass --at for pointwise values");
        qpt::Matrix<qpt::QRPoly> h = qpt::quat_hessian_poly(*poly);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k) {
                std::string s = format_qrpoly(h(i, k));
                std::printf("H(%zu,%zu) = %s\n", i, k, s.c_str());
                row.push_back(s);
            }
            rows.push_back(row);
        }
        j["hessian"] = rows;
    }
    write_artifact(g, dumped(j));
    return 0;
}

int cmd_psh_check(const GlobalOpts& g, const std::string& expr, std::size_t n, double halfwidth,
                  std::size_t points, double margin) {
    qpt::Field f = qpt::parse_field(slurp(expr));
    qpt::PshVerdict v = qpt::is_psh_c2(f, n, vertex_cube(n, halfwidth, points), margin);
    std::string text = qpt::json_psh_verdict(v);
    std::printf("%s", text.c_str());
    write_artifact(g, text);
    return v.status == qpt::PshStatus::NotPsh ? 1 : 0;
}

int cmd_ma_density(const GlobalOpts& g, const std::string& expr, std::size_t n, double halfwidth,
                   std::size_t points) {
    qpt::Field f = qpt::parse_field(slurp(expr));
    qpt::Grid grid = vertex_cube(n, halfwidth, points);
    qpt::MADensitySample d = qpt::ma_density(f, n, grid);
    double mass = 0.0, lo = d.values.front(), hi = d.values.front();
    for (std::size_t i = 0; i < d.values.size(); ++i) {
        mass += d.values[i] * d.grid.weight(i);
        lo = std::min(lo, d.values[i]);
        hi = std::max(hi, d.values[i]);
    }
    std::printf("nodes=%zu mass=%s min=%s max=%s\n", d.values.size(),
                qpt::format_double17(mass).c_str(), qpt::format_double17(lo).c_str(),
                qpt::format_double17(hi).c_str());
    if (!g.out.empty()) {
        std::vector<std::string> header;
        for (std::size_t a = 0; a < 4 * n; ++a) header.push_back("x" + std::to_string(a));
        header.push_back("density");
        std::vector<std::vector<std::string>> rows;
        rows.reserve(d.values.size());
        for (std::size_t i = 0; i < d.values.size(); ++i) {
            std::vector<std::string> row;
            for (double c : d.grid.point(i)) row.push_back(qpt::format_double17(c));
            row.push_back(qpt::format_double17(d.values[i]));
            rows.push_back(std::move(row));
        }
        qpt::write_text_file(g.out, qpt::csv_table(header, rows));
    }
    return 0;
}

int cmd_cln_mass(const GlobalOpts& g, const std::vector<std::string>& potentials, std::size_t n,
                 double inner_halfwidth, std::size_t inner_points, double outer_halfwidth,
                 std::size_t outer_points, double eps) {
    if (outer_halfwidth <= inner_halfwidth)
        throw std::invalid_argument("outer box must strictly contain the inner box");
    std::vector<qpt::Field> us;
    for (const auto& p : potentials) us.push_back(qpt::parse_field(slurp(p)));
    qpt::Grid inner = vertex_cube(n, inner_halfwidth, inner_points);
    qpt::Grid outer = vertex_cube(n, outer_halfwidth, outer_points);
    qpt::MassReport r;
    if (eps > 0.0) {
        if (us.size() != 1)
            throw std::invalid_argument("mollified mass takes exactly one potential");
        r = qpt::cln_mass_mollified(us.front(), n, inner, outer, eps);
    } else {
        r = qpt::cln_mass(us, n, inner, outer);
    }
    std::printf("mass=%s sup_product=%s ratio=%s\n", qpt::format_double17(r.mass).c_str(),
                qpt::format_double17(r.sup_product).c_str(),
                qpt::format_double17(r.ratio).c_str());
    write_artifact(g, qpt::json_mass_report(r));
    return 0;
}

int cmd_weak_limit(const GlobalOpts& g, const std::string& u_expr, const std::string& phi_expr,
                   std::size_t n, double halfwidth, std::size_t points, double eps0, int levels) {
    qpt::Field u = qpt::parse_field(slurp(u_expr));
    qpt::Field phi = qpt::parse_field(slurp(phi_expr));
    qpt::Grid grid = qpt::Grid::cube(4 * n, halfwidth, points, true);
    qpt::WeakLimitReport r = qpt::weak_convergence_experiment(u, phi, n, grid, eps0, levels);
    std::printf("extrapolated=%s rate=%s levels=%zu\n",
                qpt::format_double17(r.extrapolated).c_str(),
                qpt::format_double17(r.rate).c_str(), r.records.size());
    if (!g.out.empty()) {
        qpt::write_text_file(g.out + ".json", qpt::json_weak_limit(r));
        qpt::write_text_file(g.out + ".csv", qpt::csv_weak_limit(r));
    }
    return 0;
}

int cmd_cone_check(const GlobalOpts& g, const std::string& form_arg, std::size_t n, long k_opt,
                   const std::string& mode, std::size_t budget) {
    qpt::Form f = qpt::parse_form_json(slurp(form_arg));
    std::optional<std::size_t> k_hint;
    if (k_opt >= 0) k_hint = static_cast<std::size_t>(k_opt);
    qpt::ConstForm2k eta = qpt::const_form(f, n, k_hint);
    qpt::ConeCertificate cert;
    if (mode == "weak") {
        cert = eta.k == 1 ? qpt::is_weakly_positive_2form(eta)
                          : qpt::weak_positive_test(eta, budget, g.seed);
    } else if (mode == "strong") {
        cert = qpt::strong_positive_lp(eta, budget, g.seed);
    } else {
        throw std::invalid_argument("mode must be weak or strong");
    }
    const char* verdict = cert.verdict == qpt::ConeVerdict::Member
                              ? "member"
                              : cert.verdict == qpt::ConeVerdict::NonMember ? "non-member"
                                                                           : "unknown";
    std::printf("%s: %s\n", verdict, cert.detail.c_str());
    write_artifact(g, qpt::json_cone_certificate(cert));
    return cert.verdict == qpt::ConeVerdict::NonMember ? 1 : 0;
}

int cmd_hkt_check(const GlobalOpts& g, const std::string& expr, std::size_t n, double halfwidth,
                  std::size_t points) {
    qpt::Field f = qpt::parse_field(slurp(expr));
    auto poly = f.to_rpoly(4 * n);
    if (!poly) throw std::invalid_argument("potential must be polynomial");
    qpt::Grid grid = vertex_cube(n, halfwidth, points);
    ordered_json j;
    j["n"] = n;
    qpt::MetricField m;
    try {
        m = qpt::metric_from_potential(*poly, n, grid);
    } catch (const qpt::NotStrictlyPsh& e) {
        std::printf("not strictly plurisubharmonic: %s\n", e.what());
        j["strictly_psh"] = false;
        j["detail"] = e.what();
        write_artifact(g, dumped(j));
        return 1;
    }
    j["strictly_psh"] = true;
    qpt::HermitianReport herm = qpt::is_quaternionic_hermitian(m, grid);
    j["hermitian"] = ordered_json::parse(qpt::json_hermitian_report(herm));
    if (!herm.hermitian) {
        std::printf("metric is not quaternionic Hermitian on the sample grid\n");
        write_artifact(g, dumped(j));
        return 1;
    }
    qpt::HktCheck c = qpt::is_hkt(m);
    j["hkt"] = ordered_json::parse(qpt::json_hkt_check(c));
    std::printf("%s\n", c.hkt ? "HKT: del Omega = 0" : "not HKT: del Omega != 0");
    write_artifact(g, dumped(j));
    return c.hkt ? 0 : 1;
}

int cmd_solve_potential(const GlobalOpts& g, const std::string& form_arg, std::size_t n,
                        int degree) {
    qpt::Form omega = qpt::parse_form_json(slurp(form_arg));
    ordered_json j;
    j["n"] = n;
    try {
        qpt::RPoly f = qpt::solve_potential(omega, n, degree);
        std::string s = qpt::format_rpoly(f);
        std::printf("%s\n", s.c_str());
        j["potential"] = s;
        write_artifact(g, dumped(j));
        return 0;
    } catch (const qpt::NotClosed& e) {
        std::printf("no potential: %s\n", e.what());
        j["error"] = "not-closed";
        j["residual"] = qpt::format_form(e.residual);
        write_artifact(g, dumped(j));
        return 1;
    } catch (const qpt::DegreeBoundTooSmall& e) {
        std::printf("degree bound too small: need %d\n", e.needed);
        j["error"] = "degree-bound";
        j["needed"] = e.needed;
        write_artifact(g, dumped(j));
        return 1;
    }
}

int cmd_run(const GlobalOpts& g, const std::string& config_path) {
    if (g.out.empty()) throw std::invalid_argument("run needs --out as the artifact prefix");
    qpt::ExperimentConfig cfg = qpt::parse_config_text(qpt::read_text_file(config_path));
    qpt::ExperimentOutcome outcome = qpt::run_experiment(cfg, g.out);
    std::printf("%s\n", outcome.summary.c_str());
    for (const auto& path : outcome.artifacts) std::printf("wrote %s\n", path.c_str());
    return outcome.verdict_negative ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic pluripotential toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    auto* exact_flag = app.add_flag("--exact", g.exact, "exact rational evaluation where supported");
    app.add_flag("--float", g.approx, "floating point evaluation")->excludes(exact_flag);
    app.add_option("--seed", g.seed, "seed for randomized procedures");
    app.add_option("--out", g.out, "artifact path (or prefix for multi-file output)");
    app.fallthrough();

    int rc = 0;

    std::string filter;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run the identity battery");
    verify->add_option("--filter", filter, "substring match on block names");
    verify->add_flag("--timings", timings, "include per-block seconds in the artifact");
    verify->callback([&] { rc = cmd_verify(g, filter, timings); });

    std::string matrix_arg;
    auto* moore = app.add_subcommand("moore-det", "Moore determinant of a hyperhermitian matrix");
    moore->add_option("--matrix", matrix_arg, "matrix as JSON or @file")->required();
    moore->callback([&] { rc = cmd_moore_det(g, matrix_arg); });

    std::string matrices_arg;
    auto* mixed = app.add_subcommand("mixed-det", "mixed Moore determinant");
    mixed->add_option("--matrices", matrices_arg, "JSON array of matrices, or @file")->required();
    mixed->callback([&] { rc = cmd_mixed_det(g, matrices_arg); });

    std::string psd_matrix;
    auto* psd = app.add_subcommand("psd-check", "definiteness of a hyperhermitian matrix");
    psd->add_option("--matrix", psd_matrix, "matrix as JSON or @file")->required();
    psd->callback([&] { rc = cmd_psd_check(g, psd_matrix); });

    std::string fe_expr, fe_at;
    auto* feval = app.add_subcommand("field-eval", "evaluate a scalar field at a point");
    feval->add_option("--f", fe_expr, "field expression")->required();
    feval->add_option("--at", fe_at, "comma separated coordinates")->required();
    feval->callback([&] { rc = cmd_field_eval(g, fe_expr, fe_at); });

    std::string h_expr, h_at;
    std::size_t h_n = 1;
    auto* hess = app.add_subcommand("hessian", "quaternionic Hessian, symbolic or at a point");
    hess->add_option("--f", h_expr, "field expression")->required();
    hess->add_option("--n", h_n, "quaternionic dimension")->required();
    hess->add_option("--at", h_at, "comma separated coordinates (numeric mode)");
    hess->callback([&] { rc = cmd_hessian(g, h_expr, h_n, h_at); });

    std::string psh_expr;
    std::size_t psh_n = 1, psh_points = 5;
    double psh_halfwidth = 1.0, psh_margin = 1e-8;
    auto* psh = app.add_subcommand("psh-check", "plurisubharmonicity on a sample grid");
    psh->add_option("--f", psh_expr, "field expression")->required();
    psh->add_option("--n", psh_n, "quaternionic dimension")->required();
    psh->add_option("--halfwidth", psh_halfwidth, "box halfwidth");
    psh->add_option("--points", psh_points, "grid points per axis");
    psh->add_option("--margin", psh_margin, "strictness margin for eigenvalues");
    psh->callback([&] { rc = cmd_psh_check(g, psh_expr, psh_n, psh_halfwidth, psh_points, psh_margin); });

    std::string mad_expr;
    std::size_t mad_n = 1, mad_points = 5;
    double mad_halfwidth = 1.0;
    auto* mad = app.add_subcommand("ma-density", "Monge-Ampere density over a grid");
    mad->add_option("--f", mad_expr, "potential expression")->required();
    mad->add_option("--n", mad_n, "quaternionic dimension")->required();
    mad->add_option("--halfwidth", mad_halfwidth, "box halfwidth");
    mad->add_option("--points", mad_points, "grid points per axis");
    mad->callback([&] { rc = cmd_ma_density(g, mad_expr, mad_n, mad_halfwidth, mad_points); });

    std::vector<std::string> cm_potentials;
    std::size_t cm_n = 1, cm_inner_points = 5, cm_outer_points = 7;
    double cm_inner = 1.0, cm_outer = 2.0, cm_eps = 0.0;
    auto* cm = app.add_subcommand("cln-mass", "mass of the mixed density against sup norms");
    cm->add_option("--u", cm_potentials, "potential, repeatable up to n")->required();
    cm->add_option("--n", cm_n, "quaternionic dimension")->required();
    cm->add_option("--inner-halfwidth", cm_inner, "inner box halfwidth");
    cm->add_option("--inner-points", cm_inner_points, "inner grid points per axis");
    cm->add_option("--outer-halfwidth", cm_outer, "outer box halfwidth");
    cm->add_option("--outer-points", cm_outer_points, "outer grid points per axis");
    cm->add_option("--eps", cm_eps, "mollification radius (single potential)");
    cm->callback([&] {
        rc = cmd_cln_mass(g, cm_potentials, cm_n, cm_inner, cm_inner_points, cm_outer,
                          cm_outer_points, cm_eps);
    });

    std::string wl_u, wl_phi;
    std::size_t wl_n = 1, wl_points = 17;
    double wl_halfwidth = 2.0, wl_eps0 = 0.5;
    int wl_levels = 4;
    auto* wl = app.add_subcommand("weak-limit", "mollified density pairings with extrapolation");
    wl->add_option("--u", wl_u, "potential expression")->required();
    wl->add_option("--phi", wl_phi, "test function, compactly supported in the box")->required();
    wl->add_option("--n", wl_n, "quaternionic dimension")->required();
    wl->add_option("--halfwidth", wl_halfwidth, "box halfwidth");
    wl->add_option("--points", wl_points, "grid points per axis");
    wl->add_option("--eps0", wl_eps0, "initial mollification radius");
    wl->add_option("--levels", wl_levels, "halving steps");
    wl->callback([&] { rc = cmd_weak_limit(g, wl_u, wl_phi, wl_n, wl_halfwidth, wl_points, wl_eps0, wl_levels); });

    std::string cone_form, cone_mode = "weak";
    std::size_t cone_n = 1, cone_budget = 200;
    long cone_k = -1;
    auto* cone = app.add_subcommand("cone-check", "positivity cone membership for constant forms");
    cone->add_option("--form", cone_form, "form as JSON or @file")->required();
    cone->add_option("--n", cone_n, "quaternionic dimension")->required();
    cone->add_option("--k", cone_k, "half the form degree, needed for the zero form");
    cone->add_option("--mode", cone_mode, "weak or strong");
    cone->add_option("--budget", cone_budget, "sampling or generator budget");
    cone->callback([&] { rc = cmd_cone_check(g, cone_form, cone_n, cone_k, cone_mode, cone_budget); });

    std::string hkt_expr;
    std::size_t hkt_n = 1, hkt_points = 3;
    double hkt_halfwidth = 1.0;
    auto* hkt = app.add_subcommand("hkt-check", "metric from a potential, Hermitian and HKT tests");
    hkt->add_option("--potential", hkt_expr, "polynomial potential")->required();
    hkt->add_option("--n", hkt_n, "quaternionic dimension")->required();
    hkt->add_option("--halfwidth", hkt_halfwidth, "psh sample box halfwidth");
    hkt->add_option("--points", hkt_points, "grid points per axis");
    hkt->callback([&] { rc = cmd_hkt_check(g, hkt_expr, hkt_n, hkt_halfwidth, hkt_points); });

    std::string sp_form;
    std::size_t sp_n = 1;
    int sp_degree = 4;
    auto* sp = app.add_subcommand("solve-potential", "polynomial potential for a closed form");
    sp->add_option("--form", sp_form, "form as JSON or @file")->required();
    sp->add_option("--n", sp_n, "quaternionic dimension")->required();
    sp->add_option("--degree", sp_degree, "degree bound for the potential");
    sp->callback([&] { rc = cmd_solve_potential(g, sp_form, sp_n, sp_degree); });

    std::string run_config;
    auto* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("--config", run_config, "key=value config file")->required();
    run->callback([&] { rc = cmd_run(g, run_config); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const qpt::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }

    return rc;
}
