#include "qpt/psh.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>

#include "qpt/rng.hpp"

namespace qpt {

namespace {

std::string describe(const char* what, double value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.6g", what, value);
    return buf;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration
void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w) {
    x.resize(order);
    w.resize(order);
    for (int i = 0; i < order; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (t * p1 - p0) / (t * t - 1.0);
            double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (t * p1 - p0) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

double min_eigenvalue(const Matrix<double>& s) {
    std::size_t m = s.rows();
    Eigen::MatrixXd em(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) em(i, j) = s(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(em, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

double sphere_mean(const Field& u, const QuaternionicLine& line, double radius,
                   const std::vector<S3Node>& quad) {
    double acc = 0.0;
    for (const auto& node : quad) {
        DQuaternion q{radius * node.s[0], radius * node.s[1], radius * node.s[2],
                      radius * node.s[3]};
        acc += node.w * u.eval(line.at(q));
    }
    return acc / (2.0 * M_PI * M_PI);
}

}  // namespace

std::vector<S3Node> s3_quadrature(int order) {
    if (order < 2) throw std::invalid_argument("s3_quadrature: order must be at least 2");
    std::vector<double> gx, gw;
    gauss_legendre(order, gx, gw);
    std::vector<S3Node> nodes;
    nodes.reserve(static_cast<std::size_t>(order) * order * order);
    for (int a = 0; a < order; ++a) {
        double chi = M_PI * (gx[a] + 1.0) / 2.0, wchi = M_PI / 2.0 * gw[a];
        double schi = std::sin(chi);
        for (int b = 0; b < order; ++b) {
            double th = M_PI * (gx[b] + 1.0) / 2.0, wth = M_PI / 2.0 * gw[b];
            double sth = std::sin(th);
            for (int c = 0; c < order; ++c) {
                double ph = 2.0 * M_PI * c / order, wph = 2.0 * M_PI / order;
                S3Node n;
                n.s = {std::cos(chi), schi * std::cos(th), schi * sth * std::cos(ph),
                       schi * sth * std::sin(ph)};
                n.w = wchi * schi * schi * wth * sth * wph;
                nodes.push_back(n);
            }
        }
    }
    return nodes;
}

PshVerdict is_psh_c2(const Field& f, std::size_t n, const std::vector<std::vector<double>>& samples,
                     double margin, double tol) {
    PshVerdict v;
    if (samples.empty()) {
        v.detail = "no samples";
        return v;
    }
    HessianEvaluator he(f, n);
    bool first = true;
    try {
        for (const auto& x : samples) {
            double ev = min_eigenvalue(realize_double(he.at(x)));
            if (first || ev < v.worst) {
                v.worst = ev;
                v.witness_point = x;
                first = false;
            }
        }
    } catch (const EvalError& e) {
        v.status = PshStatus::Inconclusive;
        v.detail = std::string("evaluation failed: ") + e.what();
        return v;
    }
    if (v.worst < -tol)
        v.status = PshStatus::NotPsh;
    else if (v.worst >= margin)
        v.status = PshStatus::StrictlyPsh;
    else
        v.status = PshStatus::Psh;
    v.detail = describe("smallest Hessian eigenvalue over samples", v.worst);
    return v;
}

PshVerdict is_psh_c2(const Field& f, std::size_t n, const Grid& g, double margin, double tol) {
    std::vector<std::vector<double>> pts;
    pts.reserve(g.total());
    for (std::size_t i = 0; i < g.total(); ++i) pts.push_back(g.point(i));
    return is_psh_c2(f, n, pts, margin, tol);
}

PshVerdict is_psh_c2_exact(const RPoly& f, const std::vector<std::vector<Rational>>& samples) {
    PshVerdict v;
    if (samples.empty()) {
        v.detail = "no samples";
        return v;
    }
    auto hess = quat_hessian_poly(f);
    std::size_t n = hess.rows();
    bool all_definite = true;
    for (const auto& x : samples) {
        Matrix<Quaternion> at(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                at(i, j) = {eval_rpoly(hess(i, j).t, x), eval_rpoly(hess(i, j).x, x),
                            eval_rpoly(hess(i, j).y, x), eval_rpoly(hess(i, j).z, x)};
        auto cert = positivity(HyperhermitianMatrix(at));
        if (cert.verdict == Definiteness::Indefinite) {
            v.status = PshStatus::NotPsh;
            v.worst = cert.witness_value ? to_double(*cert.witness_value) : 0.0;
            v.witness_point.clear();
            for (const auto& c : x) v.witness_point.push_back(to_double(c));
            v.detail = describe("negative quadratic form value", v.worst);
            return v;
        }
        if (cert.verdict != Definiteness::PositiveDefinite) all_definite = false;
    }
    v.status = all_definite ? PshStatus::StrictlyPsh : PshStatus::Psh;
    v.detail = all_definite ? "positive definite at every sample"
                            : "positive semidefinite at every sample";
    return v;
}

std::vector<double> QuaternionicLine::at(const DQuaternion& q) const {
    std::vector<double> x(4 * base.size());
    for (std::size_t c = 0; c < base.size(); ++c) {
        DQuaternion v = base[c] + dir[c] * q;
        x[4 * c] = v.t;
        x[4 * c + 1] = v.x;
        x[4 * c + 2] = v.y;
        x[4 * c + 3] = v.z;
    }
    return x;
}

LineTestReport line_subharmonic_test(const Field& u, const QuaternionicLine& line,
                                     const std::vector<double>& radii, int order, double tol) {
    LineTestReport rep;
    bool zero_dir = true;
    for (const auto& d : line.dir) zero_dir = zero_dir && d.is_zero();
    if (zero_dir) throw std::invalid_argument("line direction must be nonzero");

    auto fine = s3_quadrature(order);
    auto coarse = s3_quadrature(std::max(4, order / 2));
    try {
        rep.center = u.eval(line.at(DQuaternion{}));
        for (double r : radii) {
            LineSample s;
            s.radius = r;
            s.mean = sphere_mean(u, line, r, fine);
            s.quad_error = std::abs(s.mean - sphere_mean(u, line, r, coarse));
            s.slack = s.mean - rep.center;
            rep.samples.push_back(s);
        }
    } catch (const EvalError& e) {
        rep.status = PshStatus::Inconclusive;
        rep.detail = std::string("evaluation failed: ") + e.what();
        return rep;
    }
    rep.status = PshStatus::Psh;
    for (const auto& s : rep.samples)
        if (s.slack < -(tol + s.quad_error)) {
            rep.status = PshStatus::NotPsh;
            rep.detail = describe("sub-mean-value violated at radius", s.radius);
            return rep;
        }
    rep.detail = "sub-mean-value holds at every sampled radius";
    return rep;
}

std::vector<QuaternionicLine> sample_lines(std::size_t n, std::size_t count, std::uint64_t seed,
                                           double base_halfwidth) {
    Rng rng(seed);
    std::vector<QuaternionicLine> lines;
    lines.reserve(count);
    while (lines.size() < count) {
        QuaternionicLine l;
        l.base.resize(n);
        l.dir.resize(n);
        for (std::size_t c = 0; c < n; ++c)
            l.base[c] = {base_halfwidth * (2 * rng.uniform() - 1),
                         base_halfwidth * (2 * rng.uniform() - 1),
                         base_halfwidth * (2 * rng.uniform() - 1),
                         base_halfwidth * (2 * rng.uniform() - 1)};
        double norm2 = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            l.dir[c] = {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
            norm2 += l.dir[c].norm_sq();
        }
        if (norm2 < 1e-12) continue;
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& d : l.dir) d = inv * d;
        lines.push_back(std::move(l));
    }
    return lines;
}

Field pnorm_max(const Field& f, const Field& g, int p) {
    if (p < 1) throw std::invalid_argument("pnorm_max: p must be at least 1");
    if (p == 1) return f + g;
    Field sum = Field::pow(f, p) + Field::pow(g, p);
    return Field::exp(Field::log(sum) / Field::constant(Rational(p)));
}

Mollified mollify(const Field& u, double eps, const Grid& g) {
    if (!(eps > 0)) throw std::invalid_argument("mollify: eps must be positive");
    std::size_t d = g.dim();
    double half = eps / 2.0;

    // per-axis offsets and normalized bump weights
    std::vector<std::size_t> radius(d);
    std::vector<std::vector<double>> wts(d);
    for (std::size_t a = 0; a < d; ++a) {
        double h = g.step(a);
        std::size_t r = static_cast<std::size_t>(std::max(0.0, std::ceil(half / h) - 1.0));
        radius[a] = r;
        std::vector<double> w(2 * r + 1, 0.0);
        double total = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            double xrel = (static_cast<double>(k) - static_cast<double>(r)) * h / half;
            if (std::abs(xrel) < 1.0) w[k] = std::exp(-1.0 / (1.0 - xrel * xrel));
            total += w[k];
        }
        for (auto& v : w) v /= total;
        wts[a] = std::move(w);
    }

    Grid ext = g;
    for (std::size_t a = 0; a < d; ++a) {
        double h = g.step(a);
        ext.lo[a] -= radius[a] * h;
        ext.hi[a] += radius[a] * h;
        ext.counts[a] += 2 * radius[a];
    }

    GriddedField sampled = sample_field(u, ext);

    // originals on the core block, for the sup-distance report
    std::vector<double> core(g.total());
    for (std::size_t i = 0; i < g.total(); ++i) {
        auto c = g.coords(i);
        for (std::size_t a = 0; a < d; ++a) c[a] += radius[a];
        core[i] = sampled.values[ext.flat(c)];
    }

    // separable convolution, one axis per pass over the full extended array
    std::vector<double> cur = std::move(sampled.values);
    std::vector<double> nxt(cur.size());
    for (std::size_t a = 0; a < d; ++a) {
        if (radius[a] == 0) continue;
        std::size_t stride = 1;
        for (std::size_t b = a + 1; b < d; ++b) stride *= ext.counts[b];
        std::size_t na = ext.counts[a];
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::size_t ia = (i / stride) % na;
            double acc = 0.0;
            if (ia >= radius[a] && ia + radius[a] < na) {
                std::size_t base = i - radius[a] * stride;
                for (std::size_t k = 0; k < wts[a].size(); ++k)
                    acc += wts[a][k] * cur[base + k * stride];
            } else {
                acc = cur[i];  // boundary band, never read through the core
            }
            nxt[i] = acc;
        }
        std::swap(cur, nxt);
    }

    Mollified out;
    out.field.grid = g;
    out.field.values.resize(g.total());
    out.sup_distance = 0.0;
    for (std::size_t i = 0; i < g.total(); ++i) {
        auto c = g.coords(i);
        for (std::size_t a = 0; a < d; ++a) c[a] += radius[a];
        out.field.values[i] = cur[ext.flat(c)];
        out.sup_distance = std::max(out.sup_distance, std::abs(out.field.values[i] - core[i]));
    }
    out.kernel_mass = 1.0;
    for (std::size_t a = 0; a < d; ++a) {
        double s = 0.0;
        for (double w : wts[a]) s += w;
        out.kernel_mass *= s;
    }
    return out;
}

}  // namespace qpt
