#include "qpt/ma.hpp"

#include <cmath>

namespace qpt {

namespace {

// real 4n x 4n second-difference matrix at an interior node, optionally on
// the sublattice with the given step multiple
Matrix<double> fd_second_matrix(const GriddedField& gf, std::vector<std::size_t> c,
                                std::size_t stride) {
    const Grid& g = gf.grid;
    std::size_t d = g.dim();
    auto value = [&](const std::vector<std::size_t>& cc) { return gf.values[g.flat(cc)]; };
    Matrix<double> h(d, d);
    double center = value(c);
    for (std::size_t a = 0; a < d; ++a) {
        double ha = g.step(a) * stride;
        c[a] += stride;
        double up = value(c);
        c[a] -= 2 * stride;
        double dn = value(c);
        c[a] += stride;
        h(a, a) = (up - 2.0 * center + dn) / (ha * ha);
        for (std::size_t b = a + 1; b < d; ++b) {
            double hb = g.step(b) * stride;
            c[a] += stride;
            c[b] += stride;
            double pp = value(c);
            c[b] -= 2 * stride;
            double pm = value(c);
            c[a] -= 2 * stride;
            double mm = value(c);
            c[b] += 2 * stride;
            double mp = value(c);
            c[a] += stride;
            c[b] -= stride;
            double mixed = (pp - pm - mp + mm) / (4.0 * ha * hb);
            h(a, b) = mixed;
            h(b, a) = mixed;
        }
    }
    return h;
}

double fd_density(const GriddedField& gf, const std::vector<std::size_t>& c, std::size_t n,
                  std::size_t stride) {
    return moore_det_numeric(contract_hessian(fd_second_matrix(gf, c, stride), n));
}

void extrapolate(WeakLimitReport& rep) {
    const auto& r = rep.records;
    if (r.empty()) return;
    double last = r.back().pairing;
    if (r.size() < 2) {
        rep.extrapolated = last;
        return;
    }
    double prev = r[r.size() - 2].pairing;
    double d2 = last - prev;
    double rate = 1.0;
    if (r.size() >= 3) {
        double d1 = prev - r[r.size() - 3].pairing;
        if (std::abs(d2) > 1e-13 * (1.0 + std::abs(last)) && d1 / d2 > 1.05)
            rate = std::clamp(std::log2(d1 / d2), 0.25, 4.0);
    }
    rep.rate = rate;
    if (std::abs(d2) <= 1e-13 * (1.0 + std::abs(last))) {
        rep.extrapolated = last;
        return;
    }
    rep.extrapolated = last + d2 / (std::pow(2.0, rate) - 1.0);
}

WeakLimitReport weak_limit_core(const Field& u, std::size_t n, const Grid& g,
                                const std::function<double(const std::vector<double>&)>& weight,
                                double eps0, int levels) {
    if (g.dim() != 4 * n) throw std::invalid_argument("grid dimension must be 4n");
    if (levels < 1) throw std::invalid_argument("need at least one schedule level");
    Grid work = g.with_halo(2);

    // test-function weight times cell volume, fixed across the schedule
    std::vector<double> wcell(g.total());
    for (std::size_t i = 0; i < g.total(); ++i) wcell[i] = weight(g.point(i)) * g.weight(i);

    WeakLimitReport rep;
    for (int k = 0; k < levels; ++k) {
        double eps = eps0 * std::pow(2.0, -k);
        Mollified m = mollify(u, eps, work);

        double fine = 0.0, coarse = 0.0, coarse_scale = std::pow(2.0, g.dim());
        for (std::size_t i = 0; i < g.total(); ++i) {
            if (wcell[i] == 0.0) continue;
            auto c = g.coords(i);
            bool even = true;
            for (auto& cc : c) {
                even = even && cc % 2 == 0;
                cc += 2;  // into work-grid coordinates
            }
            fine += wcell[i] * fd_density(m.field, c, n, 1);
            if (even) coarse += coarse_scale * wcell[i] * fd_density(m.field, c, n, 2);
        }
        rep.records.push_back({eps, fine, std::abs(fine - coarse)});
    }
    extrapolate(rep);
    return rep;
}

}  // namespace

MADensitySample ma_density(const Field& u, std::size_t n, const Grid& g) {
    return mixed_ma_density({u}, n, g);
}

MADensitySample fd_ma_density(const GriddedField& samples, std::size_t n) {
    const Grid& g = samples.grid;
    if (g.dim() != 4 * n) throw std::invalid_argument("grid dimension must be 4n");
    MADensitySample out{g, std::vector<double>(g.total(), 0.0), true};
    for (std::size_t i = 0; i < g.total(); ++i) {
        auto c = g.coords(i);
        bool interior = true;
        for (std::size_t a = 0; a < g.dim(); ++a)
            interior = interior && c[a] > 0 && c[a] + 1 < g.counts[a];
        if (interior) out.values[i] = fd_density(samples, c, n, 1);
    }
    return out;
}

MADensitySample mixed_ma_density(const std::vector<Field>& us, std::size_t n, const Grid& g) {
    if (g.dim() != 4 * n) throw std::invalid_argument("grid dimension must be 4n");
    if (us.size() != 1 && us.size() != n)
        throw std::invalid_argument("need one potential or exactly n of them");

    std::vector<HessianEvaluator> evals;
    for (const auto& u : us) evals.emplace_back(u, n);

    MADensitySample out{g, std::vector<double>(g.total()), false};
    for (std::size_t i = 0; i < g.total(); ++i) {
        auto x = g.point(i);
        if (evals.size() == 1) {
            out.values[i] = moore_det_numeric(evals[0].at(x));
        } else {
            std::vector<Matrix<DQuaternion>> hs;
            hs.reserve(n);
            for (const auto& e : evals) hs.push_back(e.at(x));
            out.values[i] = mixed_det_numeric(hs);
        }
    }
    return out;
}

DensityRoutes ma_density_routes(const RPoly& f, std::size_t n) {
    if (f.nvars() != 4 * n) throw std::invalid_argument("potential must have 4n variables");
    Form dd = ddj_potential(f);
    Form power = dd;
    for (std::size_t k = 1; k < n; ++k) power = wedge(power, dd);
    Form::Word top(2 * n);
    for (std::size_t l = 0; l < 2 * n; ++l) top[l] = static_cast<int>(l);

    DensityRoutes out;
    out.form_route = power.coefficient(top);

    Rational factor(1);
    for (std::size_t k = 2; k <= n; ++k) factor *= Rational(static_cast<int>(k));
    for (std::size_t k = 0; k < n; ++k) factor /= 4;
    out.hessian_route = CPoly(std::size_t{0}, CRational(factor)) *
                        cpoly_from_rpoly(moore_det_poly(quat_hessian_poly(f)));
    return out;
}

MassReport cln_mass(const std::vector<Field>& us, std::size_t n, const Grid& inner,
                    const Grid& outer) {
    if (!outer.strictly_contains(inner))
        throw std::invalid_argument("outer box must strictly contain the inner one");
    std::vector<Field> list = us;
    if (list.size() == 1) list.assign(n, us[0]);
    MADensitySample dens = mixed_ma_density(list, n, inner);

    MassReport rep;
    for (std::size_t i = 0; i < inner.total(); ++i)
        rep.mass += inner.weight(i) * std::abs(dens.values[i]);
    rep.sup_product = 1.0;
    for (const auto& u : list) {
        double sup = 0.0;
        for (std::size_t i = 0; i < outer.total(); ++i)
            sup = std::max(sup, std::abs(u.eval(outer.point(i))));
        rep.sup_product *= sup;
    }
    rep.ratio = rep.sup_product > 0 ? rep.mass / rep.sup_product : 0.0;
    return rep;
}

MassReport cln_mass_mollified(const Field& u, std::size_t n, const Grid& inner, const Grid& outer,
                              double eps) {
    if (!outer.strictly_contains(inner))
        throw std::invalid_argument("outer box must strictly contain the inner one");
    Grid work = inner.with_halo(1);
    Mollified m = mollify(u, eps, work);

    MassReport rep;
    rep.finite_difference = true;
    for (std::size_t i = 0; i < inner.total(); ++i) {
        auto c = inner.coords(i);
        for (auto& cc : c) cc += 1;
        rep.mass += inner.weight(i) * std::abs(fd_density(m.field, c, n, 1));
    }
    Mollified mo = mollify(u, eps, outer);
    double sup = 0.0;
    for (double v : mo.field.values) sup = std::max(sup, std::abs(v));
    rep.sup_product = std::pow(sup, static_cast<double>(n));
    rep.ratio = rep.sup_product > 0 ? rep.mass / rep.sup_product : 0.0;
    return rep;
}

WeakLimitReport weak_convergence_experiment(const Field& u, const Field& phi, std::size_t n,
                                            const Grid& g, double eps0, int levels) {
    // the pairing integrates by parts only when the test function dies out
    // before the boundary
    for (std::size_t i = 0; i < g.total(); ++i) {
        auto c = g.coords(i);
        bool boundary = false;
        for (std::size_t a = 0; a < g.dim(); ++a)
            boundary = boundary || c[a] == 0 || c[a] + 1 == g.counts[a];
        if (boundary && std::abs(phi.eval(g.point(i))) > 1e-9)
            throw std::invalid_argument("test function leaks through the grid boundary");
    }
    return weak_limit_core(
        u, n, g, [&phi](const std::vector<double>& x) { return phi.eval(x); }, eps0, levels);
}

WeakLimitReport ball_mass_experiment(const Field& u, std::size_t n, const Grid& g, double radius,
                                     double eps0, int levels) {
    double h = g.step(0);
    for (std::size_t a = 1; a < g.dim(); ++a) h = std::min(h, g.step(a));
    auto indicator = [radius, h](const std::vector<double>& x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return std::clamp((radius - std::sqrt(r2)) / h + 0.5, 0.0, 1.0);
    };
    return weak_limit_core(u, n, g, indicator, eps0, levels);
}

}  // namespace qpt
