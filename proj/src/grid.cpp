#include "qpt/grid.hpp"

#include <stdexcept>

namespace qpt {

Grid Grid::box(std::vector<double> lo, std::vector<double> hi, std::size_t per_axis,
               bool cell_centered) {
    if (lo.size() != hi.size()) throw std::invalid_argument("grid: bound dimension mismatch");
    if (per_axis < (cell_centered ? 1u : 2u)) throw std::invalid_argument("grid: too few nodes");
    for (std::size_t a = 0; a < lo.size(); ++a)
        if (!(lo[a] < hi[a])) throw std::invalid_argument("grid: empty axis interval");
    Grid g;
    g.lo = std::move(lo);
    g.hi = std::move(hi);
    g.counts.assign(g.lo.size(), per_axis);
    g.cell_centered = cell_centered;
    return g;
}

Grid Grid::cube(std::size_t dim, double halfwidth, std::size_t per_axis, bool cell_centered) {
    return box(std::vector<double>(dim, -halfwidth), std::vector<double>(dim, halfwidth), per_axis,
               cell_centered);
}

std::size_t Grid::total() const {
    std::size_t t = 1;
    for (std::size_t c : counts) t *= c;
    return t;
}

double Grid::step(std::size_t axis) const {
    double span = hi[axis] - lo[axis];
    return cell_centered ? span / counts[axis] : span / (counts[axis] - 1);
}

std::vector<std::size_t> Grid::coords(std::size_t flat) const {
    std::vector<std::size_t> c(dim());
    for (std::size_t a = dim(); a-- > 0;) {
        c[a] = flat % counts[a];
        flat /= counts[a];
    }
    return c;
}

std::size_t Grid::flat(const std::vector<std::size_t>& c) const {
    std::size_t f = 0;
    for (std::size_t a = 0; a < dim(); ++a) f = f * counts[a] + c[a];
    return f;
}

double Grid::node(std::size_t axis, std::size_t index) const {
    double h = step(axis);
    return cell_centered ? lo[axis] + (index + 0.5) * h : lo[axis] + index * h;
}

std::vector<double> Grid::point(std::size_t flat) const {
    auto c = coords(flat);
    std::vector<double> x(dim());
    for (std::size_t a = 0; a < dim(); ++a) x[a] = node(a, c[a]);
    return x;
}

double Grid::weight(std::size_t flat) const {
    auto c = coords(flat);
    double w = 1.0;
    for (std::size_t a = 0; a < dim(); ++a) {
        w *= step(a);
        if (!cell_centered && (c[a] == 0 || c[a] + 1 == counts[a])) w *= 0.5;
    }
    return w;
}

Grid Grid::with_halo(std::size_t layers) const {
    Grid g = *this;
    for (std::size_t a = 0; a < dim(); ++a) {
        double h = step(a);
        g.lo[a] -= layers * h;
        g.hi[a] += layers * h;
        g.counts[a] += 2 * layers;
    }
    return g;
}

bool Grid::strictly_contains(const Grid& g) const {
    if (g.dim() != dim()) return false;
    for (std::size_t a = 0; a < dim(); ++a)
        if (!(lo[a] < g.lo[a] && g.hi[a] < hi[a])) return false;
    return true;
}

GriddedField sample_field(const Field& f, const Grid& g) {
    GriddedField out{g, std::vector<double>(g.total())};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = f.eval(g.point(i));
    return out;
}

}  // namespace qpt
