#pragma once

#include <vector>

#include "qpt/field.hpp"

namespace qpt {

// Uniform tensor grid over a box in R^d. Vertex grids place nodes on the
// boundary and carry tensor trapezoid weights; cell-centered grids place
// nodes at cell midpoints with plain cell-volume weights (useful when an
// integrand is singular on a boundary or at lattice-symmetric points).
struct Grid {
    std::vector<double> lo, hi;
    std::vector<std::size_t> counts;
    bool cell_centered = false;

    static Grid box(std::vector<double> lo, std::vector<double> hi, std::size_t per_axis,
                    bool cell_centered = false);
    static Grid cube(std::size_t dim, double halfwidth, std::size_t per_axis,
                     bool cell_centered = false);

    std::size_t dim() const { return lo.size(); }
    std::size_t total() const;
    double step(std::size_t axis) const;

    std::vector<std::size_t> coords(std::size_t flat) const;
    std::size_t flat(const std::vector<std::size_t>& c) const;
    std::vector<double> point(std::size_t flat) const;
    double node(std::size_t axis, std::size_t index) const;

    // tensor quadrature weight of the node (trapezoid rule on vertex grids)
    double weight(std::size_t flat) const;

    // same spacing with extra node layers on every side
    Grid with_halo(std::size_t layers) const;

    // true if the box of g lies strictly inside this box
    bool strictly_contains(const Grid& g) const;
};

struct GriddedField {
    Grid grid;
    std::vector<double> values;  // by flat node index
};

GriddedField sample_field(const Field& f, const Grid& g);

}  // namespace qpt
