#include "qpt/simplex.hpp"

#include <cmath>
#include <optional>

namespace qpt {

namespace {

// Phase-1 tableau over an ordered field. Rows are [A | I | b] with b made
// nonnegative, the artificial identity block basic, and w the reduced-cost
// row of the artificial sum. Artificials never re-enter, so the column range
// offered to `entering` is structural only.
template <class T>
struct Tableau {
    std::vector<std::vector<T>> rows;  // length ncols + 1, rhs last
    std::vector<T> w;                  // same layout, w.back() = current cost
    std::vector<std::size_t> basis;
    std::size_t nstruct;

    Tableau(const Matrix<T>& a, const std::vector<T>& b) : nstruct(a.cols()) {
        const std::size_t m = a.rows(), ncols = nstruct + m;
        rows.assign(m, std::vector<T>(ncols + 1, T(0)));
        basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            bool flip = b[i] < T(0);
            for (std::size_t j = 0; j < nstruct; ++j) rows[i][j] = flip ? -a(i, j) : a(i, j);
            rows[i][nstruct + i] = T(1);
            rows[i][ncols] = flip ? -b[i] : b[i];
            basis[i] = nstruct + i;
        }
        w.assign(ncols + 1, T(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j <= ncols; ++j)
                if (j != nstruct + i) w[j] += rows[i][j];
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const T inv = T(1) / rows[pr][pc];
        for (auto& v : rows[pr]) v = v * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][pc] == T(0)) continue;
            const T f = rows[i][pc];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[pr][j];
        }
        if (w[pc] != T(0)) {
            const T f = w[pc];
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * rows[pr][j];
        }
        basis[pr] = pc;
    }

    std::vector<T> point() const {
        std::vector<T> x(nstruct, T(0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (basis[i] < nstruct) x[basis[i]] = rows[i].back();
        return x;
    }
};

// Bland ratio test: smallest ratio, ties broken by smallest basic index.
template <class T>
std::size_t leaving_row(const Tableau<T>& t, std::size_t pc) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!(t.rows[i][pc] > T(0))) continue;
        if (!best) {
            best = i;
            continue;
        }
        const T lhs = t.rows[i].back() * t.rows[*best][pc];
        const T rhs = t.rows[*best].back() * t.rows[i][pc];
        if (lhs < rhs || (lhs == rhs && t.basis[i] < t.basis[*best])) best = i;
    }
    if (!best) throw std::logic_error("phase-1 column without blocking row");
    return *best;
}

// exact Gaussian solve of the square-or-tall system A[:, cols] x = b;
// nullopt when inconsistent, free columns pinned to zero
std::optional<std::vector<Rational>> solve_columns(const Matrix<Rational>& a,
                                                  const std::vector<std::size_t>& cols,
                                                  const std::vector<Rational>& b) {
    const std::size_t m = a.rows(), s = cols.size();
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(s + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < s; ++j) aug[i][j] = a(i, cols[j]);
        aug[i][s] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < s && r < m; ++c) {
        std::size_t pr = r;
        while (pr < m && aug[pr][c] == 0) ++pr;
        if (pr == m) continue;
        std::swap(aug[pr], aug[r]);
        const Rational inv = Rational(1) / aug[r][c];
        for (auto& v : aug[r]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const Rational f = aug[i][c];
            for (std::size_t j = c; j <= s; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (aug[i][s] != 0) return std::nullopt;
    std::vector<Rational> x(s, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][s];
    return x;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(const Matrix<Rational>& a,
                                                  const std::vector<Rational>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    std::vector<std::size_t> cols(a.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return solve_columns(a, cols, b);
}

FeasibilityResult feasible_point_exact(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("simplex: rhs length mismatch");
    Tableau<Rational> t(a, b);
    for (;;) {
        std::size_t pc = t.nstruct;
        for (std::size_t j = 0; j < t.nstruct; ++j)
            if (t.w[j] > 0) {
                pc = j;
                break;
            }
        if (pc == t.nstruct) break;
        t.pivot(leaving_row(t, pc), pc);
    }
    FeasibilityResult r;
    r.feasible = t.w.back() == 0;
    if (r.feasible)
        r.x = t.point();
    else
        r.note = "phase-1 optimum " + format_rational(t.w.back());
    return r;
}

FeasibilityResult feasible_point_float(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("simplex: rhs length mismatch");
    Matrix<double> af(a.rows(), a.cols());
    std::vector<double> bf(b.size());
    double scale = 1.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            af(i, j) = to_double(a(i, j));
            scale = std::max(scale, std::abs(af(i, j)));
        }
        bf[i] = to_double(b[i]);
        scale = std::max(scale, std::abs(bf[i]));
    }
    const double tol = 1e-9 * scale;

    Tableau<double> t(af, bf);
    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t pc = t.nstruct;
        double best = tol;
        for (std::size_t j = 0; j < t.nstruct; ++j)
            if (t.w[j] > best) {
                best = t.w[j];
                pc = j;
            }
        if (pc == t.nstruct) break;
        t.pivot(leaving_row(t, pc), pc);
    }

    FeasibilityResult r;
    if (t.w.back() > 1e-7 * scale) {
        r.note = "float phase-1 optimum stayed positive";
        return r;
    }
    std::vector<std::size_t> cols;
    for (std::size_t c : t.basis)
        if (c < t.nstruct) cols.push_back(c);

    // Basis repair: a degenerate float vertex can carry columns whose exact
    // basic value is negative. Dropping the worst offender and re-solving
    // either reaches a nonnegative point on the remaining support or runs the
    // system inconsistent, which reports as infeasible.
    while (true) {
        auto xs = solve_columns(a, cols, b);
        if (!xs) {
            r.note = "float basis is exactly inconsistent";
            return r;
        }
        std::size_t worst = cols.size();
        for (std::size_t j = 0; j < cols.size(); ++j)
            if ((*xs)[j] < 0 && (worst == cols.size() || (*xs)[j] < (*xs)[worst])) worst = j;
        if (worst != cols.size()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(worst));
            continue;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < cols.size(); ++j) acc += a(i, cols[j]) * (*xs)[j];
            if (acc != b[i]) {
                r.note = "refined point misses the right-hand side";
                return r;
            }
        }
        std::vector<Rational> x(a.cols(), Rational(0));
        for (std::size_t j = 0; j < cols.size(); ++j) x[cols[j]] = (*xs)[j];
        r.feasible = true;
        r.x = std::move(x);
        return r;
    }
}

}  // namespace qpt
