#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qpt/quaternion.hpp"

namespace qpt {

// Sparse multivariate polynomial over a commutative coefficient ring C with a
// fixed variable count. Terms are kept in a canonical map keyed by exponent
// vectors; zero coefficients are pruned on every mutation.
template <class C>
class SparsePoly {
  public:
    using coeff_type = C;
    using Exponents = std::vector<int>;

    // the default is the width-agnostic zero; it widens on first contact with
    // a sized polynomial so that generic ring code (quaternion components,
    // matrix entries) can value-initialize scalars
    SparsePoly() = default;
    explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
    SparsePoly(std::size_t nvars, C constant) : nvars_(nvars) {
        add_term(Exponents(nvars, 0), std::move(constant));
    }

    static SparsePoly variable(std::size_t nvars, std::size_t v) {
        SparsePoly p(nvars);
        Exponents e(nvars, 0);
        e.at(v) = 1;
        p.add_term(e, C(1));
        return p;
    }
    static SparsePoly monomial(std::size_t nvars, Exponents e, C coeff) {
        SparsePoly p(nvars);
        if (e.size() != nvars) throw std::invalid_argument("monomial: exponent width mismatch");
        p.add_term(std::move(e), std::move(coeff));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
    }
    C constant_term() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? C() : it->second;
    }
    int total_degree() const {  // 0 for the zero polynomial
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int p : e) s += p;
            d = std::max(d, s);
        }
        return d;
    }
    int degree_in(std::size_t v) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.at(v));
        return d;
    }

    const std::map<Exponents, C>& terms() const { return terms_; }
    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C() : it->second;
    }
    void add_term(Exponents e, C c) {
        if (e.size() != nvars_) throw std::invalid_argument("add_term: exponent width mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == C())) terms_.emplace(std::move(e), std::move(c));
            return;
        }
        it->second = it->second + c;
        if (it->second == C()) terms_.erase(it);
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        if (nvars_ != o.nvars_) {
            align(*this, o);
            return *this += widened(o, nvars_);
        }
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        if (nvars_ != o.nvars_) {
            align(*this, o);
            return *this -= widened(o, nvars_);
        }
        for (const auto& [e, c] : o.terms_) add_term(e, C() - c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    SparsePoly operator-() const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C() - c);
        return r;
    }
    friend SparsePoly operator*(SparsePoly a, SparsePoly b) {
        if (a.nvars_ != b.nvars_) {
            align(a, b);
            b = widened(b, a.nvars_);
        }
        SparsePoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    friend SparsePoly operator*(const C& s, const SparsePoly& p) {
        SparsePoly r(p.nvars_);
        for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
        return r;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        if (a.nvars_ != 0 && b.nvars_ != 0) return false;
        return a.is_constant() && b.is_constant() && a.constant_term() == b.constant_term();
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly derivative(std::size_t v) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(v) == 0) continue;
            Exponents d = e;
            --d[v];
            r.add_term(std::move(d), C(e[v]) * c);
        }
        return r;
    }

    // simultaneous substitution of every variable by a polynomial
    SparsePoly substitute(const std::vector<SparsePoly>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("substitute: needs one image per variable");
        std::size_t w = images.empty() ? 0 : images.front().nvars_;
        SparsePoly acc(w);
        for (const auto& [e, c] : terms_) {
            SparsePoly term(w, c);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (int p = 0; p < e[v]; ++p) term = term * images[v];
            acc += term;
        }
        return acc;
    }

    // evaluation in any ring V; conv lifts coefficients into V
    template <class V, class Conv>
    V eval(const std::vector<V>& x, Conv conv) const {
        if (x.size() != nvars_) throw std::invalid_argument("eval: needs one value per variable");
        V acc{};
        for (const auto& [e, c] : terms_) {
            V term = conv(c);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (int p = 0; p < e[v]; ++p) term = term * x[v];
            acc = acc + term;
        }
        return acc;
    }

  private:
    // only the width-agnostic zero-width polynomial may cross widths
    static SparsePoly widened(const SparsePoly& p, std::size_t nvars) {
        if (p.nvars_ == nvars) return p;
        if (p.nvars_ != 0 || !p.is_constant())
            throw std::invalid_argument("polynomial variable counts differ");
        return SparsePoly(nvars, p.constant_term());
    }
    static void align(SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ == 0) a = widened(a, b.nvars_);
    }

    std::size_t nvars_ = 0;
    std::map<Exponents, C> terms_;
};

// Real-coordinate polynomials on H^n: 4n variables ordered
// t_1, x_1, y_1, z_1, ..., t_n, x_n, y_n, z_n (0-indexed slots 4a..4a+3).
using RPoly = SparsePoly<Rational>;

// Complex-coordinate polynomials: 2m variables for m complex coordinates,
// slots 0..m-1 holding z_1..z_m and slots m..2m-1 their conjugates.
// On H^n, m = 2n and the chart ties the two pictures together per
// quaternionic coordinate a (0-indexed):
//   z_{2a+1} = t_a + i x_a,   z_{2a+2} = y_a - i z_a   (1-indexed z's)
// so that q_a = z_{2a+1} + j z_{2a+2}.
using CPoly = SparsePoly<CRational>;

inline std::size_t cpoly_nz(const CPoly& p) { return p.nvars() / 2; }
CPoly cpoly_z(std::size_t m, std::size_t k);     // z_{k+1}
CPoly cpoly_zbar(std::size_t m, std::size_t k);  // conj(z_{k+1})

// swaps z <-> zbar exponents and conjugates coefficients; as a function this
// is pointwise complex conjugation
CPoly conj_cpoly(const CPoly& p);
bool is_real_valued(const CPoly& p);

CPoly d_z(const CPoly& p, std::size_t k);
CPoly d_zbar(const CPoly& p, std::size_t k);

// real coordinate slot r (0..4n-1) written in the complex chart
CPoly real_coordinate_in_chart(std::size_t n, std::size_t r);

// rewrites a real-coordinate polynomial on H^n in the complex chart
CPoly cpoly_from_rpoly(const RPoly& p);

// complex coordinates of a quaternionic point under the chart
std::vector<CRational> complex_coords(const std::vector<Quaternion>& q);
std::vector<std::complex<double>> complex_coords_d(const std::vector<BasicQuaternion<double>>& q);

// geometric evaluation: the conjugate slots take conjugated values
CRational eval_cpoly(const CPoly& p, const std::vector<CRational>& z);
std::complex<double> eval_cpoly_d(const CPoly& p, const std::vector<std::complex<double>>& z);
Rational eval_rpoly(const RPoly& p, const std::vector<Rational>& x);
double eval_rpoly_d(const RPoly& p, const std::vector<double>& x);

std::string format_cpoly(const CPoly& p);
std::string format_rpoly(const RPoly& p);

}  // namespace qpt
