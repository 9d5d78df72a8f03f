#include "qpt/cones.hpp"

#include "qpt/simplex.hpp"

namespace qpt {

namespace {

CRational constant_of(const CPoly& p) {
    if (!p.is_constant()) throw std::logic_error("cone arithmetic met a non-constant coefficient");
    return p.constant_term();
}

// increasing letter words of one length over dz_1..dz_m
void holomorphic_words(std::size_t m, std::size_t len, std::vector<Form::Word>& out) {
    Form::Word w(len);
    auto rec = [&](auto&& self, std::size_t pos, int next) -> void {
        if (pos == len) {
            out.push_back(w);
            return;
        }
        for (int l = next; l + static_cast<int>(len - pos) <= static_cast<int>(m); ++l) {
            w[pos] = l;
            self(self, pos + 1, l + 1);
        }
    };
    rec(rec, 0, 0);
}

std::string describe(std::size_t count, const char* what) {
    return std::to_string(count) + " " + what;
}

}  // namespace

ConstForm2k const_form(Form f, std::size_t n, std::optional<std::size_t> k_hint) {
    if (f.m() != 2 * n) throw std::invalid_argument("const_form: chart size mismatch");
    if (!is_constant_form(f)) throw std::invalid_argument("const_form: coefficients must be constant");
    if (!is_j_real(f)) throw std::invalid_argument("const_form: form is not J-real");
    ConstForm2k r{std::move(f), 0, n};
    if (r.form.is_zero()) {
        if (!k_hint) throw std::invalid_argument("const_form: zero form needs an explicit degree");
        r.k = *k_hint;
    } else {
        auto bd = bidegree(r.form);
        if (!bd || bd->second != 0 || bd->first % 2 != 0)
            throw std::invalid_argument("const_form: need pure bidegree (2k, 0)");
        r.k = static_cast<std::size_t>(bd->first) / 2;
        if (k_hint && *k_hint != r.k) throw std::invalid_argument("const_form: degree hint mismatch");
    }
    if (r.k > n) throw std::invalid_argument("const_form: degree exceeds the chart");
    return r;
}

ConstForm2k pullback_generator(const QuaternionMatrix& map, std::size_t n) {
    const std::size_t k = map.rows(), m = 2 * n;
    if (map.cols() != n) throw std::invalid_argument("pullback_generator: map must have n columns");
    if (k > n) throw std::invalid_argument("pullback_generator: map must have at most n rows");

    Form acc = Form::function(CPoly(2 * m, CRational(1)));
    for (std::size_t b = 0; b < k; ++b) {
        // the quaternion entry c = gamma + j delta acts by q -> c q, which on
        // the holomorphic chart pair (odd, even) of slot a reads
        //   odd' = gamma odd - conj(delta) even, even' = delta odd + conj(gamma) even
        Form odd(m), even(m);
        for (std::size_t a = 0; a < n; ++a) {
            const Quaternion& c = map(b, a);
            const CRational gamma(c.t, c.x), delta(c.y, -c.z);
            odd += gamma * Form::covector(m, static_cast<int>(2 * a));
            odd += (-delta.conj()) * Form::covector(m, static_cast<int>(2 * a + 1));
            even += delta * Form::covector(m, static_cast<int>(2 * a));
            even += gamma.conj() * Form::covector(m, static_cast<int>(2 * a + 1));
        }
        acc = wedge(acc, wedge(odd, even));
    }
    return {std::move(acc), k, n};
}

std::vector<ConstForm2k> strong_generators(std::size_t k, std::size_t n, std::size_t count,
                                           std::uint64_t seed) {
    if (k > n) throw std::invalid_argument("strong_generators: k exceeds n");
    Rng rng(seed);
    std::vector<ConstForm2k> gens;
    gens.reserve(count);
    for (std::size_t g = 0; g < count; ++g) {
        QuaternionMatrix map(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                map(i, j) = {rng.small_rational(), rng.small_rational(), rng.small_rational(),
                             rng.small_rational()};
        gens.push_back(pullback_generator(map, n));
    }
    return gens;
}

Rational top_ratio(const Form& f) {
    CRational c = constant_of(top_coefficient(f));
    if (c.im != 0) throw std::logic_error("top_ratio: top coefficient is not real");
    return c.re;
}

ConeCertificate is_weakly_positive_2form(const ConstForm2k& eta) {
    if (eta.k != 1) throw std::invalid_argument("is_weakly_positive_2form: degree-two forms only");
    if (!is_j_real(eta.form)) throw std::invalid_argument("is_weakly_positive_2form: non-real form");

    PositivityCertificate pc = positivity(t_map(eta.form));
    ConeCertificate r;
    if (pc.verdict == Definiteness::Indefinite) {
        r.verdict = ConeVerdict::NonMember;
        r.vector_witness = pc.witness;
        r.detail = "paired matrix indefinite, witness value " + format_rational(*pc.witness_value);
    } else {
        r.verdict = ConeVerdict::Member;
        r.detail = pc.verdict == Definiteness::PositiveDefinite ? "paired matrix positive definite"
                                                                : "paired matrix on the cone boundary";
    }
    return r;
}

ConeCertificate weak_positive_test(const ConstForm2k& eta, std::size_t budget, std::uint64_t seed) {
    ConeCertificate r;
    if (eta.form.is_zero()) {
        r.verdict = ConeVerdict::Member;
        r.detail = "zero form, boundary of every cone";
        return r;
    }
    std::optional<Rational> min_ratio;
    auto gens = strong_generators(eta.n - eta.k, eta.n, budget, seed);
    for (auto& zeta : gens) {
        Rational ratio = top_ratio(wedge(eta.form, zeta.form));
        if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
        if (ratio < 0) {
            r.verdict = ConeVerdict::NonMember;
            r.refuter = std::move(zeta.form);
            r.pairing = ratio;
            r.detail = "negative pairing against a strongly positive complement";
            return r;
        }
    }
    r.verdict = ConeVerdict::Unknown;
    r.pairing = min_ratio;
    r.detail = "no refutation among " + describe(budget, "sampled complements");
    return r;
}

ConeCertificate strong_positive_lp(const ConstForm2k& eta, std::size_t budget, std::uint64_t seed) {
    auto gens = strong_generators(eta.k, eta.n, budget, seed);

    std::vector<Form::Word> words;
    holomorphic_words(2 * eta.n, 2 * eta.k, words);
    Matrix<Rational> a(2 * words.size(), gens.size());
    std::vector<Rational> b(2 * words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        CRational target = constant_of(eta.form.coefficient(words[w]));
        b[2 * w] = target.re;
        b[2 * w + 1] = target.im;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            CRational c = constant_of(gens[g].form.coefficient(words[w]));
            a(2 * w, g) = c.re;
            a(2 * w + 1, g) = c.im;
        }
    }

    const bool exact = budget <= 64;
    FeasibilityResult fr = exact ? feasible_point_exact(a, b) : feasible_point_float(a, b);

    ConeCertificate r;
    if (!fr.feasible) {
        r.verdict = ConeVerdict::Unknown;
        r.detail = "no conic combination over " + describe(budget, "sampled generators") +
                   (fr.note.empty() ? "" : " (" + fr.note + ")");
        return r;
    }
    Form recon(2 * eta.n);
    for (std::size_t g = 0; g < gens.size(); ++g)
        if (fr.x[g] != 0) recon += CRational(fr.x[g]) * gens[g].form;
    if (recon != eta.form) throw std::logic_error("strong_positive_lp: weights failed re-verification");
    r.verdict = ConeVerdict::Member;
    r.weights = std::move(fr.x);
    r.detail = exact ? "rational phase-1 over " + describe(budget, "generators")
                     : "float phase-1 with exact refinement over " + describe(budget, "generators");
    return r;
}

}  // namespace qpt
