#pragma once

#include <map>
#include <utility>

#include "qpt/poly.hpp"

namespace qpt {

// Exterior forms on H^n in the complex chart, m = 2n complex coordinates.
// Letters index the covector basis: 0..m-1 are dz_1..dz_m, m..2m-1 their
// conjugates. A word is a strictly increasing letter vector; coefficients are
// polynomials in the same chart. Zero coefficients are pruned.
class Form {
  public:
    using Word = std::vector<int>;

    explicit Form(std::size_t m) : m_(m) {}
    static Form function(CPoly f);
    static Form covector(std::size_t m, int letter);

    std::size_t m() const { return m_; }
    std::size_t nletters() const { return 2 * m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, CPoly>& terms() const { return terms_; }
    CPoly coefficient(const Word& w) const;

    // sorts the word, applies the permutation sign, drops repeated letters
    void add_term(Word w, CPoly c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form operator-() const;
    friend Form operator*(const CRational& s, const Form& f);
    friend Form operator*(const CPoly& s, const Form& f);
    friend bool operator==(const Form& a, const Form& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  private:
    void check(const Form& o) const;

    std::size_t m_;
    std::map<Word, CPoly> terms_;
};

Form wedge(const Form& a, const Form& b);

// exterior derivative and its bidegree pieces d = del + delbar
Form exterior_d(const Form& f);
Form del(const Form& f);
Form delbar(const Form& f);

// pointwise complex conjugation (letters swap dz <-> dzbar)
Form conj_form(const Form& f);

// all words of one length, or the homogeneous bidegree if there is one
bool is_homogeneous(const Form& f, std::size_t degree);
std::optional<std::pair<int, int>> bidegree(const Form& f);

// coefficient of dz_1 ^ ... ^ dz_2n; rejects forms with any other component
CPoly top_coefficient(const Form& f);

// value of the covector letter on a tangent vector under the chart
CRational covector_value(std::size_t m, int letter, const std::vector<Quaternion>& x);

// pointwise evaluation of a degree-r form on r constant tangent vectors
CRational eval_form_at(const Form& f, const std::vector<Quaternion>& point,
                       const std::vector<std::vector<Quaternion>>& vectors);

std::string format_form(const Form& f);

}  // namespace qpt
