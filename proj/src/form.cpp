#include "qpt/form.hpp"

#include "qpt/matrix.hpp"

namespace qpt {

namespace {

// insertion sort returning the permutation sign, 0 on a repeated letter
int sort_word(std::vector<int>& w) {
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i; j > 0 && w[j] <= w[j - 1]; --j) {
            if (w[j] == w[j - 1]) return 0;
            std::swap(w[j], w[j - 1]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

Form Form::function(CPoly f) {
    if (f.nvars() % 2 != 0) throw std::invalid_argument("Form::function: odd variable count");
    Form r(f.nvars() / 2);
    r.add_term({}, std::move(f));
    return r;
}

Form Form::covector(std::size_t m, int letter) {
    Form r(m);
    r.add_term({letter}, CPoly(2 * m, CRational(1)));
    return r;
}

CPoly Form::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CPoly(2 * m_) : it->second;
}

void Form::add_term(Word w, CPoly c) {
    if (c.nvars() != 2 * m_) throw std::invalid_argument("Form::add_term: coefficient width mismatch");
    for (int l : w)
        if (l < 0 || l >= static_cast<int>(2 * m_))
            throw std::invalid_argument("Form::add_term: letter out of range");
    int sign = sort_word(w);
    if (sign == 0 || c.is_zero()) return;
    if (sign < 0) c = CRational(-1) * c;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Form::check(const Form& o) const {
    if (m_ != o.m_) throw std::invalid_argument("forms live on different spaces");
}

Form& Form::operator+=(const Form& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, CRational(-1) * c);
    return *this;
}

Form Form::operator-() const {
    Form r(m_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, CRational(-1) * c);
    return r;
}

Form operator*(const CRational& s, const Form& f) {
    Form r(f.m_);
    for (const auto& [w, c] : f.terms_) r.add_term(w, s * c);
    return r;
}

Form operator*(const CPoly& s, const Form& f) {
    Form r(f.m_);
    for (const auto& [w, c] : f.terms_) r.add_term(w, s * c);
    return r;
}

Form wedge(const Form& a, const Form& b) {
    if (a.m() != b.m()) throw std::invalid_argument("wedge: forms live on different spaces");
    Form r(a.m());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Form::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(std::move(w), ca * cb);
        }
    return r;
}

Form exterior_d(const Form& f) {
    std::size_t m = f.m();
    Form r(m);
    for (const auto& [w, c] : f.terms())
        for (std::size_t v = 0; v < 2 * m; ++v) {
            CPoly dc = c.derivative(v);
            if (dc.is_zero()) continue;
            Form::Word dw;
            dw.reserve(w.size() + 1);
            dw.push_back(static_cast<int>(v));
            dw.insert(dw.end(), w.begin(), w.end());
            r.add_term(std::move(dw), std::move(dc));
        }
    return r;
}

namespace {

Form d_halved(const Form& f, bool conjugate_half) {
    std::size_t m = f.m();
    Form r(m);
    for (const auto& [w, c] : f.terms()) {
        std::size_t lo = conjugate_half ? m : 0;
        for (std::size_t k = 0; k < m; ++k) {
            CPoly dc = c.derivative(lo + k);
            if (dc.is_zero()) continue;
            Form::Word dw;
            dw.reserve(w.size() + 1);
            dw.push_back(static_cast<int>(lo + k));
            dw.insert(dw.end(), w.begin(), w.end());
            r.add_term(std::move(dw), std::move(dc));
        }
    }
    return r;
}

}  // namespace

Form del(const Form& f) { return d_halved(f, false); }
Form delbar(const Form& f) { return d_halved(f, true); }

Form conj_form(const Form& f) {
    std::size_t m = f.m();
    Form r(m);
    for (const auto& [w, c] : f.terms()) {
        Form::Word cw;
        cw.reserve(w.size());
        for (int l : w) cw.push_back(l < static_cast<int>(m) ? l + static_cast<int>(m)
                                                             : l - static_cast<int>(m));
        r.add_term(std::move(cw), conj_cpoly(c));
    }
    return r;
}

bool is_homogeneous(const Form& f, std::size_t degree) {
    for (const auto& [w, c] : f.terms())
        if (w.size() != degree) return false;
    return true;
}

std::optional<std::pair<int, int>> bidegree(const Form& f) {
    std::optional<std::pair<int, int>> bd;
    std::size_t m = f.m();
    for (const auto& [w, c] : f.terms()) {
        int p = 0, q = 0;
        for (int l : w) (l < static_cast<int>(m) ? p : q)++;
        if (!bd)
            bd = {p, q};
        else if (*bd != std::make_pair(p, q))
            return std::nullopt;
    }
    return bd;
}

CPoly top_coefficient(const Form& f) {
    std::size_t m = f.m();
    Form::Word top(m);
    for (std::size_t k = 0; k < m; ++k) top[k] = static_cast<int>(k);
    CPoly r(2 * m);
    for (const auto& [w, c] : f.terms()) {
        if (w != top)
            throw std::invalid_argument("top_coefficient: form has a component off the top line");
        r += c;
    }
    return r;
}

CRational covector_value(std::size_t m, int letter, const std::vector<Quaternion>& x) {
    if (x.size() * 2 != m) throw std::invalid_argument("covector_value: dimension mismatch");
    bool bar = letter >= static_cast<int>(m);
    int k = bar ? letter - static_cast<int>(m) : letter;
    const Quaternion& q = x[k / 2];
    // dz_{2a+1} = dt_a + i dx_a, dz_{2a+2} = dy_a - i dz_a on the chart
    CRational v = (k % 2 == 0) ? CRational(q.t, q.x) : CRational(q.y, -q.z);
    return bar ? v.conj() : v;
}

CRational eval_form_at(const Form& f, const std::vector<Quaternion>& point,
                       const std::vector<std::vector<Quaternion>>& vectors) {
    std::size_t m = f.m();
    std::vector<CRational> z = complex_coords(point);
    CRational total;
    for (const auto& [w, c] : f.terms()) {
        if (w.size() != vectors.size()) continue;
        std::size_t r = w.size();
        // det of the evaluation matrix letter_i(vector_j)
        Matrix<CRational> mat(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) mat(i, j) = covector_value(m, w[i], vectors[j]);
        CRational det = r == 0 ? CRational(1) : determinant(mat);
        total += eval_cpoly(c, z) * det;
    }
    return total;
}

std::string format_form(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : f.terms()) {
        std::string word;
        for (int l : w) {
            if (!word.empty()) word += "^";
            bool bar = l >= static_cast<int>(f.m());
            int k = bar ? l - static_cast<int>(f.m()) : l;
            word += (bar ? "dzb" : "dz") + std::to_string(k + 1);
        }
        std::string coeff = format_cpoly(c);
        bool simple = coeff.find_first_of("+-", 1) == std::string::npos;
        bool neg = simple && coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        std::string piece;
        if (word.empty())
            piece = simple ? coeff : "(" + coeff + ")";
        else if (simple && coeff == "1")
            piece = word;
        else if (simple)
            piece = coeff + "*" + word;
        else
            piece = "(" + coeff + ")*" + word;
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace qpt
