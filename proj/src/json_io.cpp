#include "qpt/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qpt {

namespace {

using Json = nlohmann::ordered_json;

Json json_doubles(const std::vector<double>& xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(x);
    return a;
}

Rational rational_of(const Json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw std::invalid_argument(std::string(what) + ": expected an integer or a rational string");
}

std::string dumped(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_mass_report(const MassReport& r) {
    Json j;
    j["mass"] = r.mass;
    j["sup_product"] = r.sup_product;
    j["ratio"] = r.ratio;
    j["finite_difference"] = r.finite_difference;
    return dumped(j);
}

std::string json_weak_limit(const WeakLimitReport& r) {
    Json j;
    Json recs = Json::array();
    for (const auto& rec : r.records) {
        Json e;
        e["eps"] = rec.eps;
        e["pairing"] = rec.pairing;
        e["error_estimate"] = rec.error_estimate;
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    j["extrapolated"] = r.extrapolated;
    j["rate"] = r.rate;
    return dumped(j);
}

std::string csv_weak_limit(const WeakLimitReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : r.records)
        rows.push_back({format_double17(rec.eps), format_double17(rec.pairing),
                        format_double17(rec.error_estimate)});
    return csv_table({"eps", "pairing", "error_estimate"}, rows);
}

std::string json_psh_verdict(const PshVerdict& v) {
    Json j;
    switch (v.status) {
        case PshStatus::StrictlyPsh: j["status"] = "strictly-psh"; break;
        case PshStatus::Psh: j["status"] = "psh"; break;
        case PshStatus::NotPsh: j["status"] = "not-psh"; break;
        default: j["status"] = "inconclusive"; break;
    }
    j["worst"] = v.worst;
    j["witness_point"] = json_doubles(v.witness_point);
    j["detail"] = v.detail;
    return dumped(j);
}

std::string json_cone_certificate(const ConeCertificate& c) {
    Json j;
    switch (c.verdict) {
        case ConeVerdict::Member: j["verdict"] = "member"; break;
        case ConeVerdict::NonMember: j["verdict"] = "non-member"; break;
        default: j["verdict"] = "unknown"; break;
    }
    if (!c.weights.empty()) {
        Json w = Json::array();
        for (const auto& x : c.weights) w.push_back(format_rational(x));
        j["weights"] = std::move(w);
    }
    if (c.refuter) j["refuter"] = format_form(*c.refuter);
    if (c.pairing) j["pairing"] = format_rational(*c.pairing);
    if (c.vector_witness) {
        Json vw = Json::array();
        for (const auto& q : *c.vector_witness)
            vw.push_back(Json::array({format_rational(q.t), format_rational(q.x),
                                      format_rational(q.y), format_rational(q.z)}));
        j["vector_witness"] = std::move(vw);
    }
    j["detail"] = c.detail;
    return dumped(j);
}

std::string json_identity_report(const IdentitySuiteReport& r, bool timings) {
    Json j;
    j["all_pass"] = r.all_pass;
    Json blocks = Json::array();
    for (const auto& rec : r.records) {
        Json b;
        b["name"] = rec.name;
        b["description"] = rec.description;
        b["pass"] = rec.pass;
        if (!rec.counterexample.empty()) b["counterexample"] = rec.counterexample;
        if (timings) b["seconds"] = rec.seconds;
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return dumped(j);
}

std::string json_hermitian_report(const HermitianReport& r) {
    Json j;
    j["hermitian"] = r.hermitian;
    if (r.witness) {
        Json w;
        w["structure"] = r.witness->l == Structure::I   ? "I"
                         : r.witness->l == Structure::J ? "J"
                                                        : "K";
        w["a"] = r.witness->a;
        w["b"] = r.witness->b;
        w["point"] = json_doubles(r.witness->point);
        w["defect"] = r.witness->defect;
        j["witness"] = std::move(w);
    }
    return dumped(j);
}

std::string json_hkt_check(const HktCheck& c) {
    Json j;
    j["hkt"] = c.hkt;
    j["omega"] = format_form(c.omega);
    j["residual"] = format_form(c.residual);
    return dumped(j);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv_table: row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
    return out.str();
}

HyperhermitianMatrix parse_hherm_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("matrix: invalid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected a row array");
    const std::size_t n = j.size();
    QuaternionMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix: row " + std::to_string(r) + " must have " +
                                        std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) {
            const Json& e = row[c];
            if (e.is_array()) {
                if (e.size() != 4)
                    throw std::invalid_argument("matrix: quaternion entries need 4 components");
                m(r, c) = Quaternion(rational_of(e[0], "matrix"), rational_of(e[1], "matrix"),
                                     rational_of(e[2], "matrix"), rational_of(e[3], "matrix"));
            } else {
                m(r, c) = Quaternion(rational_of(e, "matrix"));
            }
        }
    }
    return HyperhermitianMatrix(std::move(m));
}

Form parse_form_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("form: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("terms"))
        throw std::invalid_argument("form: expected {\"m\": ..., \"terms\": [...]}");
    const std::size_t m = j["m"].get<std::size_t>();
    if (m == 0 || m % 2 != 0) throw std::invalid_argument("form: chart size must be even");
    Form f(m);
    for (const Json& term : j["terms"]) {
        if (!term.is_object() || !term.contains("word"))
            throw std::invalid_argument("form: each term needs a word");
        const CRational coeff(term.contains("re") ? rational_of(term["re"], "form") : Rational(0),
                              term.contains("im") ? rational_of(term["im"], "form") : Rational(0));
        Form piece = Form::function(CPoly(2 * m, coeff));
        for (const Json& lj : term["word"]) {
            const int letter = lj.get<int>();
            if (letter < 0 || letter >= static_cast<int>(2 * m))
                throw std::invalid_argument("form: letter out of range");
            piece = wedge(piece, Form::covector(m, letter));
        }
        f += piece;
    }
    return f;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("list: empty entry");
        const auto b = tok.find_last_not_of(" \t");
        out.push_back(parse_rational(tok.substr(a, b - a + 1)));
    }
    if (out.empty()) throw std::invalid_argument("list: no entries");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("list: no entries");
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qpt
