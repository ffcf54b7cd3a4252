#include "stg/structure_file.hpp"

#include <fstream>
#include <sstream>

namespace stg {

using nlohmann::json;

namespace {

int coframe_index(const std::string& name, int dim) {
    if (name.size() < 2 || name[0] != 'e') throw ParseError("bad coframe name '" + name + "'");
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        char c = name[i];
        if (c < '0' || c > '9') throw ParseError("bad coframe name '" + name + "'");
        idx = idx * 10 + (c - '0');
        if (idx > 64) throw ParseError("coframe index too large in '" + name + "'");
    }
    if (idx < 1 || idx > dim)
        throw ParseError("coframe name '" + name + "' out of range for dimension " + std::to_string(dim));
    return idx;
}

Rational rational_from_json(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("expected a rational literal (string \"p/q\" or integer)");
}

std::string require_string(const json& v, const char* what) {
    if (!v.is_string()) throw ParseError(std::string("expected a string for ") + what);
    return v.get<std::string>();
}

LieAlgebra algebra_from_json(const json& doc, int dim) {
    std::vector<KForm> d(dim, KForm(dim, 2));
    if (doc.contains("d")) {
        const json& table = doc.at("d");
        if (!table.is_object()) throw ParseError("'d' must be an object of coframe tables");
        for (const auto& [key, terms] : table.items()) {
            int i = coframe_index(key, dim);
            if (!terms.is_array()) throw ParseError("d table for " + key + " must be an array");
            for (const json& t : terms) {
                if (!t.is_array() || t.size() != 3)
                    throw ParseError("d term must be [coeff, name, name]");
                Rational c = rational_from_json(t[0]);
                int a = coframe_index(require_string(t[1], "d term"), dim);
                int b = coframe_index(require_string(t[2], "d term"), dim);
                if (a == b) throw ParseError("degenerate wedge " + key + ": e" + std::to_string(a) +
                                             "^e" + std::to_string(b));
                int sign = mindex::merge_sign(Mask(1) << (a - 1), Mask(1) << (b - 1));
                d[i - 1].add(mindex::from_indices({a, b}), sign > 0 ? c : -c);
            }
        }
    }
    return LieAlgebra(dim, std::move(d));
}

Metric metric_from_json(const json& doc, int dim) {
    if (!doc.contains("metric")) return Metric::orthonormal(dim);
    const json& m = doc.at("metric");
    if (m.is_string()) {
        if (m.get<std::string>() != "orthonormal")
            throw ParseError("metric must be \"orthonormal\" or a matrix");
        return Metric::orthonormal(dim);
    }
    if (!m.is_array() || static_cast<int>(m.size()) != dim)
        throw ParseError("metric matrix must have one row per dimension");
    Mat gm(dim);
    for (int i = 1; i <= dim; ++i) {
        const json& row = m[i - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("metric row has wrong length");
        for (int j = 1; j <= dim; ++j) gm.at(i, j) = rational_from_json(row[j - 1]);
    }
    return Metric(std::move(gm));
}

std::vector<PhiRow> phi_rows_from_json(const json& doc, int dim) {
    std::vector<PhiRow> rows;
    if (!doc.contains("phi")) return rows;
    const json& phi = doc.at("phi");
    if (!phi.is_array()) throw ParseError("'phi' must be an array of [name, coeff, name] rows");
    for (const json& r : phi) {
        if (!r.is_array() || r.size() != 3) throw ParseError("phi row must be [name, coeff, name]");
        int i = coframe_index(require_string(r[0], "phi row"), dim);
        Rational c = rational_from_json(r[1]);
        int j = coframe_index(require_string(r[2], "phi row"), dim);
        rows.push_back({i, c, j});
    }
    return rows;
}

Vector xi_from_json(const json& v, int dim) {
    if (v.is_string()) return Vector::basis(dim, coframe_index(v.get<std::string>(), dim));
    if (v.is_array()) {
        if (static_cast<int>(v.size()) != dim) throw ParseError("xi vector has wrong length");
        Vector out(dim);
        for (int i = 1; i <= dim; ++i) out[i] = rational_from_json(v[i - 1]);
        return out;
    }
    throw ParseError("xi must be a coframe-dual name or a vector");
}

json rational_json(const Rational& r) {
    return r.str();
}

} // namespace

ParsedStructure parse_structure_text(const std::string& text, bool eager_validate) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("json parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("structure file must be a json object");
    if (doc.contains("format") && doc.at("format") != 1)
        throw ParseError("unsupported structure file format");
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer())
        throw ParseError("missing integer 'dim'");
    int dim = doc.at("dim").get<int>();
    if (dim < 1 || dim > 32) throw ParseError("dimension out of supported range");

    LieAlgebra L = algebra_from_json(doc, dim);
    if (eager_validate && !L.jacobi_ok())
        throw InvariantError("structure table fails the Jacobi identity (d^2 != 0)");
    Metric g = metric_from_json(doc, dim);
    std::vector<PhiRow> rows = phi_rows_from_json(doc, dim);

    ParsedStructure out;
    if (doc.contains("label")) out.label = require_string(doc.at("label"), "label");

    if (doc.contains("xi")) {
        Vector xi = xi_from_json(doc.at("xi"), dim);
        Endo phi = complete_phi(L, g, xi, rows);
        ACMStructure s = make_acm(std::move(L), std::move(g), std::move(xi), std::move(phi));
        ValidationReport rep = validate(s);
        if (eager_validate && !rep.ok()) {
            for (const auto& c : rep.checks)
                if (!c.ok)
                    throw InvariantError("structure invariant failed: " + c.name +
                                         (c.detail.empty() ? "" : " (" + c.detail + ")"));
        }
        out.acm = std::move(s);
    } else {
        Endo j = complete_phi(L, g, Vector(dim), rows);
        HermitianStructure h = make_hermitian(std::move(L), std::move(g), std::move(j));
        ValidationReport rep = hermitian_validate(h);
        if (eager_validate && !rep.ok()) {
            for (const auto& c : rep.checks)
                if (!c.ok) throw InvariantError("hermitian invariant failed: " + c.name);
        }
        out.hermitian = std::move(h);
    }
    return out;
}

ParsedStructure parse_structure_file(const std::string& path, bool eager_validate) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_structure_text(ss.str(), eager_validate);
}

namespace {

json d_table_json(const LieAlgebra& L) {
    json table = json::object();
    for (int i = 1; i <= L.dim(); ++i) {
        const KForm& f = L.d_coframe(i);
        if (f.is_zero()) continue;
        json terms = json::array();
        for (const auto& [m, c] : f.terms()) {
            auto idx = mindex::indices(m);
            terms.push_back({rational_json(c), "e" + std::to_string(idx[0]), "e" + std::to_string(idx[1])});
        }
        table["e" + std::to_string(i)] = std::move(terms);
    }
    return table;
}

json metric_json(const Metric& g) {
    if (g.is_orthonormal()) return "orthonormal";
    return matrix_to_json(g.mat());
}

json phi_json(const Endo& phi) {
    json rows = json::array();
    int n = phi.dim();
    for (int i = 1; i <= n; ++i) {
        bool any = false;
        for (int j = 1; j <= n; ++j) {
            if (phi.at(i, j).is_zero()) continue;
            rows.push_back({"e" + std::to_string(i), rational_json(phi.at(i, j)), "e" + std::to_string(j)});
            any = true;
        }
        if (!any)
            rows.push_back({"e" + std::to_string(i), "0", "e" + std::to_string(i)});
    }
    return rows;
}

json xi_json(const Vector& xi) {
    int hits = 0, where = 0;
    for (int i = 1; i <= xi.dim(); ++i)
        if (!xi[i].is_zero()) {
            ++hits;
            where = i;
        }
    if (hits == 1 && xi[where] == Rational(1)) return "e" + std::to_string(where);
    return vector_to_json(xi);
}

} // namespace

json structure_to_json(const ACMStructure& s, const std::string& label) {
    json doc;
    doc["format"] = 1;
    doc["dim"] = s.dim();
    doc["d"] = d_table_json(s.L);
    doc["metric"] = metric_json(s.g);
    doc["xi"] = xi_json(s.xi);
    doc["phi"] = phi_json(s.phi);
    if (!label.empty()) doc["label"] = label;
    return doc;
}

json structure_to_json(const HermitianStructure& h, const std::string& label) {
    json doc;
    doc["format"] = 1;
    doc["dim"] = h.dim();
    doc["d"] = d_table_json(h.L);
    doc["metric"] = metric_json(h.g);
    doc["phi"] = phi_json(h.J);
    if (!label.empty()) doc["label"] = label;
    return doc;
}

KForm parse_form_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("json parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("terms"))
        throw ParseError("form file needs 'dim' and 'terms'");
    int dim = doc.at("dim").get<int>();
    if (dim < 1 || dim > 32) throw ParseError("dimension out of supported range");
    int degree = doc.contains("degree") ? doc.at("degree").get<int>() : 2;
    KForm f(dim, degree);
    for (const json& t : doc.at("terms")) {
        if (!t.is_array() || static_cast<int>(t.size()) != degree + 1)
            throw ParseError("form term must be [coeff, name x degree]");
        Rational c = rational_from_json(t[0]);
        std::vector<int> idx;
        for (int p = 1; p <= degree; ++p) idx.push_back(coframe_index(require_string(t[p], "form term"), dim));
        // normalize to the canonical ascending monomial
        KForm mono(dim, 0);
        mono.add(0, c);
        for (int i : idx) mono = wedge(mono, KForm::monomial(dim, {i}));
        f += mono;
    }
    return f;
}

KForm parse_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_form_text(ss.str());
}

json form_file_json(const KForm& f) {
    json doc;
    doc["format"] = 1;
    doc["dim"] = f.dim();
    doc["degree"] = f.degree();
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json t = json::array();
        t.push_back(rational_json(c));
        for (int i : mindex::indices(m)) t.push_back("e" + std::to_string(i));
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

json form_to_json(const KForm& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json idx = json::array();
        for (int i : mindex::indices(m)) idx.push_back(i);
        terms.push_back({rational_json(c), std::move(idx)});
    }
    return terms;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (int i = 1; i <= v.dim(); ++i) out.push_back(rational_json(v[i]));
    return out;
}

json matrix_to_json(const Mat& m) {
    json out = json::array();
    for (int i = 1; i <= m.dim(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.dim(); ++j) row.push_back(rational_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace stg
