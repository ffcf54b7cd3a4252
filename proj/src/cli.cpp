#include "stg/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "stg/gallery.hpp"
#include "stg/structure_file.hpp"
#include "stg/warped.hpp"

namespace stg::cli {

using nlohmann::json;

namespace {

// --- small parsers ------------------------------------------------------

Rational parse_rational_arg(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError&) {
        throw CLI::ValidationError("expected a rational 'p/q', got '" + text + "'");
    }
}

// Polynomials in r: "1", "r", "2*r", "r^2", "1+r", "3/2*r^2 - r + 1".
Poly parse_poly(const std::string& text) {
    std::vector<Rational> coeff;
    auto bump = [&coeff](int pow, const Rational& c) {
        if (static_cast<int>(coeff.size()) <= pow) coeff.resize(pow + 1);
        coeff[pow] += c;
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i == text.size() || (text[i] != '+' && text[i] != '-'))
                throw ParseError("expected '+' or '-' in polynomial");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        // coefficient
        Rational c(1);
        bool saw_coeff = false;
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        if (i > start) {
            c = Rational::parse(text.substr(start, i - start));
            saw_coeff = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int pow = 0;
        if (i < text.size() && text[i] == 'r') {
            ++i;
            pow = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t es = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == es) throw ParseError("missing exponent in polynomial");
                pow = std::stoi(text.substr(es, i - es));
            }
        } else if (!saw_coeff) {
            throw ParseError("expected a term in polynomial at position " + std::to_string(i));
        }
        bump(pow, sign > 0 ? c : -c);
        skip_ws();
    }
    return Poly(std::move(coeff));
}

// --- output helpers -----------------------------------------------------

struct Output {
    std::ostream& os;
    bool as_json = false;
    json doc;

    void emit_text(const std::string& line) {
        if (!as_json) os << line << "\n";
    }
    void finish(const std::string& command) {
        if (as_json) {
            doc["format"] = 1;
            doc["command"] = command;
            os << doc.dump(2) << "\n";
        }
    }
};

std::string yesno(bool b) {
    return b ? "yes" : "no";
}

json wform_to_json(const WForm& w) {
    json a = json::array(), b = json::array();
    for (const auto& [m, c] : w.a_terms()) {
        json idx = json::array();
        for (int i : mindex::indices(m)) idx.push_back(i);
        a.push_back({c.str(), std::move(idx)});
    }
    for (const auto& [m, c] : w.b_terms()) {
        json idx = json::array();
        for (int i : mindex::indices(m)) idx.push_back(i);
        b.push_back({c.str(), std::move(idx)});
    }
    return json{{"a", std::move(a)}, {"dr_wedge", std::move(b)}};
}

json classification_json(const Classification& cls) {
    json out;
    out["primary"] = primary_class_name(cls.primary);
    if (cls.alpha) out["alpha"] = cls.alpha->str();
    out["sasaki"] = cls.is_sasaki();
    out["is_sst"] = cls.is_sst;
    out["is_balanced"] = cls.is_balanced;
    out["deta_decomposable"] = cls.deta_decomposable;
    out["is_normal"] = cls.is_normal;
    out["is_killing"] = cls.is_killing;
    return out;
}

std::string classification_line(const Classification& cls) {
    std::ostringstream os;
    os << primary_class_name(cls.primary);
    if (cls.alpha) os << " (alpha = " << *cls.alpha << (cls.is_sasaki() ? ", Sasaki" : "") << ")";
    os << "; d eta ^ d eta " << (cls.deta_decomposable ? "= 0" : "!= 0");
    os << "; " << (cls.is_sst ? "SST" : "not SST");
    os << "; " << (cls.is_balanced ? "balanced" : "not balanced");
    return os.str();
}

json connection_json(const Connection& conn) {
    json entries = json::array();
    int n = conn.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vector v = conn.nabla(i, j);
            if (v.is_zero()) continue;
            entries.push_back({{"i", i}, {"j", j}, {"value", vector_to_json(v)}});
        }
    return entries;
}

void print_connection(Output& out, const Connection& conn) {
    int n = conn.dim();
    bool any = false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vector v = conn.nabla(i, j);
            if (v.is_zero()) continue;
            out.emit_text("  nabla_E" + std::to_string(i) + " E" + std::to_string(j) + " = " + v.str());
            any = true;
        }
    if (!any) out.emit_text("  (all coefficients zero)");
}

// --- command bodies -----------------------------------------------------

struct Input {
    std::string file;
    std::string example;

    ParsedStructure load(bool eager_validate = true) const {
        if (!example.empty()) {
            ParsedStructure ps;
            ps.acm = build_example(example);
            ps.label = example;
            return ps;
        }
        return parse_structure_file(file, eager_validate);
    }

    ACMStructure load_acm() const {
        ParsedStructure ps = load();
        if (!ps.is_acm())
            throw PreconditionError("this command needs an almost contact metric structure (odd dim, xi)");
        return std::move(*ps.acm);
    }
};

// Returns false (exit 3 at the call site) instead of throwing, so the whole
// report is still printed for invalid structures.
bool cmd_validate(Output& out, const ParsedStructure& ps) {
    ValidationReport rep = ps.is_acm() ? validate(*ps.acm) : hermitian_validate(*ps.hermitian);
    json checks = json::array();
    for (const auto& c : rep.checks) {
        out.emit_text(std::string(c.ok ? "pass" : "FAIL") + "  " + c.name +
                      (c.detail.empty() ? "" : "  [" + c.detail + "]"));
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    out.doc["checks"] = std::move(checks);
    out.doc["ok"] = rep.ok();
    out.emit_text(rep.ok() ? "structure valid" : "structure INVALID");
    return rep.ok();
}

void cmd_classify(Output& out, const ACMStructure& s) {
    Classification cls = classify(s);
    out.emit_text(classification_line(cls));
    out.doc["classification"] = classification_json(cls);
}

void cmd_torsion(Output& out, const ACMStructure& s) {
    KForm c = torsion(s);
    KForm eta_deta = wedge(s.eta, s.L.d(s.eta));
    KForm dphi_f = d_phi(s, s.F);
    KForm dc = s.L.d(c);
    out.emit_text("c = " + c.str());
    out.emit_text("eta ^ d eta = " + eta_deta.str());
    out.emit_text("d^phi F = " + dphi_f.str());
    out.emit_text("dc = " + dc.str());
    out.doc["c"] = form_to_json(c);
    out.doc["eta_deta"] = form_to_json(eta_deta);
    out.doc["dphi_F"] = form_to_json(dphi_f);
    out.doc["dc"] = form_to_json(dc);
}

void cmd_connection(Output& out, const ACMStructure& s) {
    Connection conn = st_connection(s);
    out.emit_text("st connection (nonzero entries):");
    print_connection(out, conn);
    ParallelReport par = check_parallel(s, conn);
    out.emit_text("parallel: g " + yesno(par.nabla_g) + ", xi " + yesno(par.nabla_xi) + ", phi " +
                  yesno(par.nabla_phi) + ", torsion matches " + yesno(par.torsion_matches));
    out.doc["gamma"] = connection_json(conn);
    out.doc["parallel"] = {{"nabla_g", par.nabla_g},
                           {"nabla_xi", par.nabla_xi},
                           {"nabla_phi", par.nabla_phi},
                           {"torsion_matches", par.torsion_matches}};
}

void cmd_lee(Output& out, const ACMStructure& s) {
    KForm lee = lee_form(s);
    out.emit_text("lee form = " + lee.str());
    out.emit_text(std::string("balanced: ") + yesno(lee.is_zero()));
    out.doc["lee"] = form_to_json(lee);
    out.doc["balanced"] = lee.is_zero();
}

void cmd_field_eq(Output& out, const ACMStructure& s) {
    FieldEqReport rep = field_eq_report(s);
    out.emit_text("Ric = 0: " + yesno(rep.ricci_zero()));
    out.emit_text("d*c = " + rep.dstar_c.str());
    out.emit_text("dc = " + rep.dc.str());
    out.emit_text("flat: " + yesno(rep.flat));
    out.doc["ricci"] = matrix_to_json(rep.ricci);
    out.doc["ricci_zero"] = rep.ricci_zero();
    out.doc["dstar_c"] = form_to_json(rep.dstar_c);
    out.doc["dc"] = form_to_json(rep.dc);
    out.doc["flat"] = rep.flat;
}

void cmd_holonomy(Output& out, const ACMStructure& s) {
    HolonomyReport rep = hol_span(s);
    out.emit_text("curvature span dimension: " + std::to_string(rep.span_basis.size()));
    out.emit_text("kills xi: " + yesno(rep.kills_xi) + ", g-skew: " + yesno(rep.g_skew) +
                  ", commutes with phi: " + yesno(rep.commutes_phi));
    out.emit_text("contained in 1 x u(k): " + yesno(rep.contained_in_u()) +
                  ", phi-trace zero (su refinement): " + yesno(rep.phi_traceless));
    out.doc["span_dim"] = rep.span_basis.size();
    out.doc["kills_xi"] = rep.kills_xi;
    out.doc["g_skew"] = rep.g_skew;
    out.doc["commutes_phi"] = rep.commutes_phi;
    out.doc["phi_traceless"] = rep.phi_traceless;
    out.doc["contained_in_u"] = rep.contained_in_u();
    out.doc["contained_in_su"] = rep.contained_in_su();
}

void cmd_cylinder(Output& out, const ACMStructure& s) {
    HermitianStructure h = cylinder(s);
    KForm cj = kt_torsion(h);
    bool skt = h.L.d(cj).is_zero();
    KForm lee = kt_lee(h);
    bool lift_ok = cj == torsion(s).lifted(h.dim());
    out.emit_text("cylinder dimension: " + std::to_string(h.dim()));
    out.emit_text("kt torsion = " + cj.str());
    out.emit_text("SKT: " + yesno(skt));
    out.emit_text("kt lee form = " + lee.str());
    out.emit_text("torsion equals the lifted base torsion: " + yesno(lift_ok));
    out.doc["dim"] = h.dim();
    out.doc["kt_torsion"] = form_to_json(cj);
    out.doc["skt"] = skt;
    out.doc["kt_lee"] = form_to_json(lee);
    out.doc["matches_lifted_torsion"] = lift_ok;
}

std::string branch_name(WarpedBranch b) {
    switch (b) {
    case WarpedBranch::NotClosed: return "not-closed";
    case WarpedBranch::ConstantFactor: return "constant-factor";
    case WarpedBranch::LinearFactor: return "linear-factor";
    case WarpedBranch::ClosedUnlabeled: return "closed-unlabeled";
    }
    return "?";
}

void cmd_warp(Output& out, const ACMStructure& s, const Poly& f, const std::string& what) {
    RFun rf(f);
    WForm direct = warped_torsion_direct(s, rf);
    WForm formula = warped_torsion_formula(s, rf);
    WarpedReport rep = warped_skt_report(s, rf);
    out.emit_text("f = " + f.str());
    out.emit_text(what + " torsion = " + direct.str());
    out.emit_text("direct and closed-formula routes agree: " + yesno(direct == formula));
    out.emit_text(what + " torsion " + (rep.closed ? "closed" : "not closed"));
    bool show_alpha = rep.alpha && !rep.alpha->is_zero();
    out.emit_text("branch: " + branch_name(rep.branch) +
                  (show_alpha ? " (d eta = " + rep.alpha->str() + " F, lambda = " + rep.lambda->str() + ")" : ""));
    out.doc["f"] = f.str();
    out.doc["torsion"] = wform_to_json(direct);
    out.doc["routes_agree"] = direct == formula;
    out.doc["closed"] = rep.closed;
    out.doc["branch"] = branch_name(rep.branch);
    if (rep.alpha) {
        out.doc["alpha"] = rep.alpha->str();
        out.doc["lambda"] = rep.lambda->str();
    }
}

void emit_structure(Output& out, const ACMStructure& s, const std::string& label) {
    json doc = structure_to_json(s, label);
    if (!out.as_json) out.os << doc.dump(2) << "\n";
    out.doc["structure"] = std::move(doc);
}

void cmd_homothety(Output& out, const ACMStructure& s, const Rational& a) {
    ACMStructure t = homothety(s, a);
    out.emit_text("transversal homothety by a = " + a.str() + ":");
    emit_structure(out, t, "");
    Classification cls = classify(t);
    out.emit_text("class: " + classification_line(cls));
    out.doc["classification"] = classification_json(cls);
    out.doc["torsion"] = form_to_json(torsion(t));
}

void cmd_conformal(Output& out, const ACMStructure& s, const Rational& lam2) {
    ACMStructure t = conformal_const(s, lam2);
    out.emit_text("transversal conformal change by e^{2f} = " + lam2.str() + ":");
    emit_structure(out, t, "");
    Classification cls = classify(t);
    out.emit_text("class: " + classification_line(cls));
    out.doc["classification"] = classification_json(cls);
    out.doc["torsion"] = form_to_json(torsion(t));
}

void cmd_extend(Output& out, const ParsedStructure& ps, const std::string& sigma_file) {
    if (ps.is_acm())
        throw PreconditionError("extend needs a Hermitian input (even dimension, no xi)");
    KForm sigma = parse_form_file(sigma_file);
    if (sigma.dim() != ps.hermitian->dim())
        throw PreconditionError("sigma dimension does not match the structure");
    ACMStructure s = central_extension_st(*ps.hermitian, sigma);
    out.emit_text("central extension:");
    emit_structure(out, s, "");
    KForm c = torsion(s);
    out.emit_text("torsion = " + c.str());
    out.doc["torsion"] = form_to_json(c);
    Classification cls = classify(s);
    out.emit_text("class: " + classification_line(cls));
    out.doc["classification"] = classification_json(cls);
}

void cmd_torus_extend(Output& out, const ACMStructure& base, const std::string& sigma1_file,
                      const std::string& sigma2_file, const Rational& par_s, const Rational& par_t) {
    KForm sigma1 = parse_form_file(sigma1_file);
    KForm sigma2 = parse_form_file(sigma2_file);
    ACMStructure s = torus_extension_st(base, sigma1, sigma2, par_s, par_t);
    out.emit_text("torus extension with (s, t) = (" + par_s.str() + ", " + par_t.str() + "):");
    emit_structure(out, s, "");
    out.doc["torsion"] = form_to_json(torsion(s));
    out.emit_text("torsion = " + torsion(s).str());
}

void cmd_report(Output& out, const ACMStructure& s, const std::string& label) {
    out.emit_text("structure: " + (label.empty() ? "(file)" : label) + "  (dim " + std::to_string(s.dim()) + ")");
    ValidationReport vrep = validate(s);
    out.emit_text("valid: " + yesno(vrep.ok()));
    json checks = json::array();
    for (const auto& c : vrep.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
    out.doc["validate"] = std::move(checks);
    if (!vrep.ok()) throw InvariantError("validation failed");

    bool normal = is_normal(s);
    bool killing = is_killing(s);
    bool st = is_st(s);
    out.emit_text("normal: " + yesno(normal) + ", killing: " + yesno(killing) + ", ST: " + yesno(st));
    out.doc["normal"] = normal;
    out.doc["killing"] = killing;
    out.doc["st"] = st;
    if (!st) {
        out.emit_text("not an ST structure; stopping before the torsion battery");
        return;
    }

    Classification cls = classify(s);
    out.emit_text("class: " + classification_line(cls));
    out.doc["classification"] = classification_json(cls);

    KForm c = torsion(s);
    out.emit_text("torsion c = " + c.str());
    out.doc["torsion"] = form_to_json(c);

    Connection conn = st_connection(s);
    out.emit_text("st connection (nonzero entries):");
    print_connection(out, conn);
    out.doc["gamma"] = connection_json(conn);
    ParallelReport par = check_parallel(s, conn);
    out.emit_text("parallel: g " + yesno(par.nabla_g) + ", xi " + yesno(par.nabla_xi) + ", phi " +
                  yesno(par.nabla_phi) + ", torsion matches " + yesno(par.torsion_matches));

    KForm lee = lee_form(s);
    out.emit_text("lee form = " + lee.str());
    out.doc["lee"] = form_to_json(lee);

    FieldEqReport feq = field_eq_report(s);
    out.emit_text("field equations: Ric = 0: " + yesno(feq.ricci_zero()) + ", d*c = 0: " +
                  yesno(feq.dstar_c.is_zero()) + ", dc = 0: " + yesno(feq.dc.is_zero()) +
                  ", flat: " + yesno(feq.flat));
    out.doc["field_eq"] = {{"ricci_zero", feq.ricci_zero()},
                           {"dstar_c_zero", feq.dstar_c.is_zero()},
                           {"dc_zero", feq.dc.is_zero()},
                           {"flat", feq.flat}};

    if (s.dim() == 5) {
        bool id5 = dim5_lee_identity(s);
        out.emit_text("dF = lee ^ F (dim 5): " + yesno(id5));
        out.doc["dim5_lee_identity"] = id5;
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out_stream, std::ostream& err) {
    CLI::App app{"exact calculus for almost contact metric structures with torsion on Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable json document");

    struct SubSpec {
        CLI::App* cmd = nullptr;
        Input input;
    };
    auto add_input = [&](CLI::App* cmd, SubSpec& spec) {
        cmd->add_option("file", spec.input.file, "structure file (json)");
        cmd->add_option("--example", spec.input.example, "gallery structure name");
        cmd->callback([cmd]() {
            if (cmd->count("file") == 0 && cmd->count("--example") == 0)
                throw CLI::ValidationError(cmd->get_name() + ": need a structure file or --example");
        });
    };

    SubSpec validate_s, classify_s, torsion_s, conn_s, lee_s, feq_s, hol_s, cyl_s, cone_s, warp_s,
        hom_s, confo_s, extend_s, torus_s, report_s;
    std::string warp_f = "r", hom_a = "2", confo_lam2 = "2";
    std::string sigma_file, sigma1_file, sigma2_file, torus_sv = "3/5", torus_tv = "4/5";
    std::string example_name;

    validate_s.cmd = app.add_subcommand("validate", "check the structure invariants");
    add_input(validate_s.cmd, validate_s);
    classify_s.cmd = app.add_subcommand("classify", "torsion-based classification");
    add_input(classify_s.cmd, classify_s);
    torsion_s.cmd = app.add_subcommand("torsion", "torsion 3-form and its pieces");
    add_input(torsion_s.cmd, torsion_s);
    conn_s.cmd = app.add_subcommand("connection", "st connection table and parallelism checks");
    add_input(conn_s.cmd, conn_s);
    lee_s.cmd = app.add_subcommand("lee", "Lee 1-form");
    add_input(lee_s.cmd, lee_s);
    feq_s.cmd = app.add_subcommand("field-eq", "Ricci, d*c, dc and flatness of the st connection");
    add_input(feq_s.cmd, feq_s);
    hol_s.cmd = app.add_subcommand("holonomy", "curvature span and u(k)/su(k) containment flags");
    add_input(hol_s.cmd, hol_s);
    cyl_s.cmd = app.add_subcommand("cylinder", "Hermitian cylinder and its torsion");
    add_input(cyl_s.cmd, cyl_s);
    cone_s.cmd = app.add_subcommand("cone", "warped torsion with f = r");
    add_input(cone_s.cmd, cone_s);
    warp_s.cmd = app.add_subcommand("warp", "warped torsion for a polynomial f");
    add_input(warp_s.cmd, warp_s);
    warp_s.cmd->add_option("--f", warp_f, "warping polynomial in r")->required();
    hom_s.cmd = app.add_subcommand("homothety", "transversal homothety by a rational a > 0");
    add_input(hom_s.cmd, hom_s);
    hom_s.cmd->add_option("--a", hom_a, "homothety factor")->required();
    confo_s.cmd = app.add_subcommand("conformal", "constant transversal conformal change");
    add_input(confo_s.cmd, confo_s);
    confo_s.cmd->add_option("--lam2", confo_lam2, "the factor e^{2f} > 0")->required();
    extend_s.cmd = app.add_subcommand("extend", "central extension of a Hermitian structure");
    add_input(extend_s.cmd, extend_s);
    extend_s.cmd->add_option("--sigma", sigma_file, "closed (1,1) 2-form file")->required();
    torus_s.cmd = app.add_subcommand("torus-extend", "rank-2 torus extension of an ST structure");
    add_input(torus_s.cmd, torus_s);
    torus_s.cmd->add_option("--sigma1", sigma1_file, "first 2-form file")->required();
    torus_s.cmd->add_option("--sigma2", sigma2_file, "second 2-form file")->required();
    torus_s.cmd->add_option("--s", torus_sv, "parameter s with s^2 + t^2 = 1");
    torus_s.cmd->add_option("--t", torus_tv, "parameter t with s^2 + t^2 = 1");
    CLI::App* example_cmd = app.add_subcommand("example", "emit a gallery structure file");
    example_cmd->add_option("--name", example_name, "gallery structure name")->required();
    report_s.cmd = app.add_subcommand("report", "full battery on one structure");
    add_input(report_s.cmd, report_s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out_stream, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out_stream, err);
        return 1;
    }

    Output out{out_stream, as_json, json::object()};
    try {
        if (example_cmd->parsed()) {
            bool known = false;
            for (const auto& n : gallery_names()) known = known || n == example_name;
            if (!known) throw PreconditionError("unknown example '" + example_name + "'");
            out_stream << structure_to_json(build_example(example_name), example_name).dump(2) << "\n";
            return 0;
        }
        if (validate_s.cmd->parsed()) {
            bool ok = cmd_validate(out, validate_s.input.load(/*eager_validate=*/false));
            out.finish("validate");
            if (!ok) return 3;
        } else if (classify_s.cmd->parsed()) {
            cmd_classify(out, classify_s.input.load_acm());
            out.finish("classify");
        } else if (torsion_s.cmd->parsed()) {
            cmd_torsion(out, torsion_s.input.load_acm());
            out.finish("torsion");
        } else if (conn_s.cmd->parsed()) {
            cmd_connection(out, conn_s.input.load_acm());
            out.finish("connection");
        } else if (lee_s.cmd->parsed()) {
            cmd_lee(out, lee_s.input.load_acm());
            out.finish("lee");
        } else if (feq_s.cmd->parsed()) {
            cmd_field_eq(out, feq_s.input.load_acm());
            out.finish("field-eq");
        } else if (hol_s.cmd->parsed()) {
            cmd_holonomy(out, hol_s.input.load_acm());
            out.finish("holonomy");
        } else if (cyl_s.cmd->parsed()) {
            cmd_cylinder(out, cyl_s.input.load_acm());
            out.finish("cylinder");
        } else if (cone_s.cmd->parsed()) {
            cmd_warp(out, cone_s.input.load_acm(), Poly::r(), "cone");
            out.finish("cone");
        } else if (warp_s.cmd->parsed()) {
            cmd_warp(out, warp_s.input.load_acm(), parse_poly(warp_f), "warped");
            out.finish("warp");
        } else if (hom_s.cmd->parsed()) {
            cmd_homothety(out, hom_s.input.load_acm(), parse_rational_arg(hom_a));
            out.finish("homothety");
        } else if (confo_s.cmd->parsed()) {
            cmd_conformal(out, confo_s.input.load_acm(), parse_rational_arg(confo_lam2));
            out.finish("conformal");
        } else if (extend_s.cmd->parsed()) {
            cmd_extend(out, extend_s.input.load(), sigma_file);
            out.finish("extend");
        } else if (torus_s.cmd->parsed()) {
            cmd_torus_extend(out, torus_s.input.load_acm(), sigma1_file, sigma2_file,
                             parse_rational_arg(torus_sv), parse_rational_arg(torus_tv));
            out.finish("torus-extend");
        } else if (report_s.cmd->parsed()) {
            ParsedStructure ps = report_s.input.load();
            if (!ps.is_acm())
                throw PreconditionError("report needs an almost contact metric structure");
            cmd_report(out, *ps.acm, ps.label);
            out.finish("report");
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        err << "precondition failure: " << e.what() << "\n";
        return 4;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace stg::cli
