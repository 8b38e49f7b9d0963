// Command-line front end: hlm <verb> [flags]. Exit 0 pass, 1 verification failure, 2 input error.
#include "hlm/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hlm;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string verb;
    std::string family = "hlm";
    std::string L2 = "inf", M2 = "inf", H2 = "inf";
    std::string f = "1", hbar = "1", a = "0";
    std::string zeta1 = "1", zeta2 = "1", n = "0";
    std::string kappa1, kappa2, kappa3;
    std::string which = "C2";
    std::string dim;
    std::string format = "json";
    std::string out, in, what;
};

struct Outcome {
    Json result;
    bool pass = true;
};

Rational rational_flag(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw InputError("--" + name + ": " + e.what());
    }
}

ExtendedSquare square_flag(const std::string& name, const std::string& text) {
    try {
        return ExtendedSquare::parse(text);
    } catch (const ParseError& e) {
        throw InputError("--" + name + ": " + e.what());
    }
}

int sign_flag(const std::string& name, const std::string& text) {
    if (text == "1" || text == "+1") return 1;
    if (text == "-1") return -1;
    throw InputError("--" + name + " must be +1 or -1");
}

ResolvedPoint point_from(const Flags& fl) {
    return resolve_point(square_flag("L2", fl.L2), square_flag("M2", fl.M2), square_flag("H2", fl.H2),
                         rational_flag("f", fl.f));
}

// Point used by the spinor operators: lambda = 1/L^2, mu = 1/M^2 with H = infinity.
ParameterPoint lm_point(const Flags& fl) {
    ParameterPoint p;
    p.f = rational_flag("f", fl.f);
    p.hbar = rational_flag("hbar", fl.hbar);
    p.lambda = square_flag("L2", fl.L2).inverse();
    p.mu = square_flag("M2", fl.M2).inverse();
    return p;
}

XiRepConfig xi_config(const Flags& fl) {
    XiRepConfig c;
    c.a = rational_flag("a", fl.a);
    c.hbar = rational_flag("hbar", fl.hbar);
    const ExtendedSquare h2 = square_flag("H2", fl.H2);
    if (h2.infinite || sgn(h2.value) <= 0) throw InputError("the xi-representation needs a finite positive --H2");
    auto h = rational_sqrt(h2.value);
    if (!h) throw InputError("--H2 must be the square of a rational for the xi-representation");
    c.H = *h;
    return c;
}

SpinorOpConfig spinor_config(const Flags& fl) {
    SpinorOpConfig c;
    c.zeta1 = sign_flag("zeta1", fl.zeta1);
    c.zeta2 = sign_flag("zeta2", fl.zeta2);
    c.n = rational_flag("n", fl.n);
    auto kappa = [](const std::string& name, const std::string& text) -> std::optional<GaussRational> {
        if (text.empty()) return std::nullopt;
        try {
            return GaussRational::parse(text);
        } catch (const ParseError& e) {
            throw InputError("--" + name + ": " + e.what());
        }
    };
    c.kappa1 = kappa("kappa1", fl.kappa1);
    c.kappa2 = kappa("kappa2", fl.kappa2);
    c.kappa3 = kappa("kappa3", fl.kappa3);
    return c;
}

int dim_flag(const Flags& fl, std::initializer_list<int> allowed, int fallback) {
    if (fl.dim.empty()) return fallback;
    for (int d : allowed)
        if (fl.dim == std::to_string(d)) return d;
    throw InputError("--dim " + fl.dim + " is not supported by " + fl.verb);
}

Family family_flag(const Flags& fl) {
    try {
        return parse_family(fl.family);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

Outcome run_classify(const Flags& fl) {
    const auto r = verify_classification(square_flag("L2", fl.L2), square_flag("M2", fl.M2), square_flag("H2", fl.H2),
                                         rational_flag("f", fl.f));
    return {to_json(r), r.pass};
}

Outcome run_jacobi(const Flags& fl) {
    const auto sc = build_family(family_flag(fl));
    const auto res = jacobi_residuals(sc);
    Json result{{"family", fl.family}, {"residuals_nonzero", res.size()}, {"triples", num_triples(sc.dim())}};
    Json sample = Json::array();
    for (std::size_t k = 0; k < res.size() && k < 5; ++k) {
        Json terms = Json::object();
        for (std::size_t c = 0; c < sc.dim(); ++c)
            if (!res[k].residual[c].is_zero()) terms[sc.names()[c]] = res[k].residual[c].to_string();
        sample.push_back(Json{{"triple", {sc.names()[res[k].a], sc.names()[res[k].b], sc.names()[res[k].c]}},
                              {"residual", terms}});
    }
    if (!sample.empty()) result["first_residuals"] = sample;
    return {result, res.empty()};
}

NumericStructureConstants numeric_family(const Flags& fl, Json& echo) {
    const Family fam = family_flag(fl);
    ParameterPoint p;
    switch (fam) {
        case Family::canonical:
            p.hbar = rational_flag("hbar", fl.hbar);
            break;
        case Family::lm:
            p = lm_point(fl);
            break;
        case Family::hlm: {
            auto rp = point_from(fl);
            p = rp.point;
            echo["rescaled"] = rp.rescaled;
            break;
        }
        case Family::ansatz:
            throw InputError("the ansatz family has fourteen free constants; evaluate it through the library");
    }
    echo["point"] = to_json(p);
    return substitute(build_family(fam), p);
}

Outcome run_killing(const Flags& fl) {
    Json result{{"family", fl.family}};
    const auto sc = numeric_family(fl, result);
    const auto k = killing_form(sc);
    const auto in = inertia(real_form_killing(sc));
    Json matrix = Json::array();
    for (std::size_t r = 0; r < k.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < k.cols(); ++c) row.push_back(k(r, c).to_string());
        matrix.push_back(row);
    }
    const bool invariant = killing_ad_invariant(sc, k);
    result["killing"] = matrix;
    result["inertia"] = to_json(in);
    result["det_zero"] = in.n_zero > 0;
    result["ad_invariant"] = invariant;
    return {result, invariant};
}

// Gamma representation at the flag point, with the embedding it was built from.
std::pair<Representation, EmbeddingCoefficients> clifford_rep(const Flags& fl, Json& result) {
    const auto rp = point_from(fl);
    result["point"] = to_json(rp.point);
    result["rescaled"] = rp.rescaled;
    const auto emb = solve_embedding(rp.point);
    return {gamma_rep(rp.point, emb), emb};
}

Representation build_rep(const Flags& fl, Json& result) {
    const int d = dim_flag(fl, {6, 8}, 8);
    result["dim"] = d;
    if (d == 8) return clifford_rep(fl, result).first;
    const auto rp = point_from(fl);
    result["point"] = to_json(rp.point);
    return six_dim_rep(rp.point).rep;
}

Json rep_report(const RepResidualReport& r) {
    return Json{{"pairs_checked", r.pairs_checked}, {"residuals_nonzero", r.nonzero_pairs},
                {"first_failure", r.first_failure}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome run_rep_verify(const Flags& fl) {
    Json result = Json::object();
    Representation rep;
    if (!fl.in.empty()) {
        const Json doc = read_document(read_file(fl.in));
        if (doc["kind"] != "representation") throw InputError(fl.in + " does not hold a representation");
        rep = representation_from_json(doc["data"]);
        if (!rep.point) throw InputError("imported representation has no parameter point");
        result["source"] = fl.in;
        result["point"] = to_json(*rep.point);
    } else {
        rep = build_rep(fl, result);
    }
    result["provenance"] = provenance_name(rep.provenance);
    const auto sc = substitute(build_family(Family::hlm), *rep.point);
    const auto r = verify_rep(rep, sc);
    result["residual"] = rep_report(r);
    return {result, r.pass};
}

Outcome run_casimir(const Flags& fl) {
    if (square_flag("H2", fl.H2).infinite) throw InputError("casimir needs a finite --H2");
    CasimirKind which;
    try {
        which = parse_casimir(fl.which);
    } catch (const ParseError& e) {
        throw InputError(std::string("--which: ") + e.what());
    }
    dim_flag(fl, {8}, 8);
    Json result{{"which", fl.which}, {"dim", 8}};
    const auto [rep, emb] = clifford_rep(fl, result);
    const auto c = casimir_matrix(rep, emb, which);
    bool diagonal = true;
    for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t k = 0; k < c.cols(); ++k)
            if (r != k && !c(r, k).is_zero()) diagonal = false;
    Json values = Json::array();
    if (diagonal)
        for (std::size_t r = 0; r < c.rows(); ++r) {
            const std::string v = c(r, r).to_string();
            if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
        }
    const bool central = centrality_check(c, rep);
    result["central"] = central;
    result["diagonal"] = diagonal;
    result["eigenvalues"] = values;
    return {result, central};
}

MatrixWeylOperator build_operator(const Flags& fl, Json& result) {
    const int d = dim_flag(fl, {4, 8}, 8);
    const auto cfg = spinor_config(fl);
    const auto p = lm_point(fl);
    const auto xi = xi_config(fl);
    const auto kappa = resolve_kappas(cfg, p);
    result["dim"] = d;
    result["kappa"] = Json::array({kappa[0].to_string(), kappa[1].to_string(), kappa[2].to_string()});
    return d == 4 ? spinor_op4(cfg, p, xi) : spinor_op8(cfg, p, xi);
}

Outcome run_field_op(const Flags& fl) {
    Json result = Json::object();
    const auto D = build_operator(fl, result);
    const auto s = intertwiner_search(D, parity_transform(D));
    const bool expected = D.dim() == 8;
    result["solution_dim"] = s.solution_dim;
    result["found"] = bool(s.S);
    if (s.S) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < s.S->rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < s.S->cols(); ++c) row.push_back((*s.S)(r, c).to_string());
            rows.push_back(row);
        }
        result["S"] = rows;
        result["residual"] = "0";
    }
    result["expected_parity_invariant"] = expected;
    return {result, bool(s.S) == expected};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

Outcome run_export(const Flags& fl) {
    if (fl.out.empty()) throw InputError("export needs --out PATH");
    Json result = Json::object();
    Json doc;
    if (!fl.in.empty()) {
        // Re-import and re-export; the rebuilt object must dump identically.
        const std::string text = read_file(fl.in);
        const Json parsed = read_document(text);
        const std::string kind = parsed["kind"];
        Json data;
        if (kind == "algebra")
            data = to_json(structure_constants_from_json(parsed["data"]));
        else if (kind == "representation")
            data = to_json(representation_from_json(parsed["data"]));
        else
            data = to_json(operator_from_json(parsed["data"]));
        doc = export_document(kind, data);
        result["source"] = fl.in;
        result["byte_identical"] = dump(doc) == text;
    } else {
        const std::string what = fl.what.empty() ? "algebra" : fl.what;
        Json info = Json::object();
        if (what == "algebra")
            doc = export_document("algebra", to_json(build_family(family_flag(fl))));
        else if (what == "representation")
            doc = export_document("representation", to_json(build_rep(fl, info)));
        else if (what == "operator")
            doc = export_document("operator", to_json(build_operator(fl, info)));
        else
            throw InputError("--what must be algebra, representation or operator");
        result["kind"] = what;
        // Round trip through the importer before writing.
        const Json again = read_document(dump(doc));
        Json rebuilt;
        if (what == "algebra")
            rebuilt = to_json(structure_constants_from_json(again["data"]));
        else if (what == "representation")
            rebuilt = to_json(representation_from_json(again["data"]));
        else
            rebuilt = to_json(operator_from_json(again["data"]));
        result["byte_identical"] = dump(export_document(what, rebuilt)) == dump(doc);
    }
    write_file(fl.out, dump(doc));
    result["path"] = fl.out;
    result["bytes"] = dump(doc).size();
    return {result, result["byte_identical"].get<bool>()};
}

std::string render_text(const Json& report) {
    std::ostringstream out;
    out << "verb: " << report["command"]["verb"].get<std::string>() << "\n";
    out << "verdict: " << report["verdict"].get<std::string>() << "\n";
    if (report.contains("error")) out << "error: " << report["error"].get<std::string>() << "\n";
    if (report["result"].is_object())
        for (const auto& [k, v] : report["result"].items())
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    out << "timing_ms: " << report["timing_ms"].dump() << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and verification of deformed Heisenberg-Lorentz algebras"};
    Flags fl;
    app.add_option("verb", fl.verb, "classify | jacobi | killing | rep-verify | casimir | field-op | export")
        ->required()
        ->check(CLI::IsMember({"classify", "jacobi", "killing", "rep-verify", "casimir", "field-op", "export"}));
    std::vector<std::pair<std::string, std::string*>> options{
        {"family", &fl.family}, {"L2", &fl.L2},         {"M2", &fl.M2},         {"H2", &fl.H2},
        {"f", &fl.f},           {"hbar", &fl.hbar},     {"a", &fl.a},           {"zeta1", &fl.zeta1},
        {"zeta2", &fl.zeta2},   {"n", &fl.n},           {"kappa1", &fl.kappa1}, {"kappa2", &fl.kappa2},
        {"kappa3", &fl.kappa3}, {"which", &fl.which},   {"dim", &fl.dim},       {"format", &fl.format},
        {"out", &fl.out},       {"in", &fl.in},         {"what", &fl.what},
    };
    std::vector<std::pair<std::string, CLI::Option*>> registered;
    for (auto& [name, target] : options) registered.emplace_back(name, app.add_option("--" + name, *target));
    app.set_config("--config", "", "key=value file with default flags")->envname("HLM_CONFIG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Json flags = Json::object();
    for (const auto& [name, opt] : registered)
        if (opt->count() > 0) flags[name] = opt->as<std::string>();
    Json report{{"schema_version", kSchemaVersion}, {"command", {{"verb", fl.verb}, {"flags", flags}}}};

    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (fl.format != "json" && fl.format != "text") throw InputError("--format must be json or text");
        Outcome o;
        if (fl.verb == "classify") o = run_classify(fl);
        else if (fl.verb == "jacobi") o = run_jacobi(fl);
        else if (fl.verb == "killing") o = run_killing(fl);
        else if (fl.verb == "rep-verify") o = run_rep_verify(fl);
        else if (fl.verb == "casimir") o = run_casimir(fl);
        else if (fl.verb == "field-op") o = run_field_op(fl);
        else o = run_export(fl);
        report["result"] = o.result;
        report["verdict"] = o.pass ? "pass" : "fail";
        code = o.pass ? 0 : 1;
    } catch (const InputError& e) {
        report["result"] = nullptr;
        report["verdict"] = "error";
        report["error"] = e.what();
        code = 2;
    } catch (const std::invalid_argument& e) {  // ParameterError, ParseError, boundary surfaces
        report["result"] = nullptr;
        report["verdict"] = "error";
        report["error"] = e.what();
        code = 2;
    } catch (const ParseError& e) {
        report["result"] = nullptr;
        report["verdict"] = "error";
        report["error"] = e.what();
        code = 2;
    } catch (const RepresentationError& e) {
        report["result"] = nullptr;
        report["verdict"] = "error";
        report["error"] = e.what();
        code = 2;
    }
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (code == 2) std::cerr << "hlm: " << report["error"].get<std::string>() << "\n";

    const std::string text = fl.format == "text" ? render_text(report) : dump(report);
    if (!fl.out.empty() && fl.verb != "export") {
        std::ofstream out(fl.out, std::ios::binary);
        if (!(out << text)) {
            std::cerr << "hlm: cannot write " << fl.out << "\n";
            return 2;
        }
    } else {
        std::cout << text;
    }
    return code;
}
