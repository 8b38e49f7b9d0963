#include "hlm/json_io.hpp"

namespace hlm {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string str(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
    return j.get<std::string>();
}

std::size_t gen_lookup(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return k;
    throw ParseError("unknown generator '" + name + "'");
}

std::array<std::uint8_t, 4> exponents(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("exponent vector must have four entries");
    std::array<std::uint8_t, 4> e{};
    for (int k = 0; k < 4; ++k) {
        if (!j[k].is_number_unsigned() || j[k].get<unsigned>() > 255) throw ParseError("bad exponent " + j[k].dump());
        e[k] = static_cast<std::uint8_t>(j[k].get<unsigned>());
    }
    return e;
}

}  // namespace

Json to_json(const ParameterPoint& p) {
    return Json{{"f", to_string(p.f)},
                {"lambda", to_string(p.lambda)},
                {"mu", to_string(p.mu)},
                {"eta", to_string(p.eta)},
                {"hbar", to_string(p.hbar)}};
}

ParameterPoint point_from_json(const Json& j) {
    ParameterPoint p;
    p.f = parse_rational(str(field(j, "f")));
    p.lambda = parse_rational(str(field(j, "lambda")));
    p.mu = parse_rational(str(field(j, "mu")));
    p.eta = parse_rational(str(field(j, "eta")));
    p.hbar = parse_rational(str(field(j, "hbar")));
    return p;
}

Json to_json(const StructureConstants& sc) {
    Json brackets = Json::array();
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b) {
            const auto& v = sc.stored(a, b);
            Json value = Json::object();
            for (std::size_t c = 0; c < sc.dim(); ++c)
                if (!v[c].is_zero()) value[sc.names()[c]] = v[c].to_string();
            if (!value.empty()) brackets.push_back(Json{{"a", sc.names()[a]}, {"b", sc.names()[b]}, {"coeffs", value}});
        }
    Json params = Json::object();
    std::set<Var> formal;
    for (std::size_t a = 0; a < sc.dim(); ++a)
        for (std::size_t b = a + 1; b < sc.dim(); ++b)
            for (const auto& c : sc.stored(a, b)) formal.merge(c.variables());
    Json names = Json::array();
    for (Var v : formal) names.push_back(std::string(var_name(v)));
    params["formal"] = names;
    if (sc.family() == "lm") params["x_I_bracket"] = "[x_i, I] = -i*mu*p_i";
    return Json{{"family", sc.family()}, {"parameters", params}, {"generators", sc.names()}, {"brackets", brackets}};
}

StructureConstants structure_constants_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& n : field(j, "generators")) names.push_back(str(n));
    if (names.size() < 2) throw ParseError("an algebra needs at least two generators");
    StructureConstants sc(str(field(j, "family")), names);
    for (const auto& br : field(j, "brackets")) {
        const std::size_t a = gen_lookup(names, str(field(br, "a"))), b = gen_lookup(names, str(field(br, "b")));
        if (a == b) throw ParseError("bracket of a generator with itself");
        auto v = sc.zero_vector();
        for (const auto& [name, poly] : field(br, "coeffs").items()) v[gen_lookup(names, name)] = ParamPoly::parse(str(poly));
        sc.set(a, b, std::move(v));
    }
    return sc;
}

Json to_json(const CMatrix& m) {
    Json out = Json::array();
    for (const auto& x : m.data()) out.push_back(x.to_string());
    return out;
}

CMatrix cmatrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows * cols) throw ParseError("matrix entry list has the wrong length");
    CMatrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = GaussRational::parse(str(j[k]));
    return m;
}

Json to_json(const Representation& rep) {
    Json out{{"dim", rep.dim}, {"provenance", provenance_name(rep.provenance)}};
    if (rep.point) out["point"] = to_json(*rep.point);
    Json images = Json::object();
    for (std::size_t k = 0; k < rep.images.size(); ++k) images[rep.names[k]] = to_json(rep.images[k]);
    out["images"] = images;
    return out;
}

Representation representation_from_json(const Json& j) {
    Representation rep;
    const Json& dim = field(j, "dim");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw ParseError("dim must be a positive integer");
    rep.dim = dim.get<std::size_t>();
    rep.provenance = parse_provenance(str(field(j, "provenance")));
    if (j.contains("point")) rep.point = point_from_json(j.at("point"));
    for (const auto& [name, entries] : field(j, "images").items()) {
        rep.names.push_back(name);
        rep.images.push_back(cmatrix_from_json(entries, rep.dim, rep.dim));
    }
    return rep;
}

Json to_json(const WeylElement& w) {
    Json out = Json::array();
    for (const auto& [k, c] : w.terms()) {
        Json xi = Json::array(), d = Json::array();
        for (int i = 0; i < 4; ++i) {
            xi.push_back(unsigned(k.xi[i]));
            d.push_back(unsigned(k.d[i]));
        }
        out.push_back(Json{{"xi", xi}, {"d", d}, {"c", c.to_string()}});
    }
    return out;
}

WeylElement weyl_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("a Weyl element is a list of terms");
    WeylElement w;
    for (const auto& t : j) {
        WeylKey key;
        key.xi = exponents(field(t, "xi"));
        key.d = exponents(field(t, "d"));
        w.add_term(key, GaussRational::parse(str(field(t, "c"))));
    }
    return w;
}

Json to_json(const MatrixWeylOperator& op) {
    Json entries = Json::array();
    for (const auto& e : op.entries()) entries.push_back(to_json(e));
    return Json{{"dim", op.dim()}, {"entries", entries}};
}

MatrixWeylOperator operator_from_json(const Json& j) {
    const Json& dim = field(j, "dim");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw ParseError("dim must be a positive integer");
    const std::size_t n = dim.get<std::size_t>();
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != n * n) throw ParseError("operator entry list has the wrong length");
    MatrixWeylOperator op(n);
    for (std::size_t k = 0; k < n * n; ++k) op(k / n, k % n) = weyl_from_json(entries[k]);
    return op;
}

Json to_json(const Inertia& in) { return Json::array({in.n_minus, in.n_plus, in.n_zero}); }

Json to_json(const EmbeddingCoefficients& e) {
    Json metric = Json::array();
    for (const auto& g : e.metric6()) metric.push_back(to_string(g));
    return Json{{"A", e.A.to_string()},
                {"B", e.B.to_string()},
                {"D", e.D.to_string()},
                {"E", e.E.to_string()},
                {"G", e.G.to_string()},
                {"metric6", metric},
                {"unit_normalized", e.unit_normalized}};
}

Json to_json(const ClassificationReport& r) {
    Json out{{"L2", r.L2.to_string()},
             {"M2", r.M2.to_string()},
             {"H2", r.H2.to_string()},
             {"f", to_string(r.f)},
             {"type", algebra_type_name(r.type)},
             {"inertia", to_json(r.inertia)},
             {"expected_inertia", r.expected ? to_json(*r.expected) : Json(nullptr)},
             {"semisimple_value", to_string(r.semisimple_value)},
             {"killing_det_zero", r.det_zero},
             {"point", to_json(r.resolved.point)},
             {"rescaled", r.resolved.rescaled}};
    if (r.embedding) {
        out["embedding"] = to_json(*r.embedding);
        out["embedding_verified"] = r.embedding_verified;
    }
    out["message"] = r.message;
    return out;
}

Json export_document(const std::string& kind, Json data) {
    return Json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"data", std::move(data)}};
}

Json read_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const Json& v = field(j, "schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) throw ParseError("unsupported schema_version " + v.dump());
    const std::string kind = str(field(j, "kind"));
    if (kind != "algebra" && kind != "representation" && kind != "operator")
        throw ParseError("unknown document kind '" + kind + "'");
    field(j, "data");
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hlm
