#include "hlm/json_io.hpp"

#include <doctest.h>

using namespace hlm;

namespace {

ParameterPoint point(Rational lam, Rational mu, Rational eta, Rational f = 1) {
    ParameterPoint p;
    p.f = f;
    p.hbar = f;
    p.lambda = lam;
    p.mu = mu;
    p.eta = eta;
    return p;
}

// Every leaf is a string, integer or bool; floats would lose exactness.
bool no_floats(const Json& j) {
    if (j.is_number_float()) return false;
    if (j.is_structured())
        for (const auto& v : j) if (!no_floats(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("structure constants round trip") {
    for (auto fam : {Family::canonical, Family::hlm, Family::lm, Family::ansatz}) {
        const auto sc = build_family(fam);
        const auto doc = export_document("algebra", to_json(sc));
        CHECK(no_floats(doc));
        const auto text = dump(doc);
        const auto back = read_document(text);
        CHECK(structure_constants_from_json(back.at("data")) == sc);
        CHECK(dump(export_document("algebra", to_json(structure_constants_from_json(back.at("data"))))) == text);
    }
    const auto lm = to_json(build_family(Family::lm));
    CHECK(lm.at("parameters").contains("x_I_bracket"));
}

TEST_CASE("representation round trip") {
    const auto p = point(1, 1, make_rational(5, 4));
    const auto rep = gamma_rep(p, solve_embedding(p));
    const auto text = dump(export_document("representation", to_json(rep)));
    const auto back = representation_from_json(read_document(text).at("data"));
    CHECK(back.dim == 8);
    CHECK(back.images == rep.images);
    CHECK(back.names == rep.names);
    REQUIRE(back.point.has_value());
    CHECK(*back.point == p);
    CHECK(back.provenance == rep.provenance);
    CHECK(verify_rep(back, substitute(build_family(Family::hlm), p)).pass);
    CHECK(dump(export_document("representation", to_json(back))) == text);
    CHECK(no_floats(read_document(text)));
}

TEST_CASE("operator round trip") {
    SpinorOpConfig c;
    c.n = make_rational(-3, 2);
    ParameterPoint p;
    p.lambda = 1;
    p.mu = -1;
    XiRepConfig xi;
    xi.a = make_rational(1, 3);
    xi.H = 2;
    const auto op = spinor_op8(c, p, xi);
    const auto text = dump(export_document("operator", to_json(op)));
    const auto back = operator_from_json(read_document(text).at("data"));
    CHECK(back == op);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t k = 0; k < 8; ++k) CHECK(back(r, k).terms() == op(r, k).terms());
    CHECK(dump(export_document("operator", to_json(back))) == text);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(read_document("{"), ParseError);
    CHECK_THROWS_AS(read_document(R"({"schema_version": 99, "kind": "algebra", "data": {}})"), ParseError);
    CHECK_THROWS_AS(read_document(R"({"schema_version": 1, "kind": "banana", "data": {}})"), ParseError);
    CHECK_THROWS(structure_constants_from_json(Json::parse(R"({"family": "hlm"})")));
}
