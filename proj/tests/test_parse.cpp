#include <doctest.h>

#include <fstream>
#include <sstream>

#include "twistcoh/parse.hpp"

using namespace twistcoh;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(TWISTCOH_MODELS_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parse sl2 fixture") {
    ParsedInput in = parse_input(fixture("sl2.alg"));
    CHECK(in.model->name == "sl2");
    CHECK(in.model->kind == AlgebroidModel::Kind::lie_algebra);
    CHECK(in.model->rank == 3);
    Section c = in.model->bracket_coeffs(1, 2);
    CHECK(c[1].constant_term() == Rational(2));
    CHECK(in.model->bracket_coeffs(2, 1)[1].constant_term() == Rational(-2));
}

TEST_CASE("round-trip: print then parse equals the original") {
    for (const char* name : {"sl2.alg", "h3r.alg", "so2_action.alg", "symplectic_r2.alg",
                             "poisson_r2_linear.alg", "sl2_adjoint.alg"}) {
        ParsedInput a = parse_input(fixture(name));
        std::string canon = print_input(a);
        ParsedInput b = parse_input(canon);
        CHECK(models_equal(*a.model, *b.model));
        CHECK(a.conn.has_value() == b.conn.has_value());
        if (a.conn) CHECK(a.conn->gamma == b.conn->gamma);
        CHECK(a.theta.has_value() == b.theta.has_value());
        if (a.theta) CHECK(*a.theta == *b.theta);
        if (a.psi) CHECK(*a.psi == *b.psi);
        // canonical printing is idempotent
        CHECK(print_input(b) == canon);
    }
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_input(fixture("bad_parse.alg"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(std::string(e.what()).find("e5") == std::string::npos);  // message names range
    }
    try {
        parse_input("[model]\nkind = lie_algebra\nrank = 2\n\n[bracket]\ne1 ^ = e2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
    }
}

TEST_CASE("validation failures are not parse errors") {
    CHECK_THROWS_AS(parse_input(fixture("corrupt_sl2.alg")), ValidationError);
    CHECK_THROWS_AS(parse_input(fixture("nonpoisson_r3.alg")), ValidationError);
}

TEST_CASE("caret disambiguation: exponent vs wedge") {
    ParsedInput in = parse_input(
        "[model]\nname = m\nkind = poisson\nvars = 2\npi = x1^2*d1^d2\n");
    const Poly& p = in.model->anchor[0][1];  // pi_12
    CHECK(p == Poly::variable(2, 1) * Poly::variable(2, 1));
}

TEST_CASE("rationals and signs in expressions") {
    ParsedInput in = parse_input(
        "[model]\nname = m\nkind = lie_algebra\nrank = 2\n\n[bracket]\ne1 ^ e2 = "
        "-3/2*e1 + e2\n");
    Section c = in.model->bracket_coeffs(1, 2);
    CHECK(c[0].constant_term() == Rational(-3, 2));
    CHECK(c[1].constant_term() == Rational(1));
}

TEST_CASE("form files parse against a model") {
    ParsedInput in = parse_input(fixture("abelian2.alg"));
    MixedForm t = parse_form_text("[theta]\ntheta = e1\n", *in.model, "theta");
    CHECK(t == *in.theta);
    CHECK_THROWS_AS(parse_form_text("[psi]\npsi = e1\n", *in.model, "theta"), ParseError);
    CHECK_THROWS_AS(parse_form_text("theta = e7\n", *in.model, "theta"), ParseError);
}

TEST_CASE("repeated generators annihilate a term") {
    ParsedInput in = parse_input(fixture("abelian3.alg"));
    MixedForm f = parse_form_text("theta = e1^e1 + e2\n", *in.model, "theta");
    CHECK(f == MixedForm::from_cochain(Cochain::basis(3, 0, {2})));
}

TEST_CASE("wedge reordering picks up the sign") {
    ParsedInput in = parse_input(fixture("abelian3.alg"));
    MixedForm f = parse_form_text("theta = e2^e1^e3\n", *in.model, "theta");
    MixedForm g = parse_form_text("theta = -1*e1^e2^e3\n", *in.model, "theta");
    CHECK(f == g);
}

TEST_CASE("canonical form text round-trips") {
    ParsedInput in = parse_input(fixture("h3r.alg"));
    std::string s = form_str(*in.psi);
    MixedForm back = parse_form_text("psi = " + s + "\n", *in.model, "psi");
    CHECK(back == *in.psi);
}
