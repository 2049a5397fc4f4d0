#include <doctest.h>

#include <fstream>
#include <sstream>

#include "jetbracket/printer.hpp"
#include "jetbracket/runner.hpp"
#include "support/generators.hpp"

using namespace jtest;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data_file(const std::string& name) {
    return std::string(JETBRACKET_TEST_DATA_DIR) + "/data/" + name;
}

Report run_file(const std::string& name, std::uint64_t seed = 42) {
    ProblemFile problem = parse_problem(slurp(data_file(name)));
    RunOptions options;
    options.seed = seed;
    options.input_name = name;
    return run(problem, options);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parsing the KdV problem") {
    ProblemFile p = parse_problem(slurp(data_file("kdv.jet")));
    CHECK(p.n == 1);
    CHECK(p.m == 1);
    REQUIRE(p.has_equation);
    CHECK(p.f[0] == P("6*u*u_x + u_xxx"));
    REQUIRE(p.operators.size() == 2);
    CHECK(p.operators[0].first == "A1");
    CHECK(p.operators[1].second == Op("D_xxx + 4*u*D_x + 2*u_x"));
    REQUIRE(p.checks.size() == 5);
    CHECK(p.checks[0].type == CheckRequest::Type::Bivector);
    CHECK(p.checks[4].type == CheckRequest::Type::Vanishing);
    CHECK(p.checks[4].k == 3);
}

TEST_CASE("expression parsing corner cases") {
    CHECK(P("1/2*u + u") == P("3/2*u"));
    CHECK(P("-u^2 + u*u") == DiffPoly::zero());
    CHECK(P("(u + u_x)^2") == P("u^2 + 2*u*u_x + u_x^2"));
    CHECK(P("u2_x1x1x2", 2, 3) ==
          DiffPoly::coordinate(JetCoordinate::jet(1, MultiIndex({2, 1}))));
    CHECK(P("t*x", 1, 1) == P("x*t", 1, 1));
}

TEST_CASE("positioned parse errors") {
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\nevolve u = sin(u)\n"),
                         doctest::Contains("non-polynomial"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\nevolve u = q + 1\n"),
                         doctest::Contains("undeclared identifier"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\nevolve u = u_t\n"),
                         doctest::Contains("spatial"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\noperator A = D\n"),
                         doctest::Contains("bare D"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\noperator A = D_x*u\n"),
                         doctest::Contains("left of D_sigma"), ParseError);
    CHECK_THROWS_AS(parse_problem("vars x[1], u[1]\noperator A = D_x\noperator A = D_x\n"),
                    ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\ncheck bivector Q\n"),
                         doctest::Contains("requires the evolution equation"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("check symmetry (u)\n"), doctest::Contains("vars"),
                         ParseError);
    CHECK_THROWS_WITH_AS(
        parse_problem("vars x[1], u[1]\nevolve u = u_xx\ncheck vanishing k=2 vector\n"),
        doctest::Contains("k >= 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[2]\noperator A = D_x\n"),
                         doctest::Contains("matrices"), ParseError);
    CHECK_THROWS_WITH_AS(parse_problem("vars x[1], u[1]\noperator l_f = D_x\n"),
                         doctest::Contains("reserved"), ParseError);
    // Error positions point at the offending token.
    try {
        parse_problem("vars x[1], u[1]\nevolve u = u +\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("implicit linearization names") {
    CHECK_THROWS_AS(parse_problem("vars x[1], u[1]\ncheck adjoint l_f\n"), ParseError);
    ProblemFile p =
        parse_problem("vars x[1], u[1]\nevolve u = u_xx\ncheck adjoint l_f\ncheck symbol l_f_adj\n");
    CHECK(p.checks[0].target == "l_f");
}

TEST_CASE("round-trips through the pretty printer") {
    const char* files[] = {"kdv.jet",        "heat.jet", "transport.jet", "potential_kdv.jet",
                           "degenerate.jet", "wave.jet", "heat2d.jet"};
    for (const char* name : files) {
        CAPTURE(name);
        ProblemFile once = parse_problem(slurp(data_file(name)));
        ProblemFile twice = parse_problem(once.to_text());
        CHECK(once == twice);
    }
}

TEST_CASE("printer emits the expected surface forms") {
    CHECK(to_text(P("6*u*u_x + u_xxx"), 1, 1) == "6*u*u_x + u_xxx");
    CHECK(to_text(Op("D_xxx + 4*u*D_x + 2*u_x")) == "D_xxx + 4*u*D_x + 2*u_x");
    CHECK(to_text(Op("-D_x")) == "-D_x");
    CHECK(to_text(DiffPoly::zero(), 1, 1) == "0");
    CHECK(to_text(P("u2_x1x2", 2, 2), 2, 2) == "u2_x1x2");
    CHECK(to_text(Op("(u + t)*D_x + 1/2")) == "(t + u)*D_x + 1/2");
}

TEST_CASE("runner: KdV passes everything") {
    Report report = run_file("kdv.jet");
    CHECK(report.exit_code == 0);
    REQUIRE(report.checks.size() == 5);
    for (const CheckRecord& rec : report.checks) CHECK(rec.pass);
    REQUIRE(report.conclusion.has_value());
    CHECK(report.conclusion->bivectors_hamiltonian);
}

TEST_CASE("runner: heat 2-form is rejected with the exact residual") {
    Report report = run_file("heat.jet");
    CHECK(report.exit_code == 1);
    CHECK_FALSE(report.checks[0].pass);
    CHECK(*report.checks[0].residual == Op("2*D_xxx"));
    std::string text = render_text(report);
    CHECK(text.find("2*D_xxx") != std::string::npos);
}

TEST_CASE("runner: transport is rejected for order reasons, not search reasons") {
    Report report = run_file("transport.jet");
    CHECK(report.exit_code == 1);
    CHECK_FALSE(report.checks[0].pass);
    CHECK_FALSE(report.checks[0].search_failed);
    CHECK(report.checks[0].verdict_note.find("order") != std::string::npos);
}

TEST_CASE("runner: degenerate symbol yields a search failure exit") {
    Report report = run_file("degenerate.jet");
    CHECK(report.exit_code == 3);
    CHECK(report.checks[0].search_failed);
}

TEST_CASE("runner: wave file exercises matrix operators and ad-hoc checks") {
    Report report = run_file("wave.jet");
    CHECK(report.exit_code == 0);
    CHECK(report.checks[0].pass);   // bivector J
    CHECK(report.checks[1].pass);   // symmetry translation
    REQUIRE(report.checks[2].op_result.has_value());
    CHECK(*report.checks[2].op_result == Op("[0, D_xx; 1, 0]", 1, 2));
    REQUIRE(report.checks[3].op_result.has_value());
    CHECK(*report.checks[3].op_result == Op("[-1, 0; 0, -1]", 1, 2));
}

TEST_CASE("runner: two base variables") {
    Report report = run_file("heat2d.jet");
    CHECK(report.exit_code == 0);
    REQUIRE(report.checks[0].symbol.has_value());
    CHECK(report.checks[0].symbol->degree() == 2);
    CHECK(report.checks[0].symbol_nondegenerate);
    CHECK(report.checks[1].pass);
}

TEST_CASE("json reports are byte-stable") {
    std::string a = render_json(run_file("kdv.jet"));
    std::string b = render_json(run_file("kdv.jet"));
    CHECK(a == b);
    std::string other_seed = render_json(run_file("kdv.jet", 43));
    CHECK(a != other_seed);  // the seed is echoed into the report
}

TEST_CASE("golden json for the KdV pipeline") {
    std::string expected = slurp(std::string(JETBRACKET_TEST_DATA_DIR) + "/golden/kdv.json");
    CHECK(render_json(run_file("kdv.jet")) == expected);
}

}  // TEST_SUITE
