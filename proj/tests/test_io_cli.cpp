#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace cygon;

namespace {

Matroid parse(const std::string& text) {
    std::istringstream in(text);
    return parse_matroid(in);
}

int parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_matroid(in);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    f << content;
}

const char* kTriangle = "graph 3\n0 1\n1 2\n0 2\n";

}  // namespace

TEST_CASE("matroid parser handles every input kind") {
    Matroid c3 = parse("graph 3\n0 1\n1 2\n0 2\n");
    REQUIRE(c3.size() == 3);
    REQUIRE(c3.rank() == 2);
    REQUIRE_FALSE(is_independent(c3, 0b111));

    Matroid u24 = parse("uniform 2 4");
    REQUIRE(u24.size() == 4);
    REQUIRE(u24.rank() == 2);

    Matroid gf2 = parse("linear 2 2 3\n1 0 1\n0 1 1\n");
    REQUIRE(gf2.rank() == 2);
    REQUIRE_FALSE(is_independent(gf2, 0b111));

    // Entries reduce mod p: 3 and 5 both become 1 over GF(2), leaving two
    // parallel columns; an entry reducing to a zero column is refused.
    Matroid reduced = parse("linear 2 1 2\n3 5\n");
    REQUIRE(reduced.rank(0b01) == 1);
    REQUIRE(reduced.rank() == 1);
    REQUIRE_THROWS_AS(parse("linear 2 1 2\n3 2\n"), ConstructionError);

    // p = 0 reads exact rationals; the second column is twice the first.
    Matroid rat = parse("linear 0 2 2\n1/2 1\n1 2\n");
    REQUIRE(rat.rank() == 1);

    Matroid part = parse("partition\n1 3\n2 2\n");
    REQUIRE(part.size() == 5);
    REQUIRE(part.rank() == 3);
    REQUIRE(part.rank(0b00111) == 1);

    Matroid listed = parse("bases\n0 1\n1 2\n");
    REQUIRE(listed.rank() == 2);
    REQUIRE(is_base(listed, 0b011));
    REQUIRE(is_base(listed, 0b110));
    REQUIRE_FALSE(is_base(listed, 0b101));
}

TEST_CASE("comments and blank lines are invisible to the parser") {
    Matroid c3 = parse("# a triangle\n\ngraph 3  # three vertices\n0 1\n\n1 2\n0 2  # done\n");
    REQUIRE(c3.size() == 3);
    REQUIRE(c3.rank() == 2);
}

TEST_CASE("parse errors carry the offending line number") {
    REQUIRE(parse_error_line("") == 0);
    REQUIRE(parse_error_line("widget 3\n") == 1);
    REQUIRE(parse_error_line("graph\n") == 1);
    REQUIRE(parse_error_line("graph x\n") == 1);
    REQUIRE(parse_error_line("graph 3\n0 1\n1\n") == 3);
    REQUIRE(parse_error_line("uniform 1 2\n0 1\n") == 2);
    REQUIRE(parse_error_line("linear 2 2 2\n1 0\n1\n") == 3);
    REQUIRE(parse_error_line("linear 0 1 1\nx\n") == 2);
    REQUIRE(parse_error_line("linear 0 1 1\n1/0\n") == 2);
    REQUIRE(parse_error_line("linear 2 2 2\n1 0\n") == 1);
    REQUIRE(parse_error_line("partition\n1 2 3\n") == 2);
    REQUIRE(parse_error_line("partition\n-1 2\n") == 2);
    REQUIRE(parse_error_line("bases\n") == 1);
    REQUIRE(parse_error_line("bases\n0 0\n") == 2);
    REQUIRE(parse_error_line("bases\n0 99\n") == 2);
}

TEST_CASE("weight files must match the ground set exactly") {
    Matroid c3 = parse(kTriangle);
    {
        std::istringstream in("2 1 2\n");
        REQUIRE(parse_weights(in, c3.size()) == std::vector<long long>{2, 1, 2});
    }
    {
        std::istringstream in("# spread over lines\n2\n1 2\n");
        REQUIRE(parse_weights(in, c3.size()) == std::vector<long long>{2, 1, 2});
    }
    {
        std::istringstream in("1 2\n");
        REQUIRE_THROWS_AS(parse_weights(in, c3.size()), ParseError);
    }
    {
        std::istringstream in("");
        REQUIRE_THROWS_AS(parse_weights(in, c3.size()), ParseError);
    }
}

TEST_CASE("human formatting is stable line by line") {
    GonMapping gon;
    gon.gon = 3;
    gon.weight = {2, 2, 2};
    gon.position = {3, 2, 1};
    REQUIRE(format_text(gon) == "D = 3\n0 -> 3  [weight 2]\n1 -> 2  [weight 2]\n2 -> 1  [weight 2]\n");

    CircleMapping circle;
    circle.circumference = Rational(3, 2);
    circle.position = {Rational(1), Rational(1, 2), Rational(0)};
    circle.mode = WindowMode::Independent;
    REQUIRE(format_text(circle) == "d = 3/2\n0 -> 1\n1 -> 1/2\n2 -> 0\n");

    REQUIRE(format_text(CyclicOrdering{{2, 1, 0}}) == "2 1 0\n");

    BaseCover cover;
    cover.bases = {0b110, 0b011};
    REQUIRE(format_text(cover) == "1 2\n0 1\n");

    FractionalWeights fw;
    fw.entries = {{0b011, Rational(1, 2)}, {0b101, Rational(1, 2)}, {0b110, Rational(1, 2)}};
    REQUIRE(format_text(fw) == "0 1 : 1/2\n0 2 : 1/2\n1 2 : 1/2\ntotal = 3/2\n");
}

TEST_CASE("density subcommand, human and json") {
    CliResult human = run({"density"}, kTriangle);
    REQUIRE(human.code == 0);
    REQUIRE(human.out == "gamma = 3/2\nwitness = 0 1 2\n");

    CliResult again = run({"density"}, kTriangle);
    REQUIRE(again.out == human.out);

    CliResult json = run({"density", "--format", "json"}, kTriangle);
    REQUIRE(json.code == 0);
    auto j = nlohmann::json::parse(json.out);
    REQUIRE(j["d"] == "3/2");
    REQUIRE(j["witness"] == nlohmann::json::array({0, 1, 2}));
    REQUIRE(j["mode"] == "density");

    CliResult str = run({"density", "--strength"}, kTriangle);
    REQUIRE(str.code == 0);
    REQUIRE(str.out == "strength = 3/2\nwitness = 0 1 2\n");
}

TEST_CASE("check subcommand reports ok and violations with matching exit codes") {
    CliResult ok = run({"check", "--gon", "2"}, kTriangle);
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out == "ok\n");

    CliResult bad = run({"check", "--gon", "2", "--uniform-weight", "2"}, kTriangle);
    REQUIRE(bad.code == 1);
    REQUIRE(bad.out ==
            "VIOLATION weighted-independence\nwitness = 0 1 2\nlhs = 6\nrhs = 4\n");

    write_file("cli_weights.txt", "2 1\n");
    CliResult weighted = run({"check", "--gon", "2", "--weights", "cli_weights.txt"}, "uniform 1 2");
    REQUIRE(weighted.code == 1);
    REQUIRE(weighted.out == "VIOLATION weighted-independence\nwitness = 0 1\nlhs = 3\nrhs = 2\n");
    std::remove("cli_weights.txt");

    CliResult dual = run({"check", "--gon", "2", "--dual"}, kTriangle);
    REQUIRE(dual.code == 1);
    REQUIRE(dual.out == "VIOLATION dual-spanning\nwitness = 0 1 2\nlhs = 3\nrhs = 4\n");
}

TEST_CASE("assign subcommand emits the frozen triangle layout") {
    CliResult r = run({"assign", "--gon", "3", "--uniform-weight", "2"}, kTriangle);
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "D = 3\n0 -> 3  [weight 2]\n1 -> 2  [weight 2]\n2 -> 1  [weight 2]\n");

    CliResult infeasible = run({"assign", "--gon", "1", "--uniform-weight", "1"}, kTriangle);
    REQUIRE(infeasible.code == 1);
    REQUIRE(infeasible.out.find("VIOLATION") == 0);

    CliResult traced = run({"assign", "--gon", "3", "--uniform-weight", "2", "--trace"}, kTriangle);
    REQUIRE(traced.code == 0);
    REQUIRE(traced.err.find("push") != std::string::npos);
}

TEST_CASE("ordering subcommands cover found, violated, and out-of-scope cases") {
    CliResult order = run({"cyclic-order"}, kTriangle);
    REQUIRE(order.code == 0);
    REQUIRE(order.out == "2 1 0\n");

    CliResult na = run({"cyclic-order"}, "uniform 2 4");
    REQUIRE(na.code == 2);
    REQUIRE(na.err.find("not applicable") != std::string::npos);
    REQUIRE(na.err.find("explore") != std::string::npos);

    CliResult violated = run({"cyclic-indep", "--window", "3"}, "graph 4\n0 1\n1 2\n0 2\n2 3\n");
    REQUIRE(violated.code == 1);
    REQUIRE(violated.out.find("VIOLATION") == 0);

    CliResult explored = run({"explore"}, kTriangle);
    REQUIRE(explored.code == 0);
    REQUIRE(explored.out == "0 1 2\n");

    CliResult none = run({"explore"}, "graph 4\n0 1\n1 2\n0 2\n2 3\n");
    REQUIRE(none.code == 1);
    REQUIRE(none.out == "no cyclic ordering\n");

    CliResult exchange = run({"exchange", "--from", "0", "1", "--to", "2", "3"}, "uniform 2 4");
    REQUIRE(exchange.code == 0);
    REQUIRE(exchange.out == "0 1 2 3\n");
}

TEST_CASE("arboricity subcommand variants") {
    CliResult circ = run({"arboricity"}, kTriangle);
    REQUIRE(circ.code == 0);
    REQUIRE(circ.out == "d = 3/2\n0 -> 1\n1 -> 1/2\n2 -> 0\n");

    CliResult cover = run({"arboricity", "--cover"}, kTriangle);
    REQUIRE(cover.code == 0);
    REQUIRE(cover.out == "1 2\n0 1\n");

    CliResult fractional = run({"arboricity", "--fractional"}, kTriangle);
    REQUIRE(fractional.code == 0);
    REQUIRE(fractional.out == "0 1 : 1/2\n0 2 : 1/2\n1 2 : 1/2\ntotal = 3/2\n");

    CliResult circle = run({"arboricity", "--circle", "3/2"}, kTriangle);
    REQUIRE(circle.code == 0);
    REQUIRE(circle.out.find("d = 3/2\n") == 0);

    CliResult tight = run({"arboricity", "--circle", "4/3"}, kTriangle);
    REQUIRE(tight.code == 1);
    REQUIRE(tight.out.find("VIOLATION rational-density") == 0);
}

TEST_CASE("spanning-windows subcommand") {
    CliResult ok = run({"spanning-windows", "--circle", "3/2"}, kTriangle);
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out == "d = 3/2\n0 -> 0\n1 -> 1\n2 -> 1/2\n");

    CliResult wide = run({"spanning-windows", "--circle", "2"}, kTriangle);
    REQUIRE(wide.code == 1);
    REQUIRE(wide.out.find("VIOLATION strength") == 0);
}

TEST_CASE("verify round-trips every certificate the tool emits") {
    struct Case {
        std::vector<std::string> produce;
        std::string name;
    };
    const std::vector<Case> cases = {
        {{"assign", "--format", "json", "--gon", "3", "--uniform-weight", "2"}, "cert_gon.json"},
        {{"arboricity", "--format", "json"}, "cert_circle.json"},
        {{"arboricity", "--cover", "--format", "json"}, "cert_cover.json"},
        {{"arboricity", "--fractional", "--format", "json"}, "cert_fractional.json"},
        {{"cyclic-order", "--format", "json"}, "cert_order.json"},
        {{"exchange", "--from", "0", "1", "--to", "1", "2", "--format", "json"}, "cert_linear.json"},
        {{"spanning-windows", "--circle", "3/2", "--format", "json"}, "cert_span.json"},
    };
    for (const Case& c : cases) {
        CliResult produced = run(c.produce, kTriangle);
        REQUIRE(produced.code == 0);
        write_file(c.name, produced.out);
        CliResult verified = run({"verify", "--certificate", c.name}, kTriangle);
        INFO("certificate " << c.name);
        REQUIRE(verified.code == 0);
        REQUIRE(verified.out == "verified\n");
        std::remove(c.name.c_str());
    }
}

TEST_CASE("verify rejects corrupted and malformed certificates") {
    CliResult produced = run({"assign", "--format", "json", "--gon", "3", "--uniform-weight", "2"},
                             kTriangle);
    auto j = nlohmann::json::parse(produced.out);
    j["mapping"][1][1] = 3;  // pile element 1 onto element 0's start point
    write_file("cert_bad.json", j.dump());
    CliResult failed = run({"verify", "--certificate", "cert_bad.json"}, kTriangle);
    REQUIRE(failed.code == 1);
    REQUIRE(failed.out.find("FAIL") == 0);
    std::remove("cert_bad.json");

    write_file("cert_shape.json", "{\"something\": 1}");
    CliResult unknown = run({"verify", "--certificate", "cert_shape.json"}, kTriangle);
    REQUIRE(unknown.code == 2);
    REQUIRE(unknown.err.find("error:") != std::string::npos);
    std::remove("cert_shape.json");

    write_file("cert_syntax.json", "not json");
    CliResult syntax = run({"verify", "--certificate", "cert_syntax.json"}, kTriangle);
    REQUIRE(syntax.code == 2);
    REQUIRE(syntax.err.find("parse error") != std::string::npos);
    std::remove("cert_syntax.json");

    CliResult missing = run({"verify", "--certificate", "cert_absent.json"}, kTriangle);
    REQUIRE(missing.code == 2);
}

TEST_CASE("usage problems exit with code 2") {
    REQUIRE(run({"check"}, kTriangle).code == 2);
    REQUIRE(run({"bogus"}, kTriangle).code == 2);
    REQUIRE(run({}, kTriangle).code == 2);
    REQUIRE(run({"density", "--format", "yaml"}, kTriangle).code == 2);

    CliResult parse_fail = run({"density"}, "widget 3\n");
    REQUIRE(parse_fail.code == 2);
    REQUIRE(parse_fail.err.find("parse error: line 1") != std::string::npos);

    CliResult no_file = run({"density", "-i", "does_not_exist.txt"});
    REQUIRE(no_file.code == 2);
    REQUIRE(no_file.err.find("error:") != std::string::npos);
}

TEST_CASE("help is not an error") {
    CliResult top = run({"--help"});
    REQUIRE(top.code == 0);
    REQUIRE(top.out.find("density") != std::string::npos);

    CliResult sub = run({"assign", "--help"});
    REQUIRE(sub.code == 0);
    REQUIRE(sub.out.find("--gon") != std::string::npos);
}

TEST_CASE("matroid input can come from a file") {
    write_file("cli_matroid.txt", kTriangle);
    CliResult r = run({"density", "-i", "cli_matroid.txt"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "gamma = 3/2\nwitness = 0 1 2\n");
    std::remove("cli_matroid.txt");
}
