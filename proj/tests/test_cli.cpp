#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <zmcodes/spec_io.hpp>

using namespace zmcodes;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string data_file(const char* name) { return std::string(ZMCODES_DATA_DIR) + "/" + name; }

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run(const SpecDocument& doc, const std::vector<std::string>& cmd, CommandOptions opt = {}) {
    std::ostringstream out, err;
    const int status = run_command(doc, cmd, opt, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parsing the Z30 example file") {
    const SpecDocument doc = parse_spec(read_file(data_file("example1_z30.spec")));
    REQUIRE(doc.ring.has_value());
    CHECK(doc.ring->modulus() == 30);
    CHECK(doc.codes.size() == 2);
    CHECK(doc.matrices.size() == 1);
    CHECK(doc.code("C1").cardinality() == 4);
    CHECK(doc.code("C2").cardinality() == 9);
    CHECK(doc.matrix("A")(0, 0) == 6);
    CHECK(doc.run_commands.size() == 3);
}

TEST_CASE("parsing a cyclic code block") {
    const SpecDocument doc = parse_spec("ring 25\ncode C1 cyclic n=12 poly=1,1\n");
    CHECK(doc.code("C1").free_rank() == 11);
}

TEST_CASE("parse errors carry line numbers") {
    const auto expect_error = [](const std::string& text, std::size_t line) {
        try {
            parse_spec(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("ring 30\ncode C\ngens\n1 2\n3\nend\n", 5);      // wrong arity
    expect_error("ring 30\ncode C\ngens\nend\n", 4);              // empty block
    expect_error("ring 1\n", 1);                                  // bad modulus
    expect_error("ring 30\nbogus directive\n", 2);                // unknown directive
    expect_error("ring 30\ncode C\ngens\n1\nend\ncode C\ngens\n2\nend\n", 6);  // duplicate
    expect_error("ring 30\nmatrix A 2x2\n1 2\n3 4\n", 4);         // missing end
    expect_error("ring 30\nrun lcd Missing\n", 2);                // undefined reference
    expect_error("code C\ngens\n1\nend\n", 1);                    // code before ring

    CHECK_THROWS_AS(parse_spec("ring 25\ncode C cyclic n=12 poly=3,1\n"), SemanticError);
}

TEST_CASE("lcd command output") {
    const SpecDocument doc = parse_spec(read_file(data_file("example1_z30.spec")));
    const RunResult r = run(doc, {"lcd", "C1"});
    CHECK(r.status == 0);
    CHECK(r.out == "lcd: true\n");
}

TEST_CASE("mpc report includes conditions and the verdict") {
    const SpecDocument doc = parse_spec(read_file(data_file("example1_z30.spec")));
    const RunResult r = run(doc, {"mpc", "C1", "C2", "A"});
    CHECK(r.status == 0);
    CHECK(r.out.find("condition 3 (AA^t diagonal-units): true") != std::string::npos);
    CHECK(r.out.find("lcd: true") != std::string::npos);
    CHECK(r.out.find("verdict: lcd iff all inputs lcd") != std::string::npos);
}

TEST_CASE("torsion listing matches the reduced generator matrix") {
    const SpecDocument doc = parse_spec(read_file(data_file("example3_z4.spec")));
    const RunResult r = run(doc, {"torsion", "C", "1"});
    CHECK(r.status == 0);
    const std::string expected =
        "torsion 1 of C over Z2\n"
        "code C.T1\n"
        "gens\n"
        "1 0 0 0 0 1 0 1\n"
        "0 1 0 0 1 0 1 1\n"
        "0 0 1 0 0 0 1 0\n"
        "0 0 0 1 0 1 1 1\n"
        "end\n";
    CHECK(r.out == expected);
}

TEST_CASE("info on a cyclic Z25 code prints the power-form cardinality") {
    const SpecDocument doc = parse_spec(read_file(data_file("example2_z25.spec")));
    const RunResult r = run(doc, {"info", "C1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("cardinality: 25^11") != std::string::npos);
    CHECK(r.out.find("d = 2") != std::string::npos);
}

TEST_CASE("distance command formats intervals per the contract") {
    const SpecDocument doc = parse_spec("ring 2\ncode C\ngens\n1 1 1 1 1 1\nend\n");
    CommandOptions opt;
    opt.enum_cap = 1;   // forbid enumeration
    opt.weight_cap = 2; // cap below the actual distance 6
    const RunResult r = run(doc, {"distance", "C"}, opt);
    CHECK(r.status == 0);
    CHECK(r.out == "d in [3, 6] (weight search capped at 2)\n");

    const RunResult rz = run(parse_spec("ring 4\ncode Z\ngens\n0 0\nend\n"), {"distance", "Z"});
    CHECK(rz.out == "d = absent (zero code)\n");
}

TEST_CASE("dual output round-trips through the parser") {
    const SpecDocument doc = parse_spec(read_file(data_file("example1_z30.spec")));
    const RunResult r = run(doc, {"dual", "C1"});
    CHECK(r.status == 0);

    // re-parse the printed block in a fresh document over the same ring
    const std::string reparse_input = "ring 30\n" + r.out.substr(r.out.find("code "));
    const SpecDocument doc2 = parse_spec(reparse_input);
    CHECK(doc2.code("C1.dual") == dual(doc.code("C1")));
}

TEST_CASE("zero codes print a parseable zero row") {
    const SpecDocument doc = parse_spec("ring 30\ncode C\ngens\n15 0\n0 15\nend\n");
    const RunResult r = run(doc, {"hull", "C"});
    CHECK(r.status == 0);
    const std::string reparse_input = "ring 30\n" + r.out.substr(r.out.find("code "));
    const SpecDocument doc2 = parse_spec(reparse_input);
    CHECK(doc2.code("C.hull").is_zero());
}

TEST_CASE("oracle cross-checks report agreement") {
    const SpecDocument doc = parse_spec(read_file(data_file("example1_z30.spec")));
    CommandOptions opt;
    opt.oracle = true;
    const RunResult r = run(doc, {"dual", "C1"}, opt);
    CHECK(r.status == 0);
    CHECK(r.out.find("oracle: agree") != std::string::npos);

    const RunResult rd = run(doc, {"distance", "C1"}, opt);
    CHECK(rd.status == 0);
    CHECK(rd.out.find("oracle: agree") != std::string::npos);
}

TEST_CASE("semantic failures exit with status 1 and one-line reasons") {
    const SpecDocument doc = parse_spec(read_file(data_file("example1_z30.spec")));
    const RunResult unknown = run(doc, {"lcd", "Nope"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("unknown code") != std::string::npos);

    const RunResult badcmd = run(doc, {"frobnicate"});
    CHECK(badcmd.status == 1);

    const RunResult badsuite = run(doc, {"verify", "nonexistent"});
    CHECK(badsuite.status == 1);
}

TEST_CASE("reports are byte-identical across runs") {
    const SpecDocument doc = parse_spec(read_file(data_file("example2_z25.spec")));
    const RunResult r1 = run(doc, {"mpc", "C1", "C1", "A"});
    const RunResult r2 = run(doc, {"mpc", "C1", "C1", "A"});
    CHECK(r1.status == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("the Z25 mpc report states conditions 4 and 7") {
    const SpecDocument doc = parse_spec(read_file(data_file("example2_z25.spec")));
    const RunResult r = run(doc, {"mpc", "C1", "C1", "A"});
    CHECK(r.status == 0);
    CHECK(r.out.find("condition 4 (AA^t antidiagonal-units + palindromic duals): true") != std::string::npos);
    CHECK(r.out.find("condition 7 (non-singular + equal codes): true") != std::string::npos);
    CHECK(r.out.find("length: 24\n") != std::string::npos);
    CHECK(r.out.find("cardinality: 25^22") != std::string::npos);
    CHECK(r.out.find("d = 2") != std::string::npos);
    CHECK(r.out.find("lcd: true") != std::string::npos);
}
