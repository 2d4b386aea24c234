#include "doctest.h"

#include "galrep/cli/oracles.hpp"
#include "galrep/cli/run.hpp"
#include "galrep/cli/verify.hpp"

#include <map>
#include <sstream>

using namespace galrep;
using namespace galrep::cli;

namespace {

std::vector<std::string> with_json(std::vector<std::string> args) {
    args.insert(args.end(), {"--format", "json"});
    return args;
}

// "path: value" lines below the "--" separator of the text rendering.
std::map<std::string, std::string> text_fields(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream is(text);
    std::string line;
    bool body = false;
    while (std::getline(is, line)) {
        if (line == "--") {
            body = true;
            continue;
        }
        if (!body) continue;
        const auto colon = line.find(": ");
        REQUIRE(colon != std::string::npos);
        out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

void leaves(const Json& j, const std::string& path, std::map<std::string, std::string>& out) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) leaves(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty()) {
        for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out[path] = j.is_string() ? j.get<std::string>() : j.dump();
    }
}

const std::vector<std::string> e37{"check", "--curve", "0,0,1,-1,0", "--p", "5", "--j", "2", "--sha-dim", "3"};
const std::vector<std::string> e11{"check", "--curve", "0,-1,1,-10,-20", "--p", "5", "--j", "1"};

}  // namespace

TEST_CASE("check fixtures") {
    const auto ok = run(e37);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("conclusion: Cl_K ⊗ F_p admits Sym^j E[p] as a quotient Galois module") != std::string::npos);
    REQUIRE(ok.report);
    CHECK(ok.report->result.at("local_case") == "A");
    CHECK(ok.report->result.at("bound").at("bound") == 2);
    CHECK(ok.report->result.at("a_p") == -2);

    const auto bad = run(e11);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("(c′) violated at l=11") != std::string::npos);

    auto nosha = e37;
    nosha.resize(7);
    const auto withheld = run(nosha);
    CHECK(withheld.exit_code == 0);
    CHECK(withheld.out.find("supply --sha-dim ≥ 3") != std::string::npos);
    CHECK(withheld.out.find("\nconclusion: ") == std::string::npos);
}

TEST_CASE("json round trip and determinism") {
    for (const auto& args : {e37, e11}) {
        const auto a = run(with_json(args));
        const auto parsed = Json::parse(a.out);
        CHECK(parsed.at("schema") == "galrep-report/1");
        CHECK(render_json(report_from_json(parsed)) == a.out);

        const auto b = run(with_json(args));
        auto pa = parsed, pb = Json::parse(b.out);
        pa.erase("timestamp");
        pb.erase("timestamp");
        CHECK(pa.dump() == pb.dump());
    }
    CHECK_THROWS_AS(report_from_json(Json{{"schema", "other/1"}}), Error);
    CHECK_THROWS_AS(report_from_json(Json{{"schema", "galrep-report/1"}}), Error);
}

TEST_CASE("text and json carry the same values") {
    const std::vector<std::vector<std::string>> commands{
        e37,
        e11,
        {"local", "--model", "tate", "--p", "5", "--n", "2", "--j", "2", "--t", "1", "--method", "both"},
        {"local", "--model", "ordinary", "--p", "5", "--n", "2", "--j", "1", "--cm", "--s", "1", "--method", "both"},
        {"cohomology", "--group", "gl2", "--p", "3", "--sym", "1"},
    };
    for (const auto& args : commands) {
        CAPTURE(args[0]);
        const auto text = run(args);
        const auto json = run(with_json(args));
        REQUIRE(text.report);
        std::map<std::string, std::string> expected;
        auto j = Json::parse(json.out);
        j.erase("timestamp");
        leaves(j, "", expected);
        auto got = text_fields(text.out);
        got.erase("timestamp");
        CHECK(got == expected);
        CHECK(text.exit_code == json.exit_code);
    }
}

TEST_CASE("local command") {
    const auto r = run({"local", "--model", "tate", "--p", "5", "--n", "1", "--j", "2", "--t", "0", "--method", "both"});
    CHECK(r.exit_code == 0);
    REQUIRE(r.report);
    CHECK(r.report->result.at("agree") == true);
    CHECK(r.report->result.at("closed").at("limit_quotient_dim") == 0);

    const auto b = run({"local", "--model", "ordinary", "--p", "5", "--n", "2", "--j", "1", "--cm", "--s", "1"});
    REQUIRE(b.report);
    CHECK(b.report->result.at("closed").at("local_case") == "B");
    CHECK(b.report->result.at("bound").at("raw") == 2);
    CHECK(b.report->result.at("bound").at("bound") == 1);

    const auto ss = run({"local", "--model", "ss", "--p", "7", "--n", "2", "--j", "3", "--method", "both"});
    CHECK(ss.exit_code == 0);

    const auto pg = run({"local", "--model", "potgood", "--p", "5", "--n", "2", "--j", "2", "--gens", "-1,0,0,-1"});
    CHECK(pg.exit_code == 0);
    REQUIRE(pg.report);
    CHECK(pg.report->result.at("brute").at("level_structure").at("text") == "(Z/25)^3");

    const auto np = run({"local", "--model", "potgood", "--p", "5", "--n", "2", "--j", "1", "--gens", "2,0,0,3"});
    CHECK(np.exit_code == exit_usage);
    CHECK(np.err.find("NotPrimeToP") != std::string::npos);

    CHECK(run({"local", "--model", "ordinary", "--p", "5", "--j", "1", "--s", "1"}).exit_code == exit_usage);
    CHECK(run({"local", "--model", "ordinary", "--p", "5", "--j", "1", "--m", "1", "--cm"}).exit_code == exit_usage);
    CHECK(run({"local", "--model", "tate", "--p", "5", "--j", "2", "--gens", "1,2"}).exit_code == 0);
    CHECK(run({"local", "--model", "tate", "--p", "6", "--j", "2"}).exit_code == exit_usage);
}

TEST_CASE("cohomology command") {
    const auto r = run({"cohomology", "--group", "gl2", "--p", "5", "--sym", "2"});
    CHECK(r.exit_code == 0);
    REQUIRE(r.report);
    CHECK(r.report->result.at("witness").at("order") == 4);
    CHECK(r.report->result.at("h1") == 0);
    CHECK(r.report->result.at("h1_source") == "cocycle solve");

    // |GL_2(F_7)| = 2016 is above the solver cap; the criterion still decides
    const auto big = run({"cohomology", "--group", "gl2", "--p", "7", "--sym", "1", "--h2"});
    CHECK(big.exit_code == 0);
    REQUIRE(big.report);
    CHECK(big.report->result.at("h1_source") == "vanishing criterion");
    CHECK(big.report->result.at("h2") == 0);

    // Sym^4 over F_5: no central witness, the solve still runs
    const auto s4 = run({"cohomology", "--group", "gl2", "--p", "5", "--sym", "4"});
    REQUIRE(s4.report);
    CHECK(s4.report->result.at("witness").is_null());
    CHECK(s4.exit_code == 0);

    const auto small = run({"cohomology", "--group", "borel", "--p", "3", "--sym", "1", "--h2"});
    REQUIRE(small.report);
    CHECK(small.report->result.at("h2_source") == "cocycle solve");
}

TEST_CASE("usage errors and exit codes") {
    CHECK(run({}).exit_code == exit_usage);
    CHECK(run({"frobnicate"}).exit_code == exit_usage);
    CHECK(run({"check", "--p", "5", "--j", "2"}).exit_code == exit_usage);
    CHECK(run({"check", "--curve", "0,0,1,-1,0", "--p", "5", "--j", "2", "--format", "xml"}).exit_code == exit_usage);
    CHECK(run({"check", "--curve", "0,0,1,-1,0", "--p", "5", "--j", "4"}).exit_code == exit_usage);
    CHECK(run({"check", "--curve", "0,0,0,0,0", "--p", "5", "--j", "2"}).exit_code == exit_usage);

    const auto over = run({"check", "--curve", "0,0,1,-1,0", "--p", "5", "--j", "2", "--aux-bound", "90000"});
    CHECK(over.exit_code == exit_undetermined);
    CHECK(over.err.find("BudgetExceeded") != std::string::npos);

    const auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
    CHECK(exit_code_for(ErrorKind::CapExceeded) == exit_undetermined);
    CHECK(exit_code_for(ErrorKind::InvalidJ) == exit_usage);
}

TEST_CASE("verify suites") {
    CHECK(parse_suite("local") == Suite::Local);
    CHECK_FALSE(parse_suite("everything"));
    const auto r = run({"verify", "--suite", "ecq"});
    CHECK(r.exit_code == 0);
    REQUIRE(r.report);
    CHECK(r.report->result.at("criteria").size() == 2);
    CHECK(r.out.find("criterion 8: PASS") != std::string::npos);
}

TEST_CASE("oracles") {
    CHECK(oracles::curve_corpus().size() == 20);
    CHECK(oracles::naive_point_count(ecq::Curve::parse("0,0,0,1,0"), 5) == 4);
    CHECK(oracles::discriminant_from_cubic(ecq::Curve::parse("0,0,1,-1,0")) == 37);
    const zring::Modulus mod(5, 2);
    const auto id = zring::ModularMatrix::identity(2, mod);
    CHECK(oracles::fixed_type_by_enumeration(std::vector{id}, 2, mod, 1000) == zring::AbelianPGroupType({2, 2}));
    const auto five = zring::ModularMatrix::scalar(2, 6, mod);  // fixed vectors: 5 | v
    CHECK(oracles::fixed_type_by_enumeration(std::vector{five}, 2, mod, 1000) == zring::AbelianPGroupType({1, 1}));
    CHECK_THROWS_AS(oracles::fixed_type_by_enumeration(std::vector{id}, 2, mod, 100), Error);
    CHECK(oracles::supersingular_fixed_count(5, 1, 2, 1000000) == 1);
}
