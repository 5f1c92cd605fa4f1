#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using symrep::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("partitions") {
    const auto r = cli({"partitions", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");

    const auto j = cli({"partitions", "3", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out) ==
          nlohmann::json({{3}, {2, 1}, {1, 1, 1}}));
}

TEST_CASE("tableaux") {
    const auto r = cli({"tableaux", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count: 2") != std::string::npos);

    const auto s = cli({"tableaux", "2,2", "--skew", "1", "--format", "json"});
    CHECK(s.code == 0);
    CHECK(nlohmann::json::parse(s.out).size() == 2);
}

TEST_CASE("dim") {
    const auto r = cli({"dim", "5,3,3,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "4158\n");

    const auto j = cli({"dim", "2,1", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out)["dim"] == "2");
}

TEST_CASE("chartable") {
    const auto r = cli({"chartable", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2+1") != std::string::npos);

    const auto csv = cli({"chartable", "3", "--format", "csv"});
    CHECK(csv.out.find("\"1+1+1\"") != std::string::npos);

    const auto j = cli({"chartable", "3", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["n"] == 3);
    CHECK(parsed["rows"].size() == 3);

    // Beyond the resource cap.
    CHECK(cli({"chartable", "13"}).code == 4);
}

TEST_CASE("chi") {
    CHECK(cli({"chi", "2,1", "3"}).out == "-1\n");
    CHECK(cli({"chi", "2,1", "3", "--method", "trace"}).out == "-1\n");
    CHECK(cli({"chi", "2,1", "3", "--method", "fock"}).out == "-1\n");

    const auto all = cli({"chi", "2,1", "1,1,1", "--method", "all"});
    CHECK(all.code == 0);
    CHECK(all.out == "mn=2 trace=2 fock=2\n");
    CHECK(cli({"chi", "2,1", "3", "--method", "all"}).out ==
          "mn=-1 trace=-1 fock=-1\n");

    const auto skewed = cli({"chi", "2,2", "3", "--skew", "1"});
    CHECK(skewed.code == 0);
    CHECK(skewed.out == "-1\n");
    // The fock method has no skew variant.
    CHECK(cli({"chi", "2,2", "3", "--skew", "1", "--method", "fock"}).code == 2);
    // Skew trace agrees with the recursion within tolerance.
    const auto skew_all = cli({"chi", "2,2", "3", "--skew", "1", "--method", "all"});
    CHECK(skew_all.code == 0);

    // Mismatched sizes are a domain error.
    CHECK(cli({"chi", "2,1", "4"}).code == 2);
}

TEST_CASE("rep") {
    const auto r = cli({"rep", "2,1", "--form", "seminormal"});
    CHECK(r.code == 0);
    CHECK(r.out.find("s_1") != std::string::npos);
    CHECK(r.out.find("-1/2") != std::string::npos);
    CHECK(r.out.find("3/4") != std::string::npos);

    const auto p = cli({"rep", "2,1", "--form", "orthogonal", "--perm", "(1 2 3)"});
    CHECK(p.code == 0);

    CHECK(cli({"rep", "2,2", "--skew", "1", "--form", "orthogonal"}).code == 0);
    CHECK(cli({"rep", "2,2", "--skew", "1", "--form", "seminormal"}).code == 2);
    CHECK(cli({"rep", "2,1"}).code == 1); // --form is required
}

TEST_CASE("jm") {
    const auto r = cli({"jm", "2,1", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0\n0 -1\n");
    CHECK(cli({"jm", "2,1", "7"}).code == 2);
    CHECK(cli({"jm", "2,1", "x"}).code == 1);
}

TEST_CASE("schur") {
    const auto r = cli({"schur", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1/12") != std::string::npos);

    const auto j = cli({"schur", "1,1", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out).size() == 2);
}

TEST_CASE("frobenius") {
    const auto r = cli({"frobenius", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1: -1\n2: 1\n");
}

TEST_CASE("idempotent") {
    const auto r = cli({"idempotent", "3", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2/3 [1,2,3]") != std::string::npos);
    CHECK(cli({"idempotent", "6", "3,2,1"}).code == 4);
}

TEST_CASE("fock-apply") {
    const auto r = cli({"fock-apply", "-2", ""});
    CHECK(r.code == 0);
    CHECK(r.out.find("1*[2]") != std::string::npos);
    CHECK(r.out.find("-1*[1,1]") != std::string::npos);

    const auto z = cli({"fock-apply", "3", "2"});
    CHECK(z.code == 0);
    CHECK(z.out.find("-> 0") != std::string::npos);

    CHECK(cli({"fock-apply", "0", "1"}).code == 2);
}

TEST_CASE("fock cap from environment") {
    setenv("SYMREP_FOCK_CAP", "3", 1);
    CHECK(cli({"fock-apply", "-2", "2"}).code == 4);
    setenv("SYMREP_FOCK_CAP", "12", 1);
    CHECK(cli({"fock-apply", "-2", "2"}).code == 0);
    unsetenv("SYMREP_FOCK_CAP");
}

TEST_CASE("verify") {
    const auto r = cli({"verify", "--n", "3", "--suite", "coxeter"});
    CHECK(r.code == 0);
    CHECK(r.out == "ok\n");
    CHECK(cli({"verify", "--n", "3", "--suite", "nonsense"}).code == 1);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == 1);
    CHECK(cli({"unknown-subcommand"}).code == 1);
    CHECK(cli({"partitions"}).code == 1);
    CHECK(cli({"dim", "1,3"}).code == 2); // parses, but not a partition
}
