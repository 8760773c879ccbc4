#include "support.hpp"

#include "lietk/algebra_file.hpp"
#include "lietk/classical.hpp"
#include "lietk/cli.hpp"
#include "lietk/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lietk;
using namespace lietk::test;
using nlohmann::json;

namespace {

const std::string data_dir = LIETK_DATA_DIR;

std::string data(const std::string& name)
{
    return data_dir + "/" + name;
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "lietk");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code)
{
    args.push_back("--json");
    args.push_back("-");
    const auto r = run_cli(args);
    CHECK(r.code == expected_code);
    return json::parse(r.out);
}

const CheckRecord& record(const Report& report, const std::string& name)
{
    for (const auto& r : report.records) {
        if (r.name == name) {
            return r;
        }
    }
    FAIL("no record " << name);
    throw std::logic_error("unreachable");
}

ParseError parse_failure(std::string_view text)
{
    try {
        parse_algebra_file(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("parsed without error: " << text);
    throw std::logic_error("unreachable");
}

const char* const sl2_text =
    "dim 3\n"
    "labels e f h\n"
    "bracket 0 1 -> 2:1\n"
    "bracket 0 2 -> 0:-2\n"
    "bracket 1 2 -> 1:2\n"
    "toral 0 0 1\n";

}  // namespace

TEST_CASE("text format")
{
    const auto file = parse_algebra_file(sl2_text);
    CHECK(file.dim == 3);
    CHECK(file.labels == std::vector<std::string>{"e", "f", "h"});
    CHECK(file.brackets.size() == 3);
    CHECK(file.toral == std::vector<Vector>{{0, 0, 1}});
    CHECK_FALSE(validate(*file.algebra()));

    const auto commented = parse_algebra_file("# sl2 fragment\n\ndim 2  # two\nbracket 0 1 -> 0:-3/2 1:\xe2\x88\x92" "1\n");
    REQUIRE(commented.brackets.size() == 2);
    CHECK(commented.brackets[0].coeff == ratio(-3, 2));
    CHECK(commented.brackets[1].coeff == -1);
    CHECK(parse_algebra_file("dim 3\n").brackets.empty());
}

TEST_CASE("parse errors carry line and column")
{
    struct Case {
        const char* text;
        std::size_t line;
        std::size_t column;
    };
    const Case cases[] = {
        {"dim 3\nbracket 0 0 -> 1:1\n", 2, 9},
        {"dim 3\nbracket 0 1 -> 2:1.5\n", 2, 18},
        {"dim 2\nbracket 0 1 -> 1:1/0\n", 2, 18},
        {"dim 2\nbracket 0 5 -> 1:1\n", 2, 11},
        {"labels a b\ndim 2\n", 1, 1},
        {"dim x\n", 1, 5},
        {"dim 2\nfoo 1\n", 2, 1},
        {"dim 2\ntoral 1\n", 2, 1},
    };
    for (const auto& c : cases) {
        CAPTURE(c.text);
        const auto e = parse_failure(c.text);
        CHECK(e.line() == c.line);
        CHECK(e.column() == c.column);
    }
    CHECK(parse_failure("{\"dim\": 2, \"brackets\": [[0, 1, 0, 1.5]]}").line() == 1);
    CHECK(parse_failure("{\"dim\": 2,\n").line() == 2);
}

TEST_CASE("text and JSON round trips")
{
    for (auto family : {ClassicalFamily::sl, ClassicalFamily::so_odd, ClassicalFamily::sp}) {
        const auto alg = build_classical(family, 2);
        const auto file = make_algebra_file(*alg.algebra, alg.toral.chosen_basis());
        for (const auto& text : {to_text(file), to_json_text(file)}) {
            const auto back = parse_algebra_file(text);
            CHECK(back.dim == file.dim);
            CHECK(back.labels == file.labels);
            CHECK(back.toral == file.toral);
            CHECK(back.brackets.size() == file.brackets.size());
            CHECK(to_text(back) == to_text(file));
        }
    }
    // The shipped JSON example describes the same algebra as the text one.
    const auto a = cli::load_file(data("sl3.txt"));
    const auto b = cli::load_file(data("sl3.json"));
    CHECK(to_text(a.file) == to_text(b.file));
}

TEST_CASE("content digest")
{
    // Published FNV-1a 64-bit test vectors.
    CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(content_digest("a") == "fnv1a64:af63dc4c8601ec8c");
    CHECK(content_digest("foobar") == "fnv1a64:85944171f73967e8");
    CHECK(cli::load_text("x", sl2_text).digest == content_digest(sl2_text));
}

TEST_CASE("validate")
{
    auto report = cli::cmd_validate(cli::load_file(data("sl2.txt")));
    CHECK(report.ok());

    report = cli::cmd_validate(cli::load_file(data("sl2_bad_jacobi.txt")));
    CHECK_FALSE(report.ok());
    const auto& jacobi = record(report, "jacobi");
    CHECK(jacobi.status == CheckStatus::fail);
    CHECK(jacobi.witness["triple"] == json::array({0, 1, 2}));
    CHECK(jacobi.witness["residual"] == json::array({"0", "0", "-1"}));

    CHECK(cli::cmd_validate(cli::load_text("abelian", "dim 3\n")).ok());
}

TEST_CASE("decompose")
{
    auto report = cli::cmd_decompose(cli::load_file(data("sl3.txt")));
    CHECK(report.ok());
    const auto& d = record(report, "decomposition");
    CHECK(d.details["root_count"] == 6);
    CHECK(d.details["zero_space_dim"] == 2);
    for (const auto& w : d.details["weights"]) {
        CHECK(w["dim"] == (w["weight"] == json::array({"0", "0"}) ? 2 : 1));
    }

    report = cli::cmd_decompose(cli::load_file(data("sl2_nilpotent_toral.txt")));
    CHECK_FALSE(report.ok());
    CHECK(record(report, "decomposition").status == CheckStatus::fail);

    report = cli::cmd_decompose(cli::load_file(data("abelian3.txt")));
    CHECK(report.ok());
    CHECK(record(report, "decomposition").details["root_count"] == 0);

    CHECK_THROWS_AS(cli::cmd_decompose(cli::load_text("no toral", "dim 3\n")), cli::InputError);
}

TEST_CASE("admissible")
{
    auto report = cli::cmd_admissible(cli::load_file(data("sl4.txt")), {});
    CHECK(report.ok());
    const auto& adm = record(report, "admissibility");
    for (const auto& row : adm.details["pairing"]) {
        for (const auto& entry : row) {
            const std::string s = entry.get<std::string>();
            CHECK((s == "-2" || s == "-1" || s == "0" || s == "1" || s == "2"));
        }
    }
    CHECK(adm.details["components"] == 1);

    report = cli::cmd_admissible(cli::load_file(data("gl3.txt")), {});
    CHECK_FALSE(report.ok());
    CHECK(record(report, "admissibility").witness["clause"] == "toral-not-in-bracket-span");

    report = cli::cmd_admissible(cli::load_file(data("sl2_sl2.txt")), {});
    CHECK(report.ok());
    CHECK(record(report, "admissibility").details["components"] == 2);
}

TEST_CASE("verify")
{
    cli::VerifyOptions chain_only{{"chain"}, {}};
    CHECK(cli::cmd_verify_family(RootFamily::A, 4, chain_only).ok());

    cli::VerifyOptions strings{{"root-strings"}, {}};
    const auto sl3 = cli::cmd_verify(cli::load_file(data("sl3.txt")), strings);
    CHECK(sl3.ok());
    CHECK(record(sl3, "root-strings").details["strings"].size() == 36);

    cli::VerifyOptions sdiv_only{{"sdiv"}, {}};
    const auto bc2 = cli::cmd_verify_family(RootFamily::BC, 2, sdiv_only);
    CHECK(bc2.ok());
    CHECK(record(bc2, "sdiv").details["sdiv_count"] == 8);
    CHECK(record(bc2, "sdiv").details["reduced"] == false);

    // Every suite on a small algebra, in name order.
    const auto all = cli::cmd_verify(cli::load_file(data("sl2_sl2.txt")), {});
    CHECK(all.ok());
    std::vector<std::string> names;
    for (const auto& r : all.records) {
        names.push_back(r.name);
    }
    // Pipeline records first, then every suite; chain needs --family.
    std::vector<std::string> expected = {"jacobi", "decomposition", "admissibility"};
    expected.insert(expected.end(), cli::suite_names().begin(), cli::suite_names().end());
    CHECK(names == expected);
    CHECK(record(all, "chain").status == CheckStatus::skip);

    CHECK_FALSE(cli::cmd_verify(cli::load_file(data("gl3.txt")), {}).ok());
}

TEST_CASE("reports round trip and are deterministic")
{
    const auto a = cli::cmd_admissible(cli::load_file(data("so5.txt")), {5, 3});
    const auto b = cli::cmd_admissible(cli::load_file(data("so5.txt")), {5, 3});
    CHECK(to_json_text(a) == to_json_text(b));
    CHECK(parse_report(to_json_text(a)) == a);

    const auto failing = cli::cmd_admissible(cli::load_file(data("gl3.txt")), {});
    const auto back = parse_report(to_json_text(failing));
    CHECK(back == failing);
    CHECK(back.verdict() == "failure");

    auto text = to_json_text(failing);
    const auto pos = text.find("\"failure\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "\"ok\"");
    CHECK_THROWS_AS(parse_report(text), std::invalid_argument);
    CHECK_THROWS_AS(parse_report("[]"), std::invalid_argument);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli({"validate", data("sl2.txt")}).code == cli::exit_ok);
    CHECK(run_cli({"validate", data("sl2_bad_jacobi.txt")}).code == cli::exit_check_failure);
    CHECK(run_cli({"validate", data("missing.txt")}).code == cli::exit_input_error);
    CHECK(run_cli({"decompose", data("sl2_nilpotent_toral.txt")}).code == cli::exit_check_failure);
    CHECK(run_cli({"admissible", data("gl3.txt")}).code == cli::exit_check_failure);
    CHECK(run_cli({"admissible", data("sl3.txt"), "--seed", "9", "--samples", "2"}).code == cli::exit_ok);
    CHECK(run_cli({"verify", "--family", "A", "--n", "4", "--suite", "chain"}).code == cli::exit_ok);
    CHECK(run_cli({"verify", "--family", "A", "--n", "4", "--suite", "nonsense"}).code == cli::exit_input_error);
    CHECK(run_cli({"verify", "--family", "E", "--n", "4"}).code == cli::exit_input_error);
    CHECK(run_cli({"verify", "--family", "A"}).code == cli::exit_input_error);
    CHECK(run_cli({"frobnicate"}).code == cli::exit_input_error);
    CHECK(run_cli({"--help"}).code == cli::exit_ok);

    const auto bad = run_cli({"validate", data("sl2.txt"), "--json", "/nonexistent/dir/out.json"});
    CHECK(bad.code == cli::exit_input_error);

    const auto parse = run_cli({"verify", data("sl2_bad_jacobi.txt")});
    CHECK(parse.code == cli::exit_check_failure);
}

TEST_CASE("JSON output")
{
    const auto j = run_json({"verify", "--family", "BC", "--n", "2", "--suite", "sdiv"}, cli::exit_ok);
    CHECK(j["format_version"] == 1);
    CHECK(j["verdict"] == "ok");
    CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK_FALSE(j.contains("timing_ms"));

    const auto path = std::filesystem::temp_directory_path() / "lietk_test_report.json";
    const auto r = run_cli({"validate", data("sl2_bad_jacobi.txt"), "--json", path.string()});
    CHECK(r.code == cli::exit_check_failure);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto report = parse_report(buffer.str());
    CHECK(report.verdict() == "failure");
    CHECK(record(report, "jacobi").witness["triple"] == json::array({0, 1, 2}));
    std::filesystem::remove(path);
}
