#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <sushkevich/cli.hpp>

using namespace sushkevich;
namespace fs = std::filesystem;

namespace {
  std::string data(std::string const& name) {
    return std::string(SUSHKEVICH_DATA_DIR) + "/" + name;
  }

  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int                status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  json::Json report_of(Result const& r) {
    return json::Json::parse(r.out).at("report");
  }

  fs::path scratch(std::string const& name, std::string const& contents) {
    auto path = fs::temp_directory_path() / ("sushkevich-test-" + name);
    std::ofstream(path) << contents;
    return path;
  }
}  // namespace

TEST_CASE("cli: probe reports the Mal'cev collision", "[cli]") {
  auto r = run({"probe", data("malcev.pres"), "--max-len", "2"});
  REQUIRE(r.status == cli::exit_ok);
  auto rep = report_of(r);
  CHECK(rep["status"] == "collision");
  CHECK(rep["witnesses"][0]["u"] == "u c");
  CHECK(rep["witnesses"][0]["v"] == "v d");
  CHECK(rep["witnesses"][0]["in_m"] == "distinct");
  CHECK(rep["witnesses"][0]["in_gm"] == "equal");
  CHECK(rep["witnesses"][0]["certificate"]["derivation"].back()["word"] == "v d");
  CHECK(rep["budget_spent"]["m_rules"] == 3);
}

TEST_CASE("cli: laws on Z3", "[cli]") {
  auto r = run({"laws", data("z3.table")});
  REQUIRE(r.status == cli::exit_ok);
  auto rep = report_of(r);
  CHECK(rep["is_group"] == true);
  CHECK(rep["laws"]["left_unique"]["holds"] == true);
  CHECK(rep["laws"]["right_unique"]["holds"] == true);
  CHECK(rep["laws"]["left_unlimited"]["solvable"] == true);
  CHECK(rep["laws"]["right_unlimited"]["solvable"] == true);
  CHECK(rep["laws"]["left_unlimited"]["finite_surrogate"] == true);
  CHECK(rep["right_group"]["group_order"] == 3);
}

TEST_CASE("cli: laws on a right group and a left-zero table", "[cli]") {
  auto rg = report_of(run({"laws", data("z2_right_zero2.table")}));
  CHECK(rg["is_group"] == false);
  CHECK(rg["right_group"]["group_order"] == 2);
  CHECK(rg["right_group"]["classes"] == 2);
  auto lz = report_of(run({"laws", data("left_zero2.table")}));
  CHECK(lz["laws"]["right_unique"]["holds"] == false);
  CHECK_FALSE(lz.contains("right_group"));
}

TEST_CASE("cli: kb budget exhaustion exits 3", "[cli]") {
  auto r = run({"kb", data("free_group2.pres"), "--max-rules", "1"});
  CHECK(r.status == cli::exit_budget_exhausted);
  CHECK(report_of(r)["status"] == "budget-exhausted");

  auto ok = run({"kb", data("free_group2.pres")});
  CHECK(ok.status == cli::exit_ok);
  CHECK(report_of(ok)["status"] == "confluent");
  CHECK(report_of(ok)["rule_count"] == 4);
}

TEST_CASE("cli: other verbs", "[cli]") {
  auto gm = run({"build-gm", data("malcev.pres")});
  CHECK(gm.status == cli::exit_ok);
  CHECK(report_of(gm)["relation_count"] == 22);
  CHECK(report_of(gm)["group_completion"] == true);

  auto mal = run({"malcev", data("z3.table")});
  CHECK(mal.status == cli::exit_ok);
  CHECK(report_of(mal)["violation_count"] == 0);

  auto r1 = run({"rank1", "--n", "2", "--p", "3"});
  CHECK(r1.status == cli::exit_ok);
  CHECK(report_of(r1)["nonzero"] == 32);
  CHECK(report_of(r1)["associative"] == true);
  CHECK(report_of(r1)["field"]["p"] == 3);

  auto withtable = report_of(run({"rank1", "--n", "2", "--p", "2", "--table"}));
  CHECK(withtable["matrices"].size() == 10);
  CHECK(withtable["table"]["n"] == 10);

  auto en = run({"enumerate", "--order", "3"});
  CHECK(en.status == cli::exit_ok);
  CHECK(report_of(en)["count"] == 113);

  auto words = run({"enumerate", data("free2.pres"), "--max-len", "2"});
  CHECK(report_of(words)["count"] == 7);
  CHECK(report_of(words)["elements"][3] == "a a");

  auto free_probe = run({"probe", data("free2.pres"), "--max-len", "4"});
  CHECK(free_probe.status == cli::exit_ok);
  CHECK(report_of(free_probe)["status"] == "no-collision-found");
  CHECK(report_of(free_probe)["budget_spent"]["pairs_checked"] == 465);
}

TEST_CASE("cli: probe exit 3 paths", "[cli]") {
  auto braid = scratch("braid.pres", "letters: a b\nrel: a b a = b a b\n");
  auto r     = run({"probe", braid.string(), "--max-rules", "10"});
  CHECK(r.status == cli::exit_budget_exhausted);
  CHECK(report_of(r)["status"] == "budget-exhausted");

  auto inconclusive = run({"probe", data("free2.pres"), "--max-len", "1", "--budget", "2",
                           "--max-rules", "1"});
  CHECK(inconclusive.status == cli::exit_budget_exhausted);
  CHECK(report_of(inconclusive)["status"] == "inconclusive");
  fs::remove(braid);
}

TEST_CASE("cli: input errors exit 2 and name the problem", "[cli]") {
  auto missing = run({"laws", data("no-such-file.table")});
  CHECK(missing.status == cli::exit_input_error);
  CHECK_THAT(missing.err, Catch::Matchers::ContainsSubstring("no-such-file.table"));

  auto bad = scratch("bad.pres", "rel: a b = b a\n");
  auto r   = run({"kb", bad.string()});
  CHECK(r.status == cli::exit_input_error);
  CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("line 1"));
  fs::remove(bad);

  auto table = scratch("bad.table", R"({"n": 2, "table": [[0, 1], [1]]})");
  auto t     = run({"laws", table.string()});
  CHECK(t.status == cli::exit_input_error);
  CHECK_THAT(t.err, Catch::Matchers::ContainsSubstring("row 1"));
  fs::remove(table);

  auto nonassoc = scratch("nonassoc.table", R"({"n": 2, "table": [[1, 0], [0, 0]]})");
  CHECK(run({"laws", nonassoc.string()}).status == cli::exit_input_error);
  CHECK(run({"malcev", nonassoc.string()}).status == cli::exit_input_error);
  fs::remove(nonassoc);

  auto flag = run({"kb", data("free2.pres"), "--max-rules", "lots"});
  CHECK(flag.status == cli::exit_input_error);
  CHECK_THAT(flag.err, Catch::Matchers::ContainsSubstring("--max-rules"));

  CHECK(run({"rank1", "--n", "2"}).status == cli::exit_input_error);
  CHECK(run({"rank1", "--n", "2", "--p", "4"}).status == cli::exit_input_error);
  CHECK(run({"rank1", "--n", "3", "--p", "5"}).status == cli::exit_input_error);
  CHECK(run({"enumerate", "--order", "5"}).status == cli::exit_input_error);
  CHECK(run({"enumerate"}).status == cli::exit_input_error);
  CHECK(run({"frobnicate"}).status == cli::exit_input_error);
  CHECK(run({}).status == cli::exit_input_error);
}

TEST_CASE("cli: reports are deterministic", "[cli]") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"probe", data("malcev.pres"), "--max-len", "2"},
           {"kb", data("malcev.pres")},
           {"laws", data("z2_right_zero2.table")},
           {"rank1", "--n", "2", "--p", "3", "--table"}}) {
    auto a = report_of(run(args)).dump();
    auto b = report_of(run(args)).dump();
    CHECK(a == b);
  }
}

TEST_CASE("cli: --output writes the envelope and prints a summary", "[cli]") {
  auto path = fs::temp_directory_path() / "sushkevich-test-out.json";
  auto r    = run({"probe", data("malcev.pres"), "--max-len", "2", "-o", path.string()});
  CHECK(r.status == cli::exit_ok);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("(u c, v d)"));
  std::ifstream in(path);
  auto          envelope = json::Json::parse(in);
  CHECK(envelope["meta"]["command"] == "probe");
  CHECK(envelope["meta"].contains("elapsed_ms"));
  CHECK(envelope["report"]["status"] == "collision");
  fs::remove(path);
}

TEST_CASE("cli: the installed binary", "[cli][binary]") {
  auto sh = [](std::string const& cmd) {
    int raw = std::system((std::string(SUSHKEVICH_CLI) + " " + cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(sh("probe " + data("malcev.pres") + " --max-len 2") == 0);
  CHECK(sh("kb " + data("free_group2.pres") + " --max-rules 1") == 3);
  CHECK(sh("laws " + data("missing.table")) == 2);
  CHECK(sh("--version") == 0);
}
