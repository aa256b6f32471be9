#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "aspbd/cli.hpp"
#include "aspbd/evaluator.hpp"
#include "aspbd/generators.hpp"
#include "aspbd/program.hpp"
#include "aspbd/serialize.hpp"
#include "support/schema_check.hpp"

using namespace aspbd;
using nlohmann::json;

namespace {

const char* kExampleText =
    "b :- a. d :- a. b :- not c. a :- d, not c. a | c :- d, not b. d.\n";

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(std::vector<std::string>(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// scratch files live in one per-process directory under tmp
std::string file_with(const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "aspbd_cli_tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  return path.string();
}

std::string example_file() { return file_with("ex1.lp", kExampleText); }

bool fits(const std::string& payload, const std::string& schema_file) {
  std::string why;
  const bool ok =
      schema::validate(json::parse(payload), schema::load(schema_file), &why);
  if (!ok) MESSAGE(why);
  return ok;
}

}  // namespace

TEST_CASE("check parses and counts rules") {
  const CliResult ok = run({"check", example_file()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "{\n  \"rules\": 6\n}\n");
  CHECK(ok.err.empty());
  CHECK(fits(ok.out, "check.json"));

  const CliResult empty = run({"check", file_with("empty.lp", "")});
  CHECK(empty.code == 0);
  CHECK(empty.out == "{\n  \"rules\": 0\n}\n");

  const CliResult bad = run({"check", file_with("bad.lp", "a :-")});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("error:") == 0);

  const CliResult missing = run({"check", "/nonexistent/nowhere.lp"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read file") != std::string::npos);
}

TEST_CASE("classify reports memberships") {
  const CliResult none = run({"classify", example_file()});
  CHECK(none.code == 0);
  CHECK(none.out == "{\n  \"classes\": [],\n  \"unknown\": []\n}\n");
  CHECK(fits(none.out, "classify.json"));

  const CliResult fact = run({"classify", file_with("fact.lp", "d.")});
  CHECK(fact.code == 0);
  CHECK(json::parse(fact.out)["classes"].size() == 9);
  CHECK(fits(fact.out, "classify.json"));
}

TEST_CASE("graph exports all views in both formats") {
  const std::string ex = example_file();
  const Program p = parse_program(kExampleText);

  const CliResult d = run({"graph", ex});
  CHECK(d.code == 0);
  CHECK(json::parse(d.out) == graph_to_json(build_directed(p)));
  CHECK(fits(d.out, "graph.json"));

  const CliResult u = run({"graph", ex, "--view", "u"});
  CHECK(json::parse(u.out) == graph_to_json(build_undirected(p)));
  CHECK(fits(u.out, "graph.json"));

  const CliResult raw = run({"graph", ex, "--view", "unlabeled"});
  CHECK(json::parse(raw.out) ==
        graph_to_json(unlabel(build_undirected(p))));
  CHECK(fits(raw.out, "graph.json"));

  CHECK(run({"graph", ex, "--format", "dot"}).out.rfind("digraph", 0) == 0);
  CHECK(run({"graph", ex, "--view", "u", "--format", "dot"})
            .out.rfind("graph", 0) == 0);
  CHECK(run({"graph", ex, "--view", "zz"}).code == 2);
  CHECK(run({"graph", ex, "--format", "xml"}).code == 2);
}

TEST_CASE("backdoor verification commands") {
  const std::string ex = example_file();

  const CliResult ok = run({"backdoor", ex, "--class", "horn",
                            "--verify", "b,c"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["ok"] == true);
  CHECK(json::parse(ok.out)["atoms"] == json::array({"b", "c"}));
  CHECK(fits(ok.out, "backdoor.json"));

  const CliResult fail = run({"backdoor", ex, "--class", "horn",
                              "--verify", "c"});
  CHECK(fail.code == 1);
  CHECK(json::parse(fail.out)["ok"] == false);
  CHECK(json::parse(fail.out)["failing_assignment"] ==
        json::parse("{\"c\": false}"));
  CHECK(fits(fail.out, "backdoor.json"));

  CHECK(run({"backdoor", ex, "--class", "no-dbec", "--verify", "c"}).code == 0);
  CHECK(run({"backdoor", ex, "--class", "no-dbec", "--mode", "deletion",
             "--verify", "a,b"}).code == 0);
  CHECK(run({"backdoor", ex, "--class", "no-dbec", "--mode", "deletion",
             "--verify", "d"}).code == 1);

  // stray commas are harmless, bad atom names are not
  CHECK(run({"backdoor", ex, "--class", "horn", "--verify", "b,,c"}).code == 0);
  CHECK(run({"backdoor", ex, "--class", "horn", "--verify", "B"}).code == 2);
  CHECK(run({"backdoor", ex, "--class", "nope", "--verify", "c"}).code == 2);
  CHECK(run({"backdoor", ex, "--class", "horn"}).code == 2);
  CHECK(run({"backdoor", ex, "--class", "horn", "--verify", "c",
             "--detect", "1"}).code == 2);
  CHECK(run({"backdoor", ex, "--class", "horn", "--mode", "weak",
             "--verify", "c"}).code == 2);
}

TEST_CASE("backdoor detection commands") {
  const std::string ex = example_file();

  const CliResult hit = run({"backdoor", ex, "--class", "no-dbec",
                             "--detect", "1"});
  CHECK(hit.code == 0);
  const json hit_doc = json::parse(hit.out);
  CHECK(hit_doc["found"] == true);
  CHECK(hit_doc["backdoor"]["atoms"] == json::array({"c"}));
  CHECK(hit_doc["backdoor"]["ok"] == true);
  CHECK(fits(hit.out, "backdoor.json"));

  const CliResult miss = run({"backdoor", ex, "--class", "horn",
                              "--detect", "1"});
  CHECK(miss.code == 1);
  CHECK(miss.out == "{\n  \"found\": false\n}\n");
  CHECK(fits(miss.out, "backdoor.json"));

  const CliResult pair = run({"backdoor", ex, "--class", "horn",
                              "--detect", "2"});
  CHECK(pair.code == 0);
  CHECK(json::parse(pair.out)["backdoor"]["atoms"] ==
        json::array({"a", "b"}));

  // the size-1 deletion search succeeds as well: P minus c has no bad
  // even cycle left
  const CliResult del = run({"backdoor", ex, "--class", "no-dbec",
                             "--mode", "deletion", "--detect", "1"});
  CHECK(del.code == 0);
  CHECK(json::parse(del.out)["backdoor"]["atoms"] == json::array({"c"}));
  CHECK(json::parse(del.out)["backdoor"]["mode"] == "deletion");

  CHECK(run({"backdoor", ex, "--class", "horn", "--detect", "-1"}).code == 2);
}

TEST_CASE("solve computes answer sets through a backdoor") {
  const std::string ex = example_file();
  const Program p = parse_program(kExampleText);

  const CliResult horn = run({"solve", ex, "--class", "horn",
                              "--backdoor", "b,c"});
  CHECK(horn.code == 0);
  CHECK(horn.out ==
        solve_to_json(solve_with_backdoor(p, ClassId::horn, {"b", "c"}))
                .dump(2) +
            "\n");
  CHECK(json::parse(horn.out)["answer_sets"] ==
        json::parse("[[\"a\", \"b\", \"d\"], [\"c\", \"d\"]]"));
  CHECK(fits(horn.out, "solve.json"));

  const CliResult dbec = run({"solve", ex, "--class", "no-dbec",
                              "--auto", "1"});
  CHECK(dbec.code == 0);
  CHECK(json::parse(dbec.out)["backdoor"] == json::array({"c"}));
  CHECK(json::parse(dbec.out)["answer_sets"].size() == 2);

  // verification failures and fruitless detection are semantic negatives
  const CliResult not_backdoor = run({"solve", ex, "--class", "horn",
                                      "--backdoor", "c"});
  CHECK(not_backdoor.code == 1);
  CHECK(not_backdoor.out.empty());
  CHECK(not_backdoor.err.find("not a strong backdoor") != std::string::npos);

  const CliResult no_auto = run({"solve", ex, "--class", "horn",
                                 "--auto", "1"});
  CHECK(no_auto.code == 1);
  CHECK(no_auto.err.find("no strong horn backdoor") != std::string::npos);

  // an inconsistent program solves to the empty family with exit 1
  const std::string odd = file_with("odd.lp", "a :- not a.");
  const CliResult none = run({"solve", odd, "--class", "no-dbec",
                              "--backdoor", "a"});
  CHECK(none.code == 1);
  CHECK(json::parse(none.out)["answer_sets"] == json::array());
  CHECK(json::parse(none.out)["candidates"] ==
        json::parse("[[], [\"a\"]]"));

  CHECK(run({"solve", ex, "--class", "horn"}).code == 2);
  CHECK(run({"solve", ex, "--class", "horn", "--backdoor", "b,c",
             "--auto", "1"}).code == 2);
}

TEST_CASE("solve answers queries with matching exit codes") {
  const std::string ex = example_file();
  const auto solve_query = [&](const std::string& q) {
    return run({"solve", ex, "--class", "horn", "--backdoor", "b,c",
                "--query", q});
  };

  const CliResult count = solve_query("count");
  CHECK(count.code == 0);
  CHECK(count.out == "{\n  \"count\": 2\n}\n");
  CHECK(fits(count.out, "query.json"));

  const CliResult consistent = solve_query("consistency");
  CHECK(consistent.code == 0);
  CHECK(json::parse(consistent.out)["consistent"] == true);

  CHECK(solve_query("credulous:a").code == 0);
  const CliResult skeptical = solve_query("skeptical:a");
  CHECK(skeptical.code == 1);
  CHECK(skeptical.out == "{\n  \"skeptical\": false\n}\n");
  CHECK(solve_query("skeptical:d").code == 0);

  const CliResult listing = solve_query("enumerate");
  CHECK(listing.code == 0);
  CHECK(json::parse(listing.out)["answer_sets"].size() == 2);
  CHECK(fits(listing.out, "query.json"));

  // malformed query specs and unknown atoms are usage errors
  CHECK(solve_query("frobnicate").code == 2);
  CHECK(solve_query("credulous").code == 2);
  CHECK(solve_query("count:a").code == 2);
  CHECK(solve_query("skeptical:zz").code == 2);
  CHECK(solve_query("credulous:Bad").code == 2);

  // inconsistent program: skeptical queries hold vacuously
  const std::string odd = file_with("odd.lp", "a :- not a.");
  const CliResult vacuous = run({"solve", odd, "--class", "no-dbec",
                                 "--backdoor", "a", "--query", "skeptical:a"});
  CHECK(vacuous.code == 0);
  CHECK(json::parse(vacuous.out)["skeptical"] == true);
  const CliResult inconsistent = run({"solve", odd, "--class", "no-dbec",
                                      "--backdoor", "a", "--query",
                                      "consistency"});
  CHECK(inconsistent.code == 1);
  CHECK(json::parse(inconsistent.out)["consistent"] == false);
}

TEST_CASE("gen hitting-set emits gadget programs") {
  const CliResult direct = run({"gen", "hitting-set", "--sets", "1,2;2,3",
                                "--k", "1"});
  CHECK(direct.code == 0);
  HittingSetInstance inst;
  inst.sets = {{"1", "2"}, {"2", "3"}};
  inst.k = 1;
  CHECK(json::parse(direct.out)["program"] ==
        print_program(gen_hitting_set_program(inst, GadgetVariant::directed)));
  CHECK(fits(direct.out, "gen.json"));

  const CliResult undirected =
      run({"gen", "hitting-set", "--sets", "1,2;2,3", "--k", "1",
           "--variant", "undirected"});
  CHECK(json::parse(undirected.out)["program"] ==
        print_program(
            gen_hitting_set_program(inst, GadgetVariant::undirected)));

  const std::string inst_file = file_with(
      "inst.json", "{\"sets\": [[\"1\", \"2\"], [\"2\", \"3\"]], \"k\": 1}");
  const CliResult from_file =
      run({"gen", "hitting-set", "--instance", inst_file});
  CHECK(from_file.code == 0);
  CHECK(from_file.out == direct.out);

  CHECK(run({"gen", "hitting-set", "--instance",
             file_with("broken.json", "{")}).code == 2);
  CHECK(run({"gen", "hitting-set", "--instance",
             file_with("shape.json", "{\"sets\": 1}")}).code == 2);
  CHECK(run({"gen", "hitting-set"}).code == 2);
  CHECK(run({"gen", "hitting-set", "--sets", "1,2", "--k", "1",
             "--instance", inst_file}).code == 2);
  CHECK(run({"gen", "hitting-set", "--sets", "a-b", "--k", "1"}).code == 2);
}

TEST_CASE("gen path-gadget, pad, and random") {
  const std::string graph_file =
      file_with("chain.dg", "# aa bb cc\naa bb\nbb cc\n");
  const CliResult path = run({"gen", "path-gadget", graph_file});
  CHECK(path.code == 0);
  CHECK(json::parse(path.out)["program"] ==
        "aa :- not bb.\nbb :- cc.\ncc :- not aa.\n");
  CHECK(fits(path.out, "gen.json"));

  CHECK(run({"gen", "path-gadget",
             file_with("nohdr.dg", "aa bb\n")}).code == 2);
  CHECK(run({"gen", "path-gadget",
             file_with("badline.dg", "a b c d\n")}).code == 2);

  const CliResult padded = run({"gen", "pad",
                                file_with("empty.lp", ""), "--k", "2"});
  CHECK(padded.code == 0);
  CHECK(json::parse(padded.out)["program"] ==
        "u_1 :- not w_1.\nu_2 :- not w_2.\n"
        "w_1 :- not u_1.\nw_2 :- not u_2.\n");
  CHECK(run({"gen", "pad", file_with("empty.lp", "")}).code == 2);

  const CliResult rnd = run({"gen", "random", "--atoms", "4", "--rules", "5",
                             "--seed", "42"});
  CHECK(rnd.code == 0);
  CHECK(json::parse(rnd.out)["program"] ==
        print_program(random_program(4, 5, 0.5, 0.0, 42)));
  const CliResult rnd_again = run({"gen", "random", "--atoms", "4",
                                   "--rules", "5", "--seed", "42"});
  CHECK(rnd_again.out == rnd.out);
  CHECK(run({"gen", "random", "--atoms", "4", "--rules", "5"}).code == 2);

  const std::string out_file =
      file_with("written.lp", "placeholder to be replaced");
  const CliResult written = run({"gen", "random", "--atoms", "3",
                                 "--rules", "4", "--seed", "7",
                                 "--out", out_file});
  CHECK(written.code == 0);
  std::ifstream back(out_file, std::ios::binary);
  std::ostringstream content;
  content << back.rdbuf();
  CHECK(content.str() == print_program(random_program(3, 4, 0.5, 0.0, 7)));
}

TEST_CASE("usage errors and help exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", example_file(), "--bogus"}).code == 2);
  CHECK(run({"gen"}).code == 2);

  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check") != std::string::npos);
  CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("payload bytes are stable across runs") {
  const std::string ex = example_file();
  for (const std::initializer_list<std::string> args :
       {std::initializer_list<std::string>{"classify", ex},
        {"graph", ex, "--view", "u"},
        {"backdoor", ex, "--class", "no-dbec", "--detect", "1"},
        {"solve", ex, "--class", "horn", "--backdoor", "b,c"}}) {
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
