#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "affmon/cli.hpp"
#include "affmon/io.hpp"

using namespace affmon;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& rel) {
  return std::string(AFFMON_CORPUS_DIR) + "/" + rel;
}

std::string temp_doc(const std::string& name, const std::string& content) {
  std::string path = (std::filesystem::temp_directory_path() / name).string();
  write_text_file(path, content);
  return path;
}

}  // namespace

TEST_CASE("analyze reports the expected facts and exits 0") {
  RunResult r = run({"analyze", corpus("monoids/quadric.json"), "--format", "json"});
  REQUIRE(r.code == cli::exit_yes);
  Json doc = parse_json_text(r.out, "report");
  CHECK(doc["tool"] == "affmon");
  CHECK(doc["version"] == cli::tool_version);
  CHECK(doc["command"] == "analyze");
  CHECK(doc["exit_code"] == 0);
  CHECK(doc["monoid"]["reduced"] == true);
  CHECK(doc["monoid"]["root_closed"] == true);
  CHECK(doc["monoid"]["dim"] == 2);
  CHECK(doc["monoid"]["face_count"] == 4);
}

TEST_CASE("reports are byte identical across runs") {
  std::vector<std::string> args = {"theorem", corpus("monoids/quadric.json"),
                                   "--format", "json"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == cli::exit_yes);
  CHECK(a.out == b.out);

  RunResult c = run({"analyze", corpus("monoids/unitful.json")});
  RunResult d = run({"analyze", corpus("monoids/unitful.json")});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes separate yes, no, unsupported, usage and budget") {
  CHECK(run({"very-solid", corpus("monoids/n2.json"), "--ring", "Z"}).code ==
        cli::exit_yes);
  CHECK(run({"very-solid", corpus("monoids/n1.json"), "--ring", "QxQ"}).code ==
        cli::exit_no);
  // not root closed, outside the supported hypotheses
  CHECK(run({"logreg", corpus("monoids/numsg23.json")}).code == cli::exit_unsupported);
  // the twisted cubic ideal needs more than 3 reduction steps
  CHECK(run({"theorem", corpus("monoids/twisted.json"), "--budget", "3"}).code ==
        cli::exit_budget);

  RunResult missing = run({"analyze", "/does/not/exist.json"});
  CHECK(missing.code == cli::exit_usage);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  CHECK(run({"bogus-subcommand"}).code == cli::exit_usage);
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"analyze"}).code == cli::exit_usage);  // missing the monoid file
  CHECK(run({"analyze", corpus("monoids/n1.json"), "--format", "yaml"}).code ==
        cli::exit_usage);
  CHECK(run({"oracle-dim", corpus("monoids/n1.json"), "--ring", "mod6"}).code ==
        cli::exit_usage);
}

TEST_CASE("parse errors name the file position or the field") {
  std::string broken = temp_doc("affmon_cli_broken.json", "{\n  \"a\": ,\n}");
  RunResult r = run({"analyze", broken});
  CHECK(r.code == cli::exit_usage);
  CHECK(r.err.find(":2:") != std::string::npos);

  std::string missing = temp_doc("affmon_cli_missing.json", R"({"ambient_rank": 2})");
  RunResult m = run({"analyze", missing});
  CHECK(m.code == cli::exit_usage);
  CHECK(m.err.find("generators") != std::string::npos);

  std::remove(broken.c_str());
  std::remove(missing.c_str());
}

TEST_CASE("ring shorthands and ring files agree") {
  RunResult a = run({"very-solid", corpus("monoids/n1.json"), "--ring", "QxQ",
                     "--format", "json"});
  RunResult b = run({"very-solid", corpus("monoids/n1.json"), "--ring",
                     corpus("rings/qxq.json"), "--format", "json"});
  CHECK(a.code == cli::exit_no);
  CHECK(a.out == b.out);
}

TEST_CASE("verify accepts every emitted certificate and rejects tampering") {
  for (const char* cmd : {"very-solid", "logreg", "theorem"}) {
    for (const char* ring : {"Q", "F2", "Z", "mod6", "QxQ"}) {
      RunResult r = run({cmd, corpus("monoids/quadric.json"), "--ring", ring,
                         "--format", "json"});
      CAPTURE(cmd);
      CAPTURE(ring);
      std::string path = temp_doc("affmon_cli_report.json", r.out);
      RunResult v = run({"verify", path});
      CHECK(v.code == cli::exit_yes);
      CHECK(v.out.find("result: accepted") != std::string::npos);
      std::remove(path.c_str());
    }
  }
}

TEST_CASE("verify rejects a doctored certificate") {
  RunResult r = run({"theorem", corpus("monoids/quadric.json"), "--format", "json"});
  Json doc = parse_json_text(r.out, "report");

  // claim a wrong monoid dimension in the dimension step
  Json tampered = doc;
  bool patched = false;
  for (Json& s : tampered["certificate"]["steps"]) {
    if (s["rule"] == "dimension") {
      s["data"]["dim"] = 7;
      patched = true;
    }
  }
  REQUIRE(patched);
  std::string path = temp_doc("affmon_cli_tampered.json", tampered.dump());
  RunResult v = run({"verify", path});
  CHECK(v.code == cli::exit_no);
  CHECK(v.out.find("result: rejected") != std::string::npos);
  CHECK(v.out.find("failed step") != std::string::npos);
  std::remove(path.c_str());

  // a structurally broken document is malformed, not rejected
  Json broken = doc;
  broken["certificate"].erase("steps");
  std::string bpath = temp_doc("affmon_cli_broken_cert.json", broken.dump());
  CHECK(run({"verify", bpath}).code == cli::exit_usage);
  std::remove(bpath.c_str());
}

TEST_CASE("polynomial centers reach the pipeline from a file") {
  // (x1 - 1) on N^2 inverts the first generator
  std::string center = temp_doc("affmon_cli_poly_center.json", R"({
    "center": {"polynomial_generators": [
      {"terms": [{"coeff": "1", "exponents": [1, 0]},
                 {"coeff": "-1", "exponents": [0, 0]}]}
    ]}
  })");
  RunResult r = run({"logreg", corpus("monoids/n2.json"), "--prime", center,
                     "--format", "json"});
  CHECK(r.code == cli::exit_yes);
  Json doc = parse_json_text(r.out, "report");
  CHECK(doc["verdict"] == "yes");

  // polynomial centers need a coefficient field
  RunResult z = run({"logreg", corpus("monoids/n2.json"), "--prime", center,
                     "--ring", "Z"});
  CHECK(z.code == cli::exit_usage);
  std::remove(center.c_str());
}

TEST_CASE("a center whose support spans no face is reported, not crashed") {
  // the middle generator (1,1) is interior: twice it is the sum of the
  // outer two, so its face closure drags them in
  std::string center = temp_doc("affmon_cli_nonface.json", R"({
    "center": {"monoid_prime": {"face_generators": [1]}}
  })");
  RunResult r = run({"logreg", corpus("monoids/quadric.json"), "--prime", center,
                     "--format", "json"});
  CHECK(r.code == cli::exit_unsupported);
  Json doc = parse_json_text(r.out, "report");
  CHECK(doc.contains("rejection"));
  std::remove(center.c_str());

  std::string oob = temp_doc("affmon_cli_oob.json", R"({
    "center": {"monoid_prime": {"face_generators": [9]}}
  })");
  CHECK(run({"logreg", corpus("monoids/quadric.json"), "--prime", oob}).code ==
        cli::exit_unsupported);
  std::remove(oob.c_str());
}

TEST_CASE("no-oracle runs stay structural and still decide monomial scenarios") {
  RunResult r = run({"theorem", corpus("monoids/quadric.json"), "--no-oracle",
                     "--format", "json"});
  CHECK(r.code == cli::exit_yes);
  Json doc = parse_json_text(r.out, "report");
  for (const Json& s : doc["certificate"]["steps"]) CHECK(s["method"] != "oracle");
}

TEST_CASE("oracle-dim prints the reduced basis and the dimensions") {
  RunResult r = run({"oracle-dim", corpus("monoids/numsg23.json"), "--format", "json"});
  REQUIRE(r.code == cli::exit_yes);
  Json doc = parse_json_text(r.out, "report");
  CHECK(doc["dim"] == "1");
  CHECK(doc["monoid_dim"] == 1);
  CHECK(doc["agrees_with_monoid_dim"] == true);
  CHECK(doc["reduced_basis"].size() == 1);
}

TEST_CASE("help and version exit cleanly") {
  RunResult h = run({"--help"});
  CHECK(h.code == cli::exit_yes);
  CHECK(h.out.find("analyze") != std::string::npos);
  RunResult v = run({"--version"});
  CHECK(v.code == cli::exit_yes);
  CHECK(v.out.find(cli::tool_version) != std::string::npos);
}
