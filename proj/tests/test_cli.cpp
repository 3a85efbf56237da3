#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "p5sparse/formats.hpp"
#include "p5sparse/iso.hpp"

using namespace p5sparse;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("recognize examples") {
  auto r = run({"recognize"}, "Dhc\n");
  CHECK(r.code == 0);
  auto env = lines(r.out).at(0);
  CHECK(env["command"] == "recognize");
  CHECK(env["exit_status"] == 0);
  CHECK(env["input_digest"].get<std::string>().size() == 16);
  for (const auto& rep : env["payload"]["reports"]) CHECK(rep["member"] == true);

  r = run({"recognize", "--certificate"}, encode_graph6(named::path(6)) + "\n");
  CHECK(r.code == 0);
  for (const auto& rep : lines(r.out).at(0)["payload"]["reports"]) {
    CHECK(rep["member"] == false);
    CHECK(rep["witness"]["window"].size() == 6);
    CHECK(rep["witness"]["verified"] == true);
  }

  const auto bundle = run({"gen", "--class", "bundle", "--arms", "5"});
  r = run({"recognize", "--family", "p5-cop5-bull"}, bundle.out);
  const auto rep = lines(r.out).at(0)["payload"]["reports"].at(0);
  CHECK(rep["member"] == true);
  CHECK(rep["prime_nodes"].at(0)["class"]["kind"] == "BundleP5");
  CHECK(rep["prime_nodes"].at(0)["class"]["arms"] == 5);
}

TEST_CASE("solve, verify and gen examples") {
  // solve reads weights from a file; unit weights give the plain optimum
  auto r = run({"solve", "--problem", "stable"}, "Dhc\n");
  CHECK(lines(r.out).at(0)["payload"]["solution"]["objective"] == 2);

  r = run({"verify", "--theorem", "recognizer", "--max-n", "7"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["payload"]["mismatches"] == 0);

  r = run({"gen", "--class", "bundle", "--arms", "2"});
  CHECK(r.code == 0);
  CHECK(canonical_code(decode_graph6(r.out)) == canonical_code(named::path(5)));
}

TEST_CASE("stream handling and determinism") {
  const std::string input = "Dhc\n" + encode_graph6(named::bull()) + "\n" + encode_graph6(named::path(6)) + "\n";
  const auto a = run({"recognize", "--certificate"}, input);
  const auto b = run({"recognize", "--certificate", "--workers", "2"}, input);
  CHECK(a.out == b.out);
  CHECK(lines(a.out).size() == 3);
  CHECK(run({"md"}, input).out == run({"md"}, input).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"recognize"}, "not graph6\n").code == 1);
  CHECK(run({"recognize", "--bogus"}, "Dhc\n").code == 1);
  CHECK(run({}, "").code == 1);
  CHECK(run({"classify"}, "Bw\n").code == 1);
  CHECK(run({"solve", "--problem", "clique", "--weights", "/nonexistent/file"}, "Dhc\n").code == 1);
  CHECK(run({"convert", "--to", "dot"}, "Dhc\n").code == 0);
  CHECK(run({"gen", "--class", "bundle", "--arms", "40", "--to", "graph6"}).code == 1);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("convert round trip") {
  const auto g = named::bull();
  const auto el = run({"convert", "--to", "edgelist"}, encode_graph6(g) + "\n");
  const auto back = run({"convert", "--to", "graph6"}, el.out);
  CHECK(back.out == encode_graph6(g) + "\n");
  const auto dot = run({"convert", "--to", "dot"}, el.out);
  CHECK(dot.out == encode_dot(g));
}
