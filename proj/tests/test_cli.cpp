#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "permcomp/cli.hpp"
#include "permcomp/verify.hpp"

using namespace permcomp;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / (name + "-" + std::to_string(::getpid()))) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("compgraph verb") {
  const Outcome r = run({"compgraph", "461532", "--json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["edges"].size() == 4);
  CHECK(doc["order"] == 6);
  // Global flags may also follow the verb arguments.
  CHECK(run({"--json", "compgraph", "461532"}).out == r.out);
  const Outcome weighted = run({"compgraph", "1234", "--weighted", "--json"});
  CHECK(json::parse(weighted.out)["weights"].size() == 3);
  CHECK(run({"compgraph", "461532", "--dot"}).out.find("--") != std::string::npos);
  CHECK(run({"digraph", "461532", "--json"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-verb"}).code == 2);
  CHECK(run({"compgraph", "1123"}).code == 2);
  CHECK(run({"compgraph"}).code == 2);
  CHECK(run({"preimage", "--shape", "star:2", "--n", "11"}).code == 2);
  CHECK(run({"base-perms", "--graph", "star:3", "--maxlen", "12"}).code == 2);
  CHECK(run({"--version"}).code == 0);
  CHECK(run({"patterns", "461532", "132", "--count"}).out == "4 occurrence(s) of 132 in 461532\n");
  CHECK(run({"avoiders", "6", "123", "--count"}).out == "132\n");
  CHECK(run({"verify", "thm3.6", "--n", "5"}).code == 0);
}

TEST_CASE("table h csv reproduces the published table") {
  const Outcome r = run({"table", "h", "--max-m", "5", "--max-n", "12", "--csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m\\n,1,2,3,4,5,6,7,8,9,10,11,12");
  const auto& table = published_h_table();
  for (int m = 1; m <= 5; ++m) {
    REQUIRE(std::getline(lines, line));
    std::string expected = std::to_string(m);
    for (long v : table[m - 1]) expected += "," + std::to_string(v);
    CHECK(line == expected);
  }
}

TEST_CASE("other verbs") {
  CHECK(run({"bijection", "m", "5736142"}).out == "M(5736142) = 5634127\n");
  CHECK(run({"bijection", "t", "5736142"}).out == "T^(m-2)(5736142) = 5734162\n");
  CHECK(run({"bijection", "t", "5734162", "--inverse"}).out == "T^-(m-2)(5734162) = 5736142\n");
  CHECK(run({"preimage", "--shape", "star:2", "--n", "5", "--avoid", "132", "--count"}).out == "1 permutation(s)\n");
  CHECK(run({"minimize", "321"}).code == 0);
  CHECK(run({"realize132", "5736124"}).code == 2);
  const Outcome base = run({"base-perms", "--graph", "star:3", "--avoid", "132", "--maxlen", "9", "--json"});
  REQUIRE(base.code == 0);
  CHECK(base.out.find("5634127") != std::string::npos);
  const Outcome oeis = run({"table", "oeis", "--max-n", "12"});
  CHECK(oeis.out.find("# A000337") != std::string::npos);
  const Outcome bij = run({"bijection", "verify", "--shape", "path:3", "--n", "7", "--json"});
  CHECK(bij.code == 0);
}

TEST_CASE("json output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "--no-cache", "verify", "lemma3.3"},
        std::vector<std::string>{"--json", "--no-cache", "preimage", "--shape", "path:3", "--n", "7"},
        std::vector<std::string>{"--json", "avoiders", "5", "132"}}) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache is transparent and rejects tampering") {
  TempFile file("permcomp-cache-test");
  const std::vector<std::string> verb{"--json", "preimage", "--shape", "path:3", "--n", "8"};
  auto with_cache = verb;
  with_cache.insert(with_cache.begin(), {"--cache", file.path.string()});
  auto without = verb;
  without.insert(without.begin(), "--no-cache");

  const Outcome fresh = run(without);
  const Outcome cold = run(with_cache);
  REQUIRE(std::filesystem::exists(file.path));
  const Outcome warm = run(with_cache);
  CHECK(cold.out == fresh.out);
  CHECK(warm.out == fresh.out);

  // Alter the stored result without updating its checksum.
  json doc;
  {
    std::ifstream in(file.path);
    in >> doc;
  }
  REQUIRE(doc["entries"].size() == 1);
  for (auto& entry : doc["entries"]) entry["result"] = json::array({"stale"});
  {
    std::ofstream out(file.path);
    out << doc.dump();
  }
  CHECK(run(with_cache).out == fresh.out);

  // Entries from another version are ignored too.
  {
    std::ifstream in(file.path);
    in >> doc;
  }
  for (auto& entry : doc["entries"]) {
    entry["version"] = "permcomp 0.0.1";
    entry["result"] = json::array({"stale"});
    entry["checksum"] = cli::checksum(entry["result"].dump());
  }
  {
    std::ofstream out(file.path);
    out << doc.dump();
  }
  CHECK(run(with_cache).out == fresh.out);

  // A file that is not JSON at all is treated as empty.
  {
    std::ofstream out(file.path);
    out << "garbage";
  }
  CHECK(run(with_cache).out == fresh.out);
}

TEST_CASE("result cache api") {
  TempFile file("permcomp-cache-api");
  {
    cli::ResultCache cache(file.path);
    CHECK_FALSE(cache.lookup("op", {{"n", 1}}));
    cache.store("op", {{"n", 1}}, json{{"value", 42}});
  }
  cli::ResultCache reopened(file.path);
  const auto hit = reopened.lookup("op", {{"n", 1}});
  REQUIRE(hit);
  CHECK((*hit)["value"] == 42);
  CHECK_FALSE(reopened.lookup("op", {{"n", 2}}));
  CHECK(reopened.hits() == 1);
  CHECK(cli::checksum("") == "cbf29ce484222325");
}

TEST_CASE("reports round trip through json") {
  Report r("claim", "text");
  r.witnesses = {"a", "b"};
  r.fail("123");
  r.runtime_seconds = 2;
  const Report back = Report::from_json(r.to_json(true));
  CHECK(back.claim == "claim");
  CHECK_FALSE(back.pass);
  CHECK(back.counterexamples == std::vector<std::string>{"123"});
  CHECK(back.to_json() == r.to_json());
  CHECK_FALSE(r.to_json().contains("runtime_seconds"));
}
