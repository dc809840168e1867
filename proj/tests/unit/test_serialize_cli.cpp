#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "delsub/cli.hpp"
#include "delsub/errors.hpp"
#include "delsub/serialize.hpp"

using namespace delsub;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "delsub");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("json roundtrips") {
  const EditScript script{{2, 5}, {{1, 1}}, {3}};
  CHECK(edit_script_from_json(to_json(script)) == script);
  const Partition p{{0, 2, 5}, {{1, 1, 2}, {0, 1, 1}}};
  CHECK(partition_from_json(to_json(p)) == p);
  const CodeParams c{Family::C4, 3, 6, 2, 0, {1, 2, 3}};
  CHECK(code_params_from_json(to_json(c)) == c);
  const Counterexample ce{Sequence::parse("012", 3), Sequence::parse("210", 3), Sequence::parse("1", 3)};
  CHECK(counterexample_from_json(to_json(ce)) == ce);
  CHECK_THROWS_AS(partition_from_json(Json::parse(R"({"nope": 1})")), ParseError);
}

TEST_CASE("cli examples") {
  auto r = invoke({"transform", "--op", "g", "--q", "2", "1101"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,1,2,3\n");
  r = invoke({"code", "enum", "--family", "C1", "--n", "4", "--s", "0", "--a", "0"});
  CHECK(r.out == "0000\n0110\n1001\n1111\n");
  r = invoke({"simulate", "--n", "6", "--s", "1", "--trials", "1000", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1000/1000 decoded\n");
}

TEST_CASE("cli transform ops") {
  CHECK(invoke({"transform", "--op", "f", "101"}).out == "1,1,2\n");
  CHECK(invoke({"transform", "--op", "d", "--q", "3", "1202"}).out == "1112\n");
  CHECK(invoke({"transform", "--op", "sigma", "1,0,-1,2"}).out == "3\n");
  CHECK(invoke({"transform", "--op", "vt", "--k", "1", "1,1,2"}).out == "9\n");
  CHECK(invoke({"transform", "--op", "vt", "--k", "1", "--mod", "5", "1,1,2"}).out == "4\n");
}

TEST_CASE("cli json output parses") {
  for (auto args : std::vector<std::vector<const char*>>{
           {"--format", "json", "transform", "--op", "g", "1101"},
           {"--format", "json", "ball", "--kind", "dst", "--s", "1", "--t", "0", "10"},
           {"--format", "json", "partition", "--t", "1", "--s", "1", "00", "11"},
           {"--format", "json", "code", "best", "--family", "C3", "--t", "2", "--n", "6"},
           {"--format", "json", "code", "member", "--n", "4", "--a", "0", "0110"},
           {"--format", "json", "encode", "--s", "1", "0110"},
           {"--format", "json", "verify", "--family", "C1", "--n", "4-6", "--s", "1"},
           {"--format", "json", "verify", "--audit", "windows", "--q", "3", "--t", "2", "--n", "5"},
           {"--format", "json", "simulate", "--n", "5", "--trials", "20", "--model", "DST", "--s", "1"}}) {
    const auto r = invoke(args);
    CHECK(r.code == 0);
    CHECK(Json::accept(r.out));
  }
}

TEST_CASE("cli codec and exit codes") {
  auto enc = invoke({"encode", "--s", "0", "0110"});
  CHECK(enc.out == "{\"N\":11,\"n\":4,\"n1\":3,\"n2\":4,\"s\":0}\n01100000000\n");
  auto dec = invoke({"decode", "--n", "4", "--s", "0", "1100000000"});
  CHECK(dec.code == 0);
  CHECK(dec.out.substr(dec.out.find('\n') + 1) == "0110\n");
  CHECK(invoke({"decode", "--n", "4", "--s", "0", "1111111010"}).code == 1);
  CHECK(invoke({"decode", "--n", "4", "--s", "0", "11111"}).code == 1);
  CHECK(invoke({"transform", "--op", "zz", "01"}).code == 2);
  CHECK(invoke({"transform", "--q", "2", "012"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "--family", "C1", "--n", "7", "--residues", "all", "--rule", "off-by-one"}).code ==
        1);
  const auto help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("pigeonhole_floor") != std::string::npos);
}

TEST_CASE("cli csv") {
  const auto r = invoke({"--format", "csv", "verify", "--family", "C1", "--n", "4-5"});
  CHECK(r.out.rfind(cell_csv_header() + "\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  const auto b = invoke({"--format", "csv", "code", "best", "--n", "8"});
  CHECK(b.out == "family,q,n,t,s,best_size,pigeonhole_floor,redundancy_bits\nC1,2,8,1,0,30,29,3.0931\n");
}
