#include <catch_amalgamated.hpp>

#include <sstream>

#include "repring_commands.hpp"

using repring::cli::Json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = repring::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  auto r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("tensor") {
  auto j = invoke_json({"tensor", "--group", "SL(2)", "--lhs", "1", "--rhs", "1"});
  CHECK(j["schema"] == 1);
  CHECK(j["decomposition"] == Json::parse(R"j({"0":1,"2":1})j"));
  CHECK(j["dimension_check"]["ok"] == true);

  j = invoke_json({"tensor", "--group", "Sp(4)", "--lhs", "0,0", "--rhs", "1,0"});
  CHECK(j["decomposition"] == Json::parse(R"j({"1,0":1})j"));

  j = invoke_json({"tensor", "--group", "O(3)", "--lhs", "1", "--rhs", "1"});
  CHECK(j["decomposition"].size() == 3);
  CHECK(j["decomposition"] == Json::parse(R"j({"()":1,"1,1":1,"2":1})j"));

  auto t = invoke({"tensor", "--group", "SL(3)", "--lhs", "1,0", "--rhs", "0,1", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out == "0,0\t1\n1,1\t1\ndim 3 x 3 = 9 = 9 ok\n");
}

TEST_CASE("usage errors exit with 2") {
  auto r = invoke({"tensor", "--group", "SL(2)", "--lhs", "1,x", "--rhs", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(invoke({"tensor", "--group", "SL(2)", "--lhs", "-1", "--rhs", "1"}).code == 2);
  CHECK(invoke({"tensor", "--group", "XY(2)", "--lhs", "1", "--rhs", "1"}).code == 2);
  CHECK(invoke({"tensor", "--group", "SL(2)", "--lhs", "1"}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"qtrace", "--n", "2", "--m", "3"}).code == 2);
  CHECK(invoke({"frt", "normalform", "--n", "3", "--word", "rho7"}).code == 2);
  CHECK(invoke({"frt", "hilbert", "--group", "GL(3)"}).code == 2);
  CHECK(invoke({"verify-paper", "--only", "nonsense"}).code == 2);
  CHECK(invoke({"verify-paper", "--only", "oq3", "--data-dir", "/nonexistent"}).code == 2);
  CHECK(invoke({"tensor", "--group", "SL(2)", "--lhs", "1", "--rhs", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("help") {
  auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("char") {
  auto j = invoke_json({"char", "--group", "SL(2)", "--label", "2"});
  CHECK(j["dimension"] == 3);
  CHECK(j["character"] == "z1^2 + 1 + z1^-2");
  j = invoke_json({"char", "--group", "O(3)", "--label", "1,1"});
  CHECK(j["dimension"] == 3);
  CHECK(j.contains("z_slice"));
}

TEST_CASE("coc") {
  auto j = invoke_json({"coc", "express", "--group", "SL(2)", "--label", "2"});
  CHECK(j["expression"] == "s1^2 - 1");
  CHECK(j["round_trip"] == true);
  j = invoke_json({"coc", "verify", "--group", "O(4)"});
  CHECK(j["relations"].size() == 3);
  for (const auto& r : j["relations"]) CHECK(r["holds"] == true);
  j = invoke_json({"coc", "independence", "--group", "O(4)", "--cap", "4"});
  CHECK(j["monomials"] == 10);
  CHECK(j["independent"] == true);
  CHECK(invoke({"coc", "verify", "--group", "SL(3)"}).code == 2);
}

TEST_CASE("frt") {
  auto r = invoke({"frt", "normalform", "--n", "3", "--word", "rho2^2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "rho1^2*D\n");
  auto j = invoke_json({"frt", "normalform", "--n", "4", "--word", "rho4*rho2", "--strategy", "random"});
  CHECK(j["normal_form"] == "rho2*D^2");
  CHECK(j["degree"] == 6);

  r = invoke({"frt", "hilbert", "--group", "O(3)", "--rmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree\tclosed_form\tenumeration\tpeter_weyl\tok\n0\t1\t1\t1\ttrue\n1\t1\t1\t1\ttrue\n"
                 "2\t3\t3\t3\ttrue\n3\t4\t4\t4\ttrue\n");
  j = invoke_json({"frt", "hilbert", "--group", "SL(2)", "--rmax", "2", "--format", "json"});
  CHECK(j["rows"].size() == 3);

  j = invoke_json({"frt", "witness", "--n", "4"});
  CHECK(j["ok"] == true);
  CHECK(j["product"] == "0");
  CHECK(invoke({"frt", "witness", "--n", "5"}).code == 2);
}

TEST_CASE("qtrace and oq3") {
  auto r = invoke({"qtrace", "--n", "2", "--m", "1", "--format", "text"});
  CHECK(r.out == "q*u1_1 + q^-1*u2_2\n");
  auto j = invoke_json({"qtrace", "--n", "2", "--m", "2"});
  CHECK(j["qtrace"] == "u1_1.u2_2 - q*u1_2.u2_1");
  j = invoke_json({"oq3"});
  CHECK(j["relations"].size() == 6);
  CHECK(j["rho2"] == repring::read_golden("rho2_Oq3.txt"));
  CHECK(j["D_q"] == repring::read_golden("dq_Oq3.txt"));
  CHECK(invoke({"oq3", "--which", "rho3"}).code == 2);
}

TEST_CASE("verification suite command") {
  auto r = invoke({"verify-paper", "--only", "hilbert", "--group", "O(3)", "--rmax", "12"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.empty() || line[0] == '#' || line.rfind("degree", 0) == 0) continue;
    ++rows;
    CHECK(line.substr(line.rfind('\t') + 1) == "true");
  }
  CHECK(rows == 13);

  r = invoke({"verify-paper", "--only", "oq3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# criterion 1\toq3\tpass") != std::string::npos);

  auto j = invoke_json({"verify-paper", "--only", "1,2,3,8,10", "--format", "json"});
  CHECK(j["schema"] == 1);
  CHECK(j["passed"] == true);
  CHECK(j["results"].size() == 5);
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-paper", "--only", "qtrace,relations,rewriting", "--rmax", "6", "--seed", "17"},
           {"coc", "independence", "--group", "SO(6)", "--cap", "4", "--seed", "3"},
           {"tensor", "--group", "O(6)", "--lhs", "2,1", "--rhs", "1,1,1"}}) {
    auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
