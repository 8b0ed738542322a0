#include <doctest.h>

#include "lcy/cli.hpp"

using namespace lcy;
using cli::CommandResult;
using cli::run;

TEST_CASE("classify reports the sporadic group order") {
  CommandResult r = run({"classify",
                         R"({"genus":0,"points":[{"label":"p","coeff":"1/2"},)"
                         R"({"label":"q","coeff":"2/3"},{"label":"r","coeff":"3/4"}]})"});
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.payload["classification"]["kind"] == "sporadic");
  CHECK(r.payload["classification"]["sporadic"] == cli::json::array({2, 3, 4}));
  CHECK(r.payload["group"]["order"] == "24");
}

TEST_CASE("heis comm reproduces the commutator identity") {
  CommandResult r = run({"heis", "comm", "--k", "2", "--u", "3,0,0", "--v", "0,3,0"});
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.payload["result"] == "0,0,18");
}

TEST_CASE("coset enumeration over a subgroup") {
  CommandResult r = run({"coset", "<a,b | a^2, b^2>", "--subgroup", "ab"});
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.payload["index"] == 2);
  CHECK(r.payload["complete"] == true);
  CHECK(r.payload["status"] == "ok");
  CHECK_FALSE(r.payload.contains("table"));
  CommandResult rt = run({"coset", "<a | a^3>", "--table"});
  CHECK(rt.payload["table"].size() == 3);
}

TEST_CASE("abelianize") {
  CommandResult r = run({"abelianize", "<a,b,c | [a,b]c^-6, [a,c], [b,c]>"});
  CHECK(r.exit_code == cli::kOk);
  CHECK(r.payload["abelianization"]["free_rank"] == 2);
  CHECK(r.payload["abelianization"]["torsion"] == cli::json::array({"6"}));
}

TEST_CASE("fan subcommands") {
  CommandResult idx = run({"fan", "index", R"({"rays":[[1,0],[0,1],[-2,-3]]})"});
  CHECK(idx.exit_code == cli::kOk);
  CHECK(idx.payload["cones"].size() == 3);

  CommandResult rec = run({"fan", "recognize", "[[1,0],[0,1],[-2,-3]]"});
  CHECK(rec.payload["surface"] == "P(1,2,3)");

  CommandResult sub = run({"fan", "subdivide", "[[1,0],[0,1],[-2,-3]]", "--ray", "0,-1"});
  CHECK(sub.exit_code == cli::kOk);
  CHECK(sub.payload["fan"]["rays"].size() == 4);

  CommandResult cx = run({"fan", "complexity", "--rho", "1", "--boundary-sum", "5/2"});
  CHECK(cx.payload["complexity"] == "1/2");
  CHECK(cx.payload["toric"] == true);
}

TEST_CASE("coefficient subcommands") {
  CHECK(run({"adj", "--index", "2", "--contrib", "1/2"}).payload["coefficient"] == "3/4");
  CHECK(run({"basepair", "--mult", "2", "--a", "1/2"}).payload["coefficient"] == "3/4");
  CHECK(run({"compat", "--m", "2", "--b", "3/4", "--a", "1/2"}).payload["compatible"] == true);
  CHECK(run({"pullback", "--b", "3/4", "--m", "2"}).payload["coefficient"] == "1/2");
  CommandResult cert = run({"cert", "--fiber", "sporadic", "--base", "elliptic"});
  CHECK(cert.payload["certificate"]["index_bound"] == "360");
}

TEST_CASE("exit codes are distinct and stable") {
  CHECK(run({"nonsense"}).exit_code == cli::kParseError);
  CHECK(run({"classify", "{bad json"}).exit_code == cli::kParseError);
  CHECK(run({"classify", R"({"genus":0,"points":[{"label":"p","coeff":"2/5"}]})"}).exit_code ==
        cli::kPreconditionError);
  CHECK(run({"heis", "minindex", "--m", "4", "--k", "0"}).exit_code == cli::kPreconditionError);
  CHECK(run({"heis", "mul", "--k", "1/2", "--u", "0,0,0", "--v", "0,0,0"}).exit_code ==
        cli::kParseError);
  // positive degree is a precondition violation
  CHECK(run({"classify",
             R"({"genus":0,"points":[{"label":"p","coeff":"1/2"},)"
             R"({"label":"q","coeff":"2/3"},{"label":"r","coeff":"1"}]})"})
            .exit_code == cli::kPreconditionError);
  // an infinite-dihedral toric pair classifies fine
  CHECK(run({"classify",
             R"({"genus":0,"points":[{"label":"p","coeff":"1/2"},)"
             R"({"label":"q","coeff":"1/2"},{"label":"r","coeff":"1"}]})"})
            .exit_code == cli::kOk);
  CHECK(run({}).exit_code == cli::kParseError);
}

TEST_CASE("verify a single suite and list") {
  CommandResult list = run({"verify", "--list"});
  CHECK(list.payload["suites"].size() == 10);
  CommandResult one = run({"verify", "heisenberg_commutator"});
  CHECK(one.exit_code == cli::kOk);
  CHECK(one.payload["passed"] == true);
  CHECK(run({"verify", "no_such_suite"}).exit_code == cli::kPreconditionError);
}

TEST_CASE("output is byte-stable across runs") {
  auto once = run({"enumerate", "--max-denominator", "6"});
  auto twice = run({"enumerate", "--max-denominator", "6"});
  CHECK(once.payload.dump() == twice.payload.dump());
  CHECK(once.payload["counts"]["sporadic"] == 3);
}
