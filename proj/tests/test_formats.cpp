#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "llq/equation.hpp"
#include "llq/hardness.hpp"
#include "llq/solver.hpp"

using namespace llq;

TEST_CASE("equation text parsing") {
  const auto f = parse_equation_text("form=sph genus=0\naa\nt a T\n");
  CHECK(f.eq.form == EquationForm::Spherical);
  CHECK(f.eq.k() == 2);
  CHECK(serialize(f.eq.coeffs[1]) == "t a t^-1");

  const auto g = parse_equation_text("# note\nform=nonor genus=1\nt^2\n\n");
  CHECK(g.eq.form == EquationForm::NonOrientable);
  CHECK(g.eq.genus == 1);
  CHECK(g.eq.k() == 1);
  CHECK(g.comments.size() == 1);

  CHECK_THROWS_AS(parse_equation_text(""), malformed_equation);
  CHECK_THROWS_AS(parse_equation_text("form=sph genus=0\n"), malformed_equation);  // k = 0
  CHECK_THROWS_AS(parse_equation_text("form=misc genus=0\na\n"), malformed_equation);
  CHECK_THROWS_AS(parse_equation_text("genus=1\na\n"), malformed_equation);
  CHECK_THROWS_AS(parse_equation_text("form=or genus=0\na\n"), malformed_equation);
}

TEST_CASE("equation format round trip") {
  QuadEquation eq;
  eq.form = EquationForm::Orientable;
  eq.genus = 2;
  eq.coeffs = {parse_word("at"), parse_word("Ta")};
  const auto back = parse_equation_text(format_equation(eq, {"# hello"}));
  CHECK(back.eq.form == eq.form);
  CHECK(back.eq.genus == eq.genus);
  CHECK(back.eq.coeffs == eq.coeffs);
  CHECK(back.comments == std::vector<std::string>{"# hello"});
}

TEST_CASE("size_w counts letters and variable occurrences") {
  QuadEquation eq;
  eq.form = EquationForm::Spherical;
  eq.coeffs = {parse_word("at"), parse_word("t")};
  CHECK(eq.size_w() == 3 + 2 * 2);
  eq.form = EquationForm::Orientable;
  eq.genus = 2;
  CHECK(eq.size_w() == 3 + 2 * (4 + 2));
}

#ifdef LLQ_CLI_PATH

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = std::string(std::tmpnam(nullptr)) + "_llq.out";
  const std::string cmd = std::string(LLQ_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(out_path.c_str());
  return {WEXITSTATUS(rc), buf.str()};
}

std::string write_temp(const std::string& contents) {
  const std::string path = std::string(std::tmpnam(nullptr)) + "_llq.txt";
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

std::string strip_millis(const std::string& s) {
  std::istringstream in(s);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("millis=", 0) == 0) continue;
    // CSV rows: W,k,millis,enumerated -> blank the third field
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("cli: eval and predicates") {
  auto r = run_cli("eval \"atat^3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "delta=4 supp=[-4,-3]\n");

  r = run_cli("is-square \"t^2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "square=yes root=t\n");

  r = run_cli("is-square \"atat^3\"");
  CHECK(r.exit_code == 1);

  r = run_cli("in-V \"atat^3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("inV=yes", 0) == 0);

  r = run_cli("in-derived \"t\"");
  CHECK(r.exit_code == 1);

  r = run_cli("eval \"b\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: conj") {
  auto r = run_cli("conj a taT --search");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("conjugator=t^-1") != std::string::npos);

  r = run_cli("conj a t");
  CHECK(r.exit_code == 1);

  r = run_cli("conj ta at --search");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("conjugator=a\n") != std::string::npos);
}

TEST_CASE("cli: solve with oracle check and json") {
  const std::string path = write_temp("form=sph genus=0\naa\n");
  auto r = run_cli("solve " + path + " --oracle-check 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("decision=yes") != std::string::npos);
  CHECK(r.out.find("verified=true") != std::string::npos);

  r = run_cli("--json solve " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"decision\":true") != std::string::npos);
  std::remove(path.c_str());

  const std::string no_path = write_temp("form=sph genus=0\na\n");
  r = run_cli("solve " + no_path + " --oracle-check 4");
  CHECK(r.exit_code == 1);
  std::remove(no_path.c_str());
}

TEST_CASE("cli: encode-3part | solve round trip with partition report") {
  const std::string inst = write_temp("k=2\n5,5,6,6,7,7\n");
  const std::string eqf = std::string(std::tmpnam(nullptr)) + "_eq.txt";
  auto r = run_cli("encode-3part " + inst + " -o " + eqf);
  CHECK(r.exit_code == 0);

  r = run_cli("solve " + eqf);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("decision=yes") != std::string::npos);
  CHECK(r.out.find("partition=") != std::string::npos);
  std::remove(inst.c_str());
  std::remove(eqf.c_str());

  const std::string neg = write_temp("k=2\n5,5,5,7,7,7\n");
  const std::string eqn = std::string(std::tmpnam(nullptr)) + "_eq.txt";
  run_cli("encode-3part " + neg + " -o " + eqn);
  r = run_cli("solve " + eqn);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("decision=no") != std::string::npos);
  std::remove(neg.c_str());
  std::remove(eqn.c_str());
}

TEST_CASE("cli: oracle command and threads flag") {
  const std::string path = write_temp("form=sph genus=0\nta\naT\n");
  auto r = run_cli("oracle " + path + " -b 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "oracle=yes\n");

  auto a = run_cli("solve " + path + " --threads 1");
  auto b = run_cli("solve " + path + " --threads 4");
  CHECK(strip_millis(a.out) == strip_millis(b.out));
  std::remove(path.c_str());
}

TEST_CASE("cli: bench determinism modulo timing") {
  auto a = run_cli("bench spherical --sizes 64,128 --seed 7");
  auto b = run_cli("bench spherical --sizes 64,128 --seed 7");
  CHECK(a.exit_code == 0);
  // compare W, k, enumerated columns; millis varies
  auto project_cols = [](const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string w, k, ms, en;
      std::getline(ls, w, ',');
      std::getline(ls, k, ',');
      std::getline(ls, ms, ',');
      std::getline(ls, en, ',');
      out << w << ',' << k << ',' << en << '\n';
    }
    return out.str();
  };
  CHECK(project_cols(a.out) == project_cols(b.out));
}

TEST_CASE("cli: max-len guard") {
  auto r = run_cli("--max-len 10 eval \"t^50\"");
  CHECK(r.exit_code == 2);
}

#endif  // LLQ_CLI_PATH
