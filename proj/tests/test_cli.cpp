#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "f2forms/counterexample.hpp"
#include "f2forms/formats.hpp"
#include "f2forms/report.hpp"

using namespace f2forms;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

// Fresh scratch directory per test case.
fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("f2forms_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"no-such-command"}).code == cli::kUsageError);
  CHECK(run_cli({"gen-phi"}).code == cli::kUsageError);
  CHECK(run_cli({"--format", "xml", "distance-n2"}).code == cli::kUsageError);
  CHECK(run_cli({"bias", "/nonexistent/form.json"}).code == cli::kUsageError);
  CHECK(run_cli({"--help"}).code == cli::kPass);
}

TEST_CASE("random-forms requires a seed") {
  const fs::path dir = scratch("seed");
  const Outcome no_seed = run_cli({"random-forms", "--n", "6", "--out-dir", dir.string()});
  CHECK(no_seed.code == cli::kUsageError);
  CHECK(no_seed.err.find("--seed") != std::string::npos);

  const Outcome a = run_cli({"--seed", "5", "random-forms", "--n", "6", "--count", "2", "--min-rank", "4",
                             "--out-dir", (dir / "a").string()});
  const Outcome b = run_cli({"--seed", "5", "random-forms", "--n", "6", "--count", "2", "--min-rank", "4",
                             "--out-dir", (dir / "b").string()});
  REQUIRE(a.code == cli::kPass);
  REQUIRE(b.code == cli::kPass);
  CHECK(read_text_file(dir / "a" / "beta_1.json") == read_text_file(dir / "b" / "beta_1.json"));
  CHECK(BilinearForm::from_form(parse_sparse_form(read_text_file(dir / "a" / "beta_2.json"))).rank() >= 4);
}

TEST_CASE("gen-phi writes canonical files") {
  const fs::path dir = scratch("gen");
  const Outcome o = run_cli({"--format", "json", "gen-phi", "--n", "3", "--out-dir", dir.string()});
  REQUIRE(o.code == cli::kPass);
  const RunReport r = report_from_json(o.out);
  CHECK(r.command == "gen-phi");
  CHECK(r.results.at("phi_monomials") == 9);
  CHECK(parse_sparse_form(read_text_file(dir / "phi_n3.json")) == build_phi(3));
  CHECK(read_text_file(dir / "rho_n3.json") == write_sparse_form(build_rho(3).to_form()));
}

TEST_CASE("check-identities writes verifiable certificates") {
  const fs::path dir = scratch("ids");
  const Outcome o = run_cli({"check-identities", "--n", "3", "--cert-dir", (dir / "certs").string()});
  REQUIRE(o.code == cli::kPass);
  CHECK(o.out.find("status: PASS") != std::string::npos);
  REQUIRE(run_cli({"gen-phi", "--n", "3", "--out-dir", dir.string()}).code == cli::kPass);

  // phi + phi o (1 4) as a form file, checked against the written certificate for (1 4) = 4231.
  const MultilinearForm phi = build_phi(3);
  write_text_file(dir / "d14.json",
                  write_sparse_form(phi + permute(phi, Permutation::from_cycles(4, "(1 4)"))));
  const Outcome v = run_cli({"verify-cert", "--form", (dir / "d14.json").string(), "--cert",
                             (dir / "certs" / "cert_4231.json").string()});
  CHECK(v.code == cli::kPass);
  // The same certificate does not fit phi itself.
  const Outcome bad = run_cli({"verify-cert", "--form", (dir / "phi_n3.json").string(), "--cert",
                               (dir / "certs" / "cert_4231.json").string()});
  CHECK(bad.code == cli::kCheckFailed);
}

TEST_CASE("report formats carry the same verdict") {
  const fs::path dir = scratch("formats");
  REQUIRE(run_cli({"gen-phi", "--n", "6", "--out-dir", dir.string()}).code == cli::kPass);
  const std::string rho = (dir / "rho_n6.json").string();
  const Outcome json = run_cli({"--format", "json", "bias", rho});
  const Outcome csv = run_cli({"--format", "csv", "bias", rho});
  const Outcome text = run_cli({"bias", rho});
  REQUIRE(json.code == cli::kPass);
  CHECK(csv.code == cli::kPass);
  CHECK(text.code == cli::kPass);
  const RunReport r = report_from_json(json.out);
  CHECK(r.results.at("bias").at("value") == "2^-6");
  CHECK(to_json(r) == json.out);
  CHECK(csv.out.find("result,/bias/value,2^-6\n") != std::string::npos);
  CHECK(text.out.find("\"value\": \"2^-6\"") != std::string::npos);
}

TEST_CASE("counting and regularize from files") {
  const fs::path dir = scratch("counting");
  REQUIRE(run_cli({"gen-phi", "--n", "3", "--out-dir", dir.string()}).code == cli::kPass);
  write_text_file(dir / "coset.json", R"({"dim": 3})");
  const Outcome c = run_cli({"--format", "json", "counting", "--alpha", (dir / "rho_n3.json").string(), "--coset",
                             (dir / "coset.json").string()});
  REQUIRE(c.code == cli::kPass);
  const RunReport r = report_from_json(c.out);
  CHECK(r.results.at("value_counts").at("0") == 36);
  CHECK(r.results.at("value_counts").at("1") == 28);

  write_text_file(dir / "bad_coset.json", R"({"dim": 3, "basis": ["10"]})");
  CHECK(run_cli({"counting", "--alpha", (dir / "rho_n3.json").string(), "--coset", (dir / "bad_coset.json").string()})
            .code == cli::kUsageError);

  // rank(rho) = 3 < (4 + 1) * 1 unless the hypothesis is waived.
  const std::string rho = (dir / "rho_n3.json").string();
  CHECK(run_cli({"regularize", "--rho", rho, "--beta", rho, "--m", "1"}).code == cli::kUsageError);
  CHECK(run_cli({"regularize", "--rho", rho, "--beta", rho, "--m", "1", "--allow-low-rank"}).code == cli::kPass);
  // Arity mismatch is a shape error.
  CHECK(run_cli({"regularize", "--rho", (dir / "phi_n3.json").string(), "--m", "1"}).code == cli::kUsageError);
}

TEST_CASE("budget errors exit 2") {
  const fs::path dir = scratch("budget");
  REQUIRE(run_cli({"gen-phi", "--n", "8", "--out-dir", dir.string()}).code == cli::kPass);
  CHECK(run_cli({"--max-enum", "1000", "bias", (dir / "phi_n8.json").string()}).code == cli::kUsageError);
}

TEST_CASE("distance-n2 matches the frozen values") {
  const Outcome o = run_cli({"--format", "json", "distance-n2"});
  REQUIRE(o.code == cli::kPass);
  const RunReport r = report_from_json(o.out);
  CHECK(r.results.at("distance") == 1);
  CHECK(r.results.at("witness_index") == 0);
  CHECK(r.results.at("candidates") == 32);
}

}  // TEST_SUITE
