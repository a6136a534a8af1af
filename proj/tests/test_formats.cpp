#include <string>
#include <vector>

#include "doctest.h"
#include "f2forms/counterexample.hpp"
#include "f2forms/errors.hpp"
#include "f2forms/formats.hpp"
#include "f2forms/random.hpp"
#include "f2forms/report.hpp"
#include "support.hpp"

using namespace f2forms;

namespace {

RunReport sample_report() {
  RunReport r;
  r.command = "counting";
  r.seed = 17;
  r.parameters = {{"epsilon", "0.5"}, {"note", "has, comma"}};
  r.results = {{"value_counts", {{"0", 36}, {"1", 28}}}, {"surjective", true}, {"label", "a \"quoted\" word"}};
  r.checks = {{"counts_sum", true, ""}, {"conclusion", false, "eps 0.2"}};
  r.wall_time_ms = 1.25;
  return r;
}

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("sparse form example layout") {
  const std::string text = write_sparse_form(build_phi(2));
  const MultilinearForm back = parse_sparse_form(text);
  CHECK(back == build_phi(2));
  CHECK(text.find("\"arity\": 4") != std::string::npos);
  CHECK(write_sparse_form_inline(build_rho(2).to_form()).find('\n') == std::string::npos);
  CHECK(parse_sparse_form(R"({"arity": 2, "dim": 3, "monomials": [[1, 1], [3, 2]]})") ==
        MultilinearForm::from_monomials(2, 3, std::vector<std::vector<std::size_t>>{{0, 0}, {2, 1}}));
}

TEST_CASE("sparse form round trip is byte identical") {
  Rng rng(41);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const MultilinearForm f = support::random_form(rng, k, n);
      const std::string text = write_sparse_form(f);
      const MultilinearForm g = parse_sparse_form(text);
      CHECK(g == f);
      CHECK(write_sparse_form(g) == text);
    }
  }
  const MultilinearForm zero(3, 5);
  CHECK(parse_sparse_form(write_sparse_form(zero)) == zero);
}

TEST_CASE("sparse form errors") {
  CHECK_THROWS_AS(parse_sparse_form("{"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"dim": 2, "monomials": []})"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"arity": 2, "dim": 2})"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"arity": 2, "dim": 2, "monomials": [[1, 2], [1, 2]]})"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"arity": 2, "dim": 2, "monomials": [[1, 3]]})"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"arity": 2, "dim": 2, "monomials": [[0, 1]]})"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"arity": 2, "dim": 2, "monomials": [[1]]})"), FormatError);
  CHECK_THROWS_AS(parse_sparse_form(R"({"arity": -1, "dim": 2, "monomials": []})"), FormatError);
}

TEST_CASE("certificate round trip is byte identical") {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 2 + rng.below(3);
    const std::size_t n = 1 + rng.below(3);
    const PartitionCertificate c = support::random_certificate(rng, k, n, rng.below(4));
    const std::string text = write_certificate(c);
    const PartitionCertificate back = parse_certificate(text);
    CHECK(back.size() == c.size());
    CHECK(certificate_to_form(back) == certificate_to_form(c));
    CHECK(write_certificate(back) == text);
  }
  for (const auto& s : approx_symmetry_certificates(3)) {
    const PartitionCertificate back = parse_certificate(write_certificate(s.certificate));
    CHECK(verify_certificate(build_phi(3) + permute(build_phi(3), s.pi), back));
  }
}

TEST_CASE("certificate errors") {
  CHECK_THROWS_AS(parse_certificate(R"({"arity": 4, "dim": 2})"), FormatError);
  CHECK_THROWS_AS(parse_certificate(R"({"arity": 4, "dim": 2, "summands": [{"axes": [1]}]})"), FormatError);
  // Axes covering every slot are not a proper split.
  const std::string full_axes =
      R"({"arity": 2, "dim": 1, "summands": [{"axes": [1, 2],)"
      R"( "left": {"arity": 2, "dim": 1, "monomials": []},)"
      R"( "right": {"arity": 0, "dim": 1, "monomials": []}}]})";
  CHECK_THROWS_AS(parse_certificate(full_axes), FormatError);
  // Factor arity disagrees with the axis count.
  const std::string bad_factor =
      R"({"arity": 2, "dim": 1, "summands": [{"axes": [1],)"
      R"( "left": {"arity": 2, "dim": 1, "monomials": []},)"
      R"( "right": {"arity": 1, "dim": 1, "monomials": []}}]})";
  CHECK_THROWS_AS(parse_certificate(bad_factor), FormatError);
}

TEST_CASE("report json round trip") {
  const RunReport r = sample_report();
  const std::string text = to_json(r);
  const RunReport back = report_from_json(text);
  CHECK(back == r);
  CHECK(to_json(back) == text);

  RunReport unseeded = r;
  unseeded.seed.reset();
  CHECK(report_from_json(to_json(unseeded)) == unseeded);
  CHECK_THROWS_AS(report_from_json("[]"), FormatError);
  CHECK_THROWS_AS(report_from_json("not json"), FormatError);
}

TEST_CASE("report csv and text") {
  const RunReport r = sample_report();
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("section,key,value\n", 0) == 0);
  CHECK(csv.find("meta,command,counting\n") != std::string::npos);
  CHECK(csv.find("parameter,note,\"has, comma\"\n") != std::string::npos);
  CHECK(csv.find("result,/value_counts/0,36\n") != std::string::npos);
  CHECK(csv.find("result,/label,\"a \"\"quoted\"\" word\"\n") != std::string::npos);
  CHECK(csv.find("check,conclusion,FAIL\n") != std::string::npos);
  CHECK(csv.find("meta,all_passed,false\n") != std::string::npos);

  const std::string text = to_text(r);
  CHECK(text.find("[FAIL] conclusion  eps 0.2") != std::string::npos);
  CHECK(text.find("status: FAIL (1/2 checks)") != std::string::npos);
  CHECK(text.find("seed: 17") != std::string::npos);

  CHECK(render(r, parse_report_format("csv")) == csv);
  CHECK(render(r, parse_report_format("text")) == text);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
}

}  // TEST_SUITE
