#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "f2forms/counterexample.hpp"
#include "f2forms/counting.hpp"
#include "f2forms/errors.hpp"
#include "f2forms/formats.hpp"
#include "f2forms/random.hpp"
#include "f2forms/regularity.hpp"
#include "f2forms/report.hpp"

namespace f2forms::cli {

namespace {

namespace fs = std::filesystem;

// Frozen output of distance-n2: min over the 32 symmetric 4-linear forms
// sigma on F_2^2 of prank(phi + sigma), and the first minimizer.
constexpr std::size_t kDistanceN2 = 1;
constexpr std::uint64_t kDistanceN2WitnessIndex = 0;

struct Common {
  std::string format = "text";
  std::uint64_t max_enum = std::uint64_t{1} << 30;
  int workers = 0;
  std::uint64_t seed = 0;
  CLI::Option* seed_option = nullptr;

  EnumOptions enum_options() const { return {max_enum, workers}; }
};

Check check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

Json monomial_list(const MultilinearForm& form) {
  Json out = Json::array();
  for (const auto& m : form.monomials()) {
    Json idx = Json::array();
    for (std::size_t i : m) idx.push_back(i + 1);
    out.push_back(idx);
  }
  return out;
}

MultilinearForm load_form(const std::string& path) { return parse_sparse_form(read_text_file(path)); }

BilinearForm load_bilinear(const std::string& path) {
  const MultilinearForm form = load_form(path);
  if (form.arity() != 2) throw ShapeError(path + ": expected a bilinear (arity 2) form");
  return BilinearForm::from_form(form);
}

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::string image_word(const Permutation& pi) {
  std::string out;
  for (std::size_t i : pi.images()) out += std::to_string(i + 1);
  return out;
}

std::string generator_word(const std::vector<std::size_t>& word) {
  static const char* names[] = {"(1 2)", "(1 3)", "(1 4)"};
  std::string out;
  for (std::size_t g : word) out += names[g];
  return out.empty() ? "()" : out;
}

Coset load_coset(const std::string& path) {
  const Json doc = [&] {
    try {
      return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
      throw FormatError(path + ": " + e.what());
    }
  }();
  if (!doc.is_object() || !doc.contains("dim")) throw FormatError(path + ": coset needs 'dim'");
  const std::size_t n = doc.at("dim").get<std::size_t>();
  auto vectors = [&](const char* key) {
    std::vector<BitVec> out;
    for (const auto& v : doc.at(key)) {
      BitVec b = BitVec::from_string(v.get<std::string>());
      if (b.dim() != n) throw FormatError(path + ": vector length differs from dim");
      out.push_back(std::move(b));
    }
    return out;
  };
  if (doc.contains("basis") && doc.contains("constraints")) {
    throw FormatError(path + ": give either 'basis' or 'constraints', not both");
  }
  Coset c{Subspace::full(n), BitVec(n)};
  if (doc.contains("basis")) c.subspace = Subspace::span(n, vectors("basis"));
  if (doc.contains("constraints")) c.subspace = subspace_from_constraints(vectors("constraints"), Subspace::full(n));
  if (doc.contains("shift")) {
    c.shift = BitVec::from_string(doc.at("shift").get<std::string>());
    if (c.shift.dim() != n) throw FormatError(path + ": shift length differs from dim");
  }
  return c;
}

void cmd_gen_phi(RunReport& report, std::size_t n, const std::string& out_dir) {
  if (n < 1) throw std::invalid_argument("gen-phi: --n must be at least 1");
  const MultilinearForm phi = build_phi(n);
  const MultilinearForm rho = build_rho(n).to_form();
  fs::create_directories(out_dir);
  const fs::path phi_path = fs::path(out_dir) / ("phi_n" + std::to_string(n) + ".json");
  const fs::path rho_path = fs::path(out_dir) / ("rho_n" + std::to_string(n) + ".json");
  const std::string phi_text = write_sparse_form(phi);
  const std::string rho_text = write_sparse_form(rho);
  write_text_file(phi_path, phi_text);
  write_text_file(rho_path, rho_text);
  report.parameters = {{"n", std::to_string(n)}, {"out_dir", out_dir}};
  report.results = {{"phi_file", phi_path.string()},
                    {"rho_file", rho_path.string()},
                    {"phi_monomials", phi.weight()},
                    {"rho_monomials", rho.weight()}};
  report.checks.push_back(check("phi_monomial_count", phi.weight() == 3 * choose2(n),
                                "expected " + std::to_string(3 * choose2(n))));
  const bool round_trip = write_sparse_form(parse_sparse_form(read_text_file(phi_path))) == phi_text &&
                          write_sparse_form(parse_sparse_form(read_text_file(rho_path))) == rho_text;
  report.checks.push_back(check("round_trip", round_trip));
}

void cmd_check_identities(RunReport& report, std::size_t n, const std::string& cert_dir) {
  if (n < 1) throw std::invalid_argument("check-identities: --n must be at least 1");
  report.parameters = {{"n", std::to_string(n)}};
  const IdentityReport ids = verify_transposition_identities(n);
  report.results["identities"] = {{"phi+phi(1 2)=0", ids.swap12},
                                  {"phi+phi(1 3)=0", ids.swap13},
                                  {"phi+phi(1 4)=P1+P2", ids.swap14}};
  report.checks.push_back(check("identity_12", ids.swap12));
  report.checks.push_back(check("identity_13", ids.swap13));
  report.checks.push_back(check("identity_14", ids.swap14));

  std::vector<SymmetryCertificate> certs;
  try {
    certs = approx_symmetry_certificates(n);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) throw;
    report.checks.push_back(check("certificates", false, e.what()));
    return;
  }
  std::size_t max_summands = 0;
  Json perms = Json::array();
  for (const auto& c : certs) {
    max_summands = std::max(max_summands, c.certificate.size());
    perms.push_back({{"pi", c.pi.to_cycles()},
                     {"word", generator_word(c.word)},
                     {"lambda", to_json_value(c.element)},
                     {"summands", c.certificate.size()}});
    if (!cert_dir.empty()) {
      fs::create_directories(cert_dir);
      write_text_file(fs::path(cert_dir) / ("cert_" + image_word(c.pi) + ".json"), write_certificate(c.certificate));
    }
  }
  if (!cert_dir.empty()) report.parameters.emplace_back("cert_dir", cert_dir);
  report.results["permutations"] = perms;
  report.results["max_summands"] = max_summands;
  report.checks.push_back(check("certificates", certs.size() == 24 && max_summands <= 3,
                                std::to_string(certs.size()) + " verified, max " + std::to_string(max_summands) +
                                    " summands"));
}

void cmd_bias(RunReport& report, const std::string& path, const Common& common) {
  const MultilinearForm form = load_form(path);
  report.parameters = {{"form", path}};
  const Dyadic b = bias(form, common.enum_options());
  report.results = {{"arity", form.arity()}, {"dim", form.dim()}, {"bias", to_json_value(b)}};
  report.results["bias_value"] = b.to_double();
  if (b.numerator() > 0) {
    report.results["analytic_rank"] = static_cast<double>(b.exponent()) - std::log2(static_cast<double>(b.numerator()));
  } else {
    report.results["analytic_rank"] = nullptr;
  }
}

void cmd_regularize(RunReport& report, const std::string& rho_path, const std::vector<std::string>& beta_paths,
                    std::size_t m, bool allow_low_rank) {
  const BilinearForm rho = load_bilinear(rho_path);
  std::vector<BilinearForm> betas;
  for (const auto& p : beta_paths) betas.push_back(load_bilinear(p));
  report.parameters = {{"rho", rho_path}, {"m", std::to_string(m)}, {"betas", std::to_string(betas.size())}};
  RegularizeOptions options;
  options.require_rank_hypothesis = !allow_low_rank;
  const RegularityResult result = bilinear_regularize(rho, betas, m, options);
  const RegularityAudit audit = audit_regularity(result, rho, betas);
  report.results = {{"rank_rho", rho.rank()}, {"regularity", to_json_value(result)}, {"audit", to_json_value(audit)}};
  report.checks.push_back(check("count", audit.count_ok, "s = " + std::to_string(result.independent_forms.size())));
  report.checks.push_back(check("codim", audit.codim_ok, "codim = " + std::to_string(result.subspace.codim()) +
                                                             " <= " + std::to_string(2 * betas.size() * m)));
  report.checks.push_back(check("combinations", audit.combinations_ok,
                                "min rank " + std::to_string(audit.min_combination_rank)));
  report.checks.push_back(check("expressions", audit.expressions_ok));
}

void cmd_counting(RunReport& report, const std::vector<std::string>& alpha_paths, const std::string& coset_path,
                  double epsilon, const Common& common) {
  std::vector<BilinearForm> alphas;
  for (const auto& p : alpha_paths) alphas.push_back(load_bilinear(p));
  const Coset coset = load_coset(coset_path);
  report.parameters = {{"coset", coset_path}, {"epsilon", std::to_string(epsilon)},
                       {"alphas", std::to_string(alphas.size())}};
  const CountingReport c = counting_check(alphas, coset, epsilon, common.enum_options());
  report.results = to_json_value(c);
  std::uint64_t total = 0;
  for (auto v : c.value_counts) total += v;
  report.checks.push_back(check("counts_sum", total == c.coset_size * c.coset_size));
  report.checks.push_back(check("conclusion_under_hypothesis", !c.hypothesis_holds || c.conclusion_holds,
                                c.hypothesis_holds ? "hypothesis holds" : "hypothesis does not hold"));
}

void cmd_distance_n2(RunReport& report, const Common& common) {
  const MultilinearForm phi = build_phi(2);
  const DistanceResult d = min_distance_to_symmetric(phi, common.enum_options());
  report.parameters = {{"n", "2"}};
  report.results = {{"distance", d.distance},
                    {"witness_index", d.witness_index},
                    {"witness_monomials", monomial_list(d.witness)},
                    {"candidates", d.candidates}};
  report.checks.push_back(check("frozen_distance", d.distance == kDistanceN2,
                                "expected " + std::to_string(kDistanceN2)));
  report.checks.push_back(check("frozen_witness", d.witness_index == kDistanceN2WitnessIndex,
                                "expected index " + std::to_string(kDistanceN2WitnessIndex)));
}

void cmd_random_forms(RunReport& report, std::size_t n, std::size_t count, std::size_t min_rank,
                      const std::string& out_dir, std::uint64_t seed) {
  if (min_rank > n) throw std::invalid_argument("random-forms: --min-rank exceeds --n");
  Rng rng(seed);
  fs::create_directories(out_dir);
  Json files = Json::array();
  Json ranks = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const BilinearForm beta(rng.matrix_with_min_rank(n, min_rank));
    const fs::path path = fs::path(out_dir) / ("beta_" + std::to_string(i + 1) + ".json");
    write_text_file(path, write_sparse_form(beta.to_form()));
    files.push_back(path.string());
    ranks.push_back(beta.rank());
  }
  report.parameters = {{"n", std::to_string(n)}, {"count", std::to_string(count)},
                       {"min_rank", std::to_string(min_rank)}, {"out_dir", out_dir}};
  report.results = {{"files", files}, {"ranks", ranks}};
}

void cmd_verify_cert(RunReport& report, const std::string& form_path, const std::string& cert_path,
                     const Common& common) {
  const MultilinearForm form = load_form(form_path);
  const PartitionCertificate cert = parse_certificate(read_text_file(cert_path));
  report.parameters = {{"form", form_path}, {"certificate", cert_path}};
  const bool ok = verify_certificate(form, cert);
  report.results = {{"summands", cert.size()}, {"verified", ok}};
  report.checks.push_back(check("certificate_verifies", ok));
  if (!ok) return;
  try {
    const Dyadic b = bias(form, common.enum_options());
    const double ar = static_cast<double>(b.exponent()) - std::log2(static_cast<double>(b.numerator()));
    report.results["analytic_rank"] = ar;
    report.checks.push_back(check("analytic_le_partition", ar <= static_cast<double>(cert.size()) + 1e-9));
  } catch (const BudgetExceeded&) {
    report.results["analytic_rank"] = "skipped: over budget";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multilinear forms over F_2: rank, bias, regularity and the approximate-symmetry example"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-enum", common.max_enum, "Enumeration budget")->capture_default_str();
  app.add_option("--workers", common.workers, "Worker threads (0 = OpenMP default)")->capture_default_str();
  common.seed_option = app.add_option("--seed", common.seed, "Random seed");

  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t count = 1;
  std::size_t min_rank = 0;
  double epsilon = 0.5;
  bool allow_low_rank = false;
  std::string out_dir = ".";
  std::string cert_dir;
  std::string path;
  std::string rho_path;
  std::string coset_path;
  std::string cert_path;
  std::vector<std::string> paths;

  RunReport report;
  std::function<void()> action;

  auto* gen = app.add_subcommand("gen-phi", "Write phi and rho on F_2^n as sparse forms");
  gen->add_option("--n", n, "Dimension")->required();
  gen->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  gen->callback([&] { action = [&] { cmd_gen_phi(report, n, out_dir); }; });

  auto* ids = app.add_subcommand("check-identities", "Verify the transposition identities and all 24 certificates");
  ids->add_option("--n", n, "Dimension")->required();
  ids->add_option("--cert-dir", cert_dir, "Write the certificates here");
  ids->callback([&] { action = [&] { cmd_check_identities(report, n, cert_dir); }; });

  auto* bias_cmd = app.add_subcommand("bias", "Exact bias and analytic rank of a form");
  bias_cmd->add_option("form", path, "Sparse form file")->required()->check(CLI::ExistingFile);
  bias_cmd->callback([&] { action = [&] { cmd_bias(report, path, common); }; });

  auto* reg = app.add_subcommand("regularize", "Bilinear regularization with postcondition audit");
  reg->add_option("--rho", rho_path, "rho form file")->required()->check(CLI::ExistingFile);
  reg->add_option("--beta", paths, "beta form files")->check(CLI::ExistingFile);
  reg->add_option("--m", m, "Target rank")->required();
  reg->add_flag("--allow-low-rank", allow_low_rank, "Run even if rank(rho) < (4r + 1) m");
  reg->callback([&] { action = [&] { cmd_regularize(report, rho_path, paths, m, allow_low_rank); }; });

  auto* cnt = app.add_subcommand("counting", "Exhaustive value census of bilinear forms on a coset");
  cnt->add_option("--alpha", paths, "alpha form files")->check(CLI::ExistingFile);
  cnt->add_option("--coset", coset_path, "Coset description")->required()->check(CLI::ExistingFile);
  cnt->add_option("--epsilon", epsilon, "Uniformity slack")->capture_default_str();
  cnt->callback([&] { action = [&] { cmd_counting(report, paths, coset_path, epsilon, common); }; });

  auto* dist = app.add_subcommand("distance-n2", "Exact distance from phi on F_2^2 to the symmetric forms");
  dist->callback([&] { action = [&] { cmd_distance_n2(report, common); }; });

  auto* rnd = app.add_subcommand("random-forms", "Write random bilinear forms (requires --seed)");
  rnd->add_option("--n", n, "Dimension")->required();
  rnd->add_option("--count", count, "Number of forms")->capture_default_str();
  rnd->add_option("--min-rank", min_rank, "Minimum rank")->capture_default_str();
  rnd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
  rnd->callback([&] {
    action = [&] {
      if (common.seed_option->count() == 0) throw std::invalid_argument("random-forms requires --seed");
      cmd_random_forms(report, n, count, min_rank, out_dir, common.seed);
    };
  });

  auto* ver = app.add_subcommand("verify-cert", "Check a partition-rank certificate against a form");
  ver->add_option("--form", path, "Sparse form file")->required()->check(CLI::ExistingFile);
  ver->add_option("--cert", cert_path, "Certificate file")->required()->check(CLI::ExistingFile);
  ver->callback([&] { action = [&] { cmd_verify_cert(report, path, cert_path, common); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    report.command = app.get_subcommands().front()->get_name();
    if (common.seed_option->count() != 0) report.seed = common.seed;
    action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    // Budget, precondition, format and I/O errors.
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << render(report, parse_report_format(common.format));
  return report.all_passed() ? kPass : kCheckFailed;
}

}  // namespace f2forms::cli
