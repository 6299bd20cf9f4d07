#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "engel/bch.hpp"
#include "engel/claims.hpp"
#include "engel/io.hpp"
#include "engel/prime_field.hpp"
#include "engel/rational.hpp"
#include "engel/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace engel;

int default_jobs() {
  if (const char* env = std::getenv("ENGEL_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot open output file '" + path + "'");
  out << text;
}

struct CommonArgs {
  std::string spec_path;
  long characteristic_override = -1;
  std::string format = "text";
  std::string output;
  int jobs = default_jobs();
  std::uint64_t seed = 0x5eed5eedULL;
  bool timings = false;
};

PresentationSpec load_spec(const CommonArgs& args) {
  auto spec = io::load_presentation_file(args.spec_path);
  if (args.characteristic_override >= 0) {
    if (args.characteristic_override != 0 &&
        !is_prime_u64(static_cast<std::uint64_t>(args.characteristic_override)))
      throw domain_error("characteristic override must be 0 or a prime");
    spec.characteristic = args.characteristic_override;
  }
  return spec;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_spec = true) {
  if (with_spec)
    cmd->add_option("spec", args.spec_path, "presentation document (JSON)")->required();
  cmd->add_option("--char", args.characteristic_override,
                  "characteristic override (0 or a prime)");
  cmd->add_option("--format", args.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", args.output, "output path (default stdout)");
  cmd->add_option("--jobs", args.jobs, "worker-pool degree (env ENGEL_JOBS)");
  cmd->add_option("--seed", args.seed, "seed for the randomized property claims");
  cmd->add_flag("--timings", args.timings,
                "include per-claim timings (not covered by byte determinism)");
}

std::string render(const VerificationReport& report, const CommonArgs& args) {
  return args.format == "json" ? render_report_json(report, args.timings)
                               : render_report_text(report, args.timings);
}

template <class R>
std::string algebra_summary(const QuotientAlgebra<R>& alg) {
  std::ostringstream out;
  const auto& spec = alg.spec();
  out << "generators:";
  for (const auto& g : spec.generators) out << " " << g;
  out << "\ncharacteristic: " << alg.characteristic();
  if (spec.outside_theorem_hypotheses()) out << " (outside theorem hypotheses)";
  out << "\nsurvivors: " << alg.survivors().size();
  out << "\ndimension: " << alg.dim();
  out << "\ngraded dims:";
  for (int d : alg.graded_dims()) out << " " << d;
  out << "\nideal subspace dim: " << alg.ideal_subspace_dim();
  out << "\nnilpotency degree: " << alg.nilpotency_degree() << "\n";
  return out.str();
}

template <class R>
std::string basis_listing(const QuotientAlgebra<R>& alg, bool with_structure) {
  std::ostringstream out;
  out << algebra_summary(alg);
  out << "basis:\n";
  for (int i = 0; i < alg.dim(); ++i)
    out << "  [" << i << "] degree " << alg.degree_of(i) << "  "
        << alg.basis()[i].str(alg.spec().generators) << "\n";
  if (!alg.rewrite_rows().empty()) {
    out << "rewrites:\n";
    for (const auto& [w, row] : alg.rewrite_rows()) {
      out << "  " << w.str(alg.spec().generators) << " -> ";
      bool first = true;
      for (const auto& [idx, coeff] : row) {
        if (!first) out << " + ";
        first = false;
        out << "(" << alg.ring().str(coeff) << ")*"
            << alg.basis()[idx].str(alg.spec().generators);
      }
      if (first) out << "0";
      out << "\n";
    }
  }
  if (with_structure) {
    out << "products:\n";
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        const auto& row = alg.structure_row(i, j);
        if (row.empty()) continue;
        out << "  " << alg.basis()[i].str(alg.spec().generators) << " * "
            << alg.basis()[j].str(alg.spec().generators) << " = ";
        bool first = true;
        for (const auto& [idx, coeff] : row) {
          if (!first) out << " + ";
          first = false;
          std::string cs = alg.ring().str(coeff);
          if (cs != "1") out << "(" << cs << ")*";
          out << alg.basis()[idx].str(alg.spec().generators);
        }
        out << "\n";
      }
  }
  return out.str();
}

template <class F>
std::string with_base_ring(const PresentationSpec& spec, F&& fn) {
  if (spec.characteristic == 0) {
    RatRing ring;
    auto alg = QuotientAlgebra<RatRing>::build(ring, spec);
    return fn(ring, alg);
  }
  FpRing ring(spec.characteristic);
  auto alg = QuotientAlgebra<FpRing>::build(ring, spec);
  return fn(ring, alg);
}

int run_verify(const CommonArgs& args, const VerifyOptions& vopt,
               const std::string& claims_path) {
  auto spec = load_spec(args);
  auto report = run_claim_catalog(spec, vopt);
  std::vector<Expectation> expectations;
  if (!claims_path.empty()) expectations = load_expectations_file(claims_path);
  else if (vopt.expect) {
    for (const auto& c : report.claims()) expectations.push_back({c.id, *vopt.expect});
  } else {
    expectations = default_expectations();
  }
  auto mismatches = expectation_mismatches(report, expectations);
  write_output(render(report, args), args.output);
  if (!mismatches.empty()) {
    std::cerr << "mismatches:\n";
    for (const auto& m : mismatches) std::cerr << "  " << m << "\n";
  } else {
    std::cerr << "all expectations met\n";
  }
  return mismatches.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Engel identities in finitely presented "
               "nilpotent algebras"};
  app.require_subcommand(1);

  CommonArgs args;

  auto* build_cmd = app.add_subcommand("build", "build the quotient algebra and summarize");
  add_common(build_cmd, args);

  auto* basis_cmd = app.add_subcommand("basis", "list the graded basis and rewrite rows");
  add_common(basis_cmd, args);
  bool with_structure = false;
  basis_cmd->add_flag("--structure-constants", with_structure,
                      "also dump the multiplication table");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification claim catalog");
  add_common(verify_cmd, args);
  std::string claims_path;
  int lie_n = 0, group_n = 0, star_n = 0;
  std::string strategy = "symbolic";
  std::string expect_str;
  verify_cmd->add_option("--claims", claims_path, "claims catalog with expected statuses");
  verify_cmd->add_option("--lie-engel", lie_n, "check one Lie Engel identity only");
  verify_cmd->add_option("--group-engel", group_n, "check one adjoint-group Engel word only");
  verify_cmd->add_option("--star-engel", star_n, "check one BCH-group Engel word only");
  verify_cmd->add_option("--strategy", strategy, "symbolic | symmetrized | both")
      ->check(CLI::IsMember({"symbolic", "symmetrized", "both"}));
  verify_cmd->add_option("--expect", expect_str, "expected status for selective checks")
      ->check(CLI::IsMember({"pass", "fail"}));

  auto* witness_cmd = app.add_subcommand("witness", "print the witness of a failing identity");
  add_common(witness_cmd, args);
  int wlie_n = 0, wgroup_n = 0, wstar_n = 0;
  witness_cmd->add_option("--lie-engel", wlie_n, "Lie Engel identity order");
  witness_cmd->add_option("--group-engel", wgroup_n, "adjoint-group Engel word order");
  witness_cmd->add_option("--star-engel", wstar_n, "BCH-group Engel word order");

  auto* bch_cmd = app.add_subcommand("bch", "run the BCH correspondence claims");
  add_common(bch_cmd, args);

  auto* scan_cmd = app.add_subcommand("char-scan",
                                      "evaluate the witness across characteristics");
  add_common(scan_cmd, args);
  std::string primes_arg = "2,3,5,7";
  scan_cmd->add_option("--primes", primes_arg, "comma-separated primes");

  auto* report_cmd = app.add_subcommand("report", "re-render a structured report");
  std::string report_path;
  report_cmd->add_option("file", report_path, "report JSON file")->required();
  std::string report_format = "text";
  report_cmd->add_option("--format", report_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  bool report_timings = false;
  report_cmd->add_flag("--timings", report_timings, "include timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build_cmd->parsed()) {
      auto spec = load_spec(args);
      write_output(with_base_ring(spec, [&](const auto&, const auto& alg) {
                     return algebra_summary(alg);
                   }),
                   args.output);
      return 0;
    }

    if (basis_cmd->parsed()) {
      auto spec = load_spec(args);
      write_output(with_base_ring(spec, [&](const auto&, const auto& alg) {
                     return basis_listing(alg, with_structure);
                   }),
                   args.output);
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyOptions vopt;
      vopt.characteristic_override = args.characteristic_override;
      vopt.jobs = args.jobs;
      vopt.seed = args.seed;
      if (lie_n > 0) vopt.lie_engel_n = lie_n;
      if (group_n > 0) vopt.group_engel_n = group_n;
      if (star_n > 0) vopt.star_engel_n = star_n;
      vopt.strategy = strategy;
      if (!expect_str.empty()) vopt.expect = claim_status_from_string(expect_str);
      CommonArgs a = args;
      a.characteristic_override = -1; // folded into vopt
      return run_verify(a, vopt, claims_path);
    }

    if (witness_cmd->parsed()) {
      VerifyOptions vopt;
      vopt.characteristic_override = args.characteristic_override;
      vopt.jobs = args.jobs;
      vopt.seed = args.seed;
      if (wlie_n > 0) vopt.lie_engel_n = wlie_n;
      if (wgroup_n > 0) vopt.group_engel_n = wgroup_n;
      if (wstar_n > 0) vopt.star_engel_n = wstar_n;
      if (!vopt.lie_engel_n && !vopt.group_engel_n && !vopt.star_engel_n)
        throw domain_error("witness needs one of --lie-engel, --group-engel, --star-engel");
      auto spec = io::load_presentation_file(args.spec_path);
      auto report = run_claim_catalog(spec, vopt);
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& c : report.claims()) {
        nlohmann::ordered_json j;
        j["id"] = c.id;
        j["status"] = to_string(c.status);
        if (c.witness) {
          nlohmann::ordered_json w;
          w["elements"] = nlohmann::ordered_json::array();
          for (const auto& [name, value] : c.witness->elements)
            w["elements"].push_back({{"name", name}, {"value", value}});
          w["value"] = c.witness->value;
          j["witness"] = w;
        }
        doc.push_back(j);
      }
      write_output(doc.dump(2) + "\n", args.output);
      return 0;
    }

    if (bch_cmd->parsed()) {
      auto spec = load_spec(args);
      if (spec.characteristic != 0)
        throw domain_error("the BCH correspondence requires characteristic 0");
      VerifyOptions vopt;
      vopt.jobs = args.jobs;
      vopt.seed = args.seed;
      auto report = run_claim_catalog(spec, vopt);
      VerificationReport bch_only;
      bch_only.algebra = report.algebra;
      for (const auto& c : report.claims())
        if (c.id.rfind("bch.", 0) == 0) bch_only.add(c);
      auto mismatches = expectation_mismatches(bch_only, default_expectations());
      std::string text = render(bch_only, args);
      write_output(text, args.output);
      return mismatches.empty() ? 0 : 1;
    }

    if (scan_cmd->parsed()) {
      auto spec = load_spec(args);
      std::vector<long> primes;
      std::stringstream ss(primes_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        long p = std::stol(tok);
        if (!is_prime_u64(static_cast<std::uint64_t>(p)))
          throw domain_error("char-scan primes must be prime, got " + tok);
        primes.push_back(p);
      }
      std::ostringstream out;
      for (long p : primes) {
        FpRing F(p);
        auto spec_p = spec;
        spec_p.characteristic = p;
        auto alg = QuotientAlgebra<FpRing>::build(F, spec_p);
        Hull<FpRing, FpRing> hull(alg, F, ExecPolicy{args.jobs});
        auto word = hull.engel_word(alg.generator_image(F, 0), alg.generator_image(F, 1), 5);
        out << "p=" << p << ": witness part = " << alg.elem_str(F, word.part);
        out << (alg.is_zero(F, word.part) ? "  (vanishes)" : "  (nonzero)");
        if (spec_p.outside_theorem_hypotheses()) out << "  [outside theorem hypotheses]";
        out << "\n";
      }
      write_output(out.str(), args.output);
      return 0;
    }

    if (report_cmd->parsed()) {
      std::ifstream in(report_path);
      if (!in) throw domain_error("cannot open report file '" + report_path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      auto report = parse_report_json(ss.str());
      std::cout << (report_format == "json" ? render_report_json(report, report_timings)
                                            : render_report_text(report, report_timings));
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
