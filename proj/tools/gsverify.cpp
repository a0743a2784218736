// Command-line front end: exact verification of social choice axioms and
// the homological dictator detection pipeline.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gsv/choice.hpp"
#include "gsv/report.hpp"

namespace {

void write_report(const nlohmann::json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump(2) << "\n";
  }
}

void maybe_dump_complex(const std::string& path, int n, int N, const std::string& target) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << gsv::complex_dump(n, N, target).dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological verification of the Gibbard-Satterthwaite setting"};
  app.require_subcommand(1);

  gsv::SuiteConfig cfg;
  std::string rule, table_path, out_path, suites_arg, dump_path, target = "NProfiles";
  std::optional<int> degree;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-n,--alternatives", cfg.n, "number of alternatives");
    cmd->add_option("-N,--voters", cfg.N, "number of voters");
    cmd->add_option("--seed", cfg.seed, "seed for randomized fixtures");
    cmd->add_option("--samples", cfg.samples, "random tables for the equivalence suite");
    cmd->add_flag("--exhaustive-validation", cfg.exhaustive_validation,
                  "scan every profile of each cover set when validating the induced map");
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
    cmd->add_option("--dump-complex", dump_path, "write the complex faces as JSON (debugging)");
  };

  auto* analyze = app.add_subcommand("analyze", "axiom checks and dictator pairing for one SCF");
  analyze->add_option("--rule", rule, "named rule, e.g. dictatorship:1, plurality_lex");
  analyze->add_option("--table", table_path, "JSON SCF table file");
  add_common(analyze);

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suites_arg, "comma-separated suite names (default: all)");
  add_common(verify);

  auto* homology = app.add_subcommand("homology", "Betti numbers and torsion of a nerve");
  homology->add_option("--target", target, "NA, NP, or NProfiles")->required();
  homology->add_option("-k,--degree", degree, "single degree (default: 0..n-2)");
  add_common(homology);

  auto* enumerate = app.add_subcommand("enumerate-scf",
                                       "backtracking search for monotonic+unanimous SCFs");
  add_common(enumerate);

  auto* arrangement = app.add_subcommand("arrangement",
                                         "subspace-arrangement dimension survey");
  add_common(arrangement);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    nlohmann::json doc;
    if (app.got_subcommand(analyze)) {
      if (rule.empty() == table_path.empty())
        throw std::invalid_argument("analyze: give exactly one of --rule or --table");
      const gsv::SocialChoiceFunction f =
          rule.empty() ? gsv::load_scf_table_json(table_path)
                       : gsv::scf_from_rule_name(rule, cfg.n, cfg.N);
      doc = gsv::cmd_analyze(f, cfg);
      maybe_dump_complex(dump_path, f.n(), f.voters(), "NProfiles");
    } else if (app.got_subcommand(verify)) {
      if (!suites_arg.empty()) {
        std::string s = suites_arg;
        size_t pos;
        while ((pos = s.find(',')) != std::string::npos) {
          cfg.suites.push_back(s.substr(0, pos));
          s.erase(0, pos + 1);
        }
        if (!s.empty()) cfg.suites.push_back(s);
      }
      doc = gsv::cmd_verify(cfg);
    } else if (app.got_subcommand(homology)) {
      doc = gsv::cmd_homology(target, cfg.n, cfg.N, degree, dump_path);
      maybe_dump_complex(dump_path, cfg.n, cfg.N, target);
    } else if (app.got_subcommand(enumerate)) {
      doc = gsv::cmd_enumerate(cfg);
    } else if (app.got_subcommand(arrangement)) {
      doc = gsv::cmd_arrangement(cfg);
    }
    write_report(doc, out_path);
    return gsv::report_passes(doc) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
