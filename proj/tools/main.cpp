#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ideal_lab/errors.hpp"
#include "ideal_lab/survey.hpp"
#include "ideal_lab/weyl_cache.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
  std::string type;
  int rank = -1;
  std::string checks = "thm1,thm2,free,macdonald,chambers";
  std::string output;
  std::string format = "json";
  int jobs = 1;
  uint64_t cap = 1'000'000;
  int budget = 1;
  bool reproducible = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--type", o.type, "root system type, e.g. B3 or B with --rank");
  cmd->add_option("--rank", o.rank, "rank when --type is a bare letter");
  cmd->add_option("--checks", o.checks, "comma list of thm1,thm2,free,macdonald,chambers");
  cmd->add_option("--output", o.output, "write the report here instead of stdout");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", o.jobs, "parallel workers across ideals");
  cmd->add_option("--cap", o.cap, "largest Weyl group size to enumerate");
  cmd->add_option("--budget", o.budget, "scale factor for lattice/counting/certificate budgets");
  cmd->add_flag("--reproducible", o.reproducible, "suppress timestamp and timings");
}

ideal_lab::TypeRank resolve_type(const CommonOpts& o) {
  if (o.type.empty()) throw ideal_lab::Error("missing root system type");
  if (o.rank >= 0) return ideal_lab::parse_type_rank(o.type + std::to_string(o.rank));
  return ideal_lab::parse_type_rank(o.type);
}

std::string cache_dir_from_env() {
  const char* v = std::getenv("IDEAL_LAB_CACHE_DIR");
  return v ? v : "";
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_survey(const CommonOpts& o) {
  ideal_lab::SurveyOptions opts;
  opts.type = resolve_type(o);
  opts.checks = ideal_lab::CheckSet::parse(o.checks);
  if (!opts.checks.any()) throw ideal_lab::Error("no checks requested");
  opts.jobs = o.jobs;
  opts.weyl_cap = o.cap;
  opts.budget_scale = o.budget;
  opts.reproducible = o.reproducible;
  opts.cache_dir = cache_dir_from_env();

  ideal_lab::SurveyReport report = ideal_lab::run_survey(opts);
  std::string body = o.format == "csv" ? ideal_lab::survey_to_csv(report)
                                       : ideal_lab::survey_to_json(report);
  int io = write_output(o.output, body);
  if (io != kExitOk) return io;
  return ideal_lab::survey_exit_code(report);
}

int cmd_ideal(const CommonOpts& o, const std::vector<std::string>& spec) {
  if (o.format == "csv") throw ideal_lab::Error("csv output is only available for survey");
  ideal_lab::RootSystem rs = ideal_lab::RootSystem::build(resolve_type(o));
  const int nroots = rs.num_positive_roots();

  ideal_lab::IndexSet generators;
  if (spec.empty()) throw ideal_lab::Error("missing ideal spec: root indices or theta|empty|full");
  bool keyword = spec.size() == 1 && !std::isdigit(static_cast<unsigned char>(spec[0][0]));
  if (keyword) {
    if (spec[0] == "theta")
      generators.set(rs.highest_root());
    else if (spec[0] == "full")
      generators = ideal_lab::IndexSet::first_n(nroots);
    else if (spec[0] != "empty")
      throw ideal_lab::Error("unknown ideal spec '" + spec[0] +
                             "' (expected root indices or theta|empty|full)");
  } else {
    for (const std::string& tok : spec) {
      size_t pos = 0;
      int idx = -1;
      try {
        idx = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || idx < 0 || idx >= nroots)
        throw ideal_lab::Error("bad root index '" + tok + "' (expected 0.." +
                               std::to_string(nroots - 1) + ")");
      generators.set(idx);
    }
  }

  ideal_lab::Ideal ideal = ideal_lab::ideal_from_generators(rs, generators);
  ideal_lab::IndexSet added = ideal.members.minus(generators);
  if (added.any()) {
    std::cerr << "note: upper closure added roots";
    added.for_each([&](int i) { std::cerr << ' ' << i; });
    std::cerr << "\n";
  }

  ideal_lab::CheckSet checks = ideal_lab::CheckSet::parse(o.checks);
  if (!checks.any()) throw ideal_lab::Error("no checks requested");

  std::optional<ideal_lab::WeylGroup> W;
  if (checks.needs_weyl()) W = ideal_lab::load_or_enumerate_weyl(rs, o.cap, cache_dir_from_env());

  ideal_lab::ArrangementBudget budget;
  budget.scale = o.budget;
  ideal_lab::IdealReport report =
      ideal_lab::run_ideal(rs, W ? &*W : nullptr, ideal, checks, budget);
  int io = write_output(o.output, ideal_lab::ideal_report_json(report));
  if (io != kExitOk) return io;
  return ideal_lab::ideal_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal-lab: exponents, factorizations, and arrangements of B-stable ideals"};
  app.require_subcommand(1);

  CommonOpts survey_opts;
  CLI::App* survey = app.add_subcommand("survey", "run checks over every ideal of a type");
  std::string survey_type_pos;
  survey->add_option("TYPE", survey_type_pos, "root system type, e.g. F4");
  add_common(survey, survey_opts);

  CommonOpts ideal_opts;
  std::string ideal_type_pos;
  std::vector<std::string> ideal_spec;
  CLI::App* ideal = app.add_subcommand("ideal", "report on a single ideal");
  ideal->add_option("TYPE", ideal_type_pos, "root system type, e.g. B3");
  ideal->add_option("SPEC", ideal_spec, "generator root indices, or theta|empty|full");
  add_common(ideal, ideal_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (survey->parsed()) {
      if (survey_opts.type.empty()) survey_opts.type = survey_type_pos;
      return cmd_survey(survey_opts);
    }
    if (ideal_opts.type.empty()) ideal_opts.type = ideal_type_pos;
    return cmd_ideal(ideal_opts, ideal_spec);
  } catch (const ideal_lab::GroupTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ideal_lab::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ideal_lab::ComplementTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
