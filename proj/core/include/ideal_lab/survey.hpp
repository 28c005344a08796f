#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideal_lab/arrangement.hpp"
#include "ideal_lab/ideals.hpp"
#include "ideal_lab/rootsys.hpp"
#include "ideal_lab/weyl.hpp"

namespace ideal_lab {

struct CheckSet {
  bool thm1 = false;
  bool thm2 = false;
  bool free_cert = false;
  bool macdonald = false;
  bool chambers = false;

  static CheckSet all();
  // comma-separated tokens: thm1, thm2, free, macdonald, chambers
  static CheckSet parse(const std::string& csv);

  bool any() const { return thm1 || thm2 || free_cert || macdonald || chambers; }
  bool needs_weyl() const { return thm1 || macdonald || chambers; }
};

// scope of each verdict for the exit-code contract: only "proven" scopes
// can fail a run, the rest are informational
std::string thm1_scope(const TypeRank& t);       // proven | conjectural
std::string thm2_scope(const TypeRank& t);       // proven | informational
std::string macdonald_scope(const TypeRank& t);  // proven
std::string chambers_scope(const TypeRank& t);   // speculative

struct SurveyOptions {
  TypeRank type;
  CheckSet checks = CheckSet::all();
  int jobs = 1;
  uint64_t weyl_cap = 1'000'000;
  int budget_scale = 1;
  bool reproducible = false;
  std::string cache_dir;  // empty disables the Weyl cache
};

// verdict strings: "" (not requested), "equal", "differs", "budget";
// free_status additionally uses "found" / "not_found"
struct IdealRecord {
  int ideal_id = -1;
  IndexSet roots;
  ExponentProfile profile;
  std::string thm1, thm2, macdonald, chambers;
  std::string free_status;
  int certificate_depth = -1;
  long long millis = 0;
};

struct SurveySummary {
  int thm1_checked = 0, thm1_equal = 0;
  int thm2_checked = 0, thm2_equal = 0;
  int free_checked = 0, free_found = 0;
  int macdonald_checked = 0, macdonald_equal = 0;
  int chambers_checked = 0, chambers_equal = 0;
};

struct SurveyReport {
  TypeRank type;
  std::string alias_note;
  CheckSet checks;
  std::vector<IdealRecord> records;
  SurveySummary summary;
  bool proven_ok = true;  // every proven-scope verdict passed
  bool budget_hit = false;
  std::string timestamp;  // empty under reproducible
};

SurveyReport run_survey(const SurveyOptions& opts);

std::string survey_to_json(const SurveyReport& r);
std::string survey_to_csv(const SurveyReport& r);

// single-ideal report with full polynomial detail per requested check
struct IdealCheckDetail {
  std::string name;  // thm1 | thm2 | macdonald | chambers
  IntPolynomial lhs, rhs;
  std::string verdict;  // equal | differs | budget
};

struct IdealReport {
  TypeRank type;
  IndexSet roots;
  ExponentProfile profile;
  std::vector<IdealCheckDetail> details;
  std::string free_status;
  int certificate_depth = -1;
  bool proven_ok = true;
  bool budget_hit = false;
};

// weyl may be null when no requested check needs the group
IdealReport run_ideal(const RootSystem& rs, const WeylGroup* weyl, const Ideal& ideal,
                      const CheckSet& checks, const ArrangementBudget& budget = {});

std::string ideal_report_json(const IdealReport& r);

// 0 ok, 1 proven-scope violation, 3 budget exhausted
int survey_exit_code(const SurveyReport& r);
int ideal_exit_code(const IdealReport& r);

}  // namespace ideal_lab
