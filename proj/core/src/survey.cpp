#include "ideal_lab/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <mutex>
#include <sstream>
#include <thread>

#include "ideal_lab/errors.hpp"
#include "ideal_lab/macdonald.hpp"
#include "ideal_lab/weyl_cache.hpp"
#include "ideal_lab/weylcomb.hpp"

#include "json.hpp"

namespace ideal_lab {

CheckSet CheckSet::all() { return CheckSet{true, true, true, true, true}; }

CheckSet CheckSet::parse(const std::string& csv) {
  CheckSet out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "thm1")
      out.thm1 = true;
    else if (tok == "thm2")
      out.thm2 = true;
    else if (tok == "free")
      out.free_cert = true;
    else if (tok == "macdonald")
      out.macdonald = true;
    else if (tok == "chambers")
      out.chambers = true;
    else
      throw Error("unknown check '" + tok + "' (expected thm1, thm2, free, macdonald, chambers)");
  }
  return out;
}

std::string thm1_scope(const TypeRank& t) {
  switch (t.letter) {
    case TypeLetter::A:
    case TypeLetter::B:
    case TypeLetter::C:
    case TypeLetter::G:
    case TypeLetter::F:
      return "proven";
    case TypeLetter::E:
      return t.rank == 6 ? "proven" : "conjectural";
    default:
      return "conjectural";
  }
}

std::string thm2_scope(const TypeRank& t) {
  switch (t.letter) {
    case TypeLetter::A:
    case TypeLetter::B:
    case TypeLetter::C:
    case TypeLetter::D:
    case TypeLetter::G:
      return "proven";
    default:
      return "informational";
  }
}

std::string macdonald_scope(const TypeRank&) { return "proven"; }
std::string chambers_scope(const TypeRank&) { return "speculative"; }

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string verdict_of(const FactorizationReport& r) { return r.equal ? "equal" : "differs"; }

std::vector<long long> coeffs_of(const IntPolynomial& p) {
  std::vector<long long> out;
  for (const BigInt& c : p.coeffs()) out.push_back(c.convert_to<long long>());
  return out;
}

std::vector<int> set_to_indices(const IndexSet& s) {
  std::vector<int> out;
  s.for_each([&](int i) { out.push_back(i); });
  return out;
}

IdealRecord process_ideal(const RootSystem& rs, const WeylGroup* W, const Ideal& ideal,
                          int ideal_id, const CheckSet& checks, const ArrangementBudget& budget) {
  auto start = std::chrono::steady_clock::now();
  IdealRecord rec;
  rec.ideal_id = ideal_id;
  rec.roots = ideal.members;
  rec.profile = ideal_exponents(rs, ideal);

  if (checks.thm1) rec.thm1 = verdict_of(check_poincare_factorization(rs, *W, ideal, ideal_id));
  if (checks.thm2) {
    try {
      rec.thm2 = verdict_of(check_char_poly_factorization(rs, ideal, ideal_id, budget));
    } catch (const BudgetExceededError&) {
      rec.thm2 = "budget";
    }
  }
  if (checks.free_cert) {
    try {
      auto cert = freeness_certificate(build_ideal_arrangement(rs, ideal), budget);
      rec.free_status = cert ? "found" : "not_found";
      if (cert) rec.certificate_depth = cert->depth;
    } catch (const BudgetExceededError&) {
      rec.free_status = "budget";
    }
  }
  if (checks.macdonald)
    rec.macdonald =
        macdonald_lhs(rs, *W, ideal.complement) == macdonald_rhs(*W, ideal.complement)
            ? "equal"
            : "differs";
  if (checks.chambers)
    rec.chambers = chamber_poly(rs, *W, ideal) == poincare_poly(*W, ideal) ? "equal" : "differs";

  auto stop = std::chrono::steady_clock::now();
  rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return rec;
}

void tally(const std::string& verdict, const std::string& pass, const std::string& scope,
           int& checked, int& good, SurveyReport& r) {
  if (verdict.empty()) return;
  ++checked;
  if (verdict == pass) ++good;
  if (verdict == "budget")
    r.budget_hit = true;
  else if (verdict != pass && scope == "proven")
    r.proven_ok = false;
}

}  // namespace

SurveyReport run_survey(const SurveyOptions& opts) {
  RootSystem rs = RootSystem::build(opts.type);
  std::vector<Ideal> ideals = enumerate_ideals(rs);

  std::optional<WeylGroup> W;
  if (opts.checks.needs_weyl()) W = load_or_enumerate_weyl(rs, opts.weyl_cap, opts.cache_dir);

  ArrangementBudget budget;
  budget.scale = opts.budget_scale;

  SurveyReport report;
  report.type = rs.type();
  report.alias_note = rs.alias_note();
  report.checks = opts.checks;
  report.records.resize(ideals.size());

  const WeylGroup* Wp = W ? &*W : nullptr;
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < ideals.size(); ++i)
      report.records[i] =
          process_ideal(rs, Wp, ideals[i], static_cast<int>(i), opts.checks, budget);
  } else {
    std::atomic<size_t> next{0};
    std::mutex err_mtx;
    std::exception_ptr err;
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= ideals.size()) return;
        try {
          report.records[i] =
              process_ideal(rs, Wp, ideals[i], static_cast<int>(i), opts.checks, budget);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mtx);
          if (!err) err = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  if (opts.reproducible)
    for (auto& rec : report.records) rec.millis = 0;
  else
    report.timestamp = utc_timestamp();

  for (const IdealRecord& rec : report.records) {
    tally(rec.thm1, "equal", thm1_scope(report.type), report.summary.thm1_checked,
          report.summary.thm1_equal, report);
    tally(rec.thm2, "equal", thm2_scope(report.type), report.summary.thm2_checked,
          report.summary.thm2_equal, report);
    tally(rec.free_status, "found", thm2_scope(report.type), report.summary.free_checked,
          report.summary.free_found, report);
    tally(rec.macdonald, "equal", macdonald_scope(report.type),
          report.summary.macdonald_checked, report.summary.macdonald_equal, report);
    tally(rec.chambers, "equal", chambers_scope(report.type), report.summary.chambers_checked,
          report.summary.chambers_equal, report);
  }
  return report;
}

std::string survey_to_json(const SurveyReport& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type.name();
  j["rank"] = r.type.rank;
  if (!r.alias_note.empty()) j["alias_note"] = r.alias_note;
  j["ideal_count"] = r.records.size();

  nlohmann::ordered_json scopes;
  if (r.checks.thm1) scopes["thm1"] = thm1_scope(r.type);
  if (r.checks.thm2) scopes["thm2"] = thm2_scope(r.type);
  if (r.checks.free_cert) scopes["free"] = thm2_scope(r.type);
  if (r.checks.macdonald) scopes["macdonald"] = macdonald_scope(r.type);
  if (r.checks.chambers) scopes["chambers"] = chambers_scope(r.type);
  j["scopes"] = scopes;

  nlohmann::ordered_json s;
  s["thm1_checked"] = r.summary.thm1_checked;
  s["thm1_equal"] = r.summary.thm1_equal;
  s["thm2_checked"] = r.summary.thm2_checked;
  s["thm2_equal"] = r.summary.thm2_equal;
  s["free_checked"] = r.summary.free_checked;
  s["free_found"] = r.summary.free_found;
  s["macdonald_checked"] = r.summary.macdonald_checked;
  s["macdonald_equal"] = r.summary.macdonald_equal;
  s["chambers_checked"] = r.summary.chambers_checked;
  s["chambers_equal"] = r.summary.chambers_equal;
  s["proven_ok"] = r.proven_ok;
  s["budget_hit"] = r.budget_hit;
  j["summary"] = s;

  if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;

  j["records"] = nlohmann::ordered_json::array();
  for (const IdealRecord& rec : r.records) {
    nlohmann::ordered_json o;
    o["ideal_id"] = rec.ideal_id;
    o["ideal_roots"] = set_to_indices(rec.roots);
    o["lambda"] = rec.profile.lambda;
    o["k"] = rec.profile.k;
    o["exponents"] = rec.profile.exponents;
    o["thm1"] = rec.thm1;
    o["thm2"] = rec.thm2;
    o["free"] = rec.free_status;
    o["certificate_depth"] = rec.certificate_depth;
    o["macdonald"] = rec.macdonald;
    o["chambers"] = rec.chambers;
    o["millis"] = rec.millis;
    j["records"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::string survey_to_csv(const SurveyReport& r) {
  std::ostringstream out;
  out << "ideal_id,k,exponents,thm1,thm2,free,millis\n";
  for (const IdealRecord& rec : r.records) {
    out << rec.ideal_id << ',' << rec.profile.k << ',';
    for (size_t i = 0; i < rec.profile.exponents.size(); ++i) {
      if (i) out << ';';
      out << rec.profile.exponents[i];
    }
    out << ',' << rec.thm1 << ',' << rec.thm2 << ',' << rec.free_status << ',' << rec.millis
        << '\n';
  }
  return out.str();
}

IdealReport run_ideal(const RootSystem& rs, const WeylGroup* weyl, const Ideal& ideal,
                      const CheckSet& checks, const ArrangementBudget& budget) {
  IdealReport rep;
  rep.type = rs.type();
  rep.roots = ideal.members;
  rep.profile = ideal_exponents(rs, ideal);

  auto judge = [&](const std::string& name, IntPolynomial lhs, IntPolynomial rhs,
                   const std::string& scope) {
    IdealCheckDetail d;
    d.name = name;
    d.verdict = lhs == rhs ? "equal" : "differs";
    if (d.verdict == "differs" && scope == "proven") rep.proven_ok = false;
    d.lhs = std::move(lhs);
    d.rhs = std::move(rhs);
    rep.details.push_back(std::move(d));
  };

  if (checks.thm1) {
    FactorizationReport f = check_poincare_factorization(rs, *weyl, ideal);
    judge("thm1", f.lhs, f.rhs, thm1_scope(rep.type));
  }
  if (checks.thm2) {
    try {
      FactorizationReport f = check_char_poly_factorization(rs, ideal, -1, budget);
      judge("thm2", f.lhs, f.rhs, thm2_scope(rep.type));
    } catch (const BudgetExceededError&) {
      rep.details.push_back(IdealCheckDetail{"thm2", {}, {}, "budget"});
      rep.budget_hit = true;
    }
  }
  if (checks.macdonald)
    judge("macdonald", macdonald_lhs(rs, *weyl, ideal.complement),
          macdonald_rhs(*weyl, ideal.complement), macdonald_scope(rep.type));
  if (checks.chambers)
    judge("chambers", chamber_poly(rs, *weyl, ideal), poincare_poly(*weyl, ideal),
          chambers_scope(rep.type));
  if (checks.free_cert) {
    try {
      auto cert = freeness_certificate(build_ideal_arrangement(rs, ideal), budget);
      rep.free_status = cert ? "found" : "not_found";
      if (cert) rep.certificate_depth = cert->depth;
      if (!cert && thm2_scope(rep.type) == "proven") rep.proven_ok = false;
    } catch (const BudgetExceededError&) {
      rep.free_status = "budget";
      rep.budget_hit = true;
    }
  }
  return rep;
}

std::string ideal_report_json(const IdealReport& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type.name();
  j["ideal_roots"] = set_to_indices(r.roots);
  j["lambda"] = r.profile.lambda;
  j["k"] = r.profile.k;
  j["exponents"] = r.profile.exponents;

  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const IdealCheckDetail& d : r.details) {
    nlohmann::ordered_json o;
    o["lhs_coeffs"] = coeffs_of(d.lhs);
    o["rhs_coeffs"] = coeffs_of(d.rhs);
    o["verdict"] = d.verdict;
    o["scope"] = d.name == "thm1"        ? thm1_scope(r.type)
                 : d.name == "thm2"      ? thm2_scope(r.type)
                 : d.name == "macdonald" ? macdonald_scope(r.type)
                                         : chambers_scope(r.type);
    checks[d.name] = std::move(o);
  }
  j["checks"] = checks;

  if (!r.free_status.empty()) {
    nlohmann::ordered_json f;
    f["status"] = r.free_status;
    f["certificate_depth"] = r.certificate_depth;
    f["scope"] = thm2_scope(r.type);
    j["free"] = f;
  }
  j["proven_ok"] = r.proven_ok;
  j["budget_hit"] = r.budget_hit;
  return j.dump(2) + "\n";
}

int survey_exit_code(const SurveyReport& r) {
  if (r.budget_hit) return 3;
  return r.proven_ok ? 0 : 1;
}

int ideal_exit_code(const IdealReport& r) {
  if (r.budget_hit) return 3;
  return r.proven_ok ? 0 : 1;
}

}  // namespace ideal_lab
