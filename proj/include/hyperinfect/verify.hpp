#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperinfect/enumerate.hpp"
#include "hyperinfect/hypergraph.hpp"
#include "hyperinfect/solver.hpp"

namespace hyperinfect {

enum class CaseStatus { Pass, Fail, Skipped };
const char* to_string(CaseStatus s);

struct InstanceRecord {
  std::string instance;
  std::string detail;
  std::optional<Hypergraph> graph;  // kept for failures so they can be replayed
};

struct CaseReport {
  std::string id;
  std::vector<std::string> tags;
  std::string anchor;
  std::string expected;
  std::string applicability;
  CaseStatus status = CaseStatus::Pass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::size_t solved = 0;  // solver calls, each checked against both bounds
  std::vector<InstanceRecord> failures;  // the first few
  std::vector<InstanceRecord> samples;   // the first few passing checks
  std::vector<std::string> notes;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<CaseReport> cases;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }
  const CaseReport* find(const std::string& id) const;
};

/// Handed to every case body: solver access under the run's budget, seeded
/// randomness, and result recording.
class CaseContext {
 public:
  CaseContext(CaseReport& report, std::uint64_t seed, std::uint64_t budget, std::size_t count);

  /// Solves with the run budget. Also checks the bound sandwich
  /// multiplicity_lower_bound <= I_m <= upper_bound on every call.
  SolverResult solve(const Hypergraph& h, int m = 1);
  std::size_t number(const Hypergraph& h, int m = 1) { return solve(h, m).infection_number; }

  /// Runs body; a BudgetExceeded inside marks the instance skipped.
  void instance(const std::string& name, const std::function<void()>& body);

  void check(bool ok, const std::string& instance, const std::string& detail,
             const Hypergraph* h = nullptr);
  void check_eq(const std::string& instance, std::size_t got, std::size_t expected,
                const Hypergraph* h = nullptr);
  void check_le(const std::string& instance, std::size_t lhs, std::size_t rhs,
                const Hypergraph* h = nullptr);
  void note(const std::string& text);

  Rng& rng() { return rng_; }
  std::size_t count() const { return count_; }
  std::uint64_t budget() const { return budget_; }

 private:
  CaseReport& report_;
  Rng rng_;
  std::uint64_t budget_;
  std::size_t count_;
};

struct TheoremCase {
  std::string id;
  std::vector<std::string> tags;
  std::string anchor;         // where the result is stated
  std::string expected;       // closed form or inequality
  std::string applicability;  // parameter range actually swept
  std::function<void(CaseContext&)> run;
};

/// Closed-form results, one case each, in a fixed order.
const std::vector<TheoremCase>& theorem_registry();
/// Cross-module invariants driven by a seeded instance stream.
const std::vector<TheoremCase>& property_registry();

struct VerifyOptions {
  std::string filter;  // an exact tag or a prefix of the id; empty = all
  std::uint64_t budget = default_budget();
  unsigned threads = 1;  // cases run concurrently; the report order is fixed
  std::uint64_t seed = 0;
  std::size_t count = 200;  // random instances per property
};

bool matches(const TheoremCase& c, const std::string& filter);

VerificationReport run_cases(const std::vector<TheoremCase>& cases, const VerifyOptions& options);
VerificationReport run_verification(const VerifyOptions& options);
VerificationReport property_suite(std::uint64_t seed, std::size_t count,
                                  const VerifyOptions& options = {});

/// Runtimes are left out unless asked for, so reports compare byte for byte.
nlohmann::json report_json(const VerificationReport& r, bool timings = false);

struct ConjectureCounterexample {
  Hypergraph graph;
  VertexSet seed;
  VertexSet uninfected;  // V minus seed
};

struct ConjectureSweep {
  std::size_t k = 0;
  std::size_t max_n = 0;
  std::size_t classes = 0;     // isomorphism classes examined
  std::size_t applicable = 0;  // with I = n - k + 1
  std::size_t holds = 0;
  std::size_t skipped = 0;  // over budget
  std::uint64_t infection_sets_checked = 0;
  std::vector<ConjectureCounterexample> counterexamples;
};

/// Every k-uniform hypergraph with at least one edge on k..max_n vertices
/// (max_n <= 7), one per isomorphism class.
ConjectureSweep conjecture_sweep(std::size_t max_n, std::size_t k, std::uint64_t budget);
nlohmann::json sweep_json(const ConjectureSweep& s);

}  // namespace hyperinfect
