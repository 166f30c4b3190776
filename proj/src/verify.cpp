#include "hyperinfect/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hyperinfect/combinatorics.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/io.hpp"

namespace hyperinfect {
namespace {

constexpr std::size_t kKeepFailures = 5;
constexpr std::size_t kKeepSamples = 3;
constexpr std::size_t kKeepNotes = 12;

std::uint64_t fnv1a(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char c : id) mix(static_cast<unsigned char>(c));
  return h;
}

CaseReport run_one(const TheoremCase& c, const VerifyOptions& options) {
  CaseReport r;
  r.id = c.id;
  r.tags = c.tags;
  r.anchor = c.anchor;
  r.expected = c.expected;
  r.applicability = c.applicability;
  const auto start = std::chrono::steady_clock::now();
  CaseContext ctx(r, fnv1a(options.seed, c.id), options.budget, options.count);
  try {
    c.run(ctx);
  } catch (const BudgetExceeded& e) {
    ++r.skipped;
    ctx.note(std::string("case stopped: ") + e.what());
  } catch (const std::exception& e) {
    ctx.check(false, "case body", std::string("unexpected error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.failed > 0) {
    r.status = CaseStatus::Fail;
  } else if (r.checked == 0 && r.skipped > 0) {
    r.status = CaseStatus::Skipped;
  } else {
    r.status = CaseStatus::Pass;
  }
  return r;
}

}  // namespace

const char* to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseReport& c) { return c.status == CaseStatus::Pass; }));
}

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseReport& c) { return c.status == CaseStatus::Fail; }));
}

std::size_t VerificationReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) {
    return c.status == CaseStatus::Skipped;
  }));
}

const CaseReport* VerificationReport::find(const std::string& id) const {
  for (const auto& c : cases) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CaseContext::CaseContext(CaseReport& report, std::uint64_t seed, std::uint64_t budget,
                         std::size_t count)
    : report_(report), rng_(seed), budget_(budget), count_(count) {}

SolverResult CaseContext::solve(const Hypergraph& h, int m) {
  SolverOptions o;
  o.m = m;
  o.budget = budget_;
  o.threads = 1;
  SolverResult r = infection_number(h, o);
  ++report_.solved;
  const std::size_t lo = multiplicity_lower_bound(h);
  const std::size_t hi = upper_bound(h, m);
  if (r.infection_number < lo || r.infection_number > hi) {
    check(false, "bound sandwich",
          "I_" + std::to_string(m) + "=" + std::to_string(r.infection_number) + " outside [" +
              std::to_string(lo) + "," + std::to_string(hi) + "]",
          &h);
  }
  return r;
}

void CaseContext::instance(const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExceeded& e) {
    ++report_.skipped;
    note(name + ": skipped, " + e.what());
  }
}

void CaseContext::check(bool ok, const std::string& instance, const std::string& detail,
                        const Hypergraph* h) {
  ++report_.checked;
  if (ok) {
    if (report_.samples.size() < kKeepSamples) report_.samples.push_back({instance, detail, {}});
    return;
  }
  ++report_.failed;
  if (report_.failures.size() < kKeepFailures) {
    InstanceRecord rec{instance, detail, {}};
    if (h != nullptr) rec.graph = *h;
    report_.failures.push_back(std::move(rec));
  }
}

void CaseContext::check_eq(const std::string& instance, std::size_t got, std::size_t expected,
                           const Hypergraph* h) {
  check(got == expected, instance,
        "got " + std::to_string(got) + ", expected " + std::to_string(expected), h);
}

void CaseContext::check_le(const std::string& instance, std::size_t lhs, std::size_t rhs,
                           const Hypergraph* h) {
  check(lhs <= rhs, instance, std::to_string(lhs) + " <= " + std::to_string(rhs), h);
}

void CaseContext::note(const std::string& text) {
  if (report_.notes.size() < kKeepNotes) {
    report_.notes.push_back(text);
  } else if (report_.notes.size() == kKeepNotes) {
    report_.notes.push_back("further notes omitted");
  }
}

bool matches(const TheoremCase& c, const std::string& filter) {
  if (filter.empty() || c.id.rfind(filter, 0) == 0) return true;
  return std::find(c.tags.begin(), c.tags.end(), filter) != c.tags.end();
}

VerificationReport run_cases(const std::vector<TheoremCase>& cases, const VerifyOptions& options) {
  std::vector<const TheoremCase*> chosen;
  for (const auto& c : cases) {
    if (matches(c, options.filter)) chosen.push_back(&c);
  }
  VerificationReport report;
  report.cases.resize(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      report.cases[i] = run_one(*chosen[i], options);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, 64));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

VerificationReport run_verification(const VerifyOptions& options) {
  return run_cases(theorem_registry(), options);
}

VerificationReport property_suite(std::uint64_t seed, std::size_t count,
                                  const VerifyOptions& options) {
  VerifyOptions o = options;
  o.seed = seed;
  o.count = count;
  return run_cases(property_registry(), o);
}

nlohmann::json report_json(const VerificationReport& r, bool timings) {
  using nlohmann::json;
  json cases = json::array();
  for (const auto& c : r.cases) {
    json j;
    j["id"] = c.id;
    j["tags"] = c.tags;
    j["anchor"] = c.anchor;
    j["expected"] = c.expected;
    j["applicability"] = c.applicability;
    j["status"] = to_string(c.status);
    j["checked"] = c.checked;
    j["skipped"] = c.skipped;
    j["failed"] = c.failed;
    j["solved"] = c.solved;
    json samples = json::array();
    for (const auto& s : c.samples) samples.push_back({{"instance", s.instance}, {"detail", s.detail}});
    j["samples"] = samples;
    json failures = json::array();
    for (const auto& f : c.failures) {
      json fj = {{"instance", f.instance}, {"detail", f.detail}};
      if (f.graph) fj["graph"] = io::to_json(*f.graph);
      failures.push_back(fj);
    }
    j["failures"] = failures;
    j["notes"] = c.notes;
    if (timings) j["seconds"] = c.seconds;
    cases.push_back(j);
  }
  return {{"cases", cases},
          {"summary",
           {{"passed", r.passed()},
            {"failed", r.failed()},
            {"skipped", r.skipped()},
            {"total", r.cases.size()}}}};
}

ConjectureSweep conjecture_sweep(std::size_t max_n, std::size_t k, std::uint64_t budget) {
  if (k < 1) throw InvalidInput("conjecture sweep needs k >= 1");
  if (max_n > 7) throw InvalidInput("conjecture sweep supports at most 7 vertices");
  for (std::size_t n = k; n <= max_n; ++n) {
    if (binomial(n, k) > 24) {
      throw InvalidInput("conjecture sweep: C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") candidate edges exceed the enumeration limit of 24");
    }
  }
  ConjectureSweep s;
  s.k = k;
  s.max_n = max_n;
  SolverOptions opts;
  opts.budget = budget;
  for (std::size_t n = k; n <= max_n; ++n) {
    for_each_class(n, subsets_of_size(n, k), [&](const EdgeMasks& edges) {
      if (edges.empty()) return;
      ++s.classes;
      const Hypergraph h = from_masks(n, edges);
      ConjectureReport r;
      try {
        r = check_conjecture(h, opts);
      } catch (const BudgetExceeded&) {
        ++s.skipped;
        return;
      }
      s.infection_sets_checked += r.infection_sets_checked;
      if (r.status == ConjectureStatus::NotApplicable) return;
      ++s.applicable;
      if (r.status == ConjectureStatus::Holds) {
        ++s.holds;
      } else {
        s.counterexamples.push_back({h, *r.counterexample_seed, *r.counterexample_uninfected});
      }
    });
  }
  return s;
}

nlohmann::json sweep_json(const ConjectureSweep& s) {
  using nlohmann::json;
  json ce = json::array();
  for (const auto& c : s.counterexamples) {
    ce.push_back({{"graph", io::to_json(c.graph)},
                  {"seed", io::labels_json(c.seed)},
                  {"uninfected", io::labels_json(c.uninfected)}});
  }
  return {{"k", s.k},
          {"max_n", s.max_n},
          {"classes", s.classes},
          {"applicable", s.applicable},
          {"holds", s.holds},
          {"violated", s.counterexamples.size()},
          {"skipped", s.skipped},
          {"infection_sets_checked", s.infection_sets_checked},
          {"verdict", s.counterexamples.empty() ? "holds on sweep" : "counterexample found"},
          {"counterexamples", ce}};
}

}  // namespace hyperinfect
