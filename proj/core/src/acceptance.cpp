#include "forest_trees/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "forest_trees/closed_form.hpp"
#include "forest_trees/error.hpp"
#include "forest_trees/forest.hpp"
#include "forest_trees/identity_lab.hpp"
#include "forest_trees/json_io.hpp"
#include "forest_trees/kirchhoff.hpp"
#include "forest_trees/parallel.hpp"
#include "forest_trees/rng.hpp"
#include "forest_trees/tripartite.hpp"
#include "forest_trees/weighted_tau.hpp"

namespace forest_trees::acceptance {

namespace {

using std::chrono::seconds;

// Sizes of the randomized checks. Changing any of these changes what the
// acceptance suite certifies.
constexpr Count kEnumerationMaxVertices = 6;
constexpr Count kMatrixTreeMaxSide = 30;
constexpr std::size_t kMatrixTreeForestsPerHost = 200;
constexpr Count kSpecializationMaxSide = 12;
constexpr Count kMoonMaxN = 6;
constexpr std::size_t kFactoredPoints = 500;
constexpr std::size_t kFactoredMaxK = 8;
constexpr std::int64_t kFactoredMaxValue = 6;
constexpr std::size_t kRecursionGraphs = 500;
constexpr std::size_t kRecursionMaxK = 8;
constexpr std::int64_t kRecursionMaxWeight = 5;
constexpr std::size_t kIdentityTrials = 100;
constexpr std::size_t kIdentityMaxSize = 6;
constexpr Count kEqualityMaxN = 6;
constexpr Count kScanMaxN = 9;
constexpr std::size_t kScanTrialsPerShape = 100;

constexpr std::array<Criterion, 10> kCriteria{{
    {1, "closed form = forced-tree enumeration, every forest of K_{m,n}, m+n <= 6", seconds(60)},
    {2, "closed form = Matrix-Tree on the contraction, 200 random forests per host, m,n <= 30",
     seconds(120)},
    {3, "matching and tree specializations = closed form, m,n <= 12", seconds(30)},
    {4, "Moon formula = forced-tree enumeration, every forest of K_n, n <= 6", seconds(60)},
    {5, "factored-weight sum = Matrix-Tree on induced weights, 500 points, k <= 8", seconds(60)},
    {6, "inclusion-exclusion = alternative recursion = Matrix-Tree, 500 graphs, k <= 8",
     seconds(120)},
    {7, "identity suites, 100 points per size up to 6, plus L21 with A = 0 and B = 0",
     seconds(120)},
    {8, "pre-division integer divisible by mn in every run of criterion 2", seconds(120)},
    {9, "tripartite bound: equality for k <= 2 at n <= 6, scan of k >= 3 at n <= 9",
     seconds(120)},
    {10, "seeded outputs are byte-identical across repeated runs", seconds(60)},
}};

struct Verdict {
  bool correct = false;
  std::string detail;
};

std::string count_detail(std::size_t checked, std::size_t bad, std::string_view what) {
  std::ostringstream out;
  out << checked << " " << what << ", " << bad << " mismatches";
  return out.str();
}

Verdict enumeration_check() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (Count m = 1; m <= kEnumerationMaxVertices; ++m)
    for (Count n = m; m + n <= kEnumerationMaxVertices; ++n)
      for_each_forest({m, n}, SIZE_MAX, [&](const ForestInstance& f) {
        ++checked;
        if (tau_forest(m, n, validate(f)) != count_forced_trees(f)) {
          if (bad++ == 0) first = dump(to_json(f));
        }
        return true;
      });
  std::string detail = count_detail(checked, bad, "forests");
  if (bad) detail += "; first " + first;
  return {bad == 0 && checked > 0, detail};
}

struct MatrixTreeTally {
  std::size_t forests = 0;
  std::size_t mismatches = 0;
  std::size_t divisible = 0;
  std::string first_mismatch;
  std::string first_indivisible;
};

MatrixTreeTally matrix_tree_runs(std::uint64_t seed) {
  std::vector<PartSizes> hosts;
  for (Count m = 1; m <= kMatrixTreeMaxSide; ++m)
    for (Count n = m; n <= kMatrixTreeMaxSide; ++n) hosts.push_back({m, n});

  struct Slot {
    bool match = false;
    bool divisible = false;
    std::string instance;
  };
  std::vector<Slot> slots(hosts.size() * kMatrixTreeForestsPerHost);
  parallel_for(slots.size(), [&](std::size_t index) {
    const PartSizes& host = hosts[index / kMatrixTreeForestsPerHost];
    const std::size_t trial = index % kMatrixTreeForestsPerHost;
    Rng rng(derive_seed(seed, {host[0], host[1], trial}));
    const Count target = static_cast<Count>(rng.between(1, static_cast<std::int64_t>(host[0] + host[1])));
    const ForestInstance f = random_forest(host, target, rng.below(UINT64_MAX));
    const ComponentProfile profile = validate(f);
    Slot& slot = slots[index];
    std::optional<ExactInt> closed;
    try {
      closed = tau_forest_trace(host[0], host[1], profile).tau;
      slot.divisible = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DivisibilityViolation) throw;
    }
    slot.match = closed && *closed == tau_kirchhoff(contract_forest(f));
    if (!slot.match || !slot.divisible) slot.instance = dump(to_json(f));
  });

  MatrixTreeTally tally;
  for (const Slot& s : slots) {
    ++tally.forests;
    if (!s.match && tally.mismatches++ == 0) tally.first_mismatch = s.instance;
    if (s.divisible)
      ++tally.divisible;
    else if (tally.first_indivisible.empty())
      tally.first_indivisible = s.instance;
  }
  return tally;
}

Verdict matrix_tree_verdict(const MatrixTreeTally& t) {
  std::string detail = count_detail(t.forests, t.mismatches, "forests");
  if (t.mismatches) detail += "; first " + t.first_mismatch;
  return {t.mismatches == 0 && t.forests > 0, detail};
}

Verdict divisibility_verdict(const MatrixTreeTally& t) {
  std::ostringstream out;
  out << t.divisible << " of " << t.forests << " numerators divisible by mn";
  if (!t.first_indivisible.empty()) out << "; first failure " << t.first_indivisible;
  return {t.divisible == t.forests && t.forests > 0, out.str()};
}

Verdict specialization_check() {
  std::size_t checked = 0, bad = 0;
  for (Count m = 1; m <= kSpecializationMaxSide; ++m)
    for (Count n = 1; n <= kSpecializationMaxSide; ++n) {
      for (Count k = 0; k <= std::min(m, n); ++k, ++checked)
        if (tau_matching(m, n, k) != tau_forest(m, n, matching_profile(m, n, k))) ++bad;
      for (Count s = 1; s <= m; ++s)
        for (Count t = 1; t <= n; ++t, ++checked)
          if (tau_tree(m, n, s, t) != tau_forest(m, n, tree_profile(m, n, s, t))) ++bad;
    }
  return {bad == 0, count_detail(checked, bad, "profiles")};
}

Verdict moon_check() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (Count n = 1; n <= kMoonMaxN; ++n) {
    const PartSizes singletons(n, 1);
    for_each_forest(singletons, SIZE_MAX, [&](const ForestInstance& f) {
      std::vector<Count> orders;
      for (const CountVector& c : validate(f).components)
        orders.push_back(std::accumulate(c.begin(), c.end(), Count{0}));
      ++checked;
      if (tau_moon(n, orders) != count_forced_trees(f) && bad++ == 0) first = dump(to_json(f));
      return true;
    });
  }
  std::string detail = count_detail(checked, bad, "forests");
  if (bad) detail += "; first " + first;
  return {bad == 0 && checked > 0, detail};
}

Verdict factored_check(std::uint64_t seed) {
  std::vector<int> bad(kFactoredPoints, 0);
  std::vector<std::size_t> rejected(kFactoredPoints, 0);
  parallel_for(kFactoredPoints, [&](std::size_t trial) {
    Rng rng(derive_seed(seed, {5, trial}));
    const std::size_t k = 1 + rng.below(kFactoredMaxK);
    while (true) {
      FactoredWeights fw;
      for (std::size_t i = 0; i < k; ++i) {
        fw.x.emplace_back(rng.between(0, kFactoredMaxValue));
        fw.y.emplace_back(rng.between(0, kFactoredMaxValue));
      }
      ExactRational factored;
      try {
        factored = tau_factored(fw);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularPoint) throw;
        ++rejected[trial];
        continue;
      }
      bad[trial] = factored != ExactRational(tau_kirchhoff(induced_graph(fw)));
      return;
    }
  });
  const std::size_t mismatches = std::count(bad.begin(), bad.end(), 1);
  std::ostringstream out;
  out << count_detail(kFactoredPoints, mismatches, "points") << " ("
      << std::accumulate(rejected.begin(), rejected.end(), std::size_t{0})
      << " singular draws resampled)";
  return {mismatches == 0, out.str()};
}

Verdict recursion_check(std::uint64_t seed) {
  std::vector<int> bad(kRecursionGraphs, 0);
  parallel_for(kRecursionGraphs, [&](std::size_t trial) {
    Rng rng(derive_seed(seed, {6, trial}));
    // Spread k over 1..kRecursionMaxK so the largest size is always covered.
    const std::size_t k = 1 + trial % kRecursionMaxK;
    WeightedCompleteGraph g(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) g.set_weight(i, j, rng.between(0, kRecursionMaxWeight));
    const ExactRational kirchhoff(tau_kirchhoff(g));
    bad[trial] = tau_inclusion_exclusion(g) != kirchhoff || tau_alt_recursion(g) != kirchhoff;
  });
  return {std::count(bad.begin(), bad.end(), 1) == 0,
          count_detail(kRecursionGraphs, std::count(bad.begin(), bad.end(), 1), "graphs")};
}

// Points with A = 0 (or B = 0) built from sampled points by replacing the
// last a_i (b_i) with minus the sum of the others.
std::pair<std::size_t, std::size_t> l21_degenerate(std::uint64_t seed, bool zero_a) {
  std::size_t checked = 0, bad = 0;
  for (std::size_t size = 2; size <= kIdentityMaxSize; ++size)
    for (std::size_t trial = 0; trial < kIdentityTrials; ++trial) {
      IdentityPoint p = sample_point(IdentityId::L21, size, derive_seed(seed, {7, zero_a, size, trial}));
      auto& v = zero_a ? p.a : p.b;
      v.back() = -std::accumulate(v.begin(), v.end() - 1, ExactRational(0));
      const auto& other = zero_a ? p.b : p.a;
      if (std::accumulate(other.begin(), other.end(), ExactRational(0)) == 0) continue;
      if (guard_violation(p)) continue;
      ++checked;
      if (!evaluate_identity(p).equal()) ++bad;
    }
  return {checked, bad};
}

Verdict identity_check(std::uint64_t seed) {
  std::ostringstream out;
  bool ok = true;
  std::size_t total = 0;
  for (IdentityId id : all_identities()) {
    std::vector<std::size_t> sizes;
    for (std::size_t s = min_size(id); s <= kIdentityMaxSize; ++s) sizes.push_back(s);
    const SuiteReport r = run_suite(id, sizes, kIdentityTrials, derive_seed(seed, {7}));
    total += r.pass + r.fail;
    if (r.fail != 0 || r.pass != sizes.size() * kIdentityTrials) {
      ok = false;
      out << to_string(id) << " " << r.fail << " failures; ";
    }
  }
  const auto [a_checked, a_bad] = l21_degenerate(seed, true);
  const auto [b_checked, b_bad] = l21_degenerate(seed, false);
  ok = ok && a_checked > 0 && b_checked > 0 && a_bad == 0 && b_bad == 0;
  out << total << " suite points; L21 A=0: " << a_checked << " points, " << a_bad
      << " failures; L21 B=0: " << b_checked << " points, " << b_bad << " failures";
  return {ok, out.str()};
}

Verdict tripartite_check(std::uint64_t seed) {
  std::size_t small = 0, unequal = 0;
  std::string first;
  for (Count a = 1; a <= kEqualityMaxN; ++a)
    for (Count b = 1; a + b <= kEqualityMaxN; ++b)
      for (Count c = 1; a + b + c <= kEqualityMaxN; ++c) {
        const Count n = a + b + c;
        for_each_forest({a, b, c}, SIZE_MAX, [&](const ForestInstance& f) {
          if (f.edges.size() + 2 < n) return true;  // k = n - |E| > 2
          ++small;
          const ConjectureReport r = check_conjecture(f);
          if (!r.equality && unequal++ == 0) first = dump(to_json(r));
          return true;
        });
      }

  std::size_t scanned = 0, large_k = 0, violations = 0;
  for (const ConjectureReport& r : scan_conjecture(kScanMaxN, kScanTrialsPerShape, seed)) {
    ++scanned;
    if (r.k() < 3) continue;
    ++large_k;
    violations += !r.holds;
  }

  std::ostringstream out;
  out << small << " forests with k <= 2, " << unequal << " without equality; scan " << scanned
      << " reports, " << large_k << " with k >= 3, " << violations << " with holds:false";
  if (unequal) out << "; first " << first;
  return {unequal == 0 && small > 0 && large_k > 0, out.str()};
}

std::string seeded_outputs(std::uint64_t seed) {
  std::string out;
  const std::vector<std::size_t> sizes{2, 3, 4};
  for (IdentityId id : all_identities())
    out += dump(to_json(run_suite(id, sizes, 10, seed))) + "\n";
  for (const ConjectureReport& r : scan_conjecture(7, 3, seed)) out += dump(to_json(r)) + "\n";
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ForestInstance f = random_forest({7, 9}, 1 + i % 16, derive_seed(seed, {10, i}));
    out += dump(to_json(f)) + " " + to_string(tau_forest(7, 9, validate(f))) + "\n";
  }
  return out;
}

Verdict determinism_check(std::uint64_t seed) {
  const std::string first = seeded_outputs(seed);
  const std::string second = seeded_outputs(seed);
  const bool differs_by_seed = seeded_outputs(seed + 1) != first;
  std::ostringstream out;
  out << first.size() << " bytes compared, " << (first == second ? "identical" : "DIFFERENT");
  return {first == second && differs_by_seed, out.str()};
}

Outcome timed(int id, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("threw: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.id = id;
  o.correct = v.correct;
  o.seconds = elapsed;
  o.within_budget = elapsed <= static_cast<double>(kCriteria[id - 1].budget.count());
  o.detail = std::move(v.detail);
  return o;
}

}  // namespace

std::span<const Criterion> criteria() { return kCriteria; }

Outcome run(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return timed(1, enumeration_check);
    case 2: return timed(2, [&] { return matrix_tree_verdict(matrix_tree_runs(seed)); });
    case 3: return timed(3, specialization_check);
    case 4: return timed(4, moon_check);
    case 5: return timed(5, [&] { return factored_check(seed); });
    case 6: return timed(6, [&] { return recursion_check(seed); });
    case 7: return timed(7, [&] { return identity_check(seed); });
    case 8: return timed(8, [&] { return divisibility_verdict(matrix_tree_runs(seed)); });
    case 9: return timed(9, [&] { return tripartite_check(seed); });
    case 10: return timed(10, [&] { return determinism_check(seed); });
    default: throw Error(ErrorKind::InvalidArgument, "no acceptance criterion " + std::to_string(id));
  }
}

std::vector<Outcome> run_all(std::uint64_t seed) {
  std::vector<Outcome> out;
  MatrixTreeTally tally;
  for (const Criterion& c : kCriteria) {
    if (c.id == 2) {
      out.push_back(timed(2, [&] {
        tally = matrix_tree_runs(seed);
        return matrix_tree_verdict(tally);
      }));
    } else if (c.id == 8) {
      Outcome o = timed(8, [&] { return divisibility_verdict(tally); });
      // Timed together with criterion 2.
      o.seconds = out[1].seconds;
      o.within_budget = out[1].within_budget;
      out.push_back(std::move(o));
    } else {
      out.push_back(run(c.id, seed));
    }
  }
  return out;
}

std::string format(const Outcome& o) {
  const Criterion& c = kCriteria.at(static_cast<std::size_t>(o.id - 1));
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s of %lld s)", o.seconds,
                static_cast<long long>(c.budget.count()));
  std::string status = o.pass() ? "PASS" : "FAIL";
  std::string line = status + "  " + std::to_string(o.id) + "  " + std::string(c.title) + "  " + timing;
  if (o.correct && !o.within_budget) line += "  over budget";
  return line + "  " + o.detail;
}

}  // namespace forest_trees::acceptance
