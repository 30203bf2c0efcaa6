// forest_trees: count spanning trees through a forest, evaluate phi, run the
// identity suites, scan the tripartite bound and run the acceptance checks.
//
// Exit codes: 0 ok, 1 bad input, 2 internal mismatch, 3 a suite or scan found
// a counterexample. Every number in the JSON output is a decimal string.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "forest_trees/acceptance.hpp"
#include "forest_trees/closed_form.hpp"
#include "forest_trees/error.hpp"
#include "forest_trees/identity_lab.hpp"
#include "forest_trees/json_io.hpp"
#include "forest_trees/kirchhoff.hpp"
#include "forest_trees/tripartite.hpp"
#include "forest_trees/weighted_tau.hpp"

namespace ft = forest_trees;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kBadInput = 1, kInternal = 2, kCounterexample = 3 };

void emit(const json& doc) { std::cout << ft::dump(doc) << '\n'; }

std::vector<std::string> split_commas(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const std::string& t : tokens) {
    std::size_t start = 0;
    while (start <= t.size()) {
      const std::size_t end = std::min(t.find(',', start), t.size());
      if (end > start) out.push_back(t.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

struct CountArgs {
  std::string path;
  std::string oracle = "none";
};

int cmd_count(const CountArgs& args) {
  const ft::ForestInstance instance = ft::load_instance(args.path);
  const ft::ComponentProfile profile = ft::validate(instance);

  const bool bipartite = instance.parts.size() == 2;
  const ft::ExactInt tau = bipartite
                               ? ft::tau_forest(instance.parts[0], instance.parts[1], profile)
                               : ft::tau_kirchhoff(ft::contract_forest(instance));
  json doc{{"tau", ft::to_string(tau)},
           {"method", bipartite ? "closed_form" : "kirchhoff"},
           {"profile", ft::to_json(profile)}};

  json oracle{{"name", args.oracle}};
  bool match = true;
  if (args.oracle != "none") {
    const ft::ExactInt check = args.oracle == "kirchhoff"
                                   ? ft::tau_kirchhoff(ft::contract_forest(instance))
                                   : ft::count_forced_trees(instance);
    match = check == tau;
    oracle["tau"] = ft::to_string(check);
    oracle["match"] = match;
  }
  doc["oracle"] = std::move(oracle);
  emit(doc);
  return match ? kOk : kInternal;
}

int cmd_phi(const std::vector<std::string>& tokens) {
  const std::vector<std::string> values = split_commas(tokens);
  if (values.empty() || values.size() % 2 != 0)
    throw ft::Error(ft::ErrorKind::InvalidArgument,
                    "phi takes x1 y1 x2 y2 ...; got " + std::to_string(values.size()) + " values");
  std::vector<ft::PairVector::Pair> pairs;
  json echo = json::array();
  for (std::size_t i = 0; i < values.size(); i += 2) {
    pairs.emplace_back(ft::parse_rational(values[i]), ft::parse_rational(values[i + 1]));
    echo.push_back({ft::to_json(pairs.back().first), ft::to_json(pairs.back().second)});
  }
  const ft::ExactRational phi = ft::phi_eval(ft::PairVector(pairs));
  emit({{"pairs", std::move(echo)}, {"phi", ft::to_json(phi)}, {"value", ft::to_string(phi)}});
  return kOk;
}

struct IdentityArgs {
  std::vector<std::string> ids{"all"};
  std::vector<std::string> sizes{"1", "2", "3", "4", "5"};
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw ft::Error(ft::ErrorKind::InvalidArgument, what + " '" + text + "' is not a count");
  return static_cast<std::size_t>(v);
}

int cmd_identities(const IdentityArgs& args) {
  std::vector<ft::IdentityId> ids;
  for (const std::string& name : split_commas(args.ids)) {
    if (name == "all") {
      const auto all = ft::all_identities();
      ids.insert(ids.end(), all.begin(), all.end());
    } else {
      ids.push_back(ft::parse_identity_id(name));
    }
  }
  std::vector<std::size_t> sizes;
  json size_echo = json::array();
  for (const std::string& s : split_commas(args.sizes)) {
    // "2..6" is shorthand for 2,3,4,5,6.
    if (const auto dots = s.find(".."); dots != std::string::npos) {
      const std::size_t lo = parse_count(s.substr(0, dots), "size");
      const std::size_t hi = parse_count(s.substr(dots + 2), "size");
      for (std::size_t v = lo; v <= hi; ++v) sizes.push_back(v);
    } else {
      sizes.push_back(parse_count(s, "size"));
    }
  }
  for (std::size_t s : sizes) size_echo.push_back(std::to_string(s));

  json reports = json::array();
  std::size_t pass = 0, fail = 0;
  for (ft::IdentityId id : ids) {
    const ft::SuiteReport r = ft::run_suite(id, sizes, args.trials, args.seed);
    pass += r.pass;
    fail += r.fail;
    reports.push_back(ft::to_json(r));
  }
  emit({{"seed", std::to_string(args.seed)},
        {"trials", std::to_string(args.trials)},
        {"sizes", std::move(size_echo)},
        {"pass", std::to_string(pass)},
        {"fail", std::to_string(fail)},
        {"reports", std::move(reports)}});
  return fail == 0 ? kOk : kCounterexample;
}

struct ConjectureArgs {
  ft::Count max_n = 6;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_conjecture(const ConjectureArgs& args) {
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out, std::ios::binary | std::ios::trunc);
    if (!file) throw ft::Error(ft::ErrorKind::InvalidArgument, "cannot write '" + args.out + "'");
  }
  const auto reports = ft::scan_conjecture(args.max_n, args.trials, args.seed);

  struct Tally {
    std::size_t reports = 0, holds = 0, equality = 0;
  };
  std::map<std::size_t, Tally> by_k;
  json violations = json::array();
  for (const ft::ConjectureReport& r : reports) {
    const json line = ft::to_json(r);
    if (file) file << ft::dump(line) << '\n';
    Tally& t = by_k[r.k()];
    ++t.reports;
    t.holds += r.holds;
    t.equality += r.equality;
    if (!r.holds) violations.push_back(line);
  }
  if (file) {
    file.flush();
    if (!file) throw ft::Error(ft::ErrorKind::InvalidArgument, "failed writing '" + args.out + "'");
  }

  const bool found = !violations.empty();
  json per_k = json::array();
  for (const auto& [k, t] : by_k)
    per_k.push_back({{"k", std::to_string(k)},
                     {"reports", std::to_string(t.reports)},
                     {"holds", std::to_string(t.holds)},
                     {"equality", std::to_string(t.equality)}});
  emit({{"seed", std::to_string(args.seed)},
        {"max_n", std::to_string(args.max_n)},
        {"trials", std::to_string(args.trials)},
        {"reports", std::to_string(reports.size())},
        {"by_k", std::move(per_k)},
        {"violations", std::move(violations)},
        {"out", args.out}});
  return found ? kCounterexample : kOk;
}

int cmd_selftest(bool list, std::uint64_t seed) {
  namespace ac = ft::acceptance;
  json criteria = json::array();
  if (list) {
    for (const ac::Criterion& c : ac::criteria())
      criteria.push_back({{"id", std::to_string(c.id)},
                          {"title", c.title},
                          {"budget_seconds", std::to_string(c.budget.count())}});
    emit({{"criteria", std::move(criteria)}});
    return kOk;
  }
  bool all = true;
  for (const ac::Outcome& o : ac::run_all(seed)) {
    std::cerr << ac::format(o) << '\n';
    all = all && o.pass();
    criteria.push_back({{"id", std::to_string(o.id)},
                        {"pass", o.pass()},
                        {"correct", o.correct},
                        {"within_budget", o.within_budget},
                        {"detail", o.detail}});
  }
  emit({{"seed", std::to_string(seed)}, {"pass", all}, {"criteria", std::move(criteria)}});
  return all ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees of complete bipartite graphs through a fixed forest"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count spanning trees containing the forest in a JSON instance");
  count->add_option("path", count_args.path, "Instance file")->required();
  count->add_option("--oracle", count_args.oracle, "Cross-check with an independent method")
      ->check(CLI::IsMember({"none", "kirchhoff", "enumerate"}));

  std::vector<std::string> phi_tokens;
  auto* phi = app.add_subcommand("phi", "Evaluate phi at x1 y1 x2 y2 ... (rationals, commas allowed)");
  phi->add_option("pairs", phi_tokens, "Values")->required()->allow_extra_args();

  IdentityArgs id_args;
  auto* identities = app.add_subcommand("identities", "Check identities at random rational points");
  identities->add_option("--ids", id_args.ids, "Identity names or 'all'")->delimiter(',')->capture_default_str();
  identities->add_option("--sizes", id_args.sizes, "Sizes, e.g. 1,2,3 or 2..6")->delimiter(',');
  identities->add_option("--trials", id_args.trials, "Points per size")->capture_default_str();
  identities->add_option("--seed", id_args.seed, "Base seed")->capture_default_str();

  ConjectureArgs cj_args;
  auto* conjecture = app.add_subcommand("conjecture", "Scan the tripartite lower bound");
  conjecture->add_option("--max-n", cj_args.max_n, "Largest n1+n2+n3")->capture_default_str();
  conjecture->add_option("--trials", cj_args.trials, "Random forests per shape")->capture_default_str();
  conjecture->add_option("--seed", cj_args.seed, "Base seed")->capture_default_str();
  conjecture->add_option("--out", cj_args.out, "JSON-lines report file");

  bool list = false;
  std::uint64_t selftest_seed = ft::acceptance::kDefaultSeed;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_flag("--list", list, "List the checks without running them");
  selftest->add_option("--seed", selftest_seed, "Base seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*count) return cmd_count(count_args);
    if (*phi) return cmd_phi(phi_tokens);
    if (*identities) return cmd_identities(id_args);
    if (*conjecture) return cmd_conjecture(cj_args);
    if (*selftest) return cmd_selftest(list, selftest_seed);
  } catch (const ft::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.internal() ? kInternal : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadInput;
}
