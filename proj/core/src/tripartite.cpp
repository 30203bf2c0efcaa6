#include "forest_trees/tripartite.hpp"

#include <string>

#include "forest_trees/error.hpp"
#include "forest_trees/json_io.hpp"
#include "forest_trees/kirchhoff.hpp"
#include "forest_trees/parallel.hpp"
#include "forest_trees/rng.hpp"
#include "forest_trees/weighted_tau.hpp"

namespace forest_trees {

TripartiteProfile TripartiteProfile::from(const PartSizes& parts, const ComponentProfile& profile) {
  if (parts.size() != 3) throw Error(ErrorKind::InvalidProfile, "host is not tripartite");
  TripartiteProfile out;
  out.parts = {parts[0], parts[1], parts[2]};
  for (const CountVector& c : profile.components) {
    if (c.size() != 3) throw Error(ErrorKind::InvalidProfile, "component is not a triple");
    out.components.push_back({c[0], c[1], c[2]});
  }
  if (profile.part_totals(3) != parts)
    throw Error(ErrorKind::ProfileSumMismatch, "components do not add up to the part sizes");
  return out;
}

ExactRational conjecture_rhs(const TripartiteProfile& p) {
  if (p.k() == 0) throw Error(ErrorKind::InvalidProfile, "profile has no components");
  const auto big = [](Count c) { return ExactInt(static_cast<unsigned long>(c)); };
  const ExactInt n = big(p.n());
  const ExactInt n1 = big(p.parts[0]), n2 = big(p.parts[1]), n3 = big(p.parts[2]);

  const ExactInt leading = n1 * n2 + n1 * n3 + n2 * n3;
  if (leading == 0)
    throw Error(ErrorKind::DegenerateDenominator, "n1 n2 + n1 n3 + n2 n3 = 0");

  ExactRational product = 1;
  ExactRational bracket = 1;
  for (std::size_t i = 0; i < p.k(); ++i) {
    const auto& [a, b, c] = p.components[i];
    const ExactInt denominator = (n - n1) * big(a) + (n - n2) * big(b) + (n - n3) * big(c);
    if (denominator == 0)
      throw Error(ErrorKind::DegenerateDenominator, "component " + std::to_string(i) +
                                                        " has a zero denominator");
    const ExactInt inner = big(a) * big(b) + big(a) * big(c) + big(b) * big(c);
    product *= denominator;
    bracket -= ExactRational(inner, denominator);
  }
  return ExactRational(product * bracket / leading);
}

ExactInt tau_forest_tripartite(const ForestInstance& instance) {
  if (instance.parts.size() != 3)
    throw Error(ErrorKind::InvalidHost, "expected 3 parts, got " +
                                            std::to_string(instance.parts.size()));
  const WeightedCompleteGraph contracted = contract_forest(instance);
  if (contracted.k() > kMaxTripartiteComponents)
    throw Error(ErrorKind::TooLarge, std::to_string(contracted.k()) + " components exceeds " +
                                         std::to_string(kMaxTripartiteComponents));
  return tau_kirchhoff(contracted);
}

ConjectureReport check_conjecture(const ForestInstance& instance) {
  ConjectureReport report;
  report.instance = instance;
  report.profile = TripartiteProfile::from(instance.parts, validate(instance));
  report.lhs = tau_forest_tripartite(instance);
  report.rhs = conjecture_rhs(report.profile);
  const ExactRational lhs(report.lhs);
  report.holds = lhs >= report.rhs;
  report.equality = lhs == report.rhs;
  return report;
}

std::vector<ConjectureReport> scan_conjecture(Count max_n, std::size_t trials_per_shape,
                                              std::uint64_t seed) {
  if (max_n > kMaxScanVertices)
    throw Error(ErrorKind::InvalidArgument, "max_n " + std::to_string(max_n) + " exceeds " +
                                                std::to_string(kMaxScanVertices));
  std::vector<PartSizes> shapes;
  for (Count a = 1; 3 * a <= max_n; ++a)
    for (Count b = a; a + 2 * b <= max_n; ++b)
      for (Count c = b; a + b + c <= max_n; ++c) shapes.push_back({a, b, c});

  std::vector<ConjectureReport> reports(shapes.size() * trials_per_shape);
  parallel_for(reports.size(), [&](std::size_t index) {
    const PartSizes& shape = shapes[index / trials_per_shape];
    const std::size_t trial = index % trials_per_shape;
    Rng rng(derive_seed(seed, {shape[0], shape[1], shape[2], trial}));
    const Count n = shape[0] + shape[1] + shape[2];
    const Count target = static_cast<Count>(rng.between(1, static_cast<std::int64_t>(n)));
    reports[index] = check_conjecture(random_forest(shape, target, rng.below(UINT64_MAX)));
  });
  return reports;
}

nlohmann::json to_json(const ConjectureReport& report) {
  nlohmann::json parts = nlohmann::json::array();
  for (Count p : report.profile.parts) parts.push_back(std::to_string(p));
  nlohmann::json profile = nlohmann::json::array();
  for (const auto& c : report.profile.components)
    profile.push_back({std::to_string(c[0]), std::to_string(c[1]), std::to_string(c[2])});
  return {{"parts", std::move(parts)},
          {"edges", to_json(report.instance)["edges"]},
          {"profile", std::move(profile)},
          {"k", std::to_string(report.k())},
          {"lhs", to_string(report.lhs)},
          {"rhs", to_json(report.rhs)},
          {"holds", report.holds},
          {"equality", report.equality}};
}

}  // namespace forest_trees
