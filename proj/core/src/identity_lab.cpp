#include "forest_trees/identity_lab.hpp"

#include <array>
#include <bit>
#include <utility>

#include "forest_trees/error.hpp"
#include "forest_trees/json_io.hpp"
#include "forest_trees/parallel.hpp"
#include "forest_trees/rng.hpp"

namespace forest_trees {

namespace {

using Vec = std::vector<ExactRational>;
using Pairs = std::vector<std::pair<ExactRational, ExactRational>>;

constexpr std::array<IdentityId, 10> kAll = {
    IdentityId::L21,  IdentityId::L22, IdentityId::L23, IdentityId::L23X, IdentityId::L24,
    IdentityId::L25,  IdentityId::L25X, IdentityId::T31, IdentityId::R63, IdentityId::XYCANCEL};

bool uses_c(IdentityId id) {
  return id == IdentityId::L23 || id == IdentityId::L23X || id == IdentityId::L25 ||
         id == IdentityId::L25X;
}
bool uses_d(IdentityId id) {
  return id == IdentityId::L24 || id == IdentityId::L25 || id == IdentityId::L25X;
}
bool uses_scalar(IdentityId id) { return id == IdentityId::L23X || id == IdentityId::L25X; }
bool is_phi_identity(IdentityId id) { return id == IdentityId::T31 || id == IdentityId::R63; }
bool needs_a_plus_b(IdentityId id) {
  return id == IdentityId::L23 || id == IdentityId::L23X || id == IdentityId::L24 ||
         id == IdentityId::L25 || id == IdentityId::L25X;
}

bool in(std::uint32_t mask, std::size_t i) { return (mask >> i) & 1u; }

ExactRational sum(const Vec& v) {
  ExactRational s = 0;
  for (const ExactRational& x : v) s += x;
  return s;
}

ExactRational product(const Vec& v) {
  ExactRational p = 1;
  for (const ExactRational& x : v) p *= x;
  return p;
}

std::string subset_name(std::uint32_t mask, std::size_t offset) {
  std::string s = "{";
  for (std::size_t i = 0; i < 32; ++i)
    if (in(mask, i)) s += (s.size() > 1 ? "," : "") + std::to_string(i + offset);
  return s + "}";
}

// phi written over the common denominator:
// (prod W_i - sum x_i y_i prod_{j != i} W_j) / (XY).
ExactRational phi_expanded(const Pairs& pairs) {
  ExactRational x = 0, y = 0;
  for (const auto& [xi, yi] : pairs) {
    x += xi;
    y += yi;
  }
  if (x == 0 || y == 0) throw Error(ErrorKind::GuardViolated, "phi evaluated with X or Y zero");
  Vec w;
  w.reserve(pairs.size());
  for (const auto& [xi, yi] : pairs) w.push_back(xi * y + yi * x);
  ExactRational numerator = product(w);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ExactRational term = pairs[i].first * pairs[i].second;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (j != i) term *= w[j];
    numerator -= term;
  }
  return numerator / (x * y);
}

Pairs as_pairs(const IdentityPoint& p) {
  Pairs out;
  for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(p.a[i], p.b[i]);
  return out;
}

std::optional<std::string> phi_guards(const IdentityPoint& p) {
  const std::size_t k = p.size();
  const ExactRational x = sum(p.a), y = sum(p.b);
  const ExactRational xr = x - p.a[0], yr = y - p.b[0];
  if (x == 0) return "X = 0";
  if (y == 0) return "Y = 0";
  if (xr == 0) return "X' = X - x_1 = 0";
  if (yr == 0) return "Y' = Y - y_1 = 0";
  for (std::size_t i = 0; i < k; ++i)
    if (p.a[i] * y + p.b[i] * x == 0) return "x_i Y + y_i X = 0 at i=" + std::to_string(i + 1);

  const bool primed = p.id == IdentityId::R63;
  if (primed)
    for (std::size_t i = 1; i < k; ++i)
      if (p.a[i] * yr + p.b[i] * xr == 0)
        return "x_i Y' + y_i X' = 0 at i=" + std::to_string(i + 1);

  const std::uint32_t subsets = (1u << (k - 1)) - 1;
  for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
    ExactRational xi = primed ? ExactRational(0) : p.a[0];
    ExactRational yi = primed ? ExactRational(0) : p.b[0];
    for (std::size_t i = 1; i < k; ++i)
      if (in(mask, i - 1)) {
        xi += p.a[i];
        yi += p.b[i];
      }
    const ExactRational w = primed ? ExactRational(xi * yr + yi * xr) : ExactRational(xi * y + yi * x);
    if (w == 0)
      return std::string(primed ? "x'_I Y' + y'_I X'" : "x_I Y + y_I X") + " = 0 at I=" +
             subset_name(mask, 2);
  }
  return std::nullopt;
}

// --- subset identities over S -------------------------------------------

IdentityValues eval_l21(const IdentityPoint& p) {
  const ExactRational a_sum = sum(p.a), b_sum = sum(p.b);
  ExactRational mixed = 0, a_sq = 0, b_sq = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ExactRational w = p.a[i] * b_sum + p.b[i] * a_sum;
    mixed += p.a[i] * p.b[i] / w;
    a_sq += p.a[i] * p.a[i] / w;
    b_sq += p.b[i] * p.b[i] / w;
  }
  const ExactRational base = 1 - mixed;
  return {base * base, a_sq * b_sq};
}

// sum over subsets I in [first_mask, last_mask] of weight(I) prod_I a prod_{S\I} b
template <typename Weight>
ExactRational subset_sum(const IdentityPoint& p, std::uint32_t first_mask, std::uint32_t last_mask,
                         Weight weight) {
  ExactRational total = 0;
  for (std::uint32_t mask = first_mask; mask <= last_mask; ++mask) {
    ExactRational term = weight(mask);
    if (term == 0) continue;
    for (std::size_t i = 0; i < p.size(); ++i) term *= in(mask, i) ? p.a[i] : p.b[i];
    total += term;
  }
  return total;
}

ExactRational sum_inside(const Vec& v, std::uint32_t mask) {
  ExactRational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (in(mask, i)) s += v[i];
  return s;
}

ExactRational sum_outside(const Vec& v, std::uint32_t mask) {
  ExactRational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!in(mask, i)) s += v[i];
  return s;
}

IdentityValues eval_subset_identity(const IdentityPoint& p) {
  const std::size_t s = p.size();
  const std::uint32_t full = (1u << s) - 1;
  ExactRational prod_ab = 1, prod_b = product(p.b);
  Vec a_plus_b(s);
  for (std::size_t i = 0; i < s; ++i) {
    a_plus_b[i] = p.a[i] + p.b[i];
    prod_ab *= a_plus_b[i];
  }
  auto weighted = [&](const Vec& v, const Vec& num) {
    ExactRational t = 0;
    for (std::size_t i = 0; i < s; ++i) t += v[i] * num[i] / a_plus_b[i];
    return t;
  };
  // sum_{i != j} c_i a_i d_j b_j / ((a_i + b_i)(a_j + b_j))
  auto cross = [&] {
    ExactRational t = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (i != j) t += p.c[i] * p.a[i] * p.d[j] * p.b[j] / (a_plus_b[i] * a_plus_b[j]);
    return t;
  };
  const ExactRational& c = p.scalar;

  switch (p.id) {
    case IdentityId::L22:
      return {subset_sum(p, 1, full, [](std::uint32_t) { return ExactRational(1); }),
              prod_ab - prod_b};
    case IdentityId::L23:
      return {subset_sum(p, 1, full, [&](std::uint32_t m) { return sum_inside(p.c, m); }),
              prod_ab * weighted(p.c, p.a)};
    case IdentityId::L23X:
      return {subset_sum(p, 1, full,
                         [&](std::uint32_t m) { return ExactRational(c + sum_inside(p.c, m)); }),
              prod_ab * (c + weighted(p.c, p.a)) - c * prod_b};
    case IdentityId::L24:
      return {subset_sum(p, 1, full, [&](std::uint32_t m) { return sum_outside(p.d, m); }),
              prod_ab * weighted(p.d, p.b) - prod_b * sum(p.d)};
    case IdentityId::L25:
      return {subset_sum(p, 1, full - 1,
                         [&](std::uint32_t m) {
                           return ExactRational(sum_inside(p.c, m) * sum_outside(p.d, m));
                         }),
              prod_ab * cross()};
    case IdentityId::L25X:
      return {subset_sum(p, 1, full,
                         [&](std::uint32_t m) {
                           return ExactRational((c + sum_inside(p.c, m)) * sum_outside(p.d, m));
                         }),
              prod_ab * (cross() + c * weighted(p.d, p.b)) - c * prod_b * sum(p.d)};
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "not a subset identity");
}

// --- phi identities --------------------------------------------------------

IdentityValues eval_phi_recursion(const IdentityPoint& p, bool signed_merge) {
  const std::size_t k = p.size();
  IdentityValues out{phi_expanded(as_pairs(p)), 0};
  const std::uint32_t subsets = (1u << (k - 1)) - 1;
  for (std::uint32_t mask = 1; mask <= subsets; ++mask) {
    ExactRational edge_product = 1;
    ExactRational merged_x = signed_merge ? p.a[0] : ExactRational(0);
    ExactRational merged_y = signed_merge ? p.b[0] : ExactRational(0);
    Pairs rest;
    for (std::size_t i = 1; i < k; ++i) {
      if (in(mask, i - 1)) {
        edge_product *= p.a[0] * p.b[i] + p.a[i] * p.b[0];
        merged_x += p.a[i];
        merged_y += p.b[i];
      } else {
        rest.emplace_back(p.a[i], p.b[i]);
      }
    }
    rest.insert(rest.begin(), {merged_x, merged_y});
    ExactRational term = edge_product * phi_expanded(rest);
    if (signed_merge && std::popcount(mask) % 2 == 0) term = -term;
    out.rhs += term;
  }
  return out;
}

IdentityValues eval_xy_cancel(const IdentityPoint& p) {
  const std::size_t k = p.size();
  const ExactRational x = sum(p.a), y = sum(p.b);
  const ExactRational prod_x = product(p.a), prod_y = product(p.b);
  const ExactRational yk = power(y, static_cast<long>(k)), xk = power(x, static_cast<long>(k));
  const ExactRational yk1 = power(y, static_cast<long>(k) - 1);
  const ExactRational xk1 = power(x, static_cast<long>(k) - 1);
  ExactRational lhs = yk * prod_x + xk * prod_y;
  for (std::size_t i = 0; i < k; ++i) {
    lhs -= p.b[i] * yk1 * prod_x;
    lhs -= p.a[i] * xk1 * prod_y;
  }
  return {lhs, 0};
}

ExactRational draw_rational(Rng& rng) {
  const std::int64_t num = rng.between(-20, 20);
  const std::int64_t den = rng.between(1, 10);
  ExactRational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Vec draw_vector(Rng& rng, std::size_t n) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(draw_rational(rng));
  return v;
}

nlohmann::json to_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const ExactRational& q : v) out.push_back(forest_trees::to_json(q));
  return out;
}

}  // namespace

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::L21: return "L21";
    case IdentityId::L22: return "L22";
    case IdentityId::L23: return "L23";
    case IdentityId::L23X: return "L23X";
    case IdentityId::L24: return "L24";
    case IdentityId::L25: return "L25";
    case IdentityId::L25X: return "L25X";
    case IdentityId::T31: return "T31";
    case IdentityId::R63: return "R63";
    case IdentityId::XYCANCEL: return "XYCANCEL";
  }
  return "?";
}

IdentityId parse_identity_id(std::string_view name) {
  for (IdentityId id : kAll)
    if (to_string(id) == name) return id;
  throw Error(ErrorKind::InvalidArgument, "unknown identity '" + std::string(name) + "'");
}

std::span<const IdentityId> all_identities() { return kAll; }

std::size_t min_size(IdentityId id) { return is_phi_identity(id) ? 2 : 1; }

namespace {

std::optional<std::string> shape_violation(const IdentityPoint& p) {
  const std::size_t s = p.size();
  if (s < min_size(p.id) || s > kMaxIdentitySize)
    return "size " + std::to_string(s) + " outside [" + std::to_string(min_size(p.id)) + ", " +
           std::to_string(kMaxIdentitySize) + "]";
  if (p.b.size() != s) return std::string("b has the wrong length");
  if (uses_c(p.id) && p.c.size() != s) return std::string("c has the wrong length");
  if (uses_d(p.id) && p.d.size() != s) return std::string("d has the wrong length");
  return std::nullopt;
}

std::optional<std::string> denominator_violation(const IdentityPoint& p) {
  const std::size_t s = p.size();
  if (p.id == IdentityId::L21) {
    const ExactRational a_sum = sum(p.a), b_sum = sum(p.b);
    for (std::size_t i = 0; i < s; ++i)
      if (p.a[i] * b_sum + p.b[i] * a_sum == 0)
        return "a_i B + b_i A = 0 at i=" + std::to_string(i + 1);
  }
  if (needs_a_plus_b(p.id))
    for (std::size_t i = 0; i < s; ++i)
      if (p.a[i] + p.b[i] == 0) return "a_i + b_i = 0 at i=" + std::to_string(i + 1);
  if (is_phi_identity(p.id)) return phi_guards(p);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> guard_violation(const IdentityPoint& p) {
  if (auto why = shape_violation(p)) return why;
  return denominator_violation(p);
}

IdentityValues evaluate_identity(const IdentityPoint& p) {
  if (auto why = shape_violation(p))
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(p.id)) + ": " + *why);
  if (auto why = denominator_violation(p))
    throw Error(ErrorKind::GuardViolated, std::string(to_string(p.id)) + ": " + *why);
  switch (p.id) {
    case IdentityId::L21: return eval_l21(p);
    case IdentityId::T31: return eval_phi_recursion(p, true);
    case IdentityId::R63: return eval_phi_recursion(p, false);
    case IdentityId::XYCANCEL: return eval_xy_cancel(p);
    default: return eval_subset_identity(p);
  }
}

IdentityPoint sample_point(IdentityId id, std::size_t size, std::uint64_t seed) {
  if (size < min_size(id) || size > kMaxIdentitySize)
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " size " +
                                                std::to_string(size) + " outside [" +
                                                std::to_string(min_size(id)) + ", " +
                                                std::to_string(kMaxIdentitySize) + "]");
  Rng rng(seed);
  constexpr int kMaxRejections = 10'000;
  for (int attempt = 0; attempt <= kMaxRejections; ++attempt) {
    IdentityPoint p;
    p.id = id;
    p.a = draw_vector(rng, size);
    p.b = draw_vector(rng, size);
    if (uses_c(id)) p.c = draw_vector(rng, size);
    if (uses_d(id)) p.d = draw_vector(rng, size);
    if (uses_scalar(id)) p.scalar = draw_rational(rng);
    if (!guard_violation(p)) return p;
  }
  throw Error(ErrorKind::SamplingExhausted,
              std::string(to_string(id)) + " size " + std::to_string(size) + " seed " +
                  std::to_string(seed) + ": no admissible point after 10^4 rejections");
}

SuiteReport run_suite(IdentityId id, std::span<const std::size_t> sizes, std::size_t trials,
                      std::uint64_t seed) {
  SuiteReport report;
  report.id = id;
  std::vector<std::size_t> active;
  for (std::size_t s : sizes) {
    if (s == 0 || s > kMaxIdentitySize)
      throw Error(ErrorKind::InvalidArgument,
                  "size " + std::to_string(s) + " outside [1, " + std::to_string(kMaxIdentitySize) + "]");
    (s < min_size(id) ? report.skipped_sizes : active).push_back(s);
  }

  struct Outcome {
    std::size_t size = 0;
    std::size_t trial = 0;
    std::optional<Counterexample> failure;
  };
  std::vector<Outcome> outcomes(active.size() * trials);
  parallel_for(outcomes.size(), [&](std::size_t index) {
    Outcome& out = outcomes[index];
    out.size = active[index / trials];
    out.trial = index % trials;
    const std::uint64_t trial_seed =
        derive_seed(seed, {static_cast<std::uint64_t>(id), out.size, out.trial});
    IdentityPoint point = sample_point(id, out.size, trial_seed);
    IdentityValues values = evaluate_identity(point);
    if (!values.equal()) out.failure = Counterexample{out.trial, std::move(point), std::move(values)};
  });

  for (Outcome& out : outcomes) {
    if (out.failure) {
      ++report.fail;
      report.counterexamples.push_back(std::move(*out.failure));
    } else {
      ++report.pass;
    }
  }
  return report;
}

nlohmann::json to_json(const IdentityPoint& p) {
  nlohmann::json out = {{"id", to_string(p.id)},
                        {"size", std::to_string(p.size())},
                        {"a", to_json(p.a)},
                        {"b", to_json(p.b)}};
  if (uses_c(p.id)) out["c"] = to_json(p.c);
  if (uses_d(p.id)) out["d"] = to_json(p.d);
  if (uses_scalar(p.id)) out["scalar"] = forest_trees::to_json(p.scalar);
  return out;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const Counterexample& c : report.counterexamples)
    counterexamples.push_back({{"trial", std::to_string(c.trial)},
                               {"point", to_json(c.point)},
                               {"lhs", forest_trees::to_json(c.values.lhs)},
                               {"rhs", forest_trees::to_json(c.values.rhs)}});
  nlohmann::json skipped = nlohmann::json::array();
  for (std::size_t s : report.skipped_sizes) skipped.push_back(std::to_string(s));
  return {{"id", to_string(report.id)},
          {"pass", std::to_string(report.pass)},
          {"fail", std::to_string(report.fail)},
          {"skipped_sizes", std::move(skipped)},
          {"counterexamples", std::move(counterexamples)}};
}

}  // namespace forest_trees
