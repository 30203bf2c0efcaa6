#include "forest_trees/closed_form.hpp"

#include <numeric>
#include <string>

#include "forest_trees/error.hpp"

namespace forest_trees {

namespace {

ExactInt big(Count c) { return ExactInt(static_cast<unsigned long>(c)); }

void check_bipartite_profile(Count m, Count n, const ComponentProfile& profile) {
  if (m == 0 || n == 0)
    throw Error(ErrorKind::InvalidArgument,
                "K_{" + std::to_string(m) + "," + std::to_string(n) + "} needs both sides non-empty");
  if (profile.k() == 0) throw Error(ErrorKind::InvalidProfile, "profile has no components");
  for (std::size_t i = 0; i < profile.k(); ++i) {
    const CountVector& c = profile.components[i];
    if (c.size() != 2)
      throw Error(ErrorKind::InvalidProfile,
                  "component " + std::to_string(i) + " is not an (m_i, n_i) pair");
    if (c[0] + c[1] == 0)
      throw Error(ErrorKind::InvalidProfile, "component " + std::to_string(i) + " is empty");
  }
  const PartSizes totals = profile.part_totals(2);
  if (totals[0] != m || totals[1] != n)
    throw Error(ErrorKind::ProfileSumMismatch,
                "components sum to (" + std::to_string(totals[0]) + "," + std::to_string(totals[1]) +
                    "), host is (" + std::to_string(m) + "," + std::to_string(n) + ")");
}

}  // namespace

PairVector::PairVector(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw Error(ErrorKind::InvalidArgument, "pair vector needs k >= 1");
}

PairVector PairVector::from_profile(const ComponentProfile& profile) {
  std::vector<Pair> pairs;
  pairs.reserve(profile.k());
  for (const CountVector& c : profile.components) {
    if (c.size() != 2) throw Error(ErrorKind::InvalidProfile, "profile is not bipartite");
    pairs.emplace_back(ExactRational(big(c[0])), ExactRational(big(c[1])));
  }
  return PairVector(std::move(pairs));
}

ExactRational PairVector::x_sum() const {
  ExactRational s = 0;
  for (const Pair& p : pairs_) s += p.first;
  return s;
}

ExactRational PairVector::y_sum() const {
  ExactRational s = 0;
  for (const Pair& p : pairs_) s += p.second;
  return s;
}

ForestCountTrace tau_forest_trace(Count m, Count n, const ComponentProfile& profile) {
  check_bipartite_profile(m, n, profile);
  const std::size_t k = profile.k();
  const ExactInt bm = big(m), bn = big(n);

  std::vector<ExactInt> w(k);
  for (std::size_t i = 0; i < k; ++i)
    w[i] = big(profile.components[i][0]) * bn + big(profile.components[i][1]) * bm;

  // prefix[i] = w_0 ... w_{i-1}, suffix[i] = w_i ... w_{k-1}
  std::vector<ExactInt> prefix(k + 1, 1), suffix(k + 1, 1);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * w[i];
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * w[i];

  ForestCountTrace trace;
  trace.numerator = prefix[k];
  for (std::size_t i = 0; i < k; ++i) {
    const ExactInt mini = big(profile.components[i][0]) * big(profile.components[i][1]);
    if (mini != 0) trace.numerator -= mini * prefix[i] * suffix[i + 1];
  }
  trace.divisor = bm * bn;
  ExactInt remainder;
  mpz_tdiv_qr(trace.tau.get_mpz_t(), remainder.get_mpz_t(), trace.numerator.get_mpz_t(),
              trace.divisor.get_mpz_t());
  if (remainder != 0)
    throw Error(ErrorKind::DivisibilityViolation,
                to_string(trace.numerator) + " is not divisible by " + to_string(trace.divisor));
  return trace;
}

ExactInt tau_forest(Count m, Count n, const ComponentProfile& profile) {
  return tau_forest_trace(m, n, profile).tau;
}

ExactRational phi_eval(const PairVector& v) {
  const ExactRational x = v.x_sum();
  const ExactRational y = v.y_sum();
  if (x == 0) throw Error(ErrorKind::SingularPoint, "X = sum x_i is zero");
  if (y == 0) throw Error(ErrorKind::SingularPoint, "Y = sum y_i is zero");

  ExactRational product = 1;
  ExactRational correction = 1;
  for (std::size_t i = 0; i < v.k(); ++i) {
    const auto& [xi, yi] = v[i];
    const ExactRational w = xi * y + yi * x;
    if (w == 0)
      throw Error(ErrorKind::SingularPoint,
                  "x_i Y + y_i X is zero at index " + std::to_string(i + 1));
    product *= w;
    correction -= xi * yi / w;
  }
  return ExactRational(product * correction / (x * y));
}

ExactInt tau_moon(Count n, std::span<const Count> orders) {
  if (orders.empty()) throw Error(ErrorKind::OrderSumMismatch, "no components");
  Count sum = 0;
  ExactRational value = 1;
  for (Count o : orders) {
    if (o == 0) throw Error(ErrorKind::OrderSumMismatch, "component of order 0");
    sum += o;
    value *= big(o);
  }
  if (sum != n)
    throw Error(ErrorKind::OrderSumMismatch,
                "orders sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
  value *= power(ExactRational(big(n)), static_cast<long>(orders.size()) - 2);
  return require_integral(value, "tau_moon");
}

ExactInt tau_matching(Count m, Count n, Count k) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "m and n must be positive");
  if (k > std::min(m, n))
    throw Error(ErrorKind::MatchingTooLarge,
                "matching of size " + std::to_string(k) + " in K_{" + std::to_string(m) + "," +
                    std::to_string(n) + "}");
  const long lm = static_cast<long>(m), ln = static_cast<long>(n), lk = static_cast<long>(k);
  const ExactRational value = power(ExactRational(lm + ln), lk - 1) * (lm + ln - lk) *
                              power(ExactRational(lm), ln - lk - 1) *
                              power(ExactRational(ln), lm - lk - 1);
  return require_integral(value, "tau_matching");
}

ExactInt tau_tree(Count m, Count n, Count s, Count t) {
  if (s == 0 || t == 0 || s > m || t > n)
    throw Error(ErrorKind::ShapeOutOfRange,
                "tree shape (" + std::to_string(s) + "," + std::to_string(t) + ") in K_{" +
                    std::to_string(m) + "," + std::to_string(n) + "}");
  const long lm = static_cast<long>(m), ln = static_cast<long>(n);
  const long ls = static_cast<long>(s), lt = static_cast<long>(t);
  const ExactRational value = ExactRational(ls * ln + lt * lm - ls * lt) *
                              power(ExactRational(lm), ln - lt - 1) *
                              power(ExactRational(ln), lm - ls - 1);
  return require_integral(value, "tau_tree");
}

ComponentProfile matching_profile(Count m, Count n, Count k) {
  if (k > std::min(m, n)) throw Error(ErrorKind::MatchingTooLarge, "matching larger than a side");
  ComponentProfile p;
  p.components.insert(p.components.end(), k, CountVector{1, 1});
  p.components.insert(p.components.end(), m - k, CountVector{1, 0});
  p.components.insert(p.components.end(), n - k, CountVector{0, 1});
  return p;
}

ComponentProfile tree_profile(Count m, Count n, Count s, Count t) {
  if (s == 0 || t == 0 || s > m || t > n)
    throw Error(ErrorKind::ShapeOutOfRange, "tree shape outside the host");
  ComponentProfile p;
  p.components.push_back(CountVector{s, t});
  p.components.insert(p.components.end(), m - s, CountVector{1, 0});
  p.components.insert(p.components.end(), n - t, CountVector{0, 1});
  return p;
}

}  // namespace forest_trees
