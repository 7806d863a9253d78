#include "sl2flip/git.hpp"

#include "sl2flip/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2flip::git {

using lattice::checked_add;
using lattice::checked_mul;

DiagonalAction make_action(IntVec torus_weights, std::int64_t finite_order, IntVec finite_weights) {
  if (finite_order < 1) throw std::invalid_argument("finite order must be positive");
  if (torus_weights.size() != finite_weights.size()) throw std::invalid_argument("weight vectors differ in length");
  for (auto& f : finite_weights) f = lattice::mod(f, finite_order);
  return DiagonalAction{std::move(torus_weights), finite_order, std::move(finite_weights)};
}

GroupCharacter make_character(std::int64_t torus, std::int64_t finite, std::int64_t finite_order) {
  return GroupCharacter{torus, lattice::mod(finite, finite_order)};
}

GroupCharacter scale(const GroupCharacter& chi, std::int64_t n, std::int64_t finite_order) {
  return make_character(checked_mul(chi.torus, n), checked_mul(chi.finite, n), finite_order);
}

GroupCharacter add(const GroupCharacter& x, const GroupCharacter& y, std::int64_t finite_order) {
  return make_character(checked_add(x.torus, y.torus), checked_add(x.finite, y.finite), finite_order);
}

std::int64_t finite_shift(std::int64_t p, std::int64_t q, std::int64_t m) {
  semigroup::validate_params(p, q, m);
  const std::int64_t k = lattice::gcd(q - p, m);
  const std::int64_t a = m / k;
  for (std::int64_t c0 = 0; c0 < std::max<std::int64_t>(a, 1); ++c0)
    if (lattice::gcd(q * c0 - k, a) == 1) return c0;
  throw std::logic_error("finite_shift: no admissible shift");
}

DiagonalAction standard_action(std::int64_t p, std::int64_t q, std::int64_t m) {
  const std::int64_t c0 = finite_shift(p, q, m);
  const std::int64_t k = lattice::gcd(q - p, m);
  const std::int64_t a = m / k;
  const std::int64_t b = (q - p) / k;
  const std::int64_t s = b * c0 - 1;
  return make_action({k, -p, -p, q, q}, a, {c0, s, s, 1, 1});
}

GroupCharacter monomial_character(const DiagonalAction& act, std::span<const std::int64_t> e) {
  if (e.size() != act.torus_weights.size()) throw std::invalid_argument("exponent vector has wrong length");
  return make_character(lattice::dot(act.torus_weights, e), lattice::dot(act.finite_weights, e), act.finite_order);
}

SearchBudget default_budget(std::int64_t p, std::int64_t q, std::int64_t m) {
  const std::int64_t k = lattice::gcd(q - p, m);
  const std::int64_t s = p + q + k;
  return SearchBudget{2 * s, 4 * s};
}

std::string to_string(PatternStatus s) {
  switch (s) {
    case PatternStatus::kSemistable: return "semistable";
    case PatternStatus::kUnstable: return "unstable";
    case PatternStatus::kUndecided: return "undecided";
    case PatternStatus::kEmpty: return "empty";
  }
  return "?";
}

std::string pattern_to_string(std::span<const std::size_t> pattern) {
  std::string out = "{";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ",";
    out += pattern[i] < kCoordinateNames.size() ? kCoordinateNames[pattern[i]] : "?";
  }
  return out + "}";
}

namespace {

bool hits(std::span<const std::size_t> pattern, std::size_t x, std::size_t y) {
  return std::find(pattern.begin(), pattern.end(), x) != pattern.end() ||
         std::find(pattern.begin(), pattern.end(), y) != pattern.end();
}

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

PatternResult decide(const DiagonalAction& act, const GroupCharacter& chi, std::int64_t b,
                     const SearchBudget& budget, std::vector<std::size_t> pattern) {
  PatternResult result;
  result.pattern = pattern;
  result.closure = pattern;
  // X1 X4 = X2 X3 = 0 forces Y0^b = 0; with b = 0 the pattern misses H_0.
  if (hits(pattern, kX1, kX4) && hits(pattern, kX2, kX3)) {
    if (b == 0) {
      result.status = PatternStatus::kEmpty;
      return result;
    }
    if (std::find(pattern.begin(), pattern.end(), kY0) == pattern.end()) result.closure.push_back(kY0);
    std::sort(result.closure.begin(), result.closure.end());
  }

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < act.torus_weights.size(); ++i)
    if (std::find(result.closure.begin(), result.closure.end(), i) == result.closure.end()) free.push_back(i);

  IntVec weights, congruence, box;
  for (auto i : free) {
    weights.push_back(act.torus_weights[i]);
    congruence.push_back(act.finite_weights[i]);
    box.push_back(budget.box);
  }
  for (std::int64_t n = 1; n <= budget.n_max; ++n) {
    const GroupCharacter target = scale(chi, n, act.finite_order);
    lattice::Congruence cong{congruence, target.finite, act.finite_order};
    auto sols = lattice::solve_bounded_diophantine(weights, target.torus, cong, box, 1);
    if (!sols.empty()) {
      Witness w{IntVec(act.torus_weights.size(), 0), n};
      for (std::size_t t = 0; t < free.size(); ++t) w.exponents[free[t]] = sols.front()[t];
      result.witness = std::move(w);
      result.status = PatternStatus::kSemistable;
      return result;
    }
  }

  // Every monomial in the free coordinates has torus weight of the wrong sign.
  if (chi.torus != 0) {
    bool certified = true;
    for (auto i : free)
      if ((act.torus_weights[i] > 0 && chi.torus > 0) || (act.torus_weights[i] < 0 && chi.torus < 0))
        certified = false;
    if (certified) {
      result.status = PatternStatus::kUnstable;
      return result;
    }
  }
  result.status = PatternStatus::kUndecided;
  return result;
}

}  // namespace

SemistableReport semistable_locus(const DiagonalAction& act, const GroupCharacter& chi,
                                  std::int64_t relation_degree, const SearchBudget& budget) {
  if (budget.n_max < 1 || budget.box < 1) throw std::invalid_argument("search bounds must be >= 1");
  if (relation_degree < 0) throw std::invalid_argument("relation degree must be >= 0");
  if (act.torus_weights.size() != 5) throw std::invalid_argument("action must be on five coordinates");
  const GroupCharacter target = make_character(chi.torus, chi.finite, act.finite_order);

  SemistableReport report;
  report.budget = budget;
  std::vector<std::vector<std::size_t>> patterns;
  for (std::size_t i = 0; i < 5; ++i) patterns.push_back({i});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) patterns.push_back({i, j});

  for (auto& pat : patterns) report.patterns.push_back(decide(act, target, relation_degree, budget, pat));

  for (const auto& r : report.patterns) {
    if (r.status == PatternStatus::kUndecided) report.undecided.push_back(r.pattern);
    if (r.status != PatternStatus::kUnstable) continue;
    bool minimal = true;
    for (const auto& s : report.patterns)
      if (s.status == PatternStatus::kUnstable && s.pattern != r.pattern && is_subset(s.pattern, r.pattern))
        minimal = false;
    if (minimal) report.unstable_vanishing.push_back(r.pattern);
  }
  return report;
}

lattice::FinAbGroup stabilizer_of_support(const DiagonalAction& act, std::span<const std::size_t> support) {
  // X(G) = Z + Z/a; the stabilizer's characters are X(G) modulo the
  // characters of the nonzero coordinates.
  lattice::IntMatrix rel(2, support.size() + 1);
  for (std::size_t c = 0; c < support.size(); ++c) {
    if (support[c] >= act.torus_weights.size()) throw std::invalid_argument("support index out of range");
    rel(0, c) = static_cast<long>(act.torus_weights[support[c]]);
    rel(1, c) = static_cast<long>(act.finite_weights[support[c]]);
  }
  rel(1, support.size()) = static_cast<long>(act.finite_order);
  return lattice::cokernel(rel);
}

std::vector<IntVec> u_invariant_exponents(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t box) {
  semigroup::validate_params(p, q, m);
  if (box < 0) throw std::invalid_argument("box must be nonnegative");
  const IntVec weights{1, -p, q};
  const IntVec bounds{checked_mul(p, box), box, box};
  const lattice::Congruence cong{{0, -1, 1}, 0, m};
  std::vector<IntVec> out;
  for (const auto& s : lattice::solve_bounded_diophantine(weights, 0, cong, bounds)) out.push_back({s[1], s[2]});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sl2flip::git
