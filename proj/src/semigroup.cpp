#include "sl2flip/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2flip::semigroup {

using lattice::checked_add;
using lattice::checked_mul;
using lattice::dot;

void validate_params(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (p < 1 || q < 1 || m < 1) throw std::invalid_argument("p, q, m must be positive");
  if (p > q) throw std::invalid_argument("height p/q must not exceed 1");
  if (lattice::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

AffineSemigroup make_Mplus(std::int64_t p, std::int64_t q, std::int64_t m) {
  validate_params(p, q, m);
  return AffineSemigroup{"M+", 2, {{p, -q}}, {{{1, -1}, m}}, {0, 1}};
}

AffineSemigroup make_Mminus(std::int64_t p, std::int64_t q, std::int64_t m) {
  validate_params(p, q, m);
  return AffineSemigroup{"M-", 2, {{p, -q}}, {{{1, -1}, m}}, {0}};
}

AffineSemigroup make_Mprime(std::int64_t p, std::int64_t q, std::int64_t m) {
  validate_params(p, q, m);
  // j - i in m Z_{>=0} is split into j - i >= 0 and m | (i - j).
  return AffineSemigroup{"M'", 2, {{-q, p}, {-1, 1}}, {{{1, -1}, m}}, {}};
}

AffineSemigroup make_Mtilde(std::int64_t p, std::int64_t q, std::int64_t m,
                            TildeConvention convention) {
  validate_params(p, q, m);
  IntVec slope = convention == TildeConvention::kCompatible ? IntVec{p, -q, 0} : IntVec{-q, p, 0};
  return AffineSemigroup{"M~", 3, {slope, {1, 1, -1}}, {{{-1, 1, 0}, m}}, {0, 1, 2}};
}

namespace {

void check_dimension(const AffineSemigroup& s, std::size_t n) {
  if (n != s.rank) throw std::invalid_argument("point dimension does not match semigroup rank");
}

bool in_cone(const AffineSemigroup& s, std::span<const std::int64_t> x) {
  for (auto i : s.nonneg_coords)
    if (x[i] < 0) return false;
  for (const auto& c : s.inequalities)
    if (dot(c, x) < 0) return false;
  return true;
}

bool congruent(const AffineSemigroup& s, std::span<const std::int64_t> x) {
  for (const auto& g : s.congruences)
    if (lattice::mod(dot(g.covector, x), g.modulus) != 0) return false;
  return true;
}

std::int64_t cross(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  return checked_add(checked_mul(u[0], v[1]), -checked_mul(u[1], v[0]));
}

}  // namespace

bool contains(const AffineSemigroup& s, std::span<const std::int64_t> x) {
  check_dimension(s, x.size());
  return in_cone(s, x) && congruent(s, x);
}

std::vector<IntVec> extremal_rays(const AffineSemigroup& s) {
  if (s.rank != 2) throw std::invalid_argument("extremal_rays: rank-2 semigroup required");
  std::vector<IntVec> covectors = s.inequalities;
  for (auto i : s.nonneg_coords) {
    IntVec e(2, 0);
    e[i] = 1;
    covectors.push_back(e);
  }

  // Each extremal ray lies on the boundary line of some constraint.
  std::vector<IntVec> rays;
  for (const auto& c : covectors) {
    if (c[0] == 0 && c[1] == 0) continue;
    const IntVec perp = lattice::primitive(IntVec{-c[1], c[0]});
    for (int sign : {1, -1}) {
      IntVec r{sign * perp[0], sign * perp[1]};
      if (in_cone(s, r) && std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
    }
  }
  if (rays.size() != 2) throw std::invalid_argument(s.name + ": cone is not pointed and 2-dimensional");
  const std::int64_t det = cross(rays[0], rays[1]);
  if (det == 0) throw std::invalid_argument(s.name + ": cone is not pointed");
  if (det < 0) std::swap(rays[0], rays[1]);
  return rays;
}

IntVec minimal_ray_point(const AffineSemigroup& s, std::span<const std::int64_t> ray) {
  std::int64_t bound = 1;
  for (const auto& g : s.congruences) bound = lattice::lcm(bound, g.modulus);
  for (std::int64_t t = 1; t <= bound; ++t) {
    IntVec x(ray.size());
    for (std::size_t i = 0; i < ray.size(); ++i) x[i] = checked_mul(t, ray[i]);
    if (contains(s, x)) return x;
  }
  throw std::logic_error(s.name + ": no semigroup point on ray within the lcm bound");
}

HilbertBasis hilbert_basis(const AffineSemigroup& s) {
  const auto rays = extremal_rays(s);
  const IntVec u1 = minimal_ray_point(s, rays[0]);
  const IntVec u2 = minimal_ray_point(s, rays[1]);
  const std::int64_t det = cross(u1, u2);

  std::int64_t lo[2], hi[2];
  for (int c = 0; c < 2; ++c) {
    const std::int64_t corners[4] = {0, u1[c], u2[c], checked_add(u1[c], u2[c])};
    lo[c] = *std::min_element(corners, corners + 4);
    hi[c] = *std::max_element(corners, corners + 4);
  }

  // Points a*u1 + b*u2 with 0 <= a, b < 1, plus the two ray generators.
  std::vector<IntVec> candidates{u1, u2};
  for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
    for (std::int64_t y = lo[1]; y <= hi[1]; ++y) {
      const IntVec v{x, y};
      if (x == 0 && y == 0) continue;
      const std::int64_t alpha = cross(v, u2);
      const std::int64_t beta = cross(u1, v);
      if (alpha < 0 || alpha >= det || beta < 0 || beta >= det) continue;
      if (congruent(s, v)) candidates.push_back(v);
    }

  std::vector<IntVec> generators;
  for (const auto& g : candidates) {
    bool decomposable = false;
    for (const auto& h : candidates) {
      if (h == g) continue;
      const IntVec diff{g[0] - h[0], g[1] - h[1]};
      if ((diff[0] != 0 || diff[1] != 0) && contains(s, diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) generators.push_back(g);
  }
  std::sort(generators.begin(), generators.end());
  return HilbertBasis{std::move(generators)};
}

std::vector<IntVec> congruence_lattice(const AffineSemigroup& s) {
  const std::size_t n = s.rank;
  const std::size_t r = s.congruences.size();
  if (r == 0) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  // x in L  <=>  G x - diag(moduli) y = 0 for some integer y.
  lattice::IntMatrix system(r, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) system(i, j) = static_cast<long>(s.congruences[i].covector[j]);
    system(i, n + i) = static_cast<long>(-s.congruences[i].modulus);
  }
  std::vector<IntVec> generators;
  for (const auto& k : lattice::kernel_basis(system)) generators.emplace_back(k.begin(), k.begin() + n);
  return lattice::lattice_basis(generators);
}

std::size_t fiber_count(const AffineSemigroup& s, std::span<const std::int64_t> base) {
  if (s.rank != 3 || base.size() != 2) throw std::invalid_argument("fiber_count: rank-3 semigroup and rank-2 base required");
  bool has_lo = std::find(s.nonneg_coords.begin(), s.nonneg_coords.end(), 2) != s.nonneg_coords.end();
  bool has_hi = false;
  std::int64_t lo = 0, hi = 0;
  for (const auto& c : s.inequalities) {
    const std::int64_t rest = checked_add(checked_mul(c[0], base[0]), checked_mul(c[1], base[1]));
    if (c[2] < 0) {  // t <= rest / -c2
      const std::int64_t bound = rest >= 0 ? rest / -c[2] : -((-rest + -c[2] - 1) / -c[2]);
      hi = has_hi ? std::min(hi, bound) : bound;
      has_hi = true;
    } else if (c[2] > 0) {  // t >= -rest / c2
      const std::int64_t need = -rest;
      const std::int64_t bound = need >= 0 ? (need + c[2] - 1) / c[2] : -((-need) / c[2]);
      lo = has_lo ? std::max(lo, bound) : bound;
      has_lo = true;
    }
  }
  if (!has_lo || !has_hi) throw std::invalid_argument(s.name + ": fiber is unbounded");
  std::size_t count = 0;
  for (std::int64_t t = lo; t <= hi; ++t) {
    const IntVec x{base[0], base[1], t};
    if (contains(s, x)) ++count;
  }
  return count;
}

}  // namespace sl2flip::semigroup
