#include "sl2flip/toricgeom.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace sl2flip::toric {

using lattice::checked_add;
using lattice::checked_mul;
using lattice::dot;

namespace {

IntVec cross3(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  return {checked_add(checked_mul(u[1], v[2]), -checked_mul(u[2], v[1])),
          checked_add(checked_mul(u[2], v[0]), -checked_mul(u[0], v[2])),
          checked_add(checked_mul(u[0], v[1]), -checked_mul(u[1], v[0]))};
}

std::int64_t det2(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  return checked_add(checked_mul(u[0], v[1]), -checked_mul(u[1], v[0]));
}

bool has_ray(const Cone& c, const IntVec& r) {
  return std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end();
}

void check_params(std::int64_t p, std::int64_t q) {
  if (p < 1 || q <= p || lattice::gcd(p, q) != 1)
    throw std::invalid_argument("cone parameters need 0 < p < q with gcd(p, q) = 1");
}

}  // namespace

Cone make_cone(std::vector<IntVec> rays) {
  if (rays.empty()) throw std::invalid_argument("cone needs at least one ray");
  const std::size_t n = rays.front().size();
  for (auto& r : rays) {
    if (r.size() != n) throw std::invalid_argument("cone rays of different lengths");
    r = lattice::primitive(r);
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (rays[i] == rays[j]) throw std::invalid_argument("cone rays repeated");
      IntVec neg = rays[j];
      for (auto& x : neg) x = -x;
      if (rays[i] == neg) throw std::invalid_argument("cone contains a line");
    }
  return Cone{std::move(rays)};
}

std::vector<IntVec> Fan::rays() const {
  std::vector<IntVec> out;
  for (const auto& c : max_cones)
    for (const auto& r : c.rays)
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  return out;
}

std::int64_t multiplicity(const Cone& c) {
  const auto m = lattice::IntMatrix::from_columns(c.dim(), c.rays);
  const auto snf = lattice::smith_normal_form(m);
  if (c.rays.size() > c.dim()) throw std::invalid_argument("multiplicity: cone is not simplicial");
  lattice::Integer index = 1;
  for (const auto& d : snf.diag) {
    if (d == 0) throw std::invalid_argument("multiplicity: rays are linearly dependent");
    index *= d;
  }
  return lattice::to_int64(index);
}

CyclicSingularity classify_2d(const Cone& c) {
  if (c.dim() != 2 || c.rays.size() != 2) throw std::invalid_argument("classify_2d: 2-dimensional cone required");
  const IntVec& r1 = c.rays[0];
  const IntVec& r2 = c.rays[1];
  std::int64_t u = 0, v = 0;
  lattice::extended_gcd(r1[0], r1[1], u, v);
  // [[u, v], [-y, x]] sends r1 = (x, y) to (1, 0).
  std::int64_t s = checked_add(checked_mul(u, r2[0]), checked_mul(v, r2[1]));
  std::int64_t n = det2(r1, r2);
  if (n == 0) throw std::invalid_argument("classify_2d: degenerate cone");
  if (n < 0) n = -n;  // reflect in the first axis
  return CyclicSingularity{n, lattice::mod(-s, n)};
}

Cone dual_cone_2d(const Cone& c) {
  if (c.dim() != 2 || c.rays.size() != 2) throw std::invalid_argument("dual_cone_2d: 2-dimensional cone required");
  const IntVec& r0 = c.rays[0];
  const IntVec& r1 = c.rays[1];
  if (det2(r0, r1) == 0) throw std::invalid_argument("dual_cone_2d: degenerate cone");
  IntVec n0{-r0[1], r0[0]};
  if (dot(n0, r1) < 0) n0 = {r0[1], -r0[0]};
  IntVec n1{-r1[1], r1[0]};
  if (dot(n1, r0) < 0) n1 = {r1[1], -r1[0]};
  return make_cone({n0, n1});
}

Cone sigma_of(std::int64_t p, std::int64_t q, std::int64_t a) {
  check_params(p, q);
  if (a < 1) throw std::invalid_argument("sigma_of: a must be positive");
  Cone sigma = make_cone({{1, 0, 0},
                          {-1, 0, checked_mul(a, q)},
                          {0, 1, 0},
                          {0, -1, checked_mul(a, p)}});
  const std::array<std::int64_t, 4> n{p, p, q, q};
  if (!gaifullin_criterion(sigma.rays, n)) throw std::logic_error("sigma_of: relation coefficients unbalanced");
  return sigma;
}

IntVec sigma_center() { return {0, 0, 1}; }

Fan star_subdivide(const Cone& sigma, std::span<const std::int64_t> center) {
  if (sigma.dim() != 3) throw std::invalid_argument("star_subdivide: rank-3 cone required");
  const IntVec v(center.begin(), center.end());
  const auto& rays = sigma.rays;
  Fan fan;
  // Facets are ray pairs with every other ray strictly on one side.
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      const IntVec normal = cross3(rays[i], rays[j]);
      int pos = 0, neg = 0;
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (k == i || k == j) continue;
        const std::int64_t s = dot(normal, rays[k]);
        pos += s > 0;
        neg += s < 0;
      }
      if (pos > 0 && neg > 0) continue;
      if (pos + neg != static_cast<int>(rays.size()) - 2) continue;
      const std::int64_t side = dot(normal, v);
      if (side == 0 || (side > 0) != (pos > 0)) throw std::invalid_argument("star_subdivide: center not interior");
      fan.max_cones.push_back(make_cone({rays[i], rays[j], v}));
    }
  return fan;
}

Fan star_subdivide_at_v5(const Cone& sigma) { return star_subdivide(sigma, sigma_center()); }

FlipSubdivisions flip_subdivisions(const Cone& sigma) {
  if (sigma.dim() != 3 || sigma.rays.size() != 4) throw std::invalid_argument("flip_subdivisions: 4-ray rank-3 cone required");
  const auto& v = sigma.rays;
  FlipSubdivisions out;
  out.wall_v1v2.max_cones = {make_cone({v[2], v[0], v[1]}), make_cone({v[3], v[0], v[1]})};
  out.wall_v3v4.max_cones = {make_cone({v[0], v[2], v[3]}), make_cone({v[1], v[2], v[3]})};
  for (const Fan* f : {&out.wall_v1v2, &out.wall_v3v4})
    if (!is_face_compatible(*f)) throw std::logic_error("flip_subdivisions: diagonal is not a valid wall");
  return out;
}

bool is_face_compatible(const Fan& f) {
  for (std::size_t x = 0; x < f.max_cones.size(); ++x)
    for (std::size_t y = x + 1; y < f.max_cones.size(); ++y) {
      const Cone& s = f.max_cones[x];
      const Cone& t = f.max_cones[y];
      if (s.dim() != 3 || t.dim() != 3) throw std::invalid_argument("is_face_compatible: rank-3 fan required");
      std::vector<IntVec> shared, pool = s.rays;
      for (const auto& r : t.rays) {
        if (has_ray(s, r))
          shared.push_back(r);
        else
          pool.push_back(r);
      }
      // Extreme separating normals are orthogonal to two of the rays.
      IntVec sum{0, 0, 0};
      for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          const IntVec base = cross3(pool[i], pool[j]);
          for (int sign : {1, -1}) {
            IntVec n{sign * base[0], sign * base[1], sign * base[2]};
            bool ok = n != IntVec{0, 0, 0};
            for (const auto& r : s.rays) ok = ok && (has_ray(t, r) ? dot(n, r) == 0 : dot(n, r) >= 0);
            for (const auto& r : t.rays) ok = ok && (has_ray(s, r) ? dot(n, r) == 0 : dot(n, r) <= 0);
            if (ok)
              for (int k = 0; k < 3; ++k) sum[k] = checked_add(sum[k], n[k]);
          }
        }
      for (const auto& r : s.rays)
        if (!has_ray(t, r) && dot(sum, r) <= 0) return false;
      for (const auto& r : t.rays)
        if (!has_ray(s, r) && dot(sum, r) >= 0) return false;
    }
  return true;
}

Rational wall_curve_K_degree(const Fan& f, const Cone& wall) {
  if (wall.dim() != 3 || wall.rays.size() != 2) throw std::invalid_argument("wall must be a 2-cone in rank 3");
  std::vector<IntVec> completing;
  std::vector<std::int64_t> cone_mult;
  for (const auto& c : f.max_cones) {
    if (c.rays.size() != 3) throw std::invalid_argument("fan must be simplicial of rank 3");
    if (!has_ray(c, wall.rays[0]) || !has_ray(c, wall.rays[1])) continue;
    for (const auto& r : c.rays)
      if (r != wall.rays[0] && r != wall.rays[1]) completing.push_back(r);
    cone_mult.push_back(multiplicity(c));
  }
  if (completing.size() != 2) throw std::invalid_argument("wall is not shared by exactly two maximal cones");

  const Rational wall_mult = Rational(static_cast<long>(multiplicity(wall)));
  const Rational d1 = wall_mult / Rational(static_cast<long>(cone_mult[0]));
  const Rational d2 = wall_mult / Rational(static_cast<long>(cone_mult[1]));

  // sum_rho <u, v_rho> D_rho . V(wall) = 0 for u = e1, e2, e3; unknowns are
  // the degrees x, y of the two wall divisors.
  const IntVec& t1 = wall.rays[0];
  const IntVec& t2 = wall.rays[1];
  std::array<Rational, 3> rhs;
  for (int u = 0; u < 3; ++u)
    rhs[u] = -(Rational(static_cast<long>(completing[0][u])) * d1 +
               Rational(static_cast<long>(completing[1][u])) * d2);

  for (int r = 0; r < 3; ++r)
    for (int s = r + 1; s < 3; ++s) {
      const Rational det = Rational(static_cast<long>(t1[r] * t2[s] - t1[s] * t2[r]));
      if (det == 0) continue;
      const Rational x = (rhs[r] * static_cast<long>(t2[s]) - rhs[s] * static_cast<long>(t2[r])) / det;
      const Rational y = (rhs[s] * static_cast<long>(t1[r]) - rhs[r] * static_cast<long>(t1[s])) / det;
      for (int u = 0; u < 3; ++u)
        if (x * static_cast<long>(t1[u]) + y * static_cast<long>(t2[u]) != rhs[u])
          throw std::logic_error("wall_curve_K_degree: inconsistent linear relations");
      Rational k = -(d1 + d2 + x + y);
      k.canonicalize();
      return k;
    }
  throw std::invalid_argument("wall rays are dependent");
}

bool gaifullin_criterion(std::span<const IntVec> rays, std::span<const std::int64_t> n) {
  if (rays.size() != 4 || n.size() != 4) throw std::invalid_argument("gaifullin_criterion: four rays and coefficients required");
  for (auto c : n)
    if (c < 1) throw std::invalid_argument("gaifullin_criterion: coefficients must be positive");
  const std::size_t dim = rays[0].size();
  for (std::size_t i = 0; i < dim; ++i) {
    const std::int64_t lhs = checked_add(checked_mul(n[0], rays[0][i]), checked_mul(n[1], rays[1][i]));
    const std::int64_t rhs = checked_add(checked_mul(n[2], rays[2][i]), checked_mul(n[3], rays[3][i]));
    if (lhs != rhs) throw std::invalid_argument("gaifullin_criterion: stated relation does not hold");
  }
  return n[0] == n[1] && n[2] == n[3];
}

Cone sigma0_of(std::int64_t p, std::int64_t q) {
  check_params(p, q);
  Cone sigma0 = make_cone({{0, 0, 1}, {1, 1, -1}, {0, 1, 0}, {p, -q, 0}});
  const std::array<std::int64_t, 4> n{p, p, p + q, 1};
  gaifullin_criterion(sigma0.rays, n);  // throws if the relation fails
  return sigma0;
}

std::string to_string(const Cone& c) {
  std::ostringstream os;
  os << "cone(";
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    os << (i ? ", (" : "(");
    for (std::size_t j = 0; j < c.rays[i].size(); ++j) os << (j ? "," : "") << c.rays[i][j];
    os << ')';
  }
  os << ')';
  return os.str();
}

}  // namespace sl2flip::toric
