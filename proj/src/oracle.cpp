#include "sl2flip/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2flip::oracle {

std::vector<IntVec> hilbert_basis_in_box(const semigroup::AffineSemigroup& s, IntVec lo, IntVec hi) {
  std::vector<IntVec> members;
  for (std::int64_t i = lo[0]; i <= hi[0]; ++i)
    for (std::int64_t j = lo[1]; j <= hi[1]; ++j) {
      IntVec x{i, j};
      if ((i != 0 || j != 0) && semigroup::contains(s, x)) members.push_back(x);
    }
  std::vector<IntVec> out;
  for (const auto& x : members) {
    bool decomposable = false;
    for (const auto& y : members) {
      if (y == x) continue;
      const IntVec z{x[0] - y[0], x[1] - y[1]};
      if ((z[0] != 0 || z[1] != 0) && semigroup::contains(s, z)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool mplus_contains(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t i, std::int64_t j) {
  return i >= 0 && j >= 0 && q * j <= p * i && (i - j) % m == 0;
}

std::vector<IntVec> mplus_hilbert_basis(std::int64_t p, std::int64_t q, std::int64_t m) {
  const std::int64_t k = lattice::gcd(q - p, m);
  const std::int64_t side = m + (m / k) * q;
  // Reachability table: sums of two nonzero members.
  std::vector<std::vector<char>> member(side + 1, std::vector<char>(side + 1, 0));
  for (std::int64_t i = 0; i <= side; ++i)
    for (std::int64_t j = 0; j <= side; ++j) member[i][j] = mplus_contains(p, q, m, i, j);
  std::vector<IntVec> out;
  for (std::int64_t i = 0; i <= side; ++i)
    for (std::int64_t j = 0; j <= side; ++j) {
      if (!member[i][j] || (i == 0 && j == 0)) continue;
      bool decomposable = false;
      for (std::int64_t x = 0; x <= i && !decomposable; ++x)
        for (std::int64_t y = 0; y <= j; ++y) {
          if ((x == 0 && y == 0) || (x == i && y == j)) continue;
          if (member[x][y] && member[i - x][j - y]) {
            decomposable = true;
            break;
          }
        }
      if (!decomposable) out.push_back({i, j});
    }
  return out;
}

std::size_t mtilde_fiber(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t i, std::int64_t j) {
  std::size_t count = 0;
  for (std::int64_t k = 0; k <= 2 * (i + j) + 2; ++k)
    if (i >= 0 && j >= 0 && (j - i) % m == 0 && p * i - q * j >= 0 && i + j >= k) ++count;
  return count;
}

std::vector<IntVec> diophantine_scan(std::span<const std::int64_t> weights, std::int64_t target,
                                     const lattice::Congruence& congruence, std::span<const std::int64_t> box) {
  const std::size_t n = weights.size();
  std::vector<IntVec> out;
  IntVec x(n, 0);
  for (;;) {
    std::int64_t sum = 0, cong = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += weights[i] * x[i];
      if (!congruence.coefficients.empty()) cong += congruence.coefficients[i] * x[i];
    }
    if (sum == target && lattice::mod(cong - congruence.residue, congruence.modulus) == 0) out.push_back(x);
    // Odometer with the last coordinate fastest gives lexicographic order.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (x[pos] < box[pos]) {
        ++x[pos];
        break;
      }
      x[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

lattice::Integer cofactor_determinant(const lattice::IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("cofactor_determinant: not square");
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  lattice::Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    lattice::IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = a(i, j);
    const lattice::Integer term = a(0, c) * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : lattice::Integer(-term);
  }
  return det;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

// gcd of all k x k minors; 0 if they all vanish.
lattice::Integer determinantal_divisor(const lattice::IntMatrix& a, std::size_t k) {
  lattice::Integer g = 0;
  for (const auto& rows : subsets(a.rows(), k))
    for (const auto& cols : subsets(a.cols(), k)) {
      lattice::IntMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(rows[i], cols[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), lattice::Integer(cofactor_determinant(minor)).get_mpz_t());
    }
  return g;
}

}  // namespace

std::vector<lattice::Integer> invariant_factors(const lattice::IntMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<lattice::Integer> out;
  lattice::Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const lattice::Integer d = determinantal_divisor(a, k);
    if (d == 0) {
      out.resize(n, 0);
      return out;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

std::int64_t multiplicity(const toric::Cone& c) {
  const auto m = lattice::IntMatrix::from_columns(c.dim(), c.rays);
  const lattice::Integer d = determinantal_divisor(m, c.rays.size());
  if (d == 0) throw std::invalid_argument("oracle multiplicity: dependent rays");
  return lattice::to_int64(d);
}

toric::CyclicSingularity classify_2d(const toric::Cone& c) {
  const IntVec& r0 = c.rays[0];
  const IntVec& r1 = c.rays[1];
  std::int64_t n = r0[0] * r1[1] - r0[1] * r1[0];
  n = n < 0 ? -n : n;
  if (n == 0) throw std::invalid_argument("oracle classify_2d: degenerate cone");
  for (std::int64_t t = 0; t < n; ++t)
    if ((r1[0] + t * r0[0]) % n == 0 && (r1[1] + t * r0[1]) % n == 0) return {n, t};
  throw std::logic_error("oracle classify_2d: no twist found");
}

std::optional<std::int64_t> stabilizer_order(const git::DiagonalAction& act, std::span<const std::size_t> support) {
  const std::int64_t a = act.finite_order;
  std::int64_t w = 0;
  for (auto i : support)
    if (act.torus_weights[i] != 0) {
      w = act.torus_weights[i] < 0 ? -act.torus_weights[i] : act.torus_weights[i];
      break;
    }
  if (w == 0) return std::nullopt;
  // t^(a w) = 1 on the stabilizer: t = exp(2 pi i s / N), zeta = exp(2 pi i j / a).
  const std::int64_t N = a * w;
  std::int64_t count = 0;
  for (std::int64_t s = 0; s < N; ++s)
    for (std::int64_t j = 0; j < a; ++j) {
      bool fixes = true;
      for (auto i : support)
        if (lattice::mod(act.torus_weights[i] * s * a + act.finite_weights[i] * j * N, N * a) != 0) fixes = false;
      if (fixes) ++count;
    }
  return count;
}

}  // namespace sl2flip::oracle
