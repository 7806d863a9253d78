#include "sl2flip/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sl2flip::lattice {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("int64 addition overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("int64 multiplication overflow");
  return out;
}

std::int64_t to_int64(const Integer& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return value.get_si();
}

std::int64_t gcd(std::int64_t x, std::int64_t y) {
  x = x < 0 ? -x : x;
  y = y < 0 ? -y : y;
  while (y != 0) {
    std::int64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::int64_t lcm(std::int64_t x, std::int64_t y) {
  if (x == 0 || y == 0) return 0;
  const std::int64_t g = gcd(x, y);
  return checked_mul(x / g < 0 ? -(x / g) : x / g, y < 0 ? -y : y);
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t extended_gcd(std::int64_t x, std::int64_t y, std::int64_t& u, std::int64_t& v) {
  std::int64_t old_r = x, r = y;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum = checked_add(sum, checked_mul(x[i], y[i]));
  return sum;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = static_cast<long>(columns[j][i]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.entries_ == y.entries_;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_with, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

IntMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a), left_(IntMatrix::identity(a.rows())), right_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t n = std::min(d_.rows(), d_.cols());
    std::vector<Integer> diag(n, Integer(0));
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_at(t)) break;
      if (d_(t, t) < 0) negate_row(t);
      diag[t] = d_(t, t);
    }
    return SmithDecomposition{std::move(diag), std::move(left_), std::move(right_)};
  }

 private:
  // Returns false when the trailing block is entirely zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < d_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) return true;
    }
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        Integer v = abs(d_(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < left_.cols(); ++j) std::swap(left_(a, j), left_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < right_.rows(); ++i) std::swap(right_(i, a), right_(i, b));
  }

  // row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(target, j) += factor * d_(source, j);
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(target, j) += factor * left_(source, j);
  }

  // col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, target) += factor * d_(i, source);
    for (std::size_t i = 0; i < right_.rows(); ++i) right_(i, target) += factor * right_(i, source);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < left_.cols(); ++j) left_(r, j) = -left_(r, j);
  }

  IntMatrix d_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion,
                       std::vector<GroupElement> generator_images)
    : free_rank_(free_rank), torsion_(std::move(torsion)), images_(std::move(generator_images)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("torsion coefficients must be >= 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw std::invalid_argument("torsion coefficients must form a divisibility chain");
  }
  for (auto& e : images_) e = reduce(std::move(e));
}

std::optional<Integer> FinAbGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : torsion_) n *= d;
  return n;
}

bool FinAbGroup::isomorphic_to(const FinAbGroup& other) const {
  return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
}

GroupElement FinAbGroup::reduce(GroupElement e) const {
  if (e.free.size() != free_rank_ || e.torsion.size() != torsion_.size())
    throw std::invalid_argument("group element has wrong shape");
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    mpz_fdiv_r(e.torsion[i].get_mpz_t(), e.torsion[i].get_mpz_t(), torsion_[i].get_mpz_t());
  return e;
}

GroupElement FinAbGroup::combine(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != images_.size()) throw std::invalid_argument("combine: wrong coefficient count");
  GroupElement out{std::vector<Integer>(free_rank_, Integer(0)),
                   std::vector<Integer>(torsion_.size(), Integer(0))};
  for (std::size_t g = 0; g < coeffs.size(); ++g) {
    const Integer c = static_cast<long>(coeffs[g]);
    for (std::size_t i = 0; i < free_rank_; ++i) out.free[i] += c * images_[g].free[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) out.torsion[i] += c * images_[g].torsion[i];
  }
  return reduce(std::move(out));
}

bool FinAbGroup::is_zero(const GroupElement& e) const {
  GroupElement r = reduce(e);
  return std::all_of(r.free.begin(), r.free.end(), [](const Integer& x) { return x == 0; }) &&
         std::all_of(r.torsion.begin(), r.torsion.end(), [](const Integer& x) { return x == 0; });
}

FinAbGroup FinAbGroup::negate_free_coordinate(std::size_t index) const {
  if (index >= free_rank_) throw std::out_of_range("negate_free_coordinate: no such coordinate");
  FinAbGroup g = *this;
  for (auto& e : g.images_) e.free[index] = -e.free[index];
  return g;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

FinAbGroup cokernel(const IntMatrix& relations) {
  const std::size_t r = relations.rows();
  const SmithDecomposition snf = smith_normal_form(relations);
  const std::size_t n = snf.diag.size();

  // Row i of `left` gives coordinate i of a generator in the diagonal basis.
  enum class Kind { kUnit, kFree, kTorsion };
  std::vector<Kind> kinds(r, Kind::kFree);
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (i < n && snf.diag[i] == 1) {
      kinds[i] = Kind::kUnit;
    } else if (i < n && snf.diag[i] >= 2) {
      kinds[i] = Kind::kTorsion;
      torsion.push_back(snf.diag[i]);
    } else {
      kinds[i] = Kind::kFree;
      ++free_rank;
    }
  }

  std::vector<GroupElement> images;
  images.reserve(r);
  for (std::size_t g = 0; g < r; ++g) {
    GroupElement e;
    for (std::size_t i = 0; i < r; ++i) {
      if (kinds[i] == Kind::kFree) e.free.push_back(snf.left(i, g));
      if (kinds[i] == Kind::kTorsion) e.torsion.push_back(snf.left(i, g));
    }
    images.push_back(std::move(e));
  }
  return FinAbGroup(free_rank, std::move(torsion), std::move(images));
}

std::vector<IntVec> kernel_basis(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < a.cols(); ++i) {
    if (i < snf.diag.size() && snf.diag[i] != 0) continue;
    IntVec v(a.cols());
    for (std::size_t k = 0; k < a.cols(); ++k) v[k] = to_int64(snf.right(k, i));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec>& generators) {
  if (generators.empty()) return {};
  const std::size_t dim = generators.front().size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("lattice_basis: generator length mismatch");
    std::vector<Integer> row;
    for (auto v : g) row.emplace_back(static_cast<long>(v));
    rows.push_back(std::move(row));
  }

  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        if (rows[top][col] < 0)
          for (auto& x : rows[top]) x = -x;
        ++top;
        break;
      }
    }
  }

  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < top; ++i) {
    IntVec v;
    for (const auto& x : rows[i]) v.push_back(to_int64(x));
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVec primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVec out(v.begin(), v.end());
  for (auto& x : out) x /= g;
  return out;
}

bool is_primitive(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd(g, x);
  return g == 1;
}

// ---------------------------------------------------------------------------
// Bounded Diophantine enumeration

namespace {

class BoundedSolver {
 public:
  BoundedSolver(std::span<const std::int64_t> weights, std::int64_t target,
                const Congruence& congruence, std::span<const std::int64_t> box, std::size_t limit)
      : weights_(weights), box_(box), target_(target), limit_(limit) {
    const std::size_t n = weights.size();
    if (box.size() != n) throw std::invalid_argument("solve_bounded_diophantine: box size mismatch");
    if (congruence.modulus < 1) throw std::invalid_argument("solve_bounded_diophantine: modulus < 1");
    if (!congruence.coefficients.empty() && congruence.coefficients.size() != n)
      throw std::invalid_argument("solve_bounded_diophantine: congruence size mismatch");
    for (auto b : box)
      if (b < 0) throw std::invalid_argument("solve_bounded_diophantine: negative box bound");

    modulus_ = congruence.modulus;
    residue_ = mod(congruence.residue, modulus_);
    cong_.assign(n, 0);
    for (std::size_t i = 0; i < congruence.coefficients.size(); ++i)
      cong_[i] = mod(congruence.coefficients[i], modulus_);

    // Range of sum_{j >= i} w_j x_j over the box.
    rest_min_.assign(n + 1, 0);
    rest_max_.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
      const std::int64_t extreme = checked_mul(weights[i], box[i]);
      rest_min_[i] = checked_add(rest_min_[i + 1], std::min<std::int64_t>(0, extreme));
      rest_max_[i] = checked_add(rest_max_[i + 1], std::max<std::int64_t>(0, extreme));
    }
    current_.assign(n, 0);
  }

  std::vector<IntVec> run() {
    if (limit_ == 0) return {};
    if (weights_.empty()) {
      if (target_ == 0 && residue_ == 0) out_.emplace_back();
      return std::move(out_);
    }
    descend(0, 0, 0);
    return std::move(out_);
  }

 private:
  bool full() const { return out_.size() >= limit_; }

  void emit_if_congruent(std::int64_t cong_sum) {
    if (mod(cong_sum, modulus_) == residue_) out_.push_back(current_);
  }

  void descend(std::size_t pos, std::int64_t sum, std::int64_t cong_sum) {
    const std::int64_t need = target_ - sum;
    if (need < rest_min_[pos] || need > rest_max_[pos]) return;
    const std::size_t last = weights_.size() - 1;
    const std::int64_t w = weights_[pos];

    if (pos == last) {
      if (w == 0) {
        for (std::int64_t x = 0; x <= box_[pos] && !full(); ++x) {
          current_[pos] = x;
          emit_if_congruent(cong_sum + (cong_[pos] * (x % modulus_)) % modulus_);
        }
      } else if (need % w == 0) {
        const std::int64_t x = need / w;
        if (x >= 0 && x <= box_[pos]) {
          current_[pos] = x;
          emit_if_congruent(cong_sum + (cong_[pos] * (x % modulus_)) % modulus_);
        }
      }
      current_[pos] = 0;
      return;
    }

    for (std::int64_t x = 0; x <= box_[pos] && !full(); ++x) {
      current_[pos] = x;
      descend(pos + 1, checked_add(sum, checked_mul(w, x)),
              (cong_sum + (cong_[pos] * (x % modulus_)) % modulus_) % modulus_);
    }
    current_[pos] = 0;
  }

  std::span<const std::int64_t> weights_;
  std::span<const std::int64_t> box_;
  std::int64_t target_;
  std::size_t limit_;
  std::int64_t modulus_ = 1;
  std::int64_t residue_ = 0;
  IntVec cong_;
  IntVec rest_min_;
  IntVec rest_max_;
  IntVec current_;
  std::vector<IntVec> out_;
};

}  // namespace

std::vector<IntVec> solve_bounded_diophantine(std::span<const std::int64_t> weights,
                                              std::int64_t target,
                                              const Congruence& congruence,
                                              std::span<const std::int64_t> box,
                                              std::size_t limit) {
  return BoundedSolver(weights, target, congruence, box, limit).run();
}

}  // namespace sl2flip::lattice
