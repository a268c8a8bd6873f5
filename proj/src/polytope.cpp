#include "bernpoly/polytope.hpp"

#include "bernpoly/algebra.hpp"
#include "bernpoly/errors.hpp"

#include <algorithm>
#include <set>

namespace bernpoly {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Row-reduces `m` in place and returns its rank.
int row_reduce(Matrix& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m.front().size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    const Rational lead = m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] /= lead;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

// The margin rows stacked with the all-ones normalization row.
Matrix stacked_system(const ConstraintSystem& cs) {
  Matrix m = cs.matrix();
  m.emplace_back(size_t{1} << cs.dimension(), Rational{1});
  return m;
}

int stacked_rank(const ConstraintSystem& cs) {
  Matrix m = stacked_system(cs);
  return row_reduce(m);
}

// Solves the stacked system restricted to the columns in `support` against
// rhs (0,...,0,1). Returns the full-length solution when it is unique,
// consistent and nonnegative.
std::optional<std::vector<Rational>> solve_on_support(const Matrix& stacked,
                                                      const std::vector<int>& support) {
  const size_t rows = stacked.size();
  const size_t k = support.size();
  Matrix work(rows, std::vector<Rational>(k + 1, Rational{0}));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < k; ++c) {
      work[r][c] = stacked[r][static_cast<size_t>(support[c])];
    }
  }
  work[rows - 1][k] = 1;

  size_t row = 0;
  for (size_t col = 0; col < k && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && work[pivot][col] == 0) ++pivot;
    if (pivot == rows) return std::nullopt;  // free column: not unique
    std::swap(work[pivot], work[row]);
    const Rational lead = work[row][col];
    for (size_t c = col; c <= k; ++c) work[row][c] /= lead;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || work[r][col] == 0) continue;
      const Rational factor = work[r][col];
      for (size_t c = col; c <= k; ++c) work[r][c] -= factor * work[row][c];
    }
    ++row;
  }
  if (row < k) return std::nullopt;
  for (size_t r = row; r < rows; ++r) {
    if (work[r][k] != 0) return std::nullopt;  // inconsistent
  }
  for (size_t r = 0; r < k; ++r) {
    if (work[r][k] < 0) return std::nullopt;  // infeasible
  }

  std::vector<Rational> full(stacked.front().size(), Rational{0});
  for (size_t c = 0; c < k; ++c) {
    full[static_cast<size_t>(support[c])] = work[c][k];
  }
  return full;
}

// Column builders shared by both closed-form tables. `weights` lists
// (atom, value) pairs; everything else is zero.
BernoulliPmf sparse_pmf(std::initializer_list<std::pair<int, Rational>> weights) {
  std::vector<Rational> values(8, Rational{0});
  for (const auto& [atom, value] : weights) values[static_cast<size_t>(atom)] = value;
  return make_pmf(3, std::move(values));
}

// Columns r1..r5 are shared by both tables.
BernoulliPmf shared_column(const Rational& p, int index) {
  switch (index) {
    case 1: return sparse_pmf({{0, 1 - 2 * p}, {3, p}, {4, p}});
    case 2: return sparse_pmf({{0, 1 - 2 * p}, {2, p}, {5, p}});
    case 3: return sparse_pmf({{0, 1 - 2 * p}, {1, p}, {6, p}});
    case 4:
      return sparse_pmf({{0, 1 - 3 * p / 2}, {3, p / 2}, {5, p / 2}, {6, p / 2}});
    case 5: return sparse_pmf({{0, 1 - p}, {7, p}});
    default: throw OutOfRange{"shared column index must be in [1, 5]"};
  }
}

VertexTag type0_tag(const MarginParam& p, const BernoulliPmf& f) {
  auto gamma = express_in_fundamentals(apply_map(p, f));
  if (!gamma || *gamma == 0) {
    throw Error{"internal: type-0 column does not map to a nonzero multiple of F+"};
  }
  return *gamma > 0 ? VertexTag::kType0Plus : VertexTag::kType0Minus;
}

}  // namespace

ConstraintSystem::ConstraintSystem(int d, MarginParam p) : d_(d), p_(std::move(p)) {
  if (d_ < kMinDimension || d_ > kMaxDimension) {
    throw UnsupportedDimension{"constraint system supports d in [2, 4]"};
  }
  const int n = 1 << d_;
  const Rational on_value = 1 - p_.p();
  const Rational off_value = -p_.p();
  rows_.assign(static_cast<size_t>(d_), std::vector<Rational>(static_cast<size_t>(n)));
  for (int k = 1; k <= d_; ++k) {
    for (int a = 0; a < n; ++a) {
      rows_[static_cast<size_t>(k - 1)][static_cast<size_t>(a)] =
          atom_coordinate(a, k) ? on_value : off_value;
    }
  }
}

std::vector<Rational> ConstraintSystem::residual(const BernoulliPmf& f) const {
  if (f.dimension() != d_) {
    throw DimensionMismatch{"pmf dimension does not match the constraint system"};
  }
  std::vector<Rational> out(static_cast<size_t>(d_), Rational{0});
  for (int k = 0; k < d_; ++k) {
    for (int a = 0; a < f.size(); ++a) {
      if (f.value(a) != 0) {
        out[static_cast<size_t>(k)] +=
            rows_[static_cast<size_t>(k)][static_cast<size_t>(a)] * f.value(a);
      }
    }
  }
  return out;
}

ConstraintSystem build_constraints(int d, MarginParam p) {
  return ConstraintSystem{d, std::move(p)};
}

std::string_view tag_name(VertexTag tag) {
  switch (tag) {
    case VertexTag::kKernel: return "kernel";
    case VertexTag::kType0Plus: return "type0-plus";
    case VertexTag::kType0Minus: return "type0-minus";
    case VertexTag::kSupportX1X2: return "supportX1X2";
    case VertexTag::kUpperFrechet: return "upperFrechet";
    case VertexTag::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<VertexTag> tag_from_name(std::string_view name) {
  for (VertexTag tag : {VertexTag::kKernel, VertexTag::kType0Plus, VertexTag::kType0Minus,
                        VertexTag::kSupportX1X2, VertexTag::kUpperFrechet,
                        VertexTag::kOracle}) {
    if (tag_name(tag) == name) return tag;
  }
  return std::nullopt;
}

std::optional<int> ExtremalSet::find(const BernoulliPmf& f) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == f) return static_cast<int>(i);
  }
  return std::nullopt;
}

BernoulliPmf table1_column(const MarginParam& mp, int index) {
  if (mp.p() > Rational{1, 3}) {
    throw OutOfRange{"the first table applies for p <= 1/3"};
  }
  const Rational& p = mp.p();
  if (index >= 1 && index <= 5) return shared_column(p, index);
  if (index == 6) return sparse_pmf({{0, 1 - 3 * p}, {1, p}, {2, p}, {4, p}});
  throw OutOfRange{"table 1 column index must be in [1, 6]"};
}

BernoulliPmf table2_column(const MarginParam& mp, int index) {
  if (mp.p() < Rational{1, 3}) {
    throw OutOfRange{"the second table applies for p >= 1/3"};
  }
  const Rational& p = mp.p();
  switch (index) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5: return shared_column(p, index);
    case 6:
      return sparse_pmf({{1, 1 - 2 * p}, {2, 1 - 2 * p}, {3, 3 * p - 1}, {4, p}});
    case 7:
      return sparse_pmf({{1, 1 - 2 * p}, {2, p}, {4, 1 - 2 * p}, {5, 3 * p - 1}});
    case 8:
      return sparse_pmf({{1, p}, {2, 1 - 2 * p}, {4, 1 - 2 * p}, {6, 3 * p - 1}});
    case 9:
      return sparse_pmf({{1, (1 - p) / 2}, {2, (1 - p) / 2}, {4, (1 - p) / 2},
                         {7, (3 * p - 1) / 2}});
    default: throw OutOfRange{"table 2 column index must be in [1, 9]"};
  }
}

ExtremalSet closed_form_extremals(const MarginParam& p) {
  const bool first_table = p.p() <= Rational{1, 3};
  const int column_count = first_table ? 6 : 9;

  ExtremalSet out{3, p, {}, {}, {}};
  for (int index = 1; index <= column_count; ++index) {
    BernoulliPmf column =
        first_table ? table1_column(p, index) : table2_column(p, index);
    if (out.find(column)) continue;  // columns coincide at p = 1/2

    VertexTag tag;
    if (index <= 3 || index == 5) {
      tag = VertexTag::kKernel;
    } else if (!first_table && index >= 6 && index <= 8) {
      tag = VertexTag::kSupportX1X2;
    } else {
      // The two type-0 columns; the F+/F- association is discovered from
      // the sign of the scalar coefficient, not hard-coded.
      tag = type0_tag(p, column);
    }
    out.vertices.push_back(std::move(column));
    out.tags.push_back(tag);
    out.names.push_back("r" + std::to_string(index));
  }
  return out;
}

ExtremalSet enumerate_vertices_oracle(const ConstraintSystem& cs) {
  const int n = 1 << cs.dimension();
  const Matrix stacked = stacked_system(cs);
  const int rank = stacked_rank(cs);

  std::set<std::vector<Rational>> found;
  std::vector<int> support;
  // Iterate k-combinations of columns for every k up to the rank; a basic
  // feasible solution never needs a larger support.
  for (int k = 1; k <= rank; ++k) {
    support.assign(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) support[static_cast<size_t>(i)] = i;
    while (true) {
      if (auto solution = solve_on_support(stacked, support)) {
        found.insert(std::move(*solution));
      }
      int i = k - 1;
      while (i >= 0 && support[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++support[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        support[static_cast<size_t>(j)] = support[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }

  ExtremalSet out{cs.dimension(), cs.param(), {}, {}, {}};
  int counter = 0;
  for (const auto& values : found) {
    out.vertices.push_back(make_pmf(cs.dimension(), values));
    out.tags.push_back(VertexTag::kOracle);
    out.names.push_back("v" + std::to_string(++counter));
  }
  return out;
}

bool is_member(const ConstraintSystem& cs, const BernoulliPmf& f) {
  for (const Rational& r : cs.residual(f)) {
    if (r != 0) return false;
  }
  return true;
}

ConvexWeights decompose(const ExtremalSet& es, const BernoulliPmf& f) {
  if (f.dimension() != es.d) {
    throw DimensionMismatch{"pmf dimension does not match the vertex set"};
  }
  if (!is_member(build_constraints(es.d, es.p), f)) {
    throw NotAMember{"pmf is not in the polytope spanned by the vertex set"};
  }

  // Phase-1 simplex on R lambda = f, lambda >= 0, with one artificial
  // variable per row and Bland's rule throughout. The rhs is already
  // nonnegative, so the artificial basis is feasible.
  const size_t rows = size_t{1} << es.d;
  const size_t n = es.vertices.size();
  const size_t cols = n + rows + 1;  // lambdas, artificials, rhs
  std::vector<std::vector<Rational>> tableau(rows, std::vector<Rational>(cols, Rational{0}));
  std::vector<size_t> basis(rows);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t j = 0; j < n; ++j) {
      tableau[r][j] = es.vertices[j].value(static_cast<int>(r));
    }
    tableau[r][n + r] = 1;
    tableau[r][cols - 1] = f.value(static_cast<int>(r));
    basis[r] = n + r;
  }
  const auto cost = [&](size_t column) { return column >= n ? Rational{1} : Rational{0}; };

  while (true) {
    // Reduced costs; Bland: enter the lowest-indexed improving column.
    size_t entering = cols;
    for (size_t j = 0; j + 1 < cols && entering == cols; ++j) {
      Rational reduced = cost(j);
      for (size_t r = 0; r < rows; ++r) {
        if (tableau[r][j] != 0) reduced -= cost(basis[r]) * tableau[r][j];
      }
      if (reduced < 0) entering = j;
    }
    if (entering == cols) break;

    size_t leaving = rows;
    Rational best_ratio{0};
    for (size_t r = 0; r < rows; ++r) {
      if (tableau[r][entering] <= 0) continue;
      Rational ratio = tableau[r][cols - 1] / tableau[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving == rows) {
      throw Error{"internal: unbounded phase-1 simplex"};
    }

    const Rational pivot = tableau[leaving][entering];
    for (size_t c = 0; c < cols; ++c) tableau[leaving][c] /= pivot;
    for (size_t r = 0; r < rows; ++r) {
      if (r == leaving || tableau[r][entering] == 0) continue;
      const Rational factor = tableau[r][entering];
      for (size_t c = 0; c < cols; ++c) tableau[r][c] -= factor * tableau[leaving][c];
    }
    basis[leaving] = entering;
  }

  Rational infeasibility{0};
  for (size_t r = 0; r < rows; ++r) {
    if (basis[r] >= n) infeasibility += tableau[r][cols - 1];
  }
  if (infeasibility != 0) {
    throw NotAMember{"pmf is not a convex combination of the vertex set"};
  }

  ConvexWeights out{std::vector<Rational>(n, Rational{0})};
  for (size_t r = 0; r < rows; ++r) {
    if (basis[r] < n) out.weights[basis[r]] = tableau[r][cols - 1];
  }
  return out;
}

BernoulliPmf mix(const ExtremalSet& es, const ConvexWeights& weights) {
  if (weights.weights.size() != es.vertices.size()) {
    throw InvalidWeights{"weight vector is not aligned with the vertex set"};
  }
  Rational total{0};
  for (const auto& w : weights.weights) {
    if (w < 0) throw InvalidWeights{"negative convex weight"};
    total += w;
  }
  if (total != 1) throw InvalidWeights{"convex weights sum to " + to_string(total)};

  std::vector<Rational> values(size_t{1} << es.d, Rational{0});
  for (size_t j = 0; j < es.vertices.size(); ++j) {
    if (weights.weights[j] == 0) continue;
    for (int a = 0; a < es.vertices[j].size(); ++a) {
      values[static_cast<size_t>(a)] += weights.weights[j] * es.vertices[j].value(a);
    }
  }
  return make_pmf(es.d, std::move(values));
}

bool is_vertex(const ConstraintSystem& cs, const BernoulliPmf& f) {
  if (!is_member(cs, f)) {
    throw NotAMember{"pmf is outside the polytope"};
  }
  const std::vector<int> support = f.support();
  Matrix restricted;
  const Matrix stacked = stacked_system(cs);
  restricted.reserve(stacked.size());
  for (const auto& row : stacked) {
    std::vector<Rational> r;
    r.reserve(support.size());
    for (int a : support) r.push_back(row[static_cast<size_t>(a)]);
    restricted.push_back(std::move(r));
  }
  return row_reduce(restricted) == static_cast<int>(support.size());
}

}  // namespace bernpoly
