#include "hhwb/sparse_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>

#include "hhwb/error.hpp"

namespace hhwb {
namespace {

std::atomic<std::uint64_t> g_size_cap{50'000'000};

// Sparse row elimination shared by the Q and F_p paths. `Ops` supplies
// the scalar type and field operations.
template <class Ops>
std::size_t echelon_rank(const SparseMat& m, const Ops& ops) {
  using T = typename Ops::value_type;
  using Row = std::vector<std::pair<std::uint32_t, T>>;
  std::vector<Row> pivots;
  std::vector<std::int64_t> pivot_of_col(m.cols(), -1);
  Row work, next;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    work.clear();
    for (const auto& [c, v] : m.row(r)) work.emplace_back(c, ops.convert(v));
    while (!work.empty()) {
      auto lead = work.front().first;
      auto p = pivot_of_col[lead];
      if (p < 0) break;
      // work -= work[lead] * pivots[p]   (pivot rows have leading 1)
      const Row& pr = pivots[static_cast<std::size_t>(p)];
      T factor = work.front().second;
      next.clear();
      std::size_t i = 0, j = 0;
      while (i < work.size() || j < pr.size()) {
        if (j == pr.size() ||
            (i < work.size() && work[i].first < pr[j].first)) {
          next.push_back(std::move(work[i++]));
        } else if (i == work.size() || pr[j].first < work[i].first) {
          next.emplace_back(pr[j].first, ops.neg(ops.mul(factor, pr[j].second)));
          ++j;
        } else {
          T v = ops.sub(work[i].second, ops.mul(factor, pr[j].second));
          if (!ops.is_zero(v)) next.emplace_back(work[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(work, next);
    }
    if (work.empty()) continue;
    T inv = ops.inv(work.front().second);
    for (auto& e : work) e.second = ops.mul(e.second, inv);
    pivot_of_col[work.front().first] = static_cast<std::int64_t>(pivots.size());
    pivots.push_back(work);
  }
  return pivots.size();
}

struct RationalOps {
  using value_type = mpq_class;
  mpq_class convert(const Scalar& v) const { return v; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class neg(const mpq_class& a) const { return -a; }
  mpq_class inv(const mpq_class& a) const {
    mpq_class r = 1 / a;
    r.canonicalize();
    return r;
  }
  bool is_zero(const mpq_class& a) const { return a == 0; }
};

struct ModOps {
  using value_type = std::uint64_t;
  std::uint64_t p;
  std::uint64_t convert(const Scalar& v) const { return v.get_num().get_ui(); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return (a + p - b) % p;
  }
  std::uint64_t neg(std::uint64_t a) const { return (p - a) % p; }
  std::uint64_t inv(std::uint64_t a) const {
    // Fermat: a^(p-2)
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  }
  bool is_zero(std::uint64_t a) const { return a == 0; }
};

}  // namespace

std::uint64_t size_cap() { return g_size_cap.load(); }
void set_size_cap(std::uint64_t cap) { g_size_cap.store(cap); }

void check_size(std::size_t rows, std::size_t cols, const char* what) {
  auto implied = static_cast<unsigned __int128>(rows) * cols;
  if (implied > size_cap()) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(rows) +
                         " x " + std::to_string(cols) +
                         " exceeds the size cap of " +
                         std::to_string(size_cap()) + " implied entries");
  }
}

SparseMat::SparseMat(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  check_size(rows, cols, "matrix");
  data_.resize(rows);
}

SparseMat SparseMat::from_triplets(FieldSpec field, std::size_t rows,
                                   std::size_t cols,
                                   std::vector<Triplet> entries) {
  SparseMat m(field, rows, cols);
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < entries.size();) {
    auto& t = entries[i];
    if (t.row >= rows || t.col >= cols) {
      throw DimensionMismatch("triplet index out of range");
    }
    Scalar sum = 0;
    std::size_t j = i;
    for (; j < entries.size() && entries[j].row == t.row &&
           entries[j].col == t.col;
         ++j) {
      sum += entries[j].value;
    }
    field.reduce(sum);
    if (sum != 0) {
      m.data_[t.row].emplace_back(static_cast<std::uint32_t>(t.col), sum);
    }
    i = j;
  }
  return m;
}

SparseMat SparseMat::identity(FieldSpec field, std::size_t n) {
  SparseMat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.data_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar(1));
  }
  return m;
}

SparseMat SparseMat::from_dense(FieldSpec field,
                                const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) t.push_back({r, c, rows[r][c]});
    }
  }
  return from_triplets(field, rows.size(), cols, std::move(t));
}

std::size_t SparseMat::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar SparseMat::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return 0;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) {
      t.data_[c].emplace_back(static_cast<std::uint32_t>(r), v);
    }
  }
  return t;
}

std::vector<std::vector<Scalar>> SparseMat::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) d[r][c] = v;
  }
  return d;
}

bool SparseMat::operator==(const SparseMat& other) const {
  return field_ == other.field_ && rows_ == other.rows_ &&
         cols_ == other.cols_ && data_ == other.data_;
}

std::size_t rank(const SparseMat& m) {
  if (m.field().is_rational()) return echelon_rank(m, RationalOps{});
  return echelon_rank(m, ModOps{m.field().characteristic()});
}

std::size_t kernel_dim(const SparseMat& m) { return m.cols() - rank(m); }

SparseMat matmul(const SparseMat& a, const SparseMat& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matmul: field mismatch");
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  const auto& f = a.field();
  std::vector<Triplet> out;
  std::map<std::uint32_t, Scalar> acc;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    acc.clear();
    for (const auto& [k, av] : a.row(r)) {
      for (const auto& [c, bv] : b.row(k)) acc[c] += av * bv;
    }
    for (auto& [c, v] : acc) {
      f.reduce(v);
      if (v != 0) out.push_back({r, c, v});
    }
  }
  return SparseMat::from_triplets(f, a.rows(), b.cols(), std::move(out));
}

}  // namespace hhwb
