#include "nilmult/abelian/sparse_cokernel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "nilmult/abelian/integer_matrix.hpp"

namespace nilmult {
namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Unit-pivot elimination. Pivot rows are kept in creation order; a pivot
// row never mentions the column of an older pivot, so reducing a vector
// by pivots in creation order terminates with no pivot columns left.
class UnitEliminator {
 public:
  explicit UnitEliminator(std::size_t cols)
      : cols_(cols), pivot_of_(cols, kNone), acc_(cols, 0), queued_(cols, false) {}

  // Fully reduces `row`; returns true if it became a new pivot, false if it
  // vanished or was stored as a residual.
  bool insert(const SparseRow& row, std::vector<SparseRow>& residual) {
    SparseRow reduced = reduce(row);
    if (reduced.empty()) return false;
    std::size_t best = reduced.size();
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (reduced[k].second == 1 || reduced[k].second == -1) best = k;
    if (best == reduced.size()) {
      residual.push_back(std::move(reduced));
      return false;
    }
    pivot_of_[reduced[best].first] = pivots_.size();
    pivots_.push_back({reduced[best].first, reduced[best].second, std::move(reduced)});
    return true;
  }

  SparseRow reduce(const SparseRow& row) {
    touched_.clear();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> queue;
    auto touch = [&](std::size_t c) {
      if (acc_[c] == 0 && !in_touched(c)) touched_.push_back(c);
      if (pivot_of_[c] != kNone && !queued_[c]) {
        queued_[c] = true;
        queue.push(pivot_of_[c]);
      }
    };
    for (const auto& [c, v] : row) {
      touch(c);
      acc_[c] = v;
    }
    while (!queue.empty()) {
      const Pivot& p = pivots_[queue.top()];
      queue.pop();
      queued_[p.col] = false;
      const std::int64_t a = acc_[p.col];
      if (a == 0) continue;
      const std::int64_t factor = checked_mul(a, p.unit);
      for (const auto& [c, v] : p.row) {
        touch(c);
        acc_[c] = checked_sub(acc_[c], checked_mul(factor, v));
      }
    }
    SparseRow out;
    for (std::size_t c : touched_) {
      if (acc_[c] != 0) out.emplace_back(c, acc_[c]);
      acc_[c] = 0;
      mark_[c] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_pivot(std::size_t c) const { return pivot_of_[c] != kNone; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Pivot {
    std::size_t col;
    std::int64_t unit;
    SparseRow row;
  };

  bool in_touched(std::size_t c) {
    if (mark_.size() != cols_) mark_.assign(cols_, false);
    if (mark_[c]) return true;
    mark_[c] = true;
    return false;
  }

  std::size_t cols_;
  std::vector<std::size_t> pivot_of_;
  std::vector<Pivot> pivots_;
  std::vector<std::int64_t> acc_;
  std::vector<bool> queued_;
  std::vector<bool> mark_;
  std::vector<std::size_t> touched_;
};

// Echelon form over Z, one row at a time, with extended-gcd row merges.
class EchelonLattice {
 public:
  explicit EchelonLattice(std::size_t cols) : rows_(cols) {}

  void insert(std::vector<Integer> v) {
    Integer g, s, t, a, b;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      auto& e = rows_[j];
      if (e.empty()) {
        if (v[j] < 0)
          for (auto& x : v) x = -x;
        e = std::move(v);
        return;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), e[j].get_mpz_t(),
                 v[j].get_mpz_t());
      a = e[j] / g;
      b = v[j] / g;
      for (std::size_t k = j; k < v.size(); ++k) {
        Integer ek = s * e[k] + t * v[k];
        v[k] = a * v[k] - b * e[k];
        e[k] = std::move(ek);
      }
    }
  }

  IntegerMatrix matrix() const {
    IntegerMatrix m(0, rows_.size());
    for (const auto& r : rows_)
      if (!r.empty()) m.append_row(r);
    return m;
  }

 private:
  std::vector<std::vector<Integer>> rows_;
};

FgAbelianGroup eliminate(const std::vector<SparseRow>& relations, std::size_t cols) {
  UnitEliminator elim(cols);
  std::vector<SparseRow> residual;
  for (const auto& r : relations) elim.insert(r, residual);
  // Residuals may pick up unit entries from pivots created after them.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<SparseRow> pending;
    pending.swap(residual);
    for (const auto& r : pending)
      if (elim.insert(r, residual)) changed = true;
  }
  std::vector<std::size_t> remaining;
  std::vector<std::size_t> index_of(cols, 0);
  for (std::size_t c = 0; c < cols; ++c)
    if (!elim.is_pivot(c)) {
      index_of[c] = remaining.size();
      remaining.push_back(c);
    }
  std::set<SparseRow> distinct;
  for (const auto& r : residual) distinct.insert(elim.reduce(r));
  EchelonLattice lattice(remaining.size());
  for (const auto& r : distinct) {
    if (r.empty()) continue;
    std::vector<Integer> dense(remaining.size());
    for (const auto& [c, v] : r) dense[index_of[c]] = Integer(static_cast<long>(v));
    lattice.insert(std::move(dense));
  }
  return cokernel(lattice.matrix());
}

}  // namespace

FgAbelianGroup sparse_cokernel(const std::vector<SparseRow>& relations, std::size_t cols) {
  try {
    return eliminate(relations, cols);
  } catch (const Overflow&) {
    IntegerMatrix dense(relations.size(), cols);
    for (std::size_t r = 0; r < relations.size(); ++r)
      for (const auto& [c, v] : relations[r]) dense(r, c) = Integer(static_cast<long>(v));
    return cokernel(dense);
  }
}

}  // namespace nilmult
