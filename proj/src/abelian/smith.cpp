#include "nilmult/abelian/smith.hpp"

#include <stdexcept>
#include <utility>

namespace nilmult {
namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state for the Smith form. With `track` off only the working
// matrix is touched.
class SmithReducer {
 public:
  SmithReducer(IntegerMatrix a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      u_ = IntegerMatrix::identity(a_.rows());
      u_inv_ = u_;
      v_ = IntegerMatrix::identity(a_.cols());
      v_inv_ = v_;
    }
  }

  void run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t pr = 0, pc = 0;
      if (!find_min(t, pr, pc)) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  IntegerMatrix& matrix() { return a_; }
  IntegerMatrix& u() { return u_; }
  IntegerMatrix& u_inv() { return u_inv_; }
  IntegerMatrix& v() { return v_; }
  IntegerMatrix& v_inv() { return v_inv_; }

 private:
  // Smallest nonzero |entry| in the lower-right block starting at t.
  bool find_min(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        if (!found || cmpabs(x, best) < 0) {
          best = x;
          pr = i;
          pc = j;
          found = true;
          if (best == 1 || best == -1) return true;
        }
      }
    return found;
  }

  void reduce_pivot(std::size_t t) {
    Integer q;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (q != 0) add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        if (q != 0) add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Bring the smallest leftover of row/column t into the pivot.
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
          if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(br, bc)) < 0) br = i, bc = t;
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(br, bc)) < 0) br = t, bc = j;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Row and column are clear; the pivot must divide the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(i, j) == 0) continue;
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) return;
    }
  }

  // row dst += k * row src
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (a_(src, c) != 0) a_(dst, c) += k * a_(src, c);
    if (!track_) return;
    for (std::size_t c = 0; c < u_.cols(); ++c)
      if (u_(src, c) != 0) u_(dst, c) += k * u_(src, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r)
      if (u_inv_(r, dst) != 0) u_inv_(r, src) -= k * u_inv_(r, dst);
  }

  // col dst += k * col src
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_(r, src) != 0) a_(r, dst) += k * a_(r, src);
    if (!track_) return;
    for (std::size_t r = 0; r < v_.rows(); ++r)
      if (v_(r, src) != 0) v_(r, dst) += k * v_(r, src);
    for (std::size_t c = 0; c < v_inv_.cols(); ++c)
      if (v_inv_(dst, c) != 0) v_inv_(src, c) -= k * v_inv_(dst, c);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    if (!track_) return;
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    if (!track_) return;
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
    for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (!track_) return;
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
    for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
  }

  IntegerMatrix a_;
  bool track_;
  IntegerMatrix u_, u_inv_, v_, v_inv_;
};

std::vector<Integer> read_diagonal(const IntegerMatrix& s) {
  const std::size_t n = std::min(s.rows(), s.cols());
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = s(i, i);
  return d;
}

std::size_t count_nonzero(const std::vector<Integer>& d) {
  std::size_t r = 0;
  for (const auto& x : d)
    if (x != 0) ++r;
  return r;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  SmithReducer reducer(a, true);
  reducer.run();
  SmithForm out;
  out.S = std::move(reducer.matrix());
  out.U = std::move(reducer.u());
  out.U_inverse = std::move(reducer.u_inv());
  out.V = std::move(reducer.v());
  out.V_inverse = std::move(reducer.v_inv());
  out.diagonal = read_diagonal(out.S);
  out.rank = count_nonzero(out.diagonal);
  return out;
}

std::vector<Integer> smith_diagonal(IntegerMatrix a) {
  SmithReducer reducer(std::move(a), false);
  reducer.run();
  return read_diagonal(reducer.matrix());
}

std::size_t rank(const IntegerMatrix& a) { return count_nonzero(smith_diagonal(a)); }

IntegerMatrix left_kernel_basis(const IntegerMatrix& a) {
  return SublatticeCoordinates::left_kernel(a).basis();
}

SublatticeCoordinates::SublatticeCoordinates(IntegerMatrix u, IntegerMatrix u_inverse,
                                             std::size_t first)
    : basis_(u.block(first, u.rows() - first, 0, u.cols())),
      u_inverse_(std::move(u_inverse)),
      first_(first) {}

SublatticeCoordinates SublatticeCoordinates::left_kernel(const IntegerMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  return SublatticeCoordinates(std::move(snf.U), std::move(snf.U_inverse), snf.rank);
}

std::vector<Integer> SublatticeCoordinates::coordinates(std::span<const Integer> x) const {
  if (x.size() != u_inverse_.rows())
    throw std::invalid_argument("SublatticeCoordinates: dimension mismatch");
  std::vector<Integer> y = x * u_inverse_;
  for (std::size_t i = 0; i < first_; ++i)
    if (y[i] != 0) throw std::domain_error("vector is not in the sublattice");
  return {y.begin() + static_cast<std::ptrdiff_t>(first_), y.end()};
}

IntegerMatrix SublatticeCoordinates::coordinates(const IntegerMatrix& m) const {
  IntegerMatrix out(m.rows(), dimension());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto y = coordinates(m.row(r));
    for (std::size_t c = 0; c < y.size(); ++c) out(r, c) = std::move(y[c]);
  }
  return out;
}

}  // namespace nilmult
