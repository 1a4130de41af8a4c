#include "nilmult/nilpotent/magnus.hpp"

#include <algorithm>

#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

std::size_t ipow(std::size_t n, int d) {
  std::size_t r = 1;
  for (int i = 0; i < d; ++i) r *= n;
  return r;
}

void check_same(const MagnusSeries& a, const MagnusSeries& b) {
  if (a.generator_count() != b.generator_count() || a.degree_bound() != b.degree_bound())
    throw ContextMismatch("Magnus series from different rings");
}

}  // namespace

MagnusSeries::MagnusSeries(std::size_t n, int c) : n_(n), c_(c) {
  if (n == 0 || c < 0) throw InvalidInput("Magnus ring needs n >= 1 and c >= 0");
  blocks_.resize(static_cast<std::size_t>(c) + 1);
  for (int d = 0; d <= c; ++d) blocks_[static_cast<std::size_t>(d)].assign(ipow(n, d), Integer(0));
}

MagnusSeries MagnusSeries::one(std::size_t n, int c) {
  MagnusSeries s(n, c);
  s.blocks_[0][0] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator(std::size_t n, int c, std::size_t g, bool inverse) {
  if (g == 0 || g > n) throw InvalidInput("generator index out of range");
  MagnusSeries s = one(n, c);
  // (1 + X)^-1 = 1 - X + X^2 - ...
  std::size_t index = 0;
  for (int d = 1; d <= c; ++d) {
    index = index * n + (g - 1);
    s.blocks_[static_cast<std::size_t>(d)][index] = (inverse && d % 2 == 1) ? -1 : 1;
    if (!inverse) break;
  }
  return s;
}

MagnusSeries MagnusSeries::of_word(std::size_t n, int c, const FreeGroupWord& w) {
  MagnusSeries s = one(n, c);
  for (const Letter& l : w.letters())
    s = s * generator(n, c, l.generator).power(Integer(l.exponent));
  return s;
}

bool MagnusSeries::block_is_zero(int d) const {
  const auto& b = blocks_[static_cast<std::size_t>(d)];
  return std::all_of(b.begin(), b.end(), [](const Integer& x) { return sgn(x) == 0; });
}

int MagnusSeries::valuation() const {
  for (int d = 1; d <= c_; ++d)
    if (!block_is_zero(d)) return d;
  return c_ + 1;
}

bool MagnusSeries::is_one() const { return blocks_[0][0] == 1 && valuation() == c_ + 1; }

MagnusSeries MagnusSeries::power(const Integer& k) const {
  if (blocks_[0][0] != 1) throw InvalidInput("power of a series with constant term != 1");
  MagnusSeries y = *this;
  y.blocks_[0][0] = 0;
  const int v = y.valuation();
  MagnusSeries result = one(n_, c_);
  if (v > c_ || sgn(k) == 0) return result;
  // (1 + Y)^k = sum_m binom(k, m) Y^m, and Y^m = 0 once m * v > c.
  MagnusSeries ym = one(n_, c_);
  Integer binom = 1;
  for (int m = 1; m * v <= c_; ++m) {
    ym = ym * y;
    binom = binom * (k - (m - 1));
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(m));
    if (sgn(binom) == 0) break;
    MagnusSeries term = ym;
    result += term.scale(binom);
  }
  return result;
}

MagnusSeries MagnusSeries::inverse() const { return power(Integer(-1)); }

MagnusSeries& MagnusSeries::operator+=(const MagnusSeries& o) {
  check_same(*this, o);
  for (std::size_t d = 0; d < blocks_.size(); ++d)
    for (std::size_t i = 0; i < blocks_[d].size(); ++i) blocks_[d][i] += o.blocks_[d][i];
  return *this;
}

MagnusSeries& MagnusSeries::operator-=(const MagnusSeries& o) {
  check_same(*this, o);
  for (std::size_t d = 0; d < blocks_.size(); ++d)
    for (std::size_t i = 0; i < blocks_[d].size(); ++i) blocks_[d][i] -= o.blocks_[d][i];
  return *this;
}

MagnusSeries& MagnusSeries::scale(const Integer& k) {
  for (auto& b : blocks_)
    for (Integer& x : b) x *= k;
  return *this;
}

MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
  check_same(a, b);
  const int c = a.c_;
  const std::size_t n = a.n_;
  MagnusSeries out(n, c);
  std::vector<char> a_nz(static_cast<std::size_t>(c) + 1), b_nz(static_cast<std::size_t>(c) + 1);
  for (int d = 0; d <= c; ++d) {
    a_nz[static_cast<std::size_t>(d)] = !a.block_is_zero(d);
    b_nz[static_cast<std::size_t>(d)] = !b.block_is_zero(d);
  }
  for (int d1 = 0; d1 <= c; ++d1) {
    if (!a_nz[static_cast<std::size_t>(d1)]) continue;
    const auto& ab = a.blocks_[static_cast<std::size_t>(d1)];
    for (int d2 = 0; d1 + d2 <= c; ++d2) {
      if (!b_nz[static_cast<std::size_t>(d2)]) continue;
      const auto& bb = b.blocks_[static_cast<std::size_t>(d2)];
      auto& ob = out.blocks_[static_cast<std::size_t>(d1 + d2)];
      const std::size_t stride = bb.size();
      for (std::size_t u = 0; u < ab.size(); ++u) {
        if (sgn(ab[u]) == 0) continue;
        Integer* dst = ob.data() + u * stride;
        for (std::size_t v = 0; v < stride; ++v)
          if (sgn(bb[v]) != 0) mpz_addmul(dst[v].get_mpz_t(), ab[u].get_mpz_t(), bb[v].get_mpz_t());
      }
    }
  }
  return out;
}

MagnusSeries group_commutator(const MagnusSeries& u, const MagnusSeries& v) {
  return u.inverse() * v.inverse() * u * v;
}

}  // namespace nilmult
