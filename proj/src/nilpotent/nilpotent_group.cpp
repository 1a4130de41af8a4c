#include "nilmult/nilpotent/nilpotent_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "nilmult/abelian/smith.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

// Columns of `rows` that are independent modulo p, picked by echelon form.
std::vector<std::size_t> pivot_columns_mod(const std::vector<const std::vector<Integer>*>& rows,
                                           std::size_t cols, std::int64_t p) {
  const std::size_t r = rows.size();
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer x = (*rows[i])[j] % p;
      if (x < 0) x += p;
      m[i][j] = x.get_si();
    }
  auto inv = [p](std::int64_t a) {
    std::int64_t result = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>((__int128)result * a % p);
      a = static_cast<std::int64_t>((__int128)a * a % p);
      e >>= 1;
    }
    return result;
  };
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t s = inv(m[rank][col]);
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * s % p;
    for (std::size_t i = rank + 1; i < r; ++i) {
      const std::int64_t f = m[i][col];
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

bool is_zero_vector(const ExponentVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

}  // namespace

NilpotentContext::NilpotentContext(std::size_t n, int c, const CollectorLimits& limits)
    : n_(n), c_(c), limits_(limits) {
  if (n == 0 || c < 1) throw InvalidInput("free nilpotent group needs n >= 1 and c >= 1");
  basis_ = generate_hall_basis(n, c, limits.basis_cap);
  const std::size_t N = basis_.size();
  images_.reserve(N);
  for (std::size_t k = 0; k < N; ++k) {
    const BasicCommutator& b = basis_[k];
    if (b.is_leaf())
      images_.push_back(MagnusSeries::generator(n, c, static_cast<std::size_t>(b.generator)));
    else
      images_.push_back(group_commutator(images_[b.left], images_[b.right]));
  }
  image_powers_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    MagnusSeries y = images_[k];
    y.block(0)[0] = 0;
    auto& pw = image_powers_[k];
    pw.push_back(MagnusSeries::one(n, c));
    for (int m = 1; m * basis_[k].weight <= c; ++m) pw.push_back(pw.back() * y);
  }
  build_solvers();
  build_relations();
}

void NilpotentContext::build_solvers() {
  solvers_.resize(static_cast<std::size_t>(c_) + 1);
  static constexpr std::int64_t kPrimes[] = {2147483629, 2147483587, 2147483579};
  for (int w = 1; w <= c_; ++w) {
    const std::size_t lo = basis_.weight_begin(w), hi = basis_.weight_end(w);
    if (lo == hi) continue;
    std::vector<const std::vector<Integer>*> rows;
    for (std::size_t k = lo; k < hi; ++k) rows.push_back(&images_[k].block(w));
    const std::size_t cols = images_[lo].block(w).size();
    std::vector<std::size_t> pivots;
    for (std::int64_t p : kPrimes) {
      pivots = pivot_columns_mod(rows, cols, p);
      if (pivots.size() == rows.size()) break;
    }
    if (pivots.size() != rows.size())
      throw std::logic_error("leading terms of the Hall basis are not independent");
    const std::size_t r = rows.size();
    IntegerMatrix block(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) block(i, j) = (*rows[i])[pivots[j]];
    // U B V = D, so B^-1 = V D^-1 U.
    SmithForm snf = smith_normal_form(block);
    WeightSolver& s = solvers_[static_cast<std::size_t>(w)];
    s.pivot_columns = std::move(pivots);
    s.denominator = snf.diagonal.back();
    IntegerMatrix scaled = snf.U;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer f = s.denominator / snf.diagonal[i];
      for (std::size_t j = 0; j < r; ++j) scaled(i, j) *= f;
    }
    s.adjugate = snf.V * scaled;
  }
}

MagnusSeries NilpotentContext::basis_power(std::size_t k, const Integer& e) const {
  const auto& pw = image_powers_[k];
  MagnusSeries result = pw[0];
  Integer binom = 1;
  for (std::size_t m = 1; m < pw.size(); ++m) {
    binom = binom * (e - static_cast<long>(m - 1));
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), m);
    if (sgn(binom) == 0) break;
    MagnusSeries term = pw[m];
    result += term.scale(binom);
  }
  return result;
}

MagnusSeries NilpotentContext::magnus_of(std::span<const Integer> exponents) const {
  if (exponents.size() != dimension()) throw InvalidInput("exponent vector has wrong length");
  MagnusSeries g = MagnusSeries::one(n_, c_);
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (sgn(exponents[k]) != 0) g = g * basis_power(k, exponents[k]);
  return g;
}

ExponentVector NilpotentContext::exponents_of(MagnusSeries g) const {
  if (g.generator_count() != n_ || g.degree_bound() != c_)
    throw ContextMismatch("series belongs to a different Magnus ring");
  if (g.block(0)[0] != 1) throw InvalidInput("series is not a group element");
  ExponentVector e(dimension());
  for (int w = 1; w <= c_; ++w) {
    if (g.block_is_zero(w)) continue;
    const WeightSolver& s = solvers_[static_cast<std::size_t>(w)];
    const std::size_t lo = basis_.weight_begin(w);
    const std::size_t r = s.pivot_columns.size();
    const auto& v = g.block(w);
    std::vector<Integer> vs(r);
    for (std::size_t j = 0; j < r; ++j) vs[j] = v[s.pivot_columns[j]];
    std::vector<Integer> sol = std::span<const Integer>(vs) * s.adjugate;
    for (std::size_t i = 0; i < r; ++i) {
      if (!mpz_divisible_p(sol[i].get_mpz_t(), s.denominator.get_mpz_t()))
        throw InvalidInput("series is not a group element");
      mpz_divexact(sol[i].get_mpz_t(), sol[i].get_mpz_t(), s.denominator.get_mpz_t());
    }
    // The pivot columns fix the solution; the whole block must agree with it.
    std::vector<Integer> check(v.size());
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(sol[i]) == 0) continue;
      const auto& row = images_[lo + i].block(w);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(row[j]) != 0) mpz_addmul(check[j].get_mpz_t(), sol[i].get_mpz_t(), row[j].get_mpz_t());
    }
    if (check != v) throw InvalidInput("series is not a group element");
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(sol[i]) == 0) continue;
      g = basis_power(lo + i, -sol[i]) * g;
      e[lo + i] = std::move(sol[i]);
    }
  }
  if (!g.is_one()) throw InvalidInput("series is not a group element");
  return e;
}

void NilpotentContext::build_relations() {
  const std::size_t N = dimension();
  commutes_.assign(N * N, 1);
  conj_plus_.assign(N * N, {});
  conj_minus_.assign(N * N, {});
  for (std::size_t i = 0; i < N; ++i) {
    const int wi = basis_[i].weight;
    if (2 * wi > c_) break;
    MagnusSeries bi = images_[i], bi_inv = images_[i].inverse();
    for (std::size_t j = i + 1; j < N; ++j) {
      if (wi + basis_[j].weight > c_) break;  // weights ascend with j
      commutes_[j * N + i] = 0;
      conj_plus_[j * N + i] = exponents_of(bi_inv * images_[j] * bi);
      conj_minus_[j * N + i] = exponents_of(bi * images_[j] * bi_inv);
    }
  }
}

bool NilpotentContext::commutes(std::size_t j, std::size_t i) const {
  return commutes_[j * dimension() + i] != 0;
}

const ExponentVector& NilpotentContext::conjugate(std::size_t j, std::size_t i, int sign) const {
  if (!(i < j && j < dimension()) || commutes(j, i))
    throw std::out_of_range("no stored conjugation relation for this pair");
  return sign > 0 ? conj_plus_[j * dimension() + i] : conj_minus_[j * dimension() + i];
}

void NilpotentContext::charge(std::size_t& steps) const {
  if (++steps > limits_.step_cap)
    throw ResourceLimitError("collection exceeded " + std::to_string(limits_.step_cap) + " steps");
}

// e := e * b_k^f. Everything right of position k in e is moved past b_k by
// conjugation: T b_k^f = b_k^f T^{b_k^f}.
void NilpotentContext::multiply_letter(ExponentVector& e, std::size_t k, const Integer& f,
                                       std::size_t& steps) const {
  if (sgn(f) == 0) return;
  const std::size_t N = dimension();
  charge(steps);
  bool central = true;
  for (std::size_t j = k + 1; j < N && central; ++j)
    if (sgn(e[j]) != 0 && !commutes(j, k)) central = false;
  if (central) {
    e[k] += f;
    return;
  }
  const int sign = sgn(f) > 0 ? 1 : -1;
  Integer remaining = abs(f);

  // images[j] = b_j^{b_k^{sign * 2^i}} for the current bit i, j > k.
  std::vector<ExponentVector> images(N);
  for (std::size_t j = k + 1; j < N; ++j) {
    if (commutes(j, k)) {
      images[j].assign(N, Integer(0));
      images[j][j] = 1;
    } else {
      images[j] = conjugate(j, k, sign);
    }
  }
  auto apply = [&](const ExponentVector& t) {
    ExponentVector out(N);
    for (std::size_t j = k + 1; j < N; ++j) {
      if (sgn(t[j]) != 0) multiply_into(out, power_of(images[j], t[j], steps), steps);
    }
    return out;
  };
  ExponentVector tail(N);
  for (std::size_t j = k + 1; j < N; ++j) tail[j] = e[j];
  while (sgn(remaining) > 0) {
    if (mpz_odd_p(remaining.get_mpz_t())) tail = apply(tail);
    remaining >>= 1;
    if (sgn(remaining) > 0) {
      std::vector<ExponentVector> doubled(N);
      for (std::size_t j = k + 1; j < N; ++j) doubled[j] = apply(images[j]);
      images = std::move(doubled);
    }
    charge(steps);
  }
  for (std::size_t j = k + 1; j < N; ++j) e[j] = std::move(tail[j]);
  e[k] += f;
}

void NilpotentContext::multiply_into(ExponentVector& x, const ExponentVector& y,
                                     std::size_t& steps) const {
  for (std::size_t k = 0; k < y.size(); ++k)
    if (sgn(y[k]) != 0) multiply_letter(x, k, y[k], steps);
}

ExponentVector NilpotentContext::inverse_of(const ExponentVector& x, std::size_t& steps) const {
  ExponentVector result(dimension());
  for (std::size_t k = x.size(); k-- > 0;)
    if (sgn(x[k]) != 0) multiply_letter(result, k, Integer(-x[k]), steps);
  return result;
}

ExponentVector NilpotentContext::power_of(const ExponentVector& x, Integer f,
                                          std::size_t& steps) const {
  ExponentVector base = sgn(f) < 0 ? inverse_of(x, steps) : x;
  f = abs(f);
  // A single basis letter raised to a power collects trivially.
  std::size_t support = 0, last = 0;
  for (std::size_t k = 0; k < base.size(); ++k)
    if (sgn(base[k]) != 0) ++support, last = k;
  if (support <= 1) {
    ExponentVector r(dimension());
    if (support == 1) r[last] = base[last] * f;
    return r;
  }
  ExponentVector result(dimension());
  while (sgn(f) > 0) {
    if (mpz_odd_p(f.get_mpz_t())) multiply_into(result, base, steps);
    f >>= 1;
    if (sgn(f) > 0) {
      ExponentVector sq = base;
      multiply_into(sq, base, steps);
      base = std::move(sq);
    }
  }
  return result;
}

std::shared_ptr<const NilpotentContext> nilpotent_context(std::size_t n, int c,
                                                          const CollectorLimits& limits) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, int, std::size_t, std::size_t>,
                  std::shared_ptr<const NilpotentContext>>
      cache;
  const auto key = std::make_tuple(n, c, limits.basis_cap, limits.step_cap);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<const NilpotentContext>(n, c, limits);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(ctx)).first->second;
}

// ---- NilpotentElement

NilpotentElement::NilpotentElement(std::shared_ptr<const NilpotentContext> ctx)
    : ctx_(std::move(ctx)), exponents_(ctx_->dimension()) {}

NilpotentElement::NilpotentElement(std::shared_ptr<const NilpotentContext> ctx,
                                   ExponentVector exponents)
    : ctx_(std::move(ctx)), exponents_(std::move(exponents)) {
  if (exponents_.size() != ctx_->dimension())
    throw InvalidInput("exponent vector length does not match the Hall basis");
}

NilpotentElement NilpotentElement::generator(std::shared_ptr<const NilpotentContext> ctx,
                                             std::size_t g) {
  if (g == 0 || g > ctx->generator_count()) throw InvalidInput("generator index out of range");
  return basis_element(std::move(ctx), g - 1);
}

NilpotentElement NilpotentElement::basis_element(std::shared_ptr<const NilpotentContext> ctx,
                                                 std::size_t k) {
  NilpotentElement e(std::move(ctx));
  e.exponents_.at(k) = 1;
  return e;
}

bool NilpotentElement::is_identity() const { return is_zero_vector(exponents_); }

ExponentVector NilpotentElement::weight_slice(int w) const {
  const HallBasis& b = ctx_->basis();
  if (w < 1 || w > b.max_weight()) throw InvalidInput("weight outside the basis");
  return {exponents_.begin() + static_cast<std::ptrdiff_t>(b.weight_begin(w)),
          exponents_.begin() + static_cast<std::ptrdiff_t>(b.weight_end(w))};
}

std::string NilpotentElement::to_string() const {
  std::string out;
  const HallBasis& b = ctx_->basis();
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (sgn(exponents_[k]) == 0) continue;
    if (!out.empty()) out += ' ';
    out += b.to_string(k);
    if (exponents_[k] != 1) out += '^' + exponents_[k].get_str();
  }
  return out.empty() ? "1" : out;
}

namespace {

void require_same(const NilpotentElement& a, const NilpotentElement& b) {
  if (a.context_ptr() == b.context_ptr()) return;
  if (a.context().generator_count() != b.context().generator_count() ||
      a.context().nilpotency_class() != b.context().nilpotency_class())
    throw ContextMismatch("elements of different free nilpotent groups");
}

}  // namespace

bool operator==(const NilpotentElement& a, const NilpotentElement& b) {
  require_same(a, b);
  return a.exponents_ == b.exponents_;
}

NilpotentElement collect(const FreeGroupWord& word, std::shared_ptr<const NilpotentContext> ctx) {
  if (word.max_generator() > ctx->generator_count())
    throw InvalidInput("word uses generator x" + std::to_string(word.max_generator()) +
                       " but n = " + std::to_string(ctx->generator_count()));
  ExponentVector e(ctx->dimension());
  std::size_t steps = 0;
  for (const Letter& l : word.letters())
    ctx->multiply_letter(e, l.generator - 1, Integer(l.exponent), steps);
  return NilpotentElement(std::move(ctx), std::move(e));
}

NilpotentElement collect(const FreeGroupWord& word, std::size_t n, int c,
                         const CollectorLimits& limits) {
  return collect(word, nilpotent_context(n, c, limits));
}

NilpotentElement multiply(const NilpotentElement& a, const NilpotentElement& b) {
  require_same(a, b);
  ExponentVector e = a.exponents();
  std::size_t steps = 0;
  a.context().multiply_into(e, b.exponents(), steps);
  return NilpotentElement(a.context_ptr(), std::move(e));
}

NilpotentElement inverse(const NilpotentElement& a) {
  std::size_t steps = 0;
  return NilpotentElement(a.context_ptr(), a.context().inverse_of(a.exponents(), steps));
}

NilpotentElement power(const NilpotentElement& a, const Integer& k) {
  std::size_t steps = 0;
  return NilpotentElement(a.context_ptr(), a.context().power_of(a.exponents(), k, steps));
}

NilpotentElement commutator(const NilpotentElement& a, const NilpotentElement& b) {
  require_same(a, b);
  const NilpotentContext& ctx = a.context();
  std::size_t steps = 0;
  ExponentVector e = ctx.inverse_of(a.exponents(), steps);
  ctx.multiply_into(e, ctx.inverse_of(b.exponents(), steps), steps);
  ctx.multiply_into(e, a.exponents(), steps);
  ctx.multiply_into(e, b.exponents(), steps);
  return NilpotentElement(a.context_ptr(), std::move(e));
}

NilpotentElement left_normed_commutator(std::span<const NilpotentElement> entries) {
  if (entries.empty()) throw InvalidInput("empty commutator");
  NilpotentElement acc = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) acc = commutator(acc, entries[i]);
  return acc;
}

ExponentVector bracket_expand(std::span<const std::size_t> leaves, std::size_t n, int c,
                              const CollectorLimits& limits) {
  const int m = static_cast<int>(leaves.size());
  if (m < 1 || m > c) throw InvalidInput("bracket length must lie in 1..c");
  auto ctx = nilpotent_context(n, c, limits);
  std::vector<NilpotentElement> xs;
  for (std::size_t g : leaves) xs.push_back(NilpotentElement::generator(ctx, g));
  return left_normed_commutator(xs).weight_slice(m);
}

}  // namespace nilmult
