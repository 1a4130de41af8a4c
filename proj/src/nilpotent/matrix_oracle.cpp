#include "nilmult/nilpotent/matrix_oracle.hpp"

#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

std::size_t image_size(std::size_t n) { return 2 * n + 3 * (n * (n - 1) / 2); }

IntegerMatrix generator_image(std::size_t n, std::size_t g) {
  IntegerMatrix m = IntegerMatrix::identity(image_size(n));
  std::size_t at = 0;
  for (std::size_t a = 1; a <= n; ++a, at += 2)
    if (a == g) m(at, at + 1) = 1;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b, at += 3) {
      if (g == a) m(at, at + 1) = 1;
      if (g == b) m(at + 1, at + 2) = 1;
    }
  return m;
}

// Inverse of a unitriangular integer matrix by back substitution.
IntegerMatrix unitriangular_inverse(const IntegerMatrix& m) {
  const std::size_t d = m.rows();
  IntegerMatrix inv = IntegerMatrix::identity(d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t row = col; row-- > 0;) {
      Integer s = 0;
      for (std::size_t k = row + 1; k <= col; ++k) s += m(row, k) * inv(k, col);
      inv(row, col) = -s;
    }
  return inv;
}

IntegerMatrix matrix_power(IntegerMatrix base, Integer e) {
  if (sgn(e) < 0) {
    base = unitriangular_inverse(base);
    e = -e;
  }
  IntegerMatrix result = IntegerMatrix::identity(base.rows());
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (sgn(e) > 0) base = base * base;
  }
  return result;
}

void require_small(std::size_t n) {
  if (n < 1 || n > 3) throw InvalidInput("matrix oracle covers 1 <= n <= 3");
}

}  // namespace

IntegerMatrix class2_matrix_image(const FreeGroupWord& word, std::size_t n) {
  require_small(n);
  if (word.max_generator() > n) throw InvalidInput("word uses more than n generators");
  IntegerMatrix m = IntegerMatrix::identity(image_size(n));
  for (const Letter& l : word.letters())
    m = m * matrix_power(generator_image(n, l.generator), Integer(l.exponent));
  return m;
}

IntegerMatrix class2_matrix_image(const NilpotentElement& element) {
  const NilpotentContext& ctx = element.context();
  const std::size_t n = ctx.generator_count();
  require_small(n);
  if (ctx.nilpotency_class() != 2) throw InvalidInput("matrix oracle covers class 2 only");
  const HallBasis& basis = ctx.basis();
  std::vector<IntegerMatrix> images;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const BasicCommutator& b = basis[k];
    if (b.is_leaf()) {
      images.push_back(generator_image(n, static_cast<std::size_t>(b.generator)));
    } else {
      const IntegerMatrix& u = images[b.left];
      const IntegerMatrix& v = images[b.right];
      images.push_back(unitriangular_inverse(u) * unitriangular_inverse(v) * u * v);
    }
  }
  IntegerMatrix m = IntegerMatrix::identity(image_size(n));
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(element.exponent(k)) != 0) m = m * matrix_power(images[k], element.exponent(k));
  return m;
}

bool matrix_oracle_check(const FreeGroupWord& word, const NilpotentElement& claimed) {
  return class2_matrix_image(word, claimed.context().generator_count()) ==
         class2_matrix_image(claimed);
}

bool matrix_oracle_check(const FreeGroupWord& word) {
  const std::size_t n = std::max<std::size_t>(1, word.max_generator());
  return matrix_oracle_check(word, collect(word, n, 2));
}

}  // namespace nilmult
