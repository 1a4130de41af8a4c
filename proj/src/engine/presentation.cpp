#include "nilmult/engine/presentation.hpp"

#include "nilmult/errors.hpp"

namespace nilmult {

void Presentation::check() const {
  for (const auto& r : relators)
    if (r.max_generator() > generator_count)
      throw InvalidInput("relator " + r.to_string() + " uses a generator beyond x" +
                         std::to_string(generator_count));
}

Presentation Presentation::a5() {
  const FreeGroupWord a = FreeGroupWord::generator(1), b = FreeGroupWord::generator(2);
  return {2, {a.power(2), b.power(3), (a * b).power(5)}};
}

FgAbelianGroup abelianization(const Presentation& p) {
  p.check();
  IntegerMatrix m(0, p.generator_count);
  for (const auto& r : p.relators) m.append_row(r.exponent_sums(p.generator_count));
  return cokernel(m);
}

bool is_perfect(const Presentation& p) { return abelianization(p).is_trivial(); }

}  // namespace nilmult
