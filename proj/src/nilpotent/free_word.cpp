#include "nilmult/nilpotent/free_word.hpp"

#include <limits>

#include "nilmult/errors.hpp"

namespace nilmult {

FreeGroupWord::FreeGroupWord(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.generator == 0) throw InvalidInput("generator indices start at 1");
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().generator == l.generator) {
      long& e = letters_.back().exponent;
      if (__builtin_add_overflow(e, l.exponent, &e))
        throw InvalidInput("exponent overflow in word");
      if (e == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeGroupWord FreeGroupWord::generator(std::size_t g, long exponent) {
  return FreeGroupWord({{g, exponent}});
}

std::size_t FreeGroupWord::max_generator() const {
  std::size_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

std::size_t FreeGroupWord::length() const {
  std::size_t total = 0;
  for (const Letter& l : letters_)
    total += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  return total;
}

FreeGroupWord FreeGroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) {
    if (l.exponent == std::numeric_limits<long>::min())
      throw InvalidInput("exponent overflow in word");
    l.exponent = -l.exponent;
  }
  FreeGroupWord w;
  w.letters_ = std::move(out);
  return w;
}

FreeGroupWord FreeGroupWord::power(long k) const {
  if (k < 0) return inverse().power(-k);
  FreeGroupWord result;
  FreeGroupWord base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::vector<Integer> FreeGroupWord::exponent_sums(std::size_t n) const {
  std::vector<Integer> sums(n);
  for (const Letter& l : letters_) {
    if (l.generator > n) throw InvalidInput("generator index exceeds generator count");
    sums[l.generator - 1] += l.exponent;
  }
  return sums;
}

std::string FreeGroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.generator);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b) {
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  // Reduction only happens at the seam, which the constructor's stack handles.
  return FreeGroupWord(std::move(joined));
}

FreeGroupWord commutator(const FreeGroupWord& a, const FreeGroupWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace nilmult
