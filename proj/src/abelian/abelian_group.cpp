#include "nilmult/abelian/abelian_group.hpp"

#include <sstream>

#include "nilmult/abelian/smith.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {
namespace {

// Rewrites a list of positive orders into a divisibility chain by repeated
// (gcd, lcm) exchanges; the prime-power content is unchanged.
std::vector<Integer> chain(std::vector<Integer> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = gcd(orders[i], orders[j]);
      Integer l = lcm(orders[i], orders[j]);
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  std::vector<Integer> out;
  for (auto& x : orders)
    if (x != 1) out.push_back(std::move(x));
  return out;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw InvalidInput("invariant factor " + factors_[i].get_str() + " is not >= 2");
    if (i + 1 < factors_.size() &&
        !mpz_divisible_p(factors_[i + 1].get_mpz_t(), factors_[i].get_mpz_t()))
      throw InvalidInput("invariant factors do not form a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::span<const Integer> orders) {
  std::size_t free = 0;
  std::vector<Integer> finite;
  for (const auto& n : orders) {
    if (n < 0) throw InvalidInput("negative cyclic order " + n.get_str());
    if (n == 0)
      ++free;
    else if (n != 1)
      finite.push_back(n);
  }
  FgAbelianGroup g;
  g.free_rank_ = free;
  g.factors_ = chain(std::move(finite));
  return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::initializer_list<long> orders) {
  std::vector<Integer> v;
  for (long x : orders) v.emplace_back(x);
  return from_cyclic_orders(std::span<const Integer>(v));
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& n) {
  const Integer orders[] = {n};
  return from_cyclic_orders(std::span<const Integer>(orders));
}

std::optional<Integer> FgAbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::vector<Integer> FgAbelianGroup::cyclic_factors() const {
  std::vector<Integer> out = factors_;
  out.insert(out.end(), free_rank_, Integer(0));
  return out;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank_ > 0) {
    out << 'Z';
    if (free_rank_ > 1) out << '^' << free_rank_;
    first = false;
  }
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!first) out << " + ";
    out << "Z_" << factors_[i].get_str();
    if (j - i > 1) out << '^' << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

FgAbelianGroup cokernel(const IntegerMatrix& relations) {
  std::vector<Integer> diag = smith_diagonal(relations);
  // Columns past the diagonal are untouched generators.
  std::vector<Integer> orders(relations.cols(), Integer(0));
  for (std::size_t i = 0; i < diag.size(); ++i) orders[i] = diag[i];
  return FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(orders));
}

FgAbelianGroup direct_sum(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  std::vector<Integer> orders = g.cyclic_factors();
  auto more = h.cyclic_factors();
  orders.insert(orders.end(), more.begin(), more.end());
  return FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(orders));
}

FgAbelianGroup tensor(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  // Z(x)Z = Z, Z(x)Z_n = Z_n, Z_m(x)Z_n = Z_gcd(m,n); gcd(0, n) = n covers all three.
  std::vector<Integer> orders;
  for (const auto& a : g.cyclic_factors())
    for (const auto& b : h.cyclic_factors()) orders.push_back(gcd(a, b));
  return FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(orders));
}

FgAbelianGroup tor(const FgAbelianGroup& g, const FgAbelianGroup& h) {
  std::vector<Integer> orders;
  for (const auto& a : g.invariant_factors())
    for (const auto& b : h.invariant_factors()) orders.push_back(gcd(a, b));
  return FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(orders));
}

FgAbelianGroup tensor_power(const FgAbelianGroup& g, std::size_t i) {
  FgAbelianGroup out = FgAbelianGroup::free(1);
  for (std::size_t k = 0; k < i; ++k) out = tensor(out, g);
  return out;
}

FgAbelianGroup direct_power(const FgAbelianGroup& g, std::size_t k) {
  std::vector<Integer> orders;
  const auto factors = g.cyclic_factors();
  for (std::size_t i = 0; i < k; ++i) orders.insert(orders.end(), factors.begin(), factors.end());
  return FgAbelianGroup::from_cyclic_orders(std::span<const Integer>(orders));
}

}  // namespace nilmult
