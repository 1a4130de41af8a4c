#include "nilmult/engine/finite_group.hpp"

#include <map>

#include "nilmult/errors.hpp"

namespace nilmult {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table,
                                   std::size_t identity, std::string label)
    : table_(std::move(table)), identity_(identity), label_(std::move(label)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidInput("group table is empty");
  if (identity_ >= n) throw InvalidInput("identity index out of range");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidInput("group table is not square");
    for (std::size_t x : row)
      if (x >= n) throw InvalidInput("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table_[identity_][a] != a || table_[a][identity_] != a)
      throw InvalidInput("identity element does not act trivially");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == n || table_[inverse_[a]][a] != identity_)
      throw InvalidInput("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidInput("group table is not associative");
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
  return abelian({n});
}

FiniteGroupTable FiniteGroupTable::abelian(const std::vector<std::size_t>& orders) {
  std::size_t total = 1;
  for (std::size_t o : orders) {
    if (o == 0) throw InvalidInput("cyclic factor orders must be positive");
    total *= o;
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      d[i] = x % orders[i];
      x /= orders[i];
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> t(total, std::vector<std::size_t>(total));
  for (std::size_t a = 0; a < total; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < total; ++b) {
      const auto db = digits(b);
      std::size_t r = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) r = r * orders[i] + (da[i] + db[i]) % orders[i];
      t[a][b] = r;
    }
  }
  std::string label;
  for (std::size_t o : orders) label += (label.empty() ? "Z" : "xZ") + std::to_string(o);
  return FiniteGroupTable(std::move(t), 0, label.empty() ? "1" : label);
}

FiniteGroupTable FiniteGroupTable::dihedral(std::size_t n) {
  if (n == 0) throw InvalidInput("dihedral group needs n >= 1");
  // r^i s^f is stored as 2i + f.
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t i = a / 2, f = a % 2, j = b / 2, g = b % 2;
      // s r^j = r^-j s
      const std::size_t k = f ? (i + n - j) % n : (i + j) % n;
      t[a][b] = 2 * k + (f ^ g);
    }
  return FiniteGroupTable(std::move(t), 0, "D" + std::to_string(n));
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
  return from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
}

FiniteGroupTable FiniteGroupTable::quaternion8() {
  // Left multiplication by i and j on {1,i,j,k,-1,-i,-j,-k}.
  return from_permutations({{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}}, "Q8");
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a,
                                                  const FiniteGroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  return FiniteGroupTable(std::move(t), a.identity() * nb + b.identity(),
                          a.label() + "x" + b.label());
}

FiniteGroupTable FiniteGroupTable::from_permutations(
    const std::vector<std::vector<std::size_t>>& gens, std::string label) {
  if (gens.empty()) throw InvalidInput("need at least one permutation");
  const std::size_t m = gens[0].size();
  std::vector<std::size_t> id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = i;
  for (const auto& g : gens) {
    if (g.size() != m) throw InvalidInput("permutations of different degrees");
    std::vector<char> seen(m, 0);
    for (std::size_t x : g) {
      if (x >= m || seen[x]) throw InvalidInput("not a permutation");
      seen[x] = 1;
    }
  }
  // compose(p, q): first p, then q.
  auto compose = [m](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    std::vector<std::size_t> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = q[p[i]];
    return r;
  };
  std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
  std::vector<std::vector<std::size_t>> elements{id};
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (const auto& g : gens) {
      auto next = compose(elements[e], g);
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        if (elements.size() > 100000) throw ResourceLimitError("permutation group too large");
      }
    }
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose(elements[a], elements[b]));
  return FiniteGroupTable(std::move(t), 0, std::move(label));
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

}  // namespace nilmult
