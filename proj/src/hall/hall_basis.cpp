#include "nilmult/hall/hall_basis.hpp"

#include <algorithm>
#include <tuple>

#include "nilmult/errors.hpp"
#include "nilmult/hall/counting.hpp"

namespace nilmult {

HallBasis generate_hall_basis(std::size_t n, int w, std::size_t cap) {
  if (n < 1) throw InvalidInput("Hall basis needs at least one generator");
  if (w < 1) throw InvalidInput("Hall basis needs weight >= 1");
  Integer total = 0;
  for (int k = 1; k <= w; ++k) total += witt(static_cast<long>(n), k);
  if (total > Integer(static_cast<unsigned long>(cap)))
    throw ResourceLimitError("Hall basis on " + std::to_string(n) + " generators through weight " +
                             std::to_string(w) + " has " + total.get_str() +
                             " elements, above the cap of " + std::to_string(cap));

  HallBasis basis;
  basis.n_ = n;
  basis.max_weight_ = w;
  basis.offsets_.push_back(0);
  for (std::size_t g = 1; g <= n; ++g) {
    BasicCommutator leaf;
    leaf.generator = static_cast<int>(g);
    leaf.multidegree.assign(n, 0);
    leaf.multidegree[g - 1] = 1;
    basis.elements_.push_back(std::move(leaf));
  }
  basis.offsets_.push_back(basis.elements_.size());

  auto& el = basis.elements_;
  for (int weight = 2; weight <= w; ++weight) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int w1 = weight - 1; 2 * w1 >= weight; --w1) {
      const int w2 = weight - w1;
      for (std::size_t a = basis.weight_begin(w1); a < basis.weight_end(w1); ++a)
        for (std::size_t b = basis.weight_begin(w2); b < basis.weight_end(w2) && b < a; ++b) {
          if (!el[a].is_leaf() && el[a].right > b) continue;
          pairs.emplace_back(a, b);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [a, b] : pairs) {
      BasicCommutator c;
      c.left = a;
      c.right = b;
      c.weight = weight;
      c.multidegree = el[a].multidegree;
      for (std::size_t g = 0; g < n; ++g) c.multidegree[g] += el[b].multidegree[g];
      el.push_back(std::move(c));
    }
    basis.offsets_.push_back(el.size());
  }
  basis.index_pairs();
  return basis;
}

void HallBasis::index_pairs() {
  pair_index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (!elements_[i].is_leaf()) pair_index_[{elements_[i].left, elements_[i].right}] = i;
}

std::optional<std::size_t> HallBasis::find_pair(std::size_t left, std::size_t right) const {
  auto it = pair_index_.find({left, right});
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

std::string HallBasis::to_string(std::size_t i) const {
  const auto& c = elements_.at(i);
  if (c.is_leaf()) return "x" + std::to_string(c.generator);
  return "[" + to_string(c.left) + "," + to_string(c.right) + "]";
}

HallBasis HallBasis::from_elements(std::size_t n, int max_weight,
                                   std::vector<BasicCommutator> elements) {
  HallBasis b;
  b.n_ = n;
  b.max_weight_ = max_weight;
  b.offsets_.push_back(0);
  int current = 1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto& c = elements[i];
    if (c.is_leaf()) {
      if (i >= n || c.generator != static_cast<int>(i + 1))
        throw InvalidInput("Hall basis leaves must be x1..xn in order");
      c.weight = 1;
      c.multidegree.assign(n, 0);
      c.multidegree[i] = 1;
    } else {
      if (c.left >= i || c.right >= i) throw InvalidInput("Hall basis child refers forward");
      const auto& l = elements[c.left];
      const auto& r = elements[c.right];
      if (!(c.right < c.left)) throw InvalidInput("Hall basis pair is not [u,v] with u > v");
      if (!l.is_leaf() && l.right > c.right) throw InvalidInput("Hall condition violated");
      c.weight = l.weight + r.weight;
      c.multidegree = l.multidegree;
      for (std::size_t g = 0; g < n; ++g) c.multidegree[g] += r.multidegree[g];
      if (i > 0) {
        const auto& p = elements[i - 1];
        if (!p.is_leaf() && p.weight == c.weight &&
            std::tie(p.left, p.right) >= std::tie(c.left, c.right))
          throw InvalidInput("Hall basis elements out of order");
      }
    }
    while (c.weight > current) {
      b.offsets_.push_back(i);
      ++current;
    }
    if (c.weight < current) throw InvalidInput("Hall basis weights out of order");
  }
  while (current <= max_weight) {
    b.offsets_.push_back(elements.size());
    ++current;
  }
  b.elements_ = std::move(elements);
  for (int w = 1; w <= max_weight; ++w)
    if (Integer(static_cast<unsigned long>(b.count_of_weight(w))) != witt(static_cast<long>(n), w))
      throw InvalidInput("Hall basis is incomplete at weight " + std::to_string(w));
  b.index_pairs();
  return b;
}

int compare_trees(const HallBasis& basis, std::size_t a, std::size_t b) {
  const auto& x = basis[a];
  const auto& y = basis[b];
  if (x.weight != y.weight) return x.weight < y.weight ? -1 : 1;
  if (x.is_leaf()) return x.generator == y.generator ? 0 : (x.generator < y.generator ? -1 : 1);
  if (int c = compare_trees(basis, x.left, y.left); c != 0) return c;
  return compare_trees(basis, x.right, y.right);
}

}  // namespace nilmult
