#include "nilmult/simplicial/simplicial_set.hpp"

#include <sstream>

#include "identities.hpp"
#include "nilmult/engine/finite_group.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

std::string ValidationReport::to_string() const {
  if (violations.empty()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations)
    out << v.identity << " dim " << v.dimension << " (i=" << v.i << ", j=" << v.j << "): "
        << v.detail << '\n';
  return out.str();
}

TruncatedSimplicialSet::TruncatedSimplicialSet(std::vector<std::size_t> sizes,
                                               std::vector<std::vector<Map>> faces,
                                               std::vector<std::vector<Map>> degeneracies)
    : sizes_(std::move(sizes)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  if (sizes_.empty()) throw InvalidInput("simplicial set needs dimension 0");
  const std::size_t D = sizes_.size() - 1;
  if (faces_.size() == D) faces_.insert(faces_.begin(), std::vector<Map>{});
  if (faces_.size() != D + 1 || !faces_[0].empty())
    throw InvalidInput("expected face maps for dimensions 1..D");
  if (degeneracies_.size() != D) throw InvalidInput("expected degeneracies for dimensions 0..D-1");
  for (std::size_t n = 1; n <= D; ++n) {
    if (faces_[n].size() != n + 1) throw InvalidInput("dimension " + std::to_string(n) + " needs n+1 faces");
    for (const Map& m : faces_[n]) {
      if (m.size() != sizes_[n]) throw InvalidInput("face map has wrong domain size");
      for (std::size_t x : m)
        if (x >= sizes_[n - 1]) throw InvalidInput("face map value out of range");
    }
  }
  for (std::size_t n = 0; n < D; ++n) {
    if (degeneracies_[n].size() != n + 1)
      throw InvalidInput("dimension " + std::to_string(n) + " needs n+1 degeneracies");
    for (const Map& m : degeneracies_[n]) {
      if (m.size() != sizes_[n]) throw InvalidInput("degeneracy has wrong domain size");
      for (std::size_t x : m)
        if (x >= sizes_[n + 1]) throw InvalidInput("degeneracy value out of range");
    }
  }
}

const TruncatedSimplicialSet::Map& TruncatedSimplicialSet::face(int n, int i) const {
  return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

const TruncatedSimplicialSet::Map& TruncatedSimplicialSet::degeneracy(int n, int i) const {
  return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

void TruncatedSimplicialSet::set_face_value(int n, int i, std::size_t x, std::size_t value) {
  if (value >= size(n - 1)) throw InvalidInput("face value out of range");
  faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(x) = value;
}

ValidationReport TruncatedSimplicialSet::validate() const {
  auto compose = [](const Map& a, const Map& b) {
    Map r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
    return r;
  };
  auto identity = [this](int n) {
    Map r(size(n));
    for (std::size_t x = 0; x < r.size(); ++x) r[x] = x;
    return r;
  };
  return detail::check_simplicial_identities(
      truncation(), [this](int n, int i) { return face(n, i); },
      [this](int n, int i) { return degeneracy(n, i); }, compose, identity);
}

namespace {

// Builds a truncated simplicial set from an element count and face and
// degeneracy rules given on element indices.
template <class Size, class Face, class Degen>
TruncatedSimplicialSet build(int D, Size size, Face face, Degen degen) {
  if (D < 0) throw InvalidInput("truncation must be non-negative");
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= D; ++n) sizes.push_back(size(n));
  std::vector<std::vector<TruncatedSimplicialSet::Map>> faces(static_cast<std::size_t>(D) + 1);
  std::vector<std::vector<TruncatedSimplicialSet::Map>> degens(static_cast<std::size_t>(D));
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i) {
      TruncatedSimplicialSet::Map m(sizes[static_cast<std::size_t>(n)]);
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = face(n, i, x);
      faces[static_cast<std::size_t>(n)].push_back(std::move(m));
    }
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i) {
      TruncatedSimplicialSet::Map m(sizes[static_cast<std::size_t>(n)]);
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = degen(n, i, x);
      degens[static_cast<std::size_t>(n)].push_back(std::move(m));
    }
  return TruncatedSimplicialSet(std::move(sizes), std::move(faces), std::move(degens));
}

}  // namespace

TruncatedSimplicialSet simplicial_circle(int D) {
  // An n-simplex of Delta[1] is 0^z 1^(n+1-z). Index 0 is the collapsed
  // basepoint (z = 0 or z = n+1); index z for 1 <= z <= n otherwise.
  auto normalize = [](int n, std::size_t z) -> std::size_t {
    return (z == 0 || z == static_cast<std::size_t>(n) + 1) ? 0 : z;
  };
  return build(
      D, [](int n) { return static_cast<std::size_t>(n) + 1; },
      [&](int n, int i, std::size_t z) -> std::size_t {
        if (z == 0) return 0;
        return normalize(n - 1, static_cast<std::size_t>(i) < z ? z - 1 : z);
      },
      [&](int n, int i, std::size_t z) -> std::size_t {
        if (z == 0) return 0;
        return normalize(n + 1, static_cast<std::size_t>(i) < z ? z + 1 : z);
      });
}

TruncatedSimplicialSet simplicial_point(int D) {
  return build(
      D, [](int) { return std::size_t{1}; }, [](int, int, std::size_t) { return std::size_t{0}; },
      [](int, int, std::size_t) { return std::size_t{0}; });
}

TruncatedSimplicialSet nerve(const FiniteGroupTable& g, int D, std::size_t cap) {
  const std::size_t q = g.order();
  std::size_t total = 1;
  for (int n = 0; n < D; ++n) {
    if (total > cap / q) throw ResourceLimitError("nerve too large for the cap");
    total *= q;
  }
  // (g_1, ..., g_n) is stored as the base-q number g_1 g_2 ... g_n.
  auto decode = [q](int n, std::size_t x) {
    std::vector<std::size_t> t(static_cast<std::size_t>(n));
    for (int k = n; k-- > 0;) {
      t[static_cast<std::size_t>(k)] = x % q;
      x /= q;
    }
    return t;
  };
  auto encode = [q](const std::vector<std::size_t>& t) {
    std::size_t x = 0;
    for (std::size_t v : t) x = x * q + v;
    return x;
  };
  return build(
      D,
      [q](int n) {
        std::size_t s = 1;
        for (int k = 0; k < n; ++k) s *= q;
        return s;
      },
      [&](int n, int i, std::size_t x) {
        auto t = decode(n, x);
        std::vector<std::size_t> r;
        if (i == 0) {
          r.assign(t.begin() + 1, t.end());
        } else if (i == n) {
          r.assign(t.begin(), t.end() - 1);
        } else {
          const auto k = static_cast<std::size_t>(i);
          r.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k - 1));
          r.push_back(g.multiply(t[k - 1], t[k]));
          r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(k) + 1, t.end());
        }
        return encode(r);
      },
      [&](int n, int i, std::size_t x) {
        auto t = decode(n, x);
        t.insert(t.begin() + i, g.identity());
        return encode(t);
      });
}

}  // namespace nilmult
