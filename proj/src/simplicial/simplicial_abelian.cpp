#include "nilmult/simplicial/simplicial_abelian.hpp"

#include <algorithm>
#include <map>

#include "identities.hpp"
#include "nilmult/abelian/smith.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

TruncatedSimplicialAbelianGroup::TruncatedSimplicialAbelianGroup(
    std::vector<std::size_t> ranks, std::vector<std::vector<IntegerMatrix>> faces,
    std::vector<std::vector<IntegerMatrix>> degeneracies)
    : ranks_(std::move(ranks)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  if (ranks_.empty()) throw InvalidInput("simplicial abelian group needs dimension 0");
  const std::size_t D = ranks_.size() - 1;
  if (faces_.size() == D) faces_.insert(faces_.begin(), std::vector<IntegerMatrix>{});
  if (faces_.size() != D + 1 || !faces_[0].empty())
    throw InvalidInput("expected face matrices for dimensions 1..D");
  if (degeneracies_.size() != D) throw InvalidInput("expected degeneracies for dimensions 0..D-1");
  for (std::size_t n = 1; n <= D; ++n) {
    if (faces_[n].size() != n + 1) throw InvalidInput("dimension " + std::to_string(n) + " needs n+1 faces");
    for (const auto& m : faces_[n])
      if (m.rows() != ranks_[n] || m.cols() != ranks_[n - 1])
        throw InvalidInput("face matrix in dimension " + std::to_string(n) + " has the wrong shape");
  }
  for (std::size_t n = 0; n < D; ++n) {
    if (degeneracies_[n].size() != n + 1)
      throw InvalidInput("dimension " + std::to_string(n) + " needs n+1 degeneracies");
    for (const auto& m : degeneracies_[n])
      if (m.rows() != ranks_[n] || m.cols() != ranks_[n + 1])
        throw InvalidInput("degeneracy matrix in dimension " + std::to_string(n) + " has the wrong shape");
  }
}

TruncatedSimplicialAbelianGroup TruncatedSimplicialAbelianGroup::free_on(
    const TruncatedSimplicialSet& k) {
  const int D = k.truncation();
  auto matrix = [](const TruncatedSimplicialSet::Map& m, std::size_t cols) {
    IntegerMatrix a(m.size(), cols);
    for (std::size_t x = 0; x < m.size(); ++x) a(x, m[x]) = 1;
    return a;
  };
  std::vector<std::vector<IntegerMatrix>> faces(static_cast<std::size_t>(D) + 1), degens(static_cast<std::size_t>(D));
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(matrix(k.face(n, i), k.size(n - 1)));
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i) degens[static_cast<std::size_t>(n)].push_back(matrix(k.degeneracy(n, i), k.size(n + 1)));
  return TruncatedSimplicialAbelianGroup(k.sizes(), std::move(faces), std::move(degens));
}

TruncatedSimplicialAbelianGroup TruncatedSimplicialAbelianGroup::constant(std::size_t r, int D) {
  if (D < 0) throw InvalidInput("truncation must be non-negative");
  const auto d = static_cast<std::size_t>(D);
  std::vector<std::vector<IntegerMatrix>> faces(d + 1), degens(d);
  for (std::size_t n = 1; n <= d; ++n) faces[n].assign(n + 1, IntegerMatrix::identity(r));
  for (std::size_t n = 0; n < d; ++n) degens[n].assign(n + 1, IntegerMatrix::identity(r));
  return TruncatedSimplicialAbelianGroup(std::vector<std::size_t>(d + 1, r), std::move(faces), std::move(degens));
}

const IntegerMatrix& TruncatedSimplicialAbelianGroup::face(int n, int i) const {
  return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

const IntegerMatrix& TruncatedSimplicialAbelianGroup::degeneracy(int n, int i) const {
  return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

void TruncatedSimplicialAbelianGroup::set_face(int n, int i, IntegerMatrix m) {
  IntegerMatrix& slot = faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
  if (m.rows() != slot.rows() || m.cols() != slot.cols()) throw InvalidInput("face matrix shape changed");
  slot = std::move(m);
}

ValidationReport TruncatedSimplicialAbelianGroup::validate() const {
  return detail::check_simplicial_identities(
      truncation(), [this](int n, int i) -> const IntegerMatrix& { return face(n, i); },
      [this](int n, int i) -> const IntegerMatrix& { return degeneracy(n, i); },
      [](const IntegerMatrix& a, const IntegerMatrix& b) { return a * b; },
      [this](int n) { return IntegerMatrix::identity(rank(n)); });
}

TruncatedSimplicialAbelianGroup TruncatedSimplicialAbelianGroup::truncate(int d) const {
  if (d < 0 || d > truncation()) throw InvalidInput("cannot truncate above the current truncation");
  const auto ud = static_cast<std::size_t>(d);
  std::vector<std::size_t> ranks(ranks_.begin(), ranks_.begin() + static_cast<std::ptrdiff_t>(ud) + 1);
  std::vector<std::vector<IntegerMatrix>> faces(faces_.begin(), faces_.begin() + static_cast<std::ptrdiff_t>(ud) + 1);
  std::vector<std::vector<IntegerMatrix>> degens(degeneracies_.begin(), degeneracies_.begin() + static_cast<std::ptrdiff_t>(ud));
  return TruncatedSimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degens));
}

namespace {

SublatticeCoordinates whole_lattice(std::size_t r) {
  return SublatticeCoordinates(IntegerMatrix::identity(r), IntegerMatrix::identity(r), 0);
}

// Moore complex through dimension `top`.
MooreComplex moore_upto(const TruncatedSimplicialAbelianGroup& a, int top) {
  MooreComplex m;
  std::vector<SublatticeCoordinates> coords;
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      coords.push_back(whole_lattice(a.rank(0)));
    } else {
      IntegerMatrix stacked(a.rank(n), 0);
      for (int i = 0; i < n; ++i) stacked = hstack(stacked, a.face(n, i));
      coords.push_back(SublatticeCoordinates::left_kernel(stacked));
    }
    const IntegerMatrix& basis = coords.back().basis();
    m.basis.push_back(basis);
    m.chains.ranks.push_back(basis.rows());
    if (n == 0) {
      m.chains.boundary.emplace_back(basis.rows(), 0);
    } else {
      const IntegerMatrix image = basis * a.face(n, n);
      m.chains.boundary.push_back(coords[static_cast<std::size_t>(n) - 1].coordinates(image));
    }
  }
  return m;
}

}  // namespace

MooreComplex moore_complex(const TruncatedSimplicialAbelianGroup& a) {
  return moore_upto(a, a.truncation());
}

FgAbelianGroup homotopy(const TruncatedSimplicialAbelianGroup& a, int n) {
  if (n < 0) throw InvalidInput("homotopy degree must be non-negative");
  if (n > a.truncation() - 1)
    throw OutOfTruncationRange("pi_" + std::to_string(n) + " needs truncation at least " +
                               std::to_string(n + 1) + ", have " + std::to_string(a.truncation()));
  return homology(moore_upto(a, n + 1).chains, n);
}

TruncatedSimplicialAbelianGroup tensor_sab(const TruncatedSimplicialAbelianGroup& a,
                                           const TruncatedSimplicialAbelianGroup& b) {
  const int D = std::min(a.truncation(), b.truncation());
  std::vector<std::size_t> ranks;
  std::vector<std::vector<IntegerMatrix>> faces(static_cast<std::size_t>(D) + 1), degens(static_cast<std::size_t>(D));
  for (int n = 0; n <= D; ++n) ranks.push_back(a.rank(n) * b.rank(n));
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(kronecker(a.face(n, i), b.face(n, i)));
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i)
      degens[static_cast<std::size_t>(n)].push_back(kronecker(a.degeneracy(n, i), b.degeneracy(n, i)));
  return TruncatedSimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degens));
}

bool KunnethReport::holds() const {
  for (const auto& d : degrees)
    if (!d.holds) return false;
  return true;
}

KunnethReport kunneth_check(const TruncatedSimplicialAbelianGroup& a,
                            const TruncatedSimplicialAbelianGroup& b, std::optional<int> degree) {
  const int D = std::min(a.truncation(), b.truncation());
  if (degree && (*degree < 0 || *degree > D - 2))
    throw OutOfTruncationRange("Kunneth check in degree " + std::to_string(*degree) +
                               " needs truncation at least " + std::to_string(*degree + 2));
  const int lo = degree ? *degree : 0;
  const int hi = degree ? *degree : D - 2;
  if (hi < lo) throw OutOfTruncationRange("Kunneth check needs truncation at least 2");
  std::vector<FgAbelianGroup> pa, pb;
  for (int p = 0; p <= hi; ++p) {
    pa.push_back(homotopy(a, p));
    pb.push_back(homotopy(b, p));
  }
  KunnethReport report;
  for (int n = lo; n <= hi; ++n) {
    KunnethDegree d;
    d.degree = n;
    d.lhs = homotopy(tensor_sab(a.truncate(n + 1), b.truncate(n + 1)), n);
    d.rhs = FgAbelianGroup::trivial();
    for (int p = 0; p <= n; ++p) {
      const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(n - p);
      KunnethTerm t{"pi_" + std::to_string(p) + "(A) (x) pi_" + std::to_string(n - p) + "(B)",
                    tensor(pa[up], pb[uq])};
      d.rhs = direct_sum(d.rhs, t.group);
      d.terms.push_back(std::move(t));
    }
    for (int p = 0; p <= n - 1; ++p) {
      const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(n - 1 - p);
      KunnethTerm t{"Tor(pi_" + std::to_string(p) + "(A), pi_" + std::to_string(n - 1 - p) + "(B))",
                    tor(pa[up], pb[uq])};
      d.rhs = direct_sum(d.rhs, t.group);
      d.terms.push_back(std::move(t));
    }
    d.holds = d.lhs == d.rhs;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

// ---- Dold-Kan

namespace {

using Monotone = std::vector<int>;  // values of a monotone map [m] -> [n]

struct GammaSummand {
  Monotone surjection;  // [n] -> [k]
  int k = 0;
  std::size_t offset = 0;
};

struct GammaDimension {
  std::vector<GammaSummand> summands;
  std::map<Monotone, std::size_t> index;  // surjection -> summand position
  std::size_t rank = 0;
};

std::vector<GammaDimension> gamma_layout(const ChainComplex& c, int D) {
  std::vector<GammaDimension> dims;
  for (int n = 0; n <= D; ++n) {
    GammaDimension g;
    for (int k = 0; k <= std::min(n, c.top()); ++k) {
      // Surjections [n] -> [k]: choose which of the n steps go up by one.
      std::vector<int> steps(static_cast<std::size_t>(n), 0);
      std::fill(steps.end() - k, steps.end(), 1);
      do {
        Monotone s{0};
        for (int st : steps) s.push_back(s.back() + st);
        g.index.emplace(s, g.summands.size());
        g.summands.push_back({s, k, g.rank});
        g.rank += c.ranks[static_cast<std::size_t>(k)];
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
    dims.push_back(std::move(g));
  }
  return dims;
}

// theta* : Gamma_n -> Gamma_m for monotone theta : [m] -> [n].
IntegerMatrix gamma_operator(const ChainComplex& c, const GammaDimension& src,
                             const GammaDimension& dst, const Monotone& theta) {
  IntegerMatrix out(src.rank, dst.rank);
  for (const GammaSummand& s : src.summands) {
    Monotone f;
    for (int t : theta) f.push_back(s.surjection[static_cast<std::size_t>(t)]);
    // Epi-mono factorization f = mono . epi.
    std::vector<int> image;
    for (int v : f)
      if (image.empty() || image.back() != v) image.push_back(v);
    Monotone epi;
    for (int v : f) epi.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
    const int j = static_cast<int>(image.size()) - 1;
    const std::size_t rk = c.ranks[static_cast<std::size_t>(s.k)];
    if (j == s.k) {
      const GammaSummand& t = dst.summands[dst.index.at(epi)];
      for (std::size_t r = 0; r < rk; ++r) out(s.offset + r, t.offset + r) = 1;
    } else if (j == s.k - 1 && image.back() == s.k - 1) {
      // The mono skips only the top vertex: this is the chain boundary.
      const GammaSummand& t = dst.summands[dst.index.at(epi)];
      const IntegerMatrix& d = c.boundary[static_cast<std::size_t>(s.k)];
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t q = 0; q < d.cols(); ++q) out(s.offset + r, t.offset + q) = d(r, q);
    }
  }
  return out;
}

Monotone coface(int n, int i) {  // [n-1] -> [n] skipping i
  Monotone m;
  for (int t = 0; t < n; ++t) m.push_back(t < i ? t : t + 1);
  return m;
}

Monotone codegeneracy(int n, int i) {  // [n+1] -> [n] hitting i twice
  Monotone m;
  for (int t = 0; t <= n + 1; ++t) m.push_back(t <= i ? t : t - 1);
  return m;
}

}  // namespace

TruncatedSimplicialAbelianGroup dold_kan(const ChainComplex& c, int D) {
  if (!c.is_valid()) throw InvalidInput("not a chain complex");
  if (D < 0) throw InvalidInput("truncation must be non-negative");
  const auto dims = gamma_layout(c, D);
  std::vector<std::size_t> ranks;
  for (const auto& g : dims) ranks.push_back(g.rank);
  std::vector<std::vector<IntegerMatrix>> faces(static_cast<std::size_t>(D) + 1), degens(static_cast<std::size_t>(D));
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(
          gamma_operator(c, dims[static_cast<std::size_t>(n)], dims[static_cast<std::size_t>(n) - 1], coface(n, i)));
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i)
      degens[static_cast<std::size_t>(n)].push_back(
          gamma_operator(c, dims[static_cast<std::size_t>(n)], dims[static_cast<std::size_t>(n) + 1], codegeneracy(n, i)));
  return TruncatedSimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degens));
}

std::vector<IntegerMatrix> dold_kan_map(const ChainComplex& source, const ChainComplex& target,
                                        const std::vector<IntegerMatrix>& f, int D) {
  if (source.top() != target.top() || f.size() != source.ranks.size())
    throw InvalidInput("chain map needs one matrix per degree of matching complexes");
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].rows() != source.ranks[k] || f[k].cols() != target.ranks[k])
      throw InvalidInput("chain map component has the wrong shape");
    if (k >= 1 && !(source.boundary[k] * f[k - 1] == f[k] * target.boundary[k]))
      throw InvalidInput("chain map does not commute with the boundary");
  }
  const auto sd = gamma_layout(source, D), td = gamma_layout(target, D);
  std::vector<IntegerMatrix> out;
  for (int n = 0; n <= D; ++n) {
    const auto& s = sd[static_cast<std::size_t>(n)];
    const auto& t = td[static_cast<std::size_t>(n)];
    IntegerMatrix m(s.rank, t.rank);
    for (std::size_t p = 0; p < s.summands.size(); ++p) {
      const IntegerMatrix& fk = f[static_cast<std::size_t>(s.summands[p].k)];
      for (std::size_t r = 0; r < fk.rows(); ++r)
        for (std::size_t q = 0; q < fk.cols(); ++q)
          m(s.summands[p].offset + r, t.summands[p].offset + q) = fk(r, q);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace nilmult
