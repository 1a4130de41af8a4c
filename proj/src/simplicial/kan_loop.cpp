#include "nilmult/simplicial/kan_loop.hpp"

#include "identities.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

FreeSimplicialGroupTruncation::FreeSimplicialGroupTruncation(
    std::vector<std::size_t> generator_counts, std::vector<std::vector<WordMap>> faces,
    std::vector<std::vector<WordMap>> degeneracies)
    : counts_(std::move(generator_counts)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  if (counts_.empty()) throw InvalidInput("free simplicial group needs dimension 0");
  const std::size_t D = counts_.size() - 1;
  if (faces_.size() != D + 1 || degeneracies_.size() != D)
    throw InvalidInput("structure maps do not match the truncation");
  auto check = [&](const WordMap& m, std::size_t domain, std::size_t codomain) {
    if (m.size() != domain) throw InvalidInput("structure map has the wrong number of images");
    for (const auto& w : m)
      if (w.max_generator() > codomain) throw InvalidInput("image word uses an unknown generator");
  };
  for (std::size_t n = 1; n <= D; ++n) {
    if (faces_[n].size() != n + 1) throw InvalidInput("dimension " + std::to_string(n) + " needs n+1 faces");
    for (const auto& m : faces_[n]) check(m, counts_[n], counts_[n - 1]);
  }
  for (std::size_t n = 0; n < D; ++n) {
    if (degeneracies_[n].size() != n + 1) throw InvalidInput("wrong number of degeneracies");
    for (const auto& m : degeneracies_[n]) check(m, counts_[n], counts_[n + 1]);
  }
}

const FreeSimplicialGroupTruncation::WordMap& FreeSimplicialGroupTruncation::face(int n, int i) const {
  return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

const FreeSimplicialGroupTruncation::WordMap& FreeSimplicialGroupTruncation::degeneracy(int n, int i) const {
  return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}

FreeGroupWord substitute(const FreeGroupWord& w, const std::vector<FreeGroupWord>& images) {
  FreeGroupWord out;
  for (const Letter& l : w.letters()) {
    if (l.generator > images.size()) throw InvalidInput("word uses an unmapped generator");
    out = out * images[l.generator - 1].power(l.exponent);
  }
  return out;
}

ValidationReport FreeSimplicialGroupTruncation::validate() const {
  auto compose = [](const WordMap& a, const WordMap& b) {
    WordMap r;
    r.reserve(a.size());
    for (const auto& w : a) r.push_back(substitute(w, b));
    return r;
  };
  auto identity = [this](int n) {
    WordMap r;
    for (std::size_t g = 1; g <= generator_count(n); ++g) r.push_back(FreeGroupWord::generator(g));
    return r;
  };
  return detail::check_simplicial_identities(
      truncation(), [this](int n, int i) -> const WordMap& { return face(n, i); },
      [this](int n, int i) -> const WordMap& { return degeneracy(n, i); }, compose, identity);
}

FreeSimplicialGroupTruncation kan_loop_group(const TruncatedSimplicialSet& k,
                                             KanFaceConvention convention) {
  if (!k.reduced()) throw NotReduced("Kan's loop group needs a single vertex");
  const int D = k.truncation();
  if (D < 2) throw InvalidInput("Kan's loop group needs truncation at least 2");
  const int top = D - 1;

  // tau[n][x] for x in K_{n+1}: 1-based generator of GK_n, or 0 when x = s_0 y.
  std::vector<std::vector<std::size_t>> tau(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<std::size_t>> sources(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> counts;
  for (int n = 0; n <= top; ++n) {
    std::vector<char> degenerate(k.size(n + 1), 0);
    for (std::size_t y : k.degeneracy(n, 0)) degenerate[y] = 1;
    auto& t = tau[static_cast<std::size_t>(n)];
    t.assign(k.size(n + 1), 0);
    for (std::size_t x = 0; x < t.size(); ++x)
      if (!degenerate[x]) {
        sources[static_cast<std::size_t>(n)].push_back(x);
        t[x] = sources[static_cast<std::size_t>(n)].size();
      }
    counts.push_back(sources[static_cast<std::size_t>(n)].size());
  }
  auto word = [&](int n, std::size_t x) {
    const std::size_t g = tau[static_cast<std::size_t>(n)][x];
    return g == 0 ? FreeGroupWord() : FreeGroupWord::generator(g);
  };

  using WordMap = FreeSimplicialGroupTruncation::WordMap;
  std::vector<std::vector<WordMap>> faces(static_cast<std::size_t>(top) + 1), degens(static_cast<std::size_t>(top));
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      WordMap m;
      for (std::size_t x : sources[static_cast<std::size_t>(n)]) {
        if (i == 0) {
          const FreeGroupWord a = word(n - 1, k.face(n + 1, 1)[x]);
          const FreeGroupWord b = word(n - 1, k.face(n + 1, 0)[x]).inverse();
          m.push_back(convention == KanFaceConvention::AsPrinted ? a * b : b * a);
        } else {
          m.push_back(word(n - 1, k.face(n + 1, i + 1)[x]));
        }
      }
      faces[static_cast<std::size_t>(n)].push_back(std::move(m));
    }
  for (int n = 0; n < top; ++n)
    for (int i = 0; i <= n; ++i) {
      WordMap m;
      for (std::size_t x : sources[static_cast<std::size_t>(n)])
        m.push_back(word(n + 1, k.degeneracy(n + 1, i + 1)[x]));
      degens[static_cast<std::size_t>(n)].push_back(std::move(m));
    }
  FreeSimplicialGroupTruncation out(std::move(counts), std::move(faces), std::move(degens));
  out.sources = std::move(sources);
  return out;
}

TruncatedSimplicialAbelianGroup abelianize(const FreeSimplicialGroupTruncation& f) {
  const int D = f.truncation();
  auto matrix = [](const FreeSimplicialGroupTruncation::WordMap& m, std::size_t cols) {
    IntegerMatrix a(m.size(), cols);
    for (std::size_t r = 0; r < m.size(); ++r) {
      const auto sums = m[r].exponent_sums(cols);
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = sums[c];
    }
    return a;
  };
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= D; ++n) ranks.push_back(f.generator_count(n));
  std::vector<std::vector<IntegerMatrix>> faces(static_cast<std::size_t>(D) + 1), degens(static_cast<std::size_t>(D));
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(matrix(f.face(n, i), f.generator_count(n - 1)));
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i) degens[static_cast<std::size_t>(n)].push_back(matrix(f.degeneracy(n, i), f.generator_count(n + 1)));
  return TruncatedSimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degens));
}

}  // namespace nilmult
