#include "nilmult/simplicial/directed_system.hpp"

#include "nilmult/abelian/smith.hpp"
#include "nilmult/errors.hpp"

namespace nilmult {

bool is_simplicial_map(const SimplicialMap& f, const TruncatedSimplicialAbelianGroup& a,
                       const TruncatedSimplicialAbelianGroup& b) {
  const int D = a.truncation();
  if (b.truncation() != D || f.components.size() != static_cast<std::size_t>(D) + 1) return false;
  for (int n = 0; n <= D; ++n) {
    const IntegerMatrix& fn = f.components[static_cast<std::size_t>(n)];
    if (fn.rows() != a.rank(n) || fn.cols() != b.rank(n)) return false;
  }
  for (int n = 1; n <= D; ++n)
    for (int i = 0; i <= n; ++i)
      if (!(a.face(n, i) * f.components[static_cast<std::size_t>(n) - 1] ==
            f.components[static_cast<std::size_t>(n)] * b.face(n, i)))
        return false;
  for (int n = 0; n < D; ++n)
    for (int i = 0; i <= n; ++i)
      if (!(a.degeneracy(n, i) * f.components[static_cast<std::size_t>(n) + 1] ==
            f.components[static_cast<std::size_t>(n)] * b.degeneracy(n, i)))
        return false;
  return true;
}

bool is_isomorphism(const SimplicialMap& f) {
  for (const auto& m : f.components)
    if (!m.is_unimodular()) return false;
  return true;
}

namespace {

IntegerMatrix stacked_faces(const TruncatedSimplicialAbelianGroup& a, int n, int upto) {
  IntegerMatrix s(a.rank(n), 0);
  for (int i = 0; i <= upto; ++i) s = hstack(s, a.face(n, i));
  return s;
}

// Cycles Z_n = N_n intersected with ker d_n, inside Z^{rank n}.
SublatticeCoordinates cycles(const TruncatedSimplicialAbelianGroup& a, int n) {
  if (n == 0) {
    const std::size_t r = a.rank(0);
    return SublatticeCoordinates(IntegerMatrix::identity(r), IntegerMatrix::identity(r), 0);
  }
  return SublatticeCoordinates::left_kernel(stacked_faces(a, n, n));
}

// Boundaries B_n = d_{n+1}(N_{n+1}), as rows in Z^{rank n}.
IntegerMatrix boundaries(const TruncatedSimplicialAbelianGroup& a, int n) {
  IntegerMatrix normalized = SublatticeCoordinates::left_kernel(stacked_faces(a, n + 1, n)).basis();
  return normalized * a.face(n + 1, n + 1);
}

}  // namespace

bool induces_surjection(const SimplicialMap& f, const TruncatedSimplicialAbelianGroup& a,
                        const TruncatedSimplicialAbelianGroup& b, int n) {
  if (n < 0 || n > std::min(a.truncation(), b.truncation()) - 1)
    throw OutOfTruncationRange("induced map on pi_" + std::to_string(n) + " is outside the truncation");
  const SublatticeCoordinates zb = cycles(b, n);
  IntegerMatrix rows = zb.coordinates(cycles(a, n).basis() * f.components[static_cast<std::size_t>(n)]);
  rows.append_rows(zb.coordinates(boundaries(b, n)));
  return cokernel(rows).is_trivial();
}

void DirectedSystem::check() const {
  if (objects.empty()) throw InvalidInput("directed system has no objects");
  if (transitions.size() + 1 != objects.size())
    throw InvalidInput("need one transition between consecutive objects");
  for (std::size_t j = 0; j < transitions.size(); ++j)
    if (!is_simplicial_map(transitions[j], objects[j], objects[j + 1]))
      throw InvalidInput("transition " + std::to_string(j) + " is not a simplicial map");
  if (objects.size() >= 2 && objects[objects.size() - 2].ranks() != objects.back().ranks())
    throw InvalidInput("the repeating last transition must map an object to one of the same shape");
}

Colimit colimit_stabilized(const DirectedSystem& s, std::size_t window) {
  s.check();
  if (s.transitions.empty()) return {s.objects[0], 0};
  std::size_t j0 = s.transitions.size();
  while (j0 > 0 && is_isomorphism(s.transitions[j0 - 1])) --j0;
  if (j0 == s.transitions.size() || j0 > window)
    throw Unstabilized("transitions are not isomorphisms from any index within the window of " +
                       std::to_string(window));
  return {s.objects[j0], j0};
}

LimitCommutationReport limit_commutes(const DirectedSystem& s, int n, std::size_t window) {
  const Colimit colim = colimit_stabilized(s, window);
  LimitCommutationReport r;
  r.degree = n;
  r.object_stable_from = colim.stable_from;
  for (const auto& a : s.objects) r.sequence.push_back(homotopy(a, n));
  r.pi_of_colimit = homotopy(colim.object, n);
  // Walk back from the end while the induced maps stay isomorphisms.
  std::size_t j1 = s.transitions.size();
  auto iso_on_pi = [&](std::size_t j) {
    return r.sequence[j] == r.sequence[j + 1] &&
           induces_surjection(s.transitions[j], s.objects[j], s.objects[j + 1], n);
  };
  while (j1 > 0 && iso_on_pi(j1 - 1)) --j1;
  if (!s.transitions.empty() && j1 == s.transitions.size())
    throw Unstabilized("pi_" + std::to_string(n) + " does not stabilize along the system");
  r.homotopy_stable_from = j1;
  r.colimit_of_pi = r.sequence[j1];
  r.holds = r.pi_of_colimit == r.colimit_of_pi;
  return r;
}

}  // namespace nilmult
