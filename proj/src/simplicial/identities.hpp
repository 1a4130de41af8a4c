#pragma once

// Shared checker for the simplicial identities on truncated objects.
// compose(a, b) means "a first, then b".

#include <string>

#include "nilmult/simplicial/simplicial_set.hpp"

namespace nilmult::detail {

template <class Face, class Degeneracy, class Compose, class Identity>
ValidationReport check_simplicial_identities(int D, Face face, Degeneracy degeneracy,
                                             Compose compose, Identity identity) {
  ValidationReport report;
  auto fail = [&](const char* kind, int n, int i, int j, std::string detail) {
    report.violations.push_back({kind, n, i, j, std::move(detail)});
  };
  auto s = [](int k) { return std::to_string(k); };

  for (int n = 2; n <= D; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < i; ++j)
        if (!(compose(face(n, i), face(n - 1, j)) == compose(face(n, j), face(n - 1, i - 1))))
          fail("dd", n, i, j, "d" + s(j) + " d" + s(i) + " != d" + s(i - 1) + " d" + s(j));

  for (int n = 0; n + 2 <= D; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= i; ++j)
        if (!(compose(degeneracy(n, i), degeneracy(n + 1, j)) ==
              compose(degeneracy(n, j), degeneracy(n + 1, i + 1))))
          fail("ss", n, i, j, "s" + s(j) + " s" + s(i) + " != s" + s(i + 1) + " s" + s(j));

  for (int n = 0; n + 1 <= D; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n + 1; ++j) {
        const auto lhs = compose(degeneracy(n, i), face(n + 1, j));
        if (j < i) {
          if (!(lhs == compose(face(n, j), degeneracy(n - 1, i - 1))))
            fail("ds", n, i, j, "d" + s(j) + " s" + s(i) + " != s" + s(i - 1) + " d" + s(j));
        } else if (j == i || j == i + 1) {
          if (!(lhs == identity(n)))
            fail("ds", n, i, j, "d" + s(j) + " s" + s(i) + " != id");
        } else if (!(lhs == compose(face(n, j - 1), degeneracy(n - 1, i)))) {
          fail("ds", n, i, j, "d" + s(j) + " s" + s(i) + " != s" + s(i) + " d" + s(j - 1));
        }
      }
  return report;
}

}  // namespace nilmult::detail
