#pragma once

#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "qwb/errors.hpp"
#include "qwb/lattice.hpp"

namespace testutil {

// Reflexive-transitive closure of a cover list, validated into a lattice.
inline qwb::Lattice make_lattice(int n,
                                 const std::vector<std::pair<int, int>>& covers,
                                 std::vector<std::string> names) {
  std::vector<std::vector<bool>> ord(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) ord[i][i] = true;
  for (auto [a, b] : covers) ord[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (ord[a][k] && ord[k][b]) ord[a][b] = true;
  return qwb::validate_lattice(ord, std::move(names));
}

inline qwb::Lattice make_chain(int k) {
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    if (i + 1 < k) covers.emplace_back(i, i + 1);
    names.push_back("c" + std::to_string(i));
  }
  return make_lattice(k, covers, std::move(names));
}

// Runs f, requires it to throw Error with the given code; a non-empty
// expected witness is compared exactly.
inline void expect_error(const std::function<void()>& f, qwb::errc code,
                         const std::vector<int>& witness = {}) {
  try {
    f();
    FAIL_CHECK("expected an error with code " << qwb::errc_name(code));
  } catch (const qwb::Error& e) {
    CHECK(std::string(qwb::errc_name(e.code())) == qwb::errc_name(code));
    if (!witness.empty()) CHECK(e.witness() == witness);
  }
}

}  // namespace testutil
