#ifndef NHPOLY_TESTS_CORPUS_HPP
#define NHPOLY_TESTS_CORPUS_HPP

#include <random>
#include <vector>

#include "nhpoly/equation.hpp"

namespace nhpoly::testing {

// Deterministic random valid Weierstrass equations over Q:
// m <= 3, n <= 8, at most 12 lower terms. The same corpus backs the
// property suites and the acceptance run.
inline std::vector<WeierstrassEquation> random_corpus(std::size_t count,
                                                      std::uint64_t seed = 20240917) {
  std::mt19937_64 rng(seed);
  FieldConfig cfg = FieldConfig::rationals();
  std::vector<WeierstrassEquation> out;
  while (out.size() < count) {
    const int m = static_cast<int>(rng() % 3) + 1;
    const unsigned n = static_cast<unsigned>(rng() % 7) + 2;
    const int terms = static_cast<int>(rng() % 12) + 1;
    MultiPoly poly(m, cfg);
    ExponentVector lead;
    lead.i.assign(m, 0);
    lead.k = n;
    poly.add_term(lead, FieldScalar::one(cfg));
    for (int t = 0; t < terms; ++t) {
      ExponentVector e;
      e.k = static_cast<std::uint32_t>(rng() % n);
      e.i.resize(m);
      for (int l = 0; l < m; ++l) {
        e.i[l] = static_cast<std::uint32_t>(rng() % (n + 3));
      }
      std::uint32_t total = e.total_degree();
      if (total < n) e.i[rng() % m] += n - total;
      if (!poly.coefficient(e).is_zero()) continue;
      long c = static_cast<long>(rng() % 9) + 1;
      if (rng() % 2) c = -c;
      poly.add_term(e, FieldScalar::from_integer(cfg, BigInt(c)));
    }
    out.push_back(WeierstrassEquation::from_polynomial(poly));
  }
  return out;
}

}  // namespace nhpoly::testing

#endif
