#include <random>

#include "doctest.h"
#include "gemkit/smith.hpp"
#include "smith_oracle.hpp"

using namespace gemkit;
using namespace gemkit::testing;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("documented examples") {
  const SmithForm id = smith_normal_form(IntMatrix{{1, 0}, {0, 1}});
  CHECK(id.factors == ints({1, 1}));
  CHECK(id.rank == 2);

  const SmithForm m = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(m.factors == ints({2, 4}));
  CHECK(m.rank == 2);

  const SmithForm zero = smith_normal_form(IntMatrix(3, 3));
  CHECK(zero.factors.empty());
  CHECK(zero.rank == 0);
}

TEST_CASE("non-square and empty shapes") {
  CHECK(smith_normal_form(IntMatrix{{2, 4, 6}}).factors == ints({2}));
  CHECK(smith_normal_form(IntMatrix{{0}, {3}, {-6}}).factors == ints({3}));
  CHECK(smith_normal_form(IntMatrix(0, 4)).rank == 0);
  CHECK(smith_normal_form(IntMatrix{{6, 0}, {0, 4}}).factors == ints({2, 12}));
  CHECK(smith_normal_form(IntMatrix{{-5}}).factors == ints({5}));
}

TEST_CASE("entry growth stays exact") {
  // Powers of 10^12 overflow 64-bit products during elimination.
  const long long big = 1'000'000'000'000LL;
  const SmithForm f = smith_normal_form(IntMatrix{{big, big + 1}, {big - 1, big}});
  CHECK(f.factors == ints({1, 1}));
  IntMatrix m(2, 2);
  m(0, 0) = BigInt(big) * big;
  m(1, 1) = BigInt(big) * 6;
  const SmithForm g = smith_normal_form(m);
  // gcd(10^24, 6 * 10^12) = 2 * 10^12; the product is preserved.
  CHECK(g.factors[0] == BigInt(big) * 2);
  CHECK(g.factors[1] == BigInt(big) * big * 3);
}

TEST_CASE("transforms reproduce the diagonal") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix m = random_matrix(rng, 5, 6);
    const SmithDecomposition d = smith_decomposition(m);
    CHECK(d.left * m * d.right == d.diagonal);
    CHECK(abs(square_det(d.left)) == 1);
    CHECK(abs(square_det(d.right)) == 1);
    for (std::size_t i = 0; i < d.diagonal.rows(); ++i)
      for (std::size_t j = 0; j < d.diagonal.cols(); ++j) {
        if (i != j) CHECK(d.diagonal(i, j) == 0);
      }
  }
}

TEST_CASE("random matrices agree with the minors oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix m = random_matrix(rng, 4, 5);
    const SmithForm f = smith_normal_form(m);
    CHECK(f.factors == minors_oracle(m));
    CHECK(f.rank == rational_rank(m));
    for (std::size_t k = 0; k + 1 < f.factors.size(); ++k) CHECK(f.factors[k + 1] % f.factors[k] == 0);
    if (m.rows() == m.cols() && f.rank == m.rows()) {
      BigInt product = 1;
      for (const auto& d : f.factors) product *= d;
      CHECK(product == abs(square_det(m)));
    }
  }
}
