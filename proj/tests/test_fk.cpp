#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hofseq/fk.hpp"

using namespace hofseq;

TEST_CASE("small values of F_3, F_4, F_5") {
  // F_1..F_5 on 0..30
  const std::vector<std::uint64_t> f3 = {0, 1, 1, 2, 3, 4, 4, 5, 5, 6, 7, 7, 8, 9, 10, 10,
                                         11, 12, 13, 13, 14, 14, 15, 16, 17, 17, 18, 18, 19, 20, 20};
  const std::vector<std::uint64_t> f4 = {0, 1, 1, 2, 3, 4, 5, 5, 6, 6, 7, 8, 8, 9, 10, 11,
                                         11, 12, 13, 14, 15, 15, 16, 17, 18, 19, 19, 20, 20, 21, 22};
  const std::vector<std::uint64_t> f5 = {0, 1, 1, 2, 3, 4, 5, 6, 6, 7, 7, 8, 9, 9, 10, 11,
                                         12, 12, 13, 14, 15, 16, 16, 17, 18, 19, 20, 21, 21, 22, 23};
  HofstadterF h3(3), h4(4), h5(5);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    CHECK(h3.value(n) == f3[n]);
    CHECK(h4.value(n) == f4[n]);
    CHECK(h5.value(n) == f5[n]);
  }
  CHECK(h3.value(5) == 4);
}

TEST_CASE("base cases and closed forms for k = 1, 2") {
  HofstadterF h1(1), h2(2), h4(4);
  CHECK(h4.value(0) == 0);
  for (std::uint64_t n = 0; n <= 4000; ++n) {
    CHECK(h1.value(n) == (n + 1) / 2);  // ceil(n/2)
  }
  CHECK(h2.value(17) == 11);
  CHECK_THROWS_AS(HofstadterF(0), std::invalid_argument);
}

TEST_CASE("iterates") {
  HofstadterF h3(3), h5(5);
  CHECK(h3.iterate(2, 1) == 1);
  CHECK(h5.iterate(0, 42) == 42);
  CHECK(h3.iterate(2, 30) == 14);
  for (unsigned j = 1; j <= 6; ++j) {
    CHECK(h3.iterate(j, 1) == 1);
    CHECK(h3.iterate(j, 2) == 1);
  }
}

TEST_CASE("right adjoint") {
  HofstadterF h1(1), h2(2), h3(3);
  CHECK(h2.right_adjoint(17) == 28);
  CHECK(h1.right_adjoint(0) == 0);
  CHECK(h3.right_adjoint(1) == 2);
}

TEST_CASE("monotone, increments, antecedents") {
  for (unsigned k = 1; k <= 8; ++k) {
    HofstadterF h(k);
    h.warm_up(3001);
    auto t = h.table();
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      CHECK(t[n] >= 1);
      if (n >= 2) CHECK(t[n] < n);
      std::uint64_t inc = t[n] - t[n - 1];
      CHECK(inc <= 1);
      // dF(n) = 1 - dF^k(n-1)
      std::uint64_t a = h.iterate(k, n), b = h.iterate(k, n - 1);
      CHECK(t[n + 1] - t[n] == 1 - (a - b));
    }
    for (unsigned j = 1; j <= k + 1; ++j) {
      for (std::uint64_t n = 1; n <= 500; ++n) {
        CHECK(h.iterate(j, n) >= 1);
        if (n >= 2) CHECK(h.iterate(j, n) < n);
        std::uint64_t d = h.iterate(j, n + 1) - h.iterate(j, n);
        CHECK(d <= 1);
      }
    }
    // no value has three antecedents
    for (std::uint64_t n = 0; n + 2 <= 3000; ++n)
      if (t[n] == t[n + 1]) CHECK(t[n + 2] == t[n] + 1);
  }
}

TEST_CASE("pointwise ordering of the family") {
  HofstadterF prev(1);
  for (unsigned k = 2; k <= 9; ++k) {
    HofstadterF cur(k);
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(prev.value(n) <= cur.value(n));
    prev = std::move(cur);
  }
}

TEST_CASE("base sequence table values") {
  const std::vector<std::vector<unsigned long>> rows = {
      {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024},
      {1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144},
      {1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60},
      {1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36},
      {1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26},
  };
  for (unsigned k = 1; k <= 5; ++k) {
    FiboSequence seq(k);
    for (unsigned p = 0; p <= 10; ++p) CHECK(seq.at(p) == rows[k - 1][p]);
  }
  FiboSequence s3(3), s1(1), s4(4);
  CHECK(s3.at(10) == 60);
  CHECK(s1.at(9) == 512);
  CHECK(s4.at(7) == 14);
}

TEST_CASE("base sequence invariants") {
  for (unsigned k = 1; k <= 9; ++k) {
    FiboSequence seq(k);
    seq.at(80);
    for (unsigned p = 0; p <= k && p <= 80; ++p) CHECK(seq.at(p) == p + 1);
    for (unsigned p = 1; p <= 80; ++p) {
      CHECK(seq.at(p) > seq.at(p - 1));
      unsigned back = p >= k ? p - k : 0;
      CHECK(seq.at(p) == seq.at(p - 1) + seq.at(back));
    }
  }
}

TEST_CASE("F and L shift the base sequence (both directions)") {
  for (unsigned k = 1; k <= 6; ++k) {
    HofstadterF h(k);
    FiboSequence seq(k);
    for (unsigned p = 0; p <= 14; ++p) {
      if (!fits_uint64(seq.at(p)) || to_uint64(seq.at(p)) > 2'000'000) break;
      std::uint64_t ap = to_uint64(seq.at(p));
      for (unsigned j = 0; j <= k + 2; ++j) {
        unsigned back = p >= j ? p - j : 0;
        CHECK(h.iterate(j, ap) == to_uint64(seq.at(back)));
      }
      std::uint64_t v = ap;
      for (unsigned j = 1; j <= 4; ++j) {
        v = h.right_adjoint(v);
        if (!fits_uint64(seq.at(p + j)) || to_uint64(seq.at(p + j)) > 50'000'000) break;
        CHECK(v == to_uint64(seq.at(p + j)));
      }
    }
  }
}

TEST_CASE("subset-count oracle agrees with the recurrence") {
  CHECK(sparse_subset_count(2, 4) == 8);
  CHECK(sparse_subset_count(3, 0) == 1);
  FiboSequence s5(5);
  CHECK(sparse_subset_count(5, 12) == s5.at(12));
  for (unsigned k = 1; k <= 6; ++k) {
    FiboSequence seq(k);
    for (unsigned p = 0; p <= 20; ++p) CHECK(sparse_subset_count(k, p) == seq.at(p));
  }
}

TEST_CASE("subset-count guard") {
  CHECK_THROWS_AS(sparse_subset_count(2, 25), std::invalid_argument);
  CHECK_THROWS_AS(sparse_subset_count(0, 3), std::invalid_argument);
}
