#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "helpers.hpp"
#include "seedwave/seed_sequence.hpp"

using namespace seedwave;
using Catch::Matchers::WithinAbs;

TEST_CASE("construction accepts the documented examples") {
  const SeedSequence haar({1.0, -1.0}, 0.5, 0.25);
  CHECK(haar.size() == 2);
  CHECK_FALSE(haar.centered());
  CHECK(haar.admissible());
  CHECK(haar.band_edge() == Catch::Approx(2.0 * std::numbers::pi));

  const SeedSequence bump({1.0, -2.0, 1.0}, 1.0, -1.0);
  CHECK(bump.centered());
  CHECK(bump.half_length() == 1);
  CHECK(bump.admissible());

  const SeedSequence ramp({1.0, 2.0}, 1.0, 0.0);
  CHECK_FALSE(ramp.centered());
  CHECK_FALSE(ramp.admissible());
}

TEST_CASE("construction rejections are distinct") {
  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const ValidationError& e) {
      return e.code();
    }
    FAIL("expected ValidationError");
    return errc::bad_config;
  };
  CHECK(code([] { SeedSequence({1.0}, 1.0, 0.0); }) == errc::sequence_too_short);
  CHECK(code([] { SeedSequence({1.0, 2.0}, 0.0, 0.0); }) == errc::nonpositive_delta);
  CHECK(code([] { SeedSequence({1.0, 2.0}, -0.5, 0.0); }) == errc::nonpositive_delta);
  CHECK(code([] { SeedSequence({1.0, std::nan("")}, 1.0, 0.0); }) == errc::nonfinite_value);
  CHECK(code([] { SeedSequence({1.0, 2.0}, 1.0, std::numeric_limits<double>::infinity()); }) ==
        errc::nonfinite_value);
}

TEST_CASE("mean") {
  CHECK(SeedSequence({1.0, -1.0}, 0.5, 0.25).mean() == 0.0);
  CHECK(SeedSequence({1.0, -2.0, 1.0}, 1.0, -1.0).mean() == 0.0);
  CHECK(SeedSequence({1.0, 2.0}, 1.0, 0.0).mean() == 1.5);
}

TEST_CASE("sample times and centered predicate") {
  const SeedSequence seq({1.0, -2.0, 1.0}, 0.5, -0.5);
  CHECK(seq.sample_time(0) == -0.5);
  CHECK(seq.sample_time(2) == 0.5);
  CHECK(seq.centered());

  CHECK_FALSE(SeedSequence({1.0, -2.0, 1.0}, 1.0, 0.0).centered());
  CHECK_FALSE(SeedSequence({1.0, -1.0, 1.0, -1.0}, 1.0, -1.5).centered());

  // Default time span maps n = 41 onto [-1, 1].
  const auto seq41 = random_seed(41, 1.0, 3);
  CHECK(seq41.delta() == 0.05);
  CHECK(seq41.t0() == -1.0);
  CHECK(seq41.centered());
  CHECK(seq41.half_length() == 20);
}

TEST_CASE("random seeds are recentered and deterministic") {
  const auto a = random_seed(41, 1.0, 7);
  const auto b = random_seed(41, 1.0, 7);
  CHECK(a == b);

  CHECK(std::abs(a.sum()) <= 1e-14 * 41 * a.max_abs());
  CHECK(std::abs(a.mean()) <= 1e-14);

  const auto c = random_seed(41, 1.0, 8);
  CHECK_FALSE(a == c);

  // Explicit delta overrides the [-1, 1] mapping but keeps centering.
  const auto custom = random_seed(5, 1.0, 7, 0.25);
  CHECK(custom.delta() == 0.25);
  CHECK(custom.t0() == -0.5);
  CHECK(custom.centered());
}

TEST_CASE("random seed variance smoke test") {
  for (const auto& [n, variance, rng_seed] :
       {std::tuple{41, 1.0, 1ULL}, {41, 0.6, 2ULL}, {101, 1.0, 3ULL}, {201, 2.0, 4ULL}}) {
    const auto seq = random_seed(n, variance, rng_seed);
    double ss = 0.0;
    for (double v : seq.values()) ss += v * v;
    const double sample_variance = ss / static_cast<double>(n - 1);
    INFO("n=" << n << " variance=" << variance << " rng_seed=" << rng_seed
              << " sample=" << sample_variance);
    CHECK(std::abs(sample_variance - variance) <= 0.25 * variance);
  }
}

TEST_CASE("random seed preconditions") {
  CHECK_THROWS_AS(random_seed(4, 1.0, 1), ValidationError);
  CHECK_THROWS_AS(random_seed(1, 1.0, 1), ValidationError);
  CHECK_THROWS_AS(random_seed(41, 0.0, 1), ValidationError);
  CHECK_THROWS_AS(random_seed(41, -1.0, 1), ValidationError);
  try {
    random_seed(4, 1.0, 1);
  } catch (const ValidationError& e) {
    CHECK(e.code() == errc::parity);
  }
  try {
    random_seed(1, 1.0, 1);
  } catch (const ValidationError& e) {
    CHECK(e.code() == errc::sequence_too_short);
  }
}

TEST_CASE("reverse") {
  const SeedSequence seq({3.0, 1.0, -2.0, -1.0, -1.0}, 1.0, -2.0);
  const auto rev = reverse(seq);
  CHECK(rev.values() == std::vector<double>{-1.0, -1.0, -2.0, 1.0, 3.0});
  CHECK(rev.delta() == seq.delta());
  CHECK(rev.t0() == seq.t0());

  const SeedSequence palindrome({1.0, 0.0, 1.0}, 1.0, -1.0);
  CHECK(reverse(palindrome).values() == palindrome.values());

  for (std::uint64_t s : {11ULL, 12ULL, 13ULL}) {
    const auto u = helpers::random_centered(21, s);
    CHECK(reverse(reverse(u)) == u);
    CHECK_THAT(reverse(u).mean(), WithinAbs(u.mean(), 1e-15 * 21 * std::max(1.0, u.max_abs())));
  }
}

TEST_CASE("even/odd decomposition example") {
  const SeedSequence seq({3.0, 1.0, -2.0, -1.0, -1.0}, 1.0, -2.0);
  const auto [even, odd] = decompose_even_odd(seq);
  CHECK(even.values() == std::vector<double>{1.0, 0.0, -2.0, 0.0, 1.0});
  CHECK(odd.values() == std::vector<double>{2.0, 1.0, 0.0, -1.0, -2.0});

  const SeedSequence symmetric({1.0, -2.0, 1.0}, 1.0, -1.0);
  const auto [se, so] = decompose_even_odd(symmetric);
  CHECK(se.values() == symmetric.values());
  CHECK(so.values() == std::vector<double>{0.0, 0.0, 0.0});

  const SeedSequence antisymmetric({1.0, 0.0, -1.0}, 1.0, -1.0);
  const auto [ae, ao] = decompose_even_odd(antisymmetric);
  CHECK(ae.values() == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(ao.values() == antisymmetric.values());
}

TEST_CASE("decomposition requires centered input") {
  CHECK_THROWS_AS(decompose_even_odd(SeedSequence({1.0, -1.0}, 0.5, 0.25)), ValidationError);
  CHECK_THROWS_AS(decompose_even_odd(SeedSequence({1.0, 0.0, -1.0}, 1.0, 0.0)), ValidationError);
}

TEST_CASE("decomposition properties on random seeds") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int n = 3 + 2 * static_cast<int>(s % 12);
    const auto u = helpers::random_centered(n, 100 + s);
    const auto [even, odd] = decompose_even_odd(u);
    const int l = u.half_length();
    for (int k = 0; k <= l; ++k) {
      CHECK(even.at_offset(-k) == even.at_offset(k));
      CHECK(odd.at_offset(-k) == -odd.at_offset(k));
    }
    CHECK(odd.at_offset(0) == 0.0);
    // Recomposition is exact up to one rounding at the scale of the mirrored
    // pair (the larger of u(k), u(-k) sets the spacing of a+b and a-b).
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double pair_scale =
          std::max(std::abs(u.values()[i]), std::abs(u.values()[u.size() - 1 - i]));
      CHECK(std::abs(even.values()[i] + odd.values()[i] - u.values()[i]) <=
            helpers::ulp_at(pair_scale));
    }
  }
}

TEST_CASE("admissibility tolerance is scale aware") {
  // Large values shift the zero-sum slack proportionally.
  const SeedSequence seq({1e8, -1e8, 1e-3}, 1.0, -1.0);
  CHECK_FALSE(seq.admissible());
  const SeedSequence tiny({1e8, -1e8, 1e-5}, 1.0, -1.0);
  CHECK(tiny.admissible());  // below 1e-12 * 3 * 1e8
}
