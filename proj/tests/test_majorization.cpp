#include <doctest.h>

#include <random>

#include "swlab/generators.hpp"
#include "swlab/majorization.hpp"
#include "test_support.hpp"

using namespace swlab;
using swlab::testing::make_alpha;

namespace {

// Random alpha array with total n(n-1)/2 spread over distances 1..n-1.
AlphaArray random_alpha(int n, std::mt19937_64& rng) {
    AlphaArray a;
    a.n = n;
    a.alpha.assign(n - 1, 0);
    std::uniform_int_distribution<int> slot(0, n - 2);
    for (long long t = 0; t < static_cast<long long>(n) * (n - 1) / 2; ++t)
        ++a.alpha[slot(rng)];
    return a;
}

// Shift some mass toward smaller distances: the result majorizes the input.
AlphaArray dominate(const AlphaArray& a, std::mt19937_64& rng, int moves) {
    AlphaArray b = a;
    std::uniform_int_distribution<int> slot(0, b.n - 2);
    for (int i = 0; i < moves; ++i) {
        int from = slot(rng), to = slot(rng);
        if (from < to) std::swap(from, to);
        if (from == to || b.alpha[from] == 0) continue;
        --b.alpha[from];
        ++b.alpha[to];
    }
    return b;
}

}  // namespace

TEST_CASE("cumulative sums") {
    CHECK(cumulative(make_alpha(6, {6, 4, 3, 2, 0})) ==
          std::vector<long long>{6, 10, 13, 15, 15});
    CHECK(cumulative(make_alpha(6, {5, 6, 4, 0, 0})) ==
          std::vector<long long>{5, 11, 15, 15, 15});
    CHECK(cumulative(alpha_array(complete(5))) ==
          std::vector<long long>{10, 10, 10, 10});
}

TEST_CASE("compare on the six-node example pair and the chain/star pair") {
    auto af = make_alpha(6, {6, 4, 3, 2, 0});
    auto af2 = make_alpha(6, {5, 6, 4, 0, 0});
    CHECK(compare(af, af2) == MajorizationVerdict::Incomparable);
    CHECK(compare(af2, af) == MajorizationVerdict::Incomparable);
    CHECK(compare(af, af) == MajorizationVerdict::Equal);

    auto chain4 = alpha_array(chain(4));
    auto star4 = alpha_array(star(4));
    CHECK(compare(chain4, star4) == MajorizationVerdict::Less);
    CHECK(compare(star4, chain4) == MajorizationVerdict::Greater);
}

TEST_CASE("compare rejects mismatched inputs") {
    CHECK_THROWS_AS(compare(make_alpha(4, {3, 2, 1}), make_alpha(5, {4, 3, 2, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(compare(make_alpha(4, {3, 2, 1}), make_alpha(4, {3, 2, 0})),
                    std::invalid_argument);
}

TEST_CASE("lorenz curve") {
    auto curve = lorenz_curve(alpha_array(complete(4)));
    REQUIRE(curve.points.size() == 4);
    CHECK(curve.points[0] == std::pair<double, double>{0.0, 0.0});
    CHECK(curve.points[1].first == doctest::Approx(1.0 / 3));
    CHECK(curve.points[1].second == doctest::Approx(1.0));
    CHECK(curve.points[3] == std::pair<double, double>{1.0, 1.0});

    auto c = lorenz_curve(make_alpha(6, {6, 4, 3, 2, 0}));
    std::vector<double> expect{6.0 / 15, 10.0 / 15, 13.0 / 15, 1.0, 1.0};
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(c.points[i + 1].second == doctest::Approx(expect[i]));
}

TEST_CASE("compare agrees with pointwise curve dominance") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        AlphaArray a = random_alpha(10, rng);
        AlphaArray b = trial % 2 ? random_alpha(10, rng) : dominate(a, rng, 5);
        auto ca = lorenz_curve(a), cb = lorenz_curve(b);
        bool b_above = true, a_above = true, equal = true;
        for (size_t i = 1; i < ca.points.size(); ++i) {
            if (ca.points[i].second > cb.points[i].second) b_above = false;
            if (cb.points[i].second > ca.points[i].second) a_above = false;
            if (ca.points[i].second != cb.points[i].second) equal = false;
        }
        auto verdict = compare(a, b);
        if (equal) CHECK(verdict == MajorizationVerdict::Equal);
        else if (b_above) CHECK(verdict == MajorizationVerdict::Less);
        else if (a_above) CHECK(verdict == MajorizationVerdict::Greater);
        else CHECK(verdict == MajorizationVerdict::Incomparable);
    }
}

TEST_CASE("compare is a partial order on samples") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        AlphaArray a = random_alpha(8, rng);
        AlphaArray b = dominate(a, rng, 4);
        AlphaArray c = dominate(b, rng, 4);
        CHECK(compare(a, a) == MajorizationVerdict::Equal);
        // Antisymmetry of the verdicts.
        auto ab = compare(a, b);
        auto ba = compare(b, a);
        if (ab == MajorizationVerdict::Less) CHECK(ba == MajorizationVerdict::Greater);
        if (ab == MajorizationVerdict::Equal) CHECK(ba == MajorizationVerdict::Equal);
        // Transitivity along the constructed dominance chain.
        if (ab == MajorizationVerdict::Less &&
            compare(b, c) == MajorizationVerdict::Less)
            CHECK(compare(a, c) == MajorizationVerdict::Less);
    }
}

TEST_CASE("dominance orders all three statistics") {
    std::mt19937_64 rng(29);
    for (int n : {6, 10, 20}) {
        for (int trial = 0; trial < 500; ++trial) {
            AlphaArray a = random_alpha(n, rng);
            AlphaArray b = dominate(a, rng, n);
            if (compare(a, b) != MajorizationVerdict::Less) continue;
            CHECK(diameter(a) >= diameter(b));
            CHECK(mean_distance(a) >= mean_distance(b));
            CHECK(median_distance(a) >= median_distance(b));
        }
    }
}

TEST_CASE("smaller_world_than") {
    auto chain4 = alpha_array(chain(4));
    auto star4 = alpha_array(star(4));
    CHECK(smaller_world_than(chain4, star4));  // the star is the smaller world
    CHECK_FALSE(smaller_world_than(star4, chain4));
    CHECK_FALSE(smaller_world_than(chain4, chain4));

    auto af = make_alpha(6, {6, 4, 3, 2, 0});
    auto af2 = make_alpha(6, {5, 6, 4, 0, 0});
    CHECK_FALSE(smaller_world_than(af, af2));
    CHECK_FALSE(smaller_world_than(af2, af));
}
