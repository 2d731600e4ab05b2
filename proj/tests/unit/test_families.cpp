#include <dindex/families.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <doctest.h>

using namespace dindex;

TEST_CASE("generators")
{
    auto f2 = gen_friendship(2);
    CHECK(f2.order() == 5);
    CHECK(f2.size() == 6);
    CHECK(f2.degree(0) == 4);

    auto k23 = degree_stats(gen_complete_bipartite(2, 3));
    auto d = k23.degrees;
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<int>{2, 2, 2, 3, 3});

    CHECK(gen_petersen().size() == 15);
    int offsets[] = {1, 2};
    auto circ = gen_circulant(8, offsets);
    CHECK(degree_stats(circ).regular_k == 4);

    CHECK_THROWS_AS(gen_cycle(2), Error);
    CHECK_THROWS_AS(gen_friendship(0), Error);
    CHECK_THROWS_AS(gen_random_regular(7, 3, 1), Error);  // nk odd
    CHECK_THROWS_AS(gen_random_regular(5, 5, 1), Error);  // k >= n
}

TEST_CASE("random regular graphs are simple, connected and regular")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = gen_random_regular(12, 5, seed);
        CHECK(g.order() == 12);
        CHECK(degree_stats(g).regular_k == 5);
        CHECK(is_connected(g));
        CHECK(g.size() == 30);
    }
    CHECK(gen_random_regular(20, 3, 9) == gen_random_regular(20, 3, 9));
}

TEST_CASE("path and cycle formulas")
{
    CHECK(formula_cycle(5) == 3);
    CHECK(formula_cycle(6) == 2);
    CHECK(formula_path(7) == 2);
    CHECK_THROWS_AS(formula_path(2), Error);
    for (int n = 3; n <= 8; ++n) {
        CHECK(exact_distinguishing_index(gen_path(n)).dprime == formula_path(n));
        CHECK(exact_distinguishing_index(gen_cycle(n)).dprime == formula_cycle(n));
    }
}

TEST_CASE("friendship formula")
{
    CHECK(formula_friendship(2) == 2);
    CHECK(formula_friendship(3) == 3);
    CHECK(formula_friendship(10) == 4);
    CHECK_THROWS_AS(formula_friendship(1), Error);
    for (int n = 2; n <= 4; ++n)
        CHECK(exact_distinguishing_index(gen_friendship(n)).dprime == formula_friendship(n));
}

TEST_CASE("friendship predicate matches the Cardano expression")
{
    using Float = boost::multiprecision::cpp_bin_float_50;
    const Float third = Float(1) / 3;
    const Float tol("1e-30");
    for (std::int64_t n = 2; n <= 1'000'000; ++n) {
        Float nn = n;
        Float a = 1 + 27 * nn + 3 * boost::multiprecision::sqrt(81 * nn * nn + 6 * nn);
        Float root = boost::multiprecision::cbrt(a);
        Float t = root / 3 + 1 / (3 * root) + third;
        // Exact integer roots land within rounding of an integer; snap them.
        Float nearest = boost::multiprecision::round(t);
        Float value = boost::multiprecision::abs(t - nearest) < tol ? nearest : boost::multiprecision::ceil(t);
        if (value.convert_to<long long>() != formula_friendship(n)) {
            FAIL("mismatch at n=" << n);
            break;
        }
    }
}

TEST_CASE("complete bipartite formula")
{
    auto k24 = formula_complete_bipartite(2, 4);
    CHECK(k24.kind == BipartiteCase::high);
    CHECK(k24.r == 2);
    CHECK(k24.exact());
    CHECK(k24.lo == 3);

    auto k23 = formula_complete_bipartite(2, 3);
    CHECK(k23.kind == BipartiteCase::boundary);
    CHECK(k23.resolved_exactly);
    CHECK(k23.lo == 2);
    CHECK(k23.exact());

    auto k33 = formula_complete_bipartite(3, 3);
    CHECK(k33.kind == BipartiteCase::balanced);
    CHECK(k33.exact());
    CHECK(k33.lo == 3);

    // Out of exact range: the balanced case only claims a lower bound.
    auto k55 = formula_complete_bipartite(5, 5);
    CHECK(k55.kind == BipartiteCase::balanced);
    CHECK_FALSE(k55.hi);

    auto star = formula_complete_bipartite(1, 6);
    CHECK(star.kind == BipartiteCase::star);
    CHECK(star.lo == 6);
    CHECK(star.exact());

    auto wide = formula_complete_bipartite(3, 30);  // r = 4, 64 - 1 = 63 > 30
    CHECK(wide.kind == BipartiteCase::low);
    CHECK(wide.lo == 4);

    CHECK_THROWS_AS(formula_complete_bipartite(3, 2), Error);
    CHECK_THROWS_AS(formula_complete_bipartite(1, 1), Error);
}

TEST_CASE("bipartite case classification is exhaustive")
{
    for (int p = 2; p <= 6; ++p)
        for (int q = p + 1; q <= 200; ++q) {
            auto r = formula_complete_bipartite(p, q, 0);
            int rr = r.r;
            std::int64_t pw = 1;
            for (int i = 0; i < p; ++i)
                pw *= rr;
            std::int64_t th = pw - ceil_log(rr, p);
            int hits = (q <= th - 1) + (q >= th + 1) + (q == th);
            CHECK(hits == 1);
            if (q <= th - 1)
                CHECK(r.kind == BipartiteCase::low);
            else if (q >= th + 1)
                CHECK(r.kind == BipartiteCase::high);
            else
                CHECK(r.kind == BipartiteCase::boundary);
        }
}

TEST_CASE("ceil_log")
{
    CHECK(ceil_log(2, 1) == 0);
    CHECK(ceil_log(2, 2) == 1);
    CHECK(ceil_log(2, 3) == 2);
    CHECK(ceil_log(3, 9) == 2);
    CHECK(ceil_log(3, 10) == 3);
}

TEST_CASE("family formulas match the solver where it is cheap")
{
    for (int n = 3; n <= 6; ++n)
        CHECK(exact_distinguishing_index(gen_complete(n)).dprime == (n <= 5 ? 3 : 2));
    for (int p = 2; p <= 3; ++p)
        for (int q = p; p * q <= 12; ++q) {
            auto f = formula_complete_bipartite(p, q);
            REQUIRE(f.exact());
            CHECK(exact_distinguishing_index(gen_complete_bipartite(p, q)).dprime == f.lo);
        }
}
