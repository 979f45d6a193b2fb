#include "etaforms/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace etaforms;

namespace {

QSeries random_series(std::mt19937_64& rng, long long scale, long long prec) {
    std::uniform_int_distribution<long long> val(-5, 5);
    std::vector<CycNum> c(static_cast<std::size_t>(prec));
    for (auto& x : c) x = CycNum(val(rng));
    return QSeries(scale, std::move(c));
}

// independent oracle: partition numbers by dynamic programming
std::vector<long long> partition_numbers(long long n) {
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (long long k = 1; k <= n; ++k)
        for (long long m = k; m <= n; ++m) p[m] += p[m - k];
    return p;
}

} // namespace

TEST_CASE("add, scalar_mul, zero laws") {
    std::mt19937_64 rng(5);
    QSeries f = random_series(rng, 1, 30);
    QSeries z = QSeries::zero(1, 30);
    CHECK(add(f, z).coefficients() == f.coefficients());
    CHECK(scalar_mul(CycNum(), f).coefficients() == z.coefficients());
    QSeries g = add(f, scalar_mul(CycNum(-1), f));
    CHECK(g.coefficients() == z.coefficients());
    CHECK_THROWS(add(f, QSeries::zero(2, 30)));
}

TEST_CASE("mul basics") {
    // (1 - u)(1 + u) = 1 - u^2
    QSeries a = QSeries::zero(1, 8);
    a.coefficient_mut(0) = CycNum(1);
    a.coefficient_mut(1) = CycNum(-1);
    QSeries b = QSeries::zero(1, 8);
    b.coefficient_mut(0) = CycNum(1);
    b.coefficient_mut(1) = CycNum(1);
    QSeries ab = mul(a, b);
    CHECK(ab.coefficient(0) == CycNum(1));
    CHECK(ab.coefficient(1) == CycNum());
    CHECK(ab.coefficient(2) == CycNum(-1));
    std::mt19937_64 rng(6);
    QSeries f = random_series(rng, 1, 20);
    CHECK(mul(QSeries::one(1, 20), f).coefficients() == f.coefficients());
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        QSeries f = random_series(rng, 1, 12), g = random_series(rng, 1, 12),
                h = random_series(rng, 1, 12);
        CHECK(mul(mul(f, g), h).coefficients() == mul(f, mul(g, h)).coefficients());
        CHECK(mul(f, add(g, h)).coefficients() == add(mul(f, g), mul(f, h)).coefficients());
    }
}

TEST_CASE("invert: geometric series and two-sided inverse") {
    QSeries f = QSeries::zero(1, 10);
    f.coefficient_mut(0) = CycNum(1);
    f.coefficient_mut(1) = CycNum(-1);
    QSeries inv = invert(f);
    for (long long n = 0; n < 10; ++n) CHECK(inv.coefficient(n) == CycNum(1));
    CHECK(invert(QSeries::one(1, 5)).coefficients() == QSeries::one(1, 5).coefficients());
    CHECK_THROWS(invert(QSeries::zero(1, 5)));

    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        QSeries g = random_series(rng, 1, 15);
        g.coefficient_mut(0) = CycNum(Rat(Bigint(2), Bigint(3)));
        QSeries gi = invert(g);
        CHECK(mul(g, gi).coefficients() == QSeries::one(1, 15).coefficients());
        CHECK(mul(gi, g).coefficients() == QSeries::one(1, 15).coefficients());
    }
}

TEST_CASE("invert of prod(1-u^n) generates partition numbers") {
    const long long N = 60;
    QSeries f = QSeries::one(1, N);
    for (long long k = 1; k < N; ++k) {
        QSeries factor = QSeries::one(1, N);
        factor.coefficient_mut(k) = CycNum(-1);
        f = mul(f, factor);
    }
    QSeries inv = invert(f);
    auto p = partition_numbers(N - 1);
    for (long long n = 0; n < N; ++n) CHECK(inv.coefficient(n) == CycNum(p[n]));
}

TEST_CASE("rescale") {
    QSeries f = QSeries::zero(1, 3);
    f.coefficient_mut(1) = CycNum(1);
    f.coefficient_mut(2) = CycNum(1);
    QSeries g = rescale(f, 2);  // u + u^2 -> u^2 + u^4
    CHECK(g.scale() == 1);
    CHECK(g.prec() == 5);
    CHECK(g.coefficient(2) == CycNum(1));
    CHECK(g.coefficient(4) == CycNum(1));
    CHECK(g.coefficient(1) == CycNum());
    CHECK(rescale(f, 1).coefficients() == f.coefficients());

    // scale collapse: a scale-24 series rescaled by 24 lands on the q-grid
    QSeries h = QSeries::zero(24, 30);
    h.coefficient_mut(25) = CycNum(7);
    QSeries hq = rescale(h, 24);
    CHECK(hq.scale() == 1);
    CHECK(hq.coefficient(25) == CycNum(7));

    // composition as abstract q-series
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        QSeries r = random_series(rng, 6, 10);
        CHECK(equal_as_q_series(rescale(rescale(r, 2), 3), rescale(r, 6)));
    }
}

TEST_CASE("coefficient access is precision sound") {
    QSeries f = QSeries::zero(1, 6);
    CHECK(f.coefficient(5) == CycNum());
    CHECK_THROWS_AS(f.coefficient(6), std::out_of_range);
    CHECK_THROWS_AS(f.coefficient(-1), std::out_of_range);
}

TEST_CASE("dump and parse round trip") {
    std::mt19937_64 rng(10);
    QSeries f = random_series(rng, 24, 40);
    std::ostringstream os;
    dump(f, os);
    std::istringstream is(os.str());
    QSeries g = parse_dump(is);
    CHECK(g.scale() == f.scale());
    CHECK(g.prec() == f.prec());
    CHECK(g.coefficients() == f.coefficients());
}
