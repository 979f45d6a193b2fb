#include "etaforms/artin.hpp"
#include "etaforms/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace etaforms;
using artin::LocalFactor;

TEST_CASE("prime_power_coeffs: frozen recursions") {
    // trace 0, det 1: 1, 0, -1, 0, 1, ...
    auto a = artin::prime_power_coeffs(LocalFactor{5, CycNum(), CycNum(1)}, 6);
    std::vector<long long> expect0{1, 0, -1, 0, 1, 0, -1};
    for (std::size_t k = 0; k <= 6; ++k) CHECK(a[k] == CycNum(expect0[k]));

    // trace 2, det 1: a(p^r) = r + 1
    auto b = artin::prime_power_coeffs(LocalFactor{5, CycNum(2), CycNum(1)}, 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(b[k] == CycNum(static_cast<long long>(k) + 1));

    // det 0: geometric in the trace
    auto c = artin::prime_power_coeffs(LocalFactor{2, CycNum::i_sqrt2(), CycNum()}, 4);
    CycNum t = CycNum(1);
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(c[k] == t);
        t = t * CycNum::i_sqrt2();
    }
}

TEST_CASE("prime_power_coeffs agrees with series inversion of the quadratic") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> v(-3, 3);
    for (int t = 0; t < 50; ++t) {
        CycNum trace(Rat(Bigint(v(rng)), Bigint(2)));
        CycNum det(v(rng));
        const long long rmax = 12;
        auto direct = artin::prime_power_coeffs(LocalFactor{3, trace, det}, rmax);
        QSeries quad = QSeries::zero(1, rmax + 1);
        quad.coefficient_mut(0) = CycNum(1);
        quad.coefficient_mut(1) = -trace;
        quad.coefficient_mut(2) = det;
        QSeries inv = invert(quad);
        for (long long k = 0; k <= rmax; ++k) CHECK(direct[k] == inv.coefficient(k));
    }
}

TEST_CASE("dirichlet_from_euler: assembly and errors") {
    std::map<long long, LocalFactor> factors;
    for (long long p : {2, 3}) factors[p] = LocalFactor{p, CycNum(), CycNum(1)};
    auto a = artin::dirichlet_from_euler(factors, 4);
    REQUIRE(a.size() == 4);
    CHECK(a[0] == CycNum(1));
    CHECK(a[1] == CycNum());
    CHECK(a[2] == CycNum());
    CHECK(a[3] == CycNum(-1));  // a(4) = -1 from the p = 2 factor

    CHECK(artin::dirichlet_from_euler(factors, 1) == std::vector<CycNum>{CycNum(1)});

    CHECK_THROWS_WITH(artin::dirichlet_from_euler(factors, 10),
                      Catch::Matchers::ContainsSubstring("p = 5"));
}

TEST_CASE("dirichlet multiplicativity on random factors") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long long> v(-2, 2);
    const long long nmax = 600;
    std::map<long long, LocalFactor> factors;
    for (long long p : primes_up_to(nmax))
        factors[p] = LocalFactor{p, CycNum(v(rng)), CycNum(v(rng))};
    auto a = artin::dirichlet_from_euler(factors, nmax);
    int cases = 0;
    std::uniform_int_distribution<long long> pick(1, nmax);
    while (cases < 1000) {
        long long m = pick(rng), n = pick(rng);
        if (m * n > nmax || std::gcd(m, n) != 1) continue;
        REQUIRE(a[m * n - 1] == a[m - 1] * a[n - 1]);
        ++cases;
    }
}

TEST_CASE("compare") {
    QSeries f = QSeries::zero(1, 20);
    for (long long n = 1; n < 20; ++n) f.coefficient_mut(n) = CycNum(n % 3);
    std::vector<CycNum> d;
    for (long long n = 1; n < 20; ++n) d.push_back(CycNum(n % 3));
    auto rep = artin::compare(f, d, 19);
    CHECK(rep.pass());
    CHECK(rep.checked_upto == 19);

    d[6] = CycNum(7);  // index n = 7
    auto rep2 = artin::compare(f, d, 19);
    CHECK_FALSE(rep2.pass());
    REQUIRE(rep2.mismatches.size() == 1);
    CHECK(rep2.mismatches[0] == 7);

    CHECK_THROWS(artin::compare(f, d, 25));  // precision shortfall
}

TEST_CASE("unramified local factors with unit eigenvalues satisfy the Weil shape") {
    // |a(p^r)| <= r + 1 for det = +-1 and trace from the correspondence tables
    std::vector<CycNum> traces{CycNum(2),  CycNum(-2),          CycNum(1),       CycNum(-1),
                               CycNum(),   CycNum::i_sqrt2(),   -CycNum::i_sqrt2(),
                               CycNum::i(), CycNum(2) * CycNum::i(), CycNum::sqrt2()};
    for (const CycNum& t : traces) {
        for (int det : {-1, 1}) {
            // the pair (trace, det) must come from a unitary matrix: skip
            // combinations with |trace|^2 > 4 (impossible) or inconsistent
            // reality; the table pairs all satisfy trace/conj(trace) = det
            if (!(t.is_zero()) && !(t / t.conj() == CycNum(det))) continue;
            auto a = artin::prime_power_coeffs(LocalFactor{7, t, CycNum(det)}, 10);
            for (std::size_t r = 0; r < a.size(); ++r)
                CHECK(std::abs(a[r].to_complex()) <= static_cast<double>(r) + 1 + 1e-9);
        }
    }
}
