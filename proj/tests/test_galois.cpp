#include "etaforms/galois.hpp"
#include "etaforms/primes.hpp"
#include "etaforms/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace etaforms;
using galois::IntPoly;

namespace {

// oracle: Legendre symbol by Euler's criterion, for odd prime p
int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

IntPoly poly(std::initializer_list<long long> coeffs) {
    IntPoly h;
    for (long long c : coeffs) h.c.emplace_back(c);
    return h;
}

// oracle: resultant(f, g) by fraction-free Gaussian elimination of the
// Sylvester matrix (Bareiss)
Bigint resultant(const IntPoly& f, const IntPoly& g) {
    long long m = f.degree(), n = g.degree();
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Bigint>> s(size, std::vector<Bigint>(size, Bigint(0)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j <= m; ++j) s[i][i + j] = f.c[static_cast<std::size_t>(m - j)];
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j <= n; ++j) s[n + i][i + j] = g.c[static_cast<std::size_t>(n - j)];
    Bigint prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (s[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && s[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return Bigint(0);
            std::swap(s[k], s[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i)
            for (std::size_t j = k + 1; j < size; ++j)
                s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]) / prev;
        prev = s[k][k];
    }
    return sign * s[size - 1][size - 1];
}

Bigint discriminant(const IntPoly& h) {
    IntPoly d;
    for (std::size_t k = 1; k < h.c.size(); ++k) d.c.push_back(h.c[k] * static_cast<long long>(k));
    Bigint res = resultant(h, d);
    long long n = h.degree();
    Bigint lead = h.c[static_cast<std::size_t>(n)];
    Bigint disc = res / lead;
    if (((n * (n - 1) / 2) % 2) != 0) disc = -disc;
    return disc;
}

} // namespace

TEST_CASE("kronecker: values and conventions") {
    CHECK(galois::kronecker(-24, 1) == 1);
    CHECK(galois::kronecker(-24, 5) == 1);    // -24 = 1 mod 5, a square
    CHECK(galois::kronecker(-24, -1) == -1);  // odd character: chi(-1) = -1
    CHECK(galois::kronecker(-15, -1) == -1);
    CHECK(galois::kronecker(5, -1) == 1);
    CHECK(galois::kronecker(-24, 2) == 0);
    CHECK(galois::kronecker(-1, 2) == 1);   // -1 = 7 mod 8
    CHECK(galois::kronecker(-2, 29) == -1);
    CHECK(galois::kronecker(0, 1) == 1);
    CHECK(galois::kronecker(0, 5) == 0);
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> as(-300, 300);
    auto ps = primes_up_to(200);
    for (int t = 0; t < 500; ++t) {
        long long a = as(rng);
        long long p = ps[static_cast<std::size_t>(rng() % (ps.size() - 1)) + 1];  // odd primes
        CHECK(galois::kronecker(a, p) == legendre(a, p));
    }
}

TEST_CASE("kronecker is completely multiplicative in n") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> ds(-60, 60);
    std::uniform_int_distribution<long long> ns(1, 400);
    for (int t = 0; t < 1000; ++t) {
        long long d = ds(rng), m = ns(rng), n = ns(rng);
        CHECK(galois::kronecker(d, m * n) == galois::kronecker(d, m) * galois::kronecker(d, n));
    }
}

TEST_CASE("split_type: frozen small cases") {
    auto st1 = galois::split_type(poly({1, 0, 1}), 5);  // x^2+1 = (x+2)(x+3) mod 5
    REQUIRE(st1.has_value());
    CHECK(*st1 == galois::SplitType{1, 1});

    auto st2 = galois::split_type(poly({1, 0, 1}), 3);  // -1 is not a square mod 3
    REQUIRE(st2.has_value());
    CHECK(*st2 == galois::SplitType{2});

    auto st3 = galois::split_type(poly({-1, 1}), 7);  // x - 1
    REQUIRE(st3.has_value());
    CHECK(*st3 == galois::SplitType{1});

    // x^2+1 mod 2 = (x+1)^2: ramified
    CHECK_FALSE(galois::split_type(poly({1, 0, 1}), 2).has_value());

    CHECK_THROWS(galois::split_type(poly({1}), 5));
    CHECK_THROWS(galois::split_type(poly({1, 5}), 5));  // p divides the leading coefficient
}

TEST_CASE("split_type degrees sum to the degree") {
    std::mt19937_64 rng(44);
    auto ps = primes_up_to(1000);
    std::uniform_int_distribution<long long> cs(-20, 20);
    std::uniform_int_distribution<std::size_t> degs(1, 9);
    int checked = 0;
    for (int t = 0; t < 1200 && checked < 1000; ++t) {
        std::size_t deg = degs(rng);
        IntPoly h;
        for (std::size_t k = 0; k < deg; ++k) h.c.emplace_back(cs(rng));
        h.c.emplace_back(1);  // monic
        long long p = ps[rng() % ps.size()];
        auto st = galois::split_type(h, p);
        if (!st) continue;  // ramified
        long long sum = 0;
        for (int d : *st) sum += d;
        CHECK(sum == static_cast<long long>(deg));
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("ramified exactly at primes dividing the discriminant") {
    // the level-576 defining polynomials
    std::vector<IntPoly> polys = {poly({6, 0, 1}), poly({-2, 3, 0, 1}),
                                  poly({-6, 0, 88, 0, 42, 0, 12, 0, 1})};
    for (const IntPoly& h : polys) {
        Bigint disc = discriminant(h);
        REQUIRE(disc != 0);
        for (long long p : primes_up_to(500)) {
            bool ramified = !galois::split_type(h, p).has_value();
            CHECK(ramified == (disc % p == 0));
        }
    }
}

TEST_CASE("frobenius_order and splitting_count") {
    // all-degree-one factorizations give f_p = 1
    auto f = galois::frobenius_order({poly({-1, 1})}, 11);
    REQUIRE(f.has_value());
    CHECK(*f == 1);

    // lcm across polynomials: x^2+1 inert at 3, split at 5
    auto f2 = galois::frobenius_order({poly({1, 0, 1}), poly({-1, 1})}, 3);
    REQUIRE(f2.has_value());
    CHECK(*f2 == 2);

    CHECK(galois::splitting_count(48, 1) == 48);
    CHECK(galois::splitting_count(96, 12) == 8);
    CHECK(galois::splitting_count(7, 7) == 1);
    CHECK_THROWS(galois::splitting_count(48, 5));

    CHECK_FALSE(galois::frobenius_order({poly({1, 0, 1})}, 2).has_value());
    CHECK_THROWS(galois::frobenius_order({}, 5));
}

TEST_CASE("IntPoly parse and format") {
    IntPoly h = IntPoly::parse("-6, 0, 88, 0, 42, 0, 12, 0, 1");
    CHECK(h.degree() == 8);
    CHECK(h.str() == "-6,0,88,0,42,0,12,0,1");
    CHECK_THROWS(IntPoly::parse("0,0"));
}
