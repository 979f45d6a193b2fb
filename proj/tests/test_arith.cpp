#include "etaforms/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace etaforms;

namespace {

Rat random_rat(std::mt19937_64& rng, long long hi = 20) {
    std::uniform_int_distribution<long long> num(-hi, hi);
    std::uniform_int_distribution<long long> den(1, 12);
    return Rat(Bigint(num(rng)), Bigint(den(rng)));
}

CycNum random_cyc(std::mt19937_64& rng, long long hi = 20) {
    return CycNum(random_rat(rng, hi), random_rat(rng, hi), random_rat(rng, hi), random_rat(rng, hi));
}

} // namespace

TEST_CASE("Rat basics") {
    CHECK(Rat(Bigint(6), Bigint(-4)) == Rat(Bigint(-3), Bigint(2)));
    CHECK(Rat(Bigint(0), Bigint(7)) == Rat(0));
    CHECK((Rat(1) / Rat(3) + Rat(2) / Rat(3)) == Rat(1));
    CHECK(Rat::parse("-3/2").str() == "-3/2");
    CHECK(Rat::parse("5") == Rat(5));
    CHECK_THROWS(Rat(1) / Rat(0));
    CHECK(Rat(Bigint(1), Bigint(3)) < Rat(Bigint(1), Bigint(2)));
}

TEST_CASE("i, sqrt2 and the paper's zeta_8 constant") {
    CycNum i = CycNum::i();
    CHECK(i * i == CycNum(-1));
    CycNum s2 = CycNum::sqrt2();
    CHECK(s2 * s2 == CycNum(2));
    CycNum is2 = CycNum::i_sqrt2();
    CHECK(is2 * is2 == CycNum(-2));
    CHECK(i * s2 == is2);

    // sqrt(2)*i / (1 - i) = zeta^3, a primitive 8th root of unity
    CycNum z = is2 / (CycNum(1) - i);
    CHECK(z == CycNum::zeta_pow(3));
    CHECK(z * z * z * z == CycNum(-1));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(12345);
    for (int n = 0; n < 1000; ++n) {
        CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
    }
}

TEST_CASE("to_complex is a ring homomorphism up to float tolerance") {
    std::mt19937_64 rng(777);
    for (int n = 0; n < 400; ++n) {
        CycNum a = random_cyc(rng, 1000), b = random_cyc(rng, 1000);
        auto za = a.to_complex(), zb = b.to_complex();
        CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-12 * (1 + std::abs(za) + std::abs(zb)));
        CHECK(std::abs((a * b).to_complex() - (za * zb)) <
              1e-12 * (1 + std::abs(za)) * (1 + std::abs(zb)));
    }
    CHECK(std::abs(CycNum(1).to_complex() - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(CycNum::i().to_complex() - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(CycNum::sqrt2().to_complex().real() - 1.4142135623730951) < 1e-12);
    CHECK(std::abs(CycNum::sqrt2().to_complex().imag()) < 1e-15);
}

TEST_CASE("conjugation and norms") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 200; ++n) {
        CycNum a = random_cyc(rng);
        CHECK(a.conj().conj() == a);
        CycNum sq = a.abs_square();
        // x * conj(x) is real: its complex image has no imaginary part
        CHECK(std::abs(sq.to_complex().imag()) < 1e-9);
    }
    CHECK(CycNum::i_sqrt2().abs_square() == CycNum(2));
    CHECK(CycNum(2).abs_square() == CycNum(4));
}

TEST_CASE("tuple serialization round trip") {
    std::mt19937_64 rng(99);
    for (int n = 0; n < 100; ++n) {
        CycNum a = random_cyc(rng);
        CHECK(CycNum::from_tuple(a.to_tuple()) == a);
        CHECK(CycNum::parse(a.str()) == a);
    }
    CHECK(CycNum::i_sqrt2().pretty() == "i*sqrt(2)");
    CHECK((-CycNum(2)).pretty() == "-2");
    CHECK(CycNum().pretty() == "0");
}
