#include "etaforms/classify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace etaforms;
using classify::CDistribution;
using classify::Verdict;

namespace {

Rat frac(long long a, long long b) { return Rat(Bigint(a), Bigint(b)); }

CDistribution dist(std::initializer_list<std::pair<CycNum, Rat>> entries, long long samples = 1000) {
    CDistribution d;
    d.samples = samples;
    for (auto& [c, p] : entries) d.proportions[c] = p;
    return d;
}

} // namespace

TEST_CASE("c_value") {
    CHECK(classify::c_value(CycNum(2), 1) == CycNum(4));
    CHECK(classify::c_value(CycNum(), -1) == CycNum());
    CHECK(classify::c_value(CycNum::i_sqrt2(), -1) == CycNum(2));
    CHECK(classify::c_value(CycNum::i(), -1) == CycNum(1));
    CHECK_THROWS(classify::c_value(CycNum(1), 0));
}

TEST_CASE("exact reference rows classify to themselves") {
    auto s4 = classify::classify(dist({{CycNum(4), frac(1, 24)},
                                       {CycNum(), frac(3, 8)},
                                       {CycNum(1), frac(1, 3)},
                                       {CycNum(2), frac(1, 4)}}));
    CHECK(s4.verdict == Verdict::S4);
    CHECK(s4.tv_distance == Rat(0));

    auto a4 = classify::classify(dist({{CycNum(4), frac(1, 12)},
                                       {CycNum(), frac(1, 4)},
                                       {CycNum(1), frac(2, 3)}}));
    CHECK(a4.verdict == Verdict::A4);
}

TEST_CASE("dihedral threshold") {
    // the quaternion shape: three quarters of the classes have trace zero
    auto q8 = classify::classify(dist({{CycNum(), frac(3, 4)}, {CycNum(4), frac(1, 4)}}));
    CHECK(q8.verdict == Verdict::DIHEDRAL);
    CHECK(q8.dihedral_mass == frac(3, 4));

    // order-16 dihedral shape
    auto d16 = classify::classify(
        dist({{CycNum(), frac(5, 8)}, {CycNum(4), frac(1, 8)}, {CycNum(2), frac(1, 4)}}));
    CHECK(d16.verdict == Verdict::DIHEDRAL);
}

TEST_CASE("perturbed rows stay within tolerance, garbage does not") {
    auto near_s4 = classify::classify(dist({{CycNum(4), frac(5, 100)},
                                            {CycNum(), frac(37, 100)},
                                            {CycNum(1), frac(33, 100)},
                                            {CycNum(2), frac(25, 100)}}));
    CHECK(near_s4.verdict == Verdict::S4);
    CHECK(near_s4.tv_distance <= frac(1, 10));

    auto garbage = classify::classify(
        dist({{CycNum(4), frac(1, 4)}, {CycNum(1), frac(1, 4)}, {CycNum(2), frac(1, 2)}}));
    CHECK(garbage.verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("undersized samples are rejected") {
    CHECK_THROWS(classify::classify(dist({{CycNum(), Rat(1)}}, 99)));
    CHECK_NOTHROW(classify::classify(dist({{CycNum(), Rat(1)}}, 100)));
}

TEST_CASE("empirical_c on a synthetic coefficient stream") {
    // all a_p = 0 away from the excluded primes: the distribution is {0: 1}
    QSeries f = QSeries::zero(1, 200);
    f.coefficient_mut(1) = CycNum(1);
    auto d = classify::empirical_c(f, -4, 199, {2});
    CHECK(d.proportions.size() == 1);
    CHECK(d.proportions.at(CycNum()) == Rat(1));
    CHECK(d.samples > 0);

    CHECK_THROWS(classify::empirical_c(f, -4, 500, {2}));  // precision shortfall
    CHECK_THROWS(classify::empirical_c(f, -4, 199, {}));   // chi(2) = 0 unexcluded
}
