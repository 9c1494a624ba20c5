#include "support.hpp"

#include <map>

#include "qkwc/novikov.hpp"

using namespace qkwc;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> xs)
{
    return xs;
}

} // namespace

TEST_CASE("walls")
{
    const ConeSpec integral(R({1}), 10);
    CHECK(walls(integral, 3) == R({1, Rational(1, 2), Rational(1, 3)}));
    CHECK(walls(integral, 1) == R({1}));
    const ConeSpec half(R({Rational(1, 2)}), 10);
    CHECK(walls(half, 1) == R({2, 1}));
    const ConeSpec two(R({1, Rational(3, 2)}), 10);
    for (int d = 1; d <= 5; ++d) {
        CHECK(walls(two, d).size() == two.attainable_degrees(d).size());
    }
    CHECK_THROWS_AS(walls(integral, 0), invalid_input);
}

TEST_CASE("ordered decompositions")
{
    const ConeSpec rank1(R({1}), 10);
    const auto d = ordered_decompositions(rank1, {2}, 1);
    REQUIRE(d.size() == 2);
    CHECK(d[0].rest == CurveClass{1});
    CHECK(d[0].tails == std::vector<CurveClass>{{1}});
    CHECK(d[1].rest == CurveClass{0});
    CHECK(d[1].tails == std::vector<CurveClass>{{1}, {1}});
    CHECK(ordered_decompositions(rank1, {1}, 2).empty());

    const ConeSpec rank2(R({1, 1}), 10);
    const auto e = ordered_decompositions(rank2, {1, 1}, 1);
    REQUIRE(e.size() == 4);
    CHECK(e[0].rest == CurveClass{1, 0});
    CHECK(e[0].tails == std::vector<CurveClass>{{0, 1}});
    CHECK(e[1].rest == CurveClass{0, 1});
    CHECK(e[1].tails == std::vector<CurveClass>{{1, 0}});
    CHECK(e[2].rest == CurveClass{0, 0});
    CHECK(e[2].tails == std::vector<CurveClass>{{0, 1}, {1, 0}});
    CHECK(e[3].tails == std::vector<CurveClass>{{1, 0}, {0, 1}});
}

TEST_CASE("orbit and stabilizer")
{
    auto os = orbit_stabilizer({{1}, {1}});
    CHECK(os.orbit_size == 1);
    CHECK(os.stabilizer_order == 2);
    os = orbit_stabilizer({{1, 0}, {0, 1}});
    CHECK(os.orbit_size == 2);
    CHECK(os.stabilizer_order == 1);
    os = orbit_stabilizer({{1, 0}, {1, 0}, {0, 1}});
    CHECK(os.orbit_size == 3);
    CHECK(os.stabilizer_order == 2);
}

TEST_CASE("orbit sizes add up to the ordered count")
{
    const ConeSpec cone(R({1, 1, 2}), 10);
    for (const auto &beta : cone.classes_up_to(5)) {
        for (const auto &d0 : cone.attainable_degrees(2)) {
            const auto ordered = ordered_decompositions(cone, beta, d0);
            std::map<std::pair<CurveClass, std::vector<CurveClass>>, int> orbits;
            for (auto dec : ordered) {
                std::sort(dec.tails.begin(), dec.tails.end());
                orbits[{dec.rest, dec.tails}] += 1;
            }
            Integer total = 0;
            for (const auto &[key, count] : orbits) {
                const auto os = orbit_stabilizer(key.second);
                REQUIRE(os.orbit_size == count);
                Integer kf = 1;
                for (std::size_t i = 2; i <= key.second.size(); ++i) {
                    kf *= static_cast<unsigned long>(i);
                }
                REQUIRE(os.orbit_size * os.stabilizer_order == kf);
                total += os.orbit_size;
            }
            REQUIRE(total == static_cast<long>(ordered.size()));
        }
    }
}

TEST_CASE("novikov arithmetic")
{
    auto ring = make_ring({{"nu", 2}});
    const QRational one(QLaurent(RingElem(ring, 1)));
    auto cone1 = std::make_shared<const ConeSpec>(R({1}), 1);
    NovikovSeries a(cone1, ring), b(cone1, ring);
    a.add_term({0}, one);
    a.add_term({1}, one);
    b.add_term({0}, one);
    b.add_term({1}, -one);
    CHECK(a * b == NovikovSeries::one(cone1, ring));
    CHECK(a * NovikovSeries::one(cone1, ring) == a);

    auto cone2 = std::make_shared<const ConeSpec>(R({1, 1}), 2);
    NovikovSeries x(cone2, ring), y(cone2, ring), xy(cone2, ring);
    x.add_term({1, 0}, one);
    y.add_term({0, 1}, one);
    xy.add_term({1, 1}, one);
    CHECK(x * y == xy);

    auto other = std::make_shared<const ConeSpec>(R({1}), 2);
    CHECK_THROWS_AS(a + NovikovSeries(other, ring), spec_mismatch);
}

TEST_CASE("truncated products associate")
{
    auto ring = make_ring({{"nu", 2}}, {"L"});
    auto cone = std::make_shared<const ConeSpec>(R({1, 2}), 3);
    const RingElem L = RingElem::generator(ring, "L");
    auto series = [&](int seed) {
        NovikovSeries s(cone, ring);
        for (const auto &beta : cone->classes_up_to(3)) {
            const int e = (seed + beta[0] * 3 + beta[1] * 5) % 4;
            s.add_term(beta, QRational::pole(pow(L, e - 2), 1 + e % 2, L));
        }
        return s;
    };
    const auto A = series(1), B = series(2), C = series(3);
    CHECK((A * B) * C == A * (B * C));
}
