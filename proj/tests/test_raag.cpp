#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "raagobs/errors.hpp"
#include "raagobs/raag.hpp"

using namespace raagobs;
using testing::share;

namespace {

auto k2() { return share(testing::labelled(2, {{0, 1}}, {"a", "b"})); }
auto pair() { return share(testing::labelled(2, {}, {"a", "b"})); }
auto p3() { return share(testing::labelled(3, {{0, 1}, {1, 2}}, {"a", "b", "c"})); }

std::string nf(const std::shared_ptr<const Graph>& g, const char* w) { return to_string(normal_form(parse_word(g, w))); }

}  // namespace

TEST_CASE("parsing and printing words") {
    auto g = k2();
    auto w = parse_word(g, "a^1 b^-2 a");
    CHECK(w.syllables().size() == 3);
    CHECK(to_string(w) == "a^1 b^-2 a^1");
    CHECK(parse_word(g, "").empty());
    CHECK(parse_word(g, "1").empty());
    CHECK_THROWS_AS(parse_word(g, "a^0"), ParseError);
    CHECK_THROWS_AS(parse_word(g, "c"), ParseError);
    CHECK_THROWS_AS(parse_word(g, "a^"), ParseError);
    CHECK_THROWS_AS(parse_word(g, "a^x"), ParseError);
    CHECK(to_string(parse_word(g, "a^123456789012345678901234567890")) == "a^123456789012345678901234567890");
    CHECK_THROWS_AS(RaagWord(g, {{5, 1}}), Error);
}

TEST_CASE("normal forms") {
    CHECK(nf(k2(), "a b a^-1 b") == "b^2");
    CHECK(nf(pair(), "a b a^-1") == "a^1 b^1 a^-1");
    // c commutes with b, so c b c^-1 collapses to b, which then commutes
    // past a: the whole word is b.
    CHECK(nf(p3(), "a c b c^-1 a^-1") == "b^1");
    CHECK(nf(p3(), "a c a^-1") == "a^1 c^1 a^-1");
    CHECK(nf(k2(), "b a") == "a^1 b^1");
    CHECK(nf(k2(), "") == "");
    CHECK(nf(p3(), "c a") == "c^1 a^1");
    CHECK(nf(p3(), "c b") == "b^1 c^1");
    CHECK(nf(pair(), "b a") == "b^1 a^1");
}

TEST_CASE("support") {
    CHECK(support(parse_word(k2(), "")).empty());
    CHECK(support(parse_word(k2(), "a b a^-1 b")) == std::vector<Vertex>{1});
    CHECK(support(parse_word(p3(), "a b c b^-1")) == std::vector<Vertex>{0, 2});
    CHECK(exponent_mass(parse_word(k2(), "a^2 b^-3")) == 5);
}

TEST_CASE("commutation") {
    auto a = [](auto g, const char* w) { return parse_word(g, w); };
    CHECK(commutes(a(k2(), "a"), a(k2(), "b")));
    CHECK_FALSE(commutes(a(pair(), "a"), a(pair(), "b")));
    CHECK_FALSE(commutes(a(p3(), "a b"), a(p3(), "b c")));
    CHECK(commutes(a(p3(), "a b"), a(p3(), "b")));
    CHECK(commutes(a(pair(), "a b"), a(pair(), "a b a b")));
    CHECK_THROWS_AS(commutes(a(k2(), "a"), a(pair(), "a")), Error);
    CHECK_THROWS_AS(a(k2(), "a") * a(pair(), "a"), Error);
}

TEST_CASE("group operations") {
    auto g = p3();
    auto w = parse_word(g, "a^2 c^-1 b a");
    CHECK(normal_form(w * w.inverse()).empty());
    CHECK(same_element(w.power(3), w * w * w));
    CHECK(normal_form(w.power(0)).empty());
    CHECK(same_element(w.power(-2), (w * w).inverse()));
    CHECK(same_element(parse_word(g, "a b"), parse_word(g, "b a")));
    CHECK_FALSE(same_element(parse_word(g, "a c"), parse_word(g, "c a")));
}

TEST_CASE("normal form agrees with the rewriting oracle") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> len(0, 5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 4;
        auto g = share(oracle::random_graph(n, 0.5, rng));
        std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
        std::bernoulli_distribution sign(0.5);
        oracle::Letters x, y;
        for (int i = len(rng); i > 0; --i) x.push_back(sign(rng) ? letter(rng) : -letter(rng));
        for (int i = len(rng); i > 0; --i) y.push_back(sign(rng) ? letter(rng) : -letter(rng));
        auto wx = testing::to_word(g, x);
        auto wy = testing::to_word(g, y);

        const auto spellings = oracle::reduced_spellings(*g, x);
        auto reduced = testing::to_letters(normal_form(wx));
        CHECK(spellings.count(reduced) == 1);

        auto expected = oracle::support(*g, x);
        auto got = support(wx);
        CHECK(std::vector<Vertex>(expected.begin(), expected.end()) == got);

        CHECK(same_element(wx, wy) == oracle::same_element(*g, x, y));
        CHECK((normal_form(wx) == normal_form(wy)) == oracle::same_element(*g, x, y));

        auto z = x;
        const int l = letter(rng);
        const auto at = std::uniform_int_distribution<std::size_t>(0, z.size())(rng);
        z.insert(z.begin() + static_cast<std::ptrdiff_t>(at), {l, -l});
        REQUIRE(oracle::same_element(*g, x, z));
        CHECK(normal_form(testing::to_word(g, z)) == normal_form(wx));
    }
}
