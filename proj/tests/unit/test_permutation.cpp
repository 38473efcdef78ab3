#include "schurweyl/error.hpp"
#include "schurweyl/permutation.hpp"

#include <doctest.h>

#include <random>

using namespace schurweyl;

namespace {

int inversions(const Permutation &s) {
    int count = 0;
    for (int a = 1; a <= s.size(); ++a)
        for (int b = a + 1; b <= s.size(); ++b)
            count += s(a) > s(b);
    return count;
}

Permutation from_factorization(int n, const std::vector<int> &f) {
    Permutation out(n);
    for (int k : f)
        out = out * Permutation::transposition(n, k, k + 1);
    return out;
}

} // namespace

TEST_CASE("construction and evaluation") {
    const auto s = Permutation::from_images({2, 3, 1});
    CHECK(s(1) == 2);
    CHECK(s(3) == 1);
    CHECK(to_string(s) == "[2,3,1]");
    CHECK(Permutation::cycle(3, {1, 2, 3}) == s);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), InvalidArgument);
    CHECK(Permutation(4).is_identity());
}

TEST_CASE("composition is function composition") {
    const auto a = Permutation::transposition(3, 1, 2);
    const auto b = Permutation::transposition(3, 2, 3);
    const auto ab = a * b;
    for (int p = 1; p <= 3; ++p)
        CHECK(ab(p) == a(b(p)));
    CHECK((a * a).is_identity());
    CHECK((ab * ab.inverse()).is_identity());
}

TEST_CASE("sign, cycle type and factorization") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = Permutation::random(n, rng);
            CHECK(s.sign() == (inversions(s) % 2 ? -1 : 1));
            const auto f = s.adjacent_factorization();
            CHECK(static_cast<int>(f.size()) == inversions(s));
            CHECK(from_factorization(n, f) == s);
            int total = 0;
            for (int c : s.cycle_type())
                total += c;
            CHECK(total == n);
        }
}

TEST_CASE("embedding and enumeration") {
    const auto s = Permutation::transposition(2, 1, 2).embedded(4, 2);
    CHECK(s == Permutation::transposition(4, 3, 4));
    const std::vector<int> symbols{2, 4};
    const auto all = permutations_of(4, symbols);
    CHECK(all.size() == 2);
    CHECK(permutations_of(4, std::vector<int>{1, 2, 3, 4}).size() == 24);
}
