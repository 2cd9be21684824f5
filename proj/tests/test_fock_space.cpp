#include <doctest.h>

#include "fock_space.hpp"

using namespace fockproj;

TEST_CASE("per-mode dimensions") {
    CHECK(FockSpace::per_mode({5})->dimension() == 6);
    CHECK(FockSpace::per_mode({3, 3})->dimension() == 16);
    CHECK(FockSpace::per_mode({1, 2, 3})->dimension() == 24);
    CHECK(FockSpace::per_mode({0})->dimension() == 1);
}

TEST_CASE("total-quanta dimension matches exhaustive enumeration") {
    // oracle: count admissible occupation vectors directly
    auto count = [](int modes, int nmax) {
        long n = 0;
        std::vector<int> occ(modes, 0);
        while (true) {
            int total = 0;
            for (int v : occ) total += v;
            if (total <= nmax) ++n;
            int j = modes - 1;
            while (j >= 0 && ++occ[j] > nmax) occ[j--] = 0;
            if (j < 0) break;
        }
        return n;
    };
    CHECK(FockSpace::total_quanta(2, 4)->dimension() == count(2, 4));
    CHECK(FockSpace::total_quanta(2, 4)->dimension() == 15);  // C(6,2)
    CHECK(FockSpace::total_quanta(3, 5)->dimension() == count(3, 5));
    CHECK(FockSpace::total_quanta(1, 7)->dimension() == 8);
}

TEST_CASE("index map round trips") {
    for (SpacePtr space : {FockSpace::per_mode({4, 2, 3}), FockSpace::total_quanta(3, 6),
                           FockSpace::per_mode({12}), FockSpace::total_quanta(2, 20)}) {
        for (Index i = 0; i < space->dimension(); ++i)
            CHECK(space->flat_index(space->occupations(i)) == i);
    }
}

TEST_CASE("states are graded on total-quanta spaces") {
    SpacePtr space = FockSpace::total_quanta(2, 5);
    int last_total = 0;
    for (Index i = 0; i < space->dimension(); ++i) {
        const auto& occ = space->occupations(i);
        int total = occ[0] + occ[1];
        CHECK(total >= last_total);
        last_total = total;
    }
}

TEST_CASE("rejects bad constructions") {
    CHECK_THROWS_AS(FockSpace::per_mode({}), Error);
    CHECK_THROWS_AS(FockSpace::per_mode({-1}), Error);
    CHECK_THROWS_AS(FockSpace::total_quanta(0, 4), Error);
    CHECK_THROWS_AS(FockSpace::total_quanta(2, -1), Error);
}

TEST_CASE("dimension ceiling") {
    CHECK_THROWS_AS(FockSpace::per_mode({999, 999}), Error);
    CHECK_THROWS_AS(FockSpace::per_mode(std::vector<int>(10, 9)), Error);
    CHECK(FockSpace::per_mode({999, 99}, 200000)->dimension() == 100000);
}

TEST_CASE("membership and interior classification") {
    SpacePtr tq = FockSpace::total_quanta(2, 4);
    CHECK(tq->contains(std::vector<int>{2, 2}));
    CHECK(!tq->contains(std::vector<int>{3, 2}));
    CHECK(!tq->contains(std::vector<int>{-1, 0}));
    CHECK(tq->interior(tq->flat_index(std::vector<int>{1, 2})));
    CHECK(!tq->interior(tq->flat_index(std::vector<int>{2, 2})));

    SpacePtr pm = FockSpace::per_mode({3, 3});
    CHECK(pm->interior(pm->flat_index(std::vector<int>{2, 2})));
    CHECK(!pm->interior(pm->flat_index(std::vector<int>{3, 0})));
    CHECK(pm->interior_states().size() == 9);
}
