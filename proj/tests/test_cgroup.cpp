#include <doctest.h>

#include <algorithm>
#include <random>

#include "calex/cgroup.hpp"
#include "calex/errors.hpp"

using namespace calex;

TEST_CASE("word reduction") {
    Word w = Word::letter(1) * Word::letter(1, -1);
    CHECK(w.is_identity());
    w = Word::letter(2, 3) * Word::letter(2, -1);
    CHECK(w == Word::letter(2, 2));
    CHECK(w.inverse() == Word::letter(2, -2));
    CHECK(w.exponent_sum() == 2);
    Word p = (Word::letter(1, -1) * Word::letter(3)).pow(-2);
    CHECK(p == Word::letter(3, -1) * Word::letter(1) * Word::letter(3, -1) * Word::letter(1));
    CHECK(Word::letter(1).pow(0).is_identity());
}

TEST_CASE("builtin g2 carries the stated relations") {
    CPresentation g = builtin_g2();
    CHECK(g.num_generators() == 4);
    // x2^2 x1 x2^-2 = x4
    ConjRelation want{4, 1, Word::letter(2, -2)};
    CHECK(std::count(g.relations().begin(), g.relations().end(), want) == 1);
    // x4^2 x2 x4^-2 = x2
    ConjRelation want2{2, 2, Word::letter(4, -2)};
    CHECK(std::count(g.relations().begin(), g.relations().end(), want2) == 1);
    CHECK(is_hurwitz_presentation(g));
}

TEST_CASE("builtin examples carry the stated relations") {
    CPresentation g = builtin_example_4_1();
    CHECK(g.num_generators() == 3);
    ConjRelation first{3, 2, Word::letter(1)};
    ConjRelation second{3, 2, Word::letter(3, -1) * Word::letter(1)};
    CHECK(std::count(g.relations().begin(), g.relations().end(), first) == 1);
    CHECK(std::count(g.relations().begin(), g.relations().end(), second) == 1);
    CHECK_FALSE(is_hurwitz_presentation(g));

    CHECK(builtin_free(1).relations().empty());
    CHECK(builtin_free(3).num_generators() == 3);
    CHECK(is_hurwitz_presentation(builtin_abelian(4)));
}

TEST_CASE("builtin lookup by name") {
    CHECK(builtin("g2") == builtin_g2());
    CHECK(builtin("free:2") == builtin_free(2));
    CHECK(builtin("abelian:3") == builtin_abelian(3));
    CHECK(builtin("example_4_2") == builtin_example_4_2());
    CHECK_THROWS_AS(builtin("nope"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin("free"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin("g2:7"), UnknownBuiltin);
}

TEST_CASE("irreducible components") {
    CHECK(irreducible_components(builtin_example_4_1()) == 2);
    CHECK(irreducible_components(builtin_example_4_2()) == 2);
    CHECK(irreducible_components(builtin_free(1)) == 1);
    CHECK(irreducible_components(builtin_free(4)) == 4);
    CHECK(irreducible_components(builtin_g2()) == 2);
    CHECK(irreducible_components(builtin_abelian(5)) == 5);
}

TEST_CASE("components are invariant under relabeling and reordering") {
    std::mt19937_64 rng(880011);
    for (const CPresentation& g :
         {builtin_g2(), builtin_example_4_1(), builtin_abelian(4)}) {
        int m = g.num_generators();
        std::vector<int> perm(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i + 1;
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<ConjRelation> rels;
            for (const ConjRelation& r : g.relations()) {
                Word w;
                for (const Letter& l : r.conjugator.letters())
                    w.append(perm[static_cast<size_t>(l.gen - 1)], l.exp);
                rels.push_back({perm[static_cast<size_t>(r.left - 1)],
                                perm[static_cast<size_t>(r.right - 1)], w});
            }
            std::shuffle(rels.begin(), rels.end(), rng);
            CHECK(irreducible_components(CPresentation(m, rels)) ==
                  irreducible_components(g));
        }
    }
}

TEST_CASE("hurwitz product meets the component count identity") {
    CPresentation a = builtin_g2(), b = builtin_abelian(1);
    CPresentation p = hurwitz_product(a, b);
    CHECK(p.num_generators() == 5);
    CHECK(irreducible_components(p) ==
          irreducible_components(a) + irreducible_components(b) - 1);

    CPresentation zz = hurwitz_product(builtin_abelian(1), builtin_abelian(1));
    CHECK(zz.num_generators() == 2);
    CHECK(irreducible_components(zz) == 1);

    CPresentation gg = hurwitz_product(builtin_g2(), builtin_g2());
    CHECK(irreducible_components(gg) == 3);
}

TEST_CASE("presentation validation") {
    CHECK_THROWS(CPresentation(2, {{1, 3, Word()}}));
    CHECK_THROWS(CPresentation(2, {{1, 2, Word::letter(5)}}));
    CHECK_THROWS(CPresentation(0, {}));
}
