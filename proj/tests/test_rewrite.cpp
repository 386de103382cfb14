#include "doctest.h"
#include "hopfres/rewrite.hpp"

using namespace hopfres;

namespace {

// Taft presentation at ell=3 over F_13 (q=3): generators g < x with
// g^3 = 1, x^3 = 0, x g = q^{-1} g x.
RewritePresentation taft3() {
    RewritePresentation p;
    p.field = make_field(13, 3, 3);
    p.generator_names = {"g", "x"};
    u32 qinv = u32(fp_inv(3, 13));
    p.rules.push_back({Word{0, 0, 0}, LinComb{{Word{}, 1}}});
    p.rules.push_back({Word{1, 1, 1}, LinComb{}});
    p.rules.push_back({Word{1, 0}, LinComb{{Word{0, 1}, qinv}}});
    p.validate();
    return p;
}

// Independent straightening oracle for words in {g, x} with x g = c g x:
// the coefficient is c^(number of (x,g) inversions).
u64 inversion_count(const Word& w) {
    u64 inv = 0;
    std::size_t xs = 0;
    for (u32 letter : w) {
        if (letter == 1)
            ++xs;
        else
            inv += xs;  // every x already seen must cross this g
    }
    return inv;
}

}  // namespace

TEST_CASE("annihilating rule") {
    RewritePresentation p;
    p.field = make_field(7, 1, 1);
    p.generator_names = {"x", "y"};
    p.rules.push_back({Word{0, 0}, LinComb{}});
    p.validate();
    CHECK(normal_form_word(p, Word{0, 0, 1}).empty());
}

TEST_CASE("single q-commutation") {
    RewritePresentation p;
    p.field = make_field(7, 3, 2);
    p.generator_names = {"x", "y"};
    p.rules.push_back({Word{1, 0}, LinComb{{Word{0, 1}, 2}}});
    p.validate();
    LinComb nf = normal_form_word(p, Word{1, 0});
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->first == Word{0, 1});
    CHECK(nf.begin()->second == 2);
}

TEST_CASE("taft straightening matches the inversion-count oracle") {
    RewritePresentation p = taft3();
    u64 qinv = fp_inv(3, 13);

    // x g x g has three (x,g) inversions, so the coefficient is q^{-3} = 1.
    Word w{1, 0, 1, 0};
    CHECK(inversion_count(w) == 3);
    LinComb nf = normal_form_word(p, w);
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->first == Word{0, 0, 1, 1});
    CHECK(u64(nf.begin()->second) == fp_pow(qinv, 3, 13));
    CHECK(nf.begin()->second == 1);  // q^{-3} = 1 at ell = 3

    // Smaller cases against the same oracle.
    for (const Word& word : {Word{1, 0}, Word{1, 1, 0}, Word{1, 0, 0}, Word{1, 0, 1}}) {
        LinComb r = normal_form_word(p, word);
        REQUIRE(r.size() == 1);
        CHECK(u64(r.begin()->second) == fp_pow(qinv, inversion_count(word), 13));
    }
}

TEST_CASE("normal form is strategy independent on a confluent system") {
    RewritePresentation p = taft3();
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Word w;
        std::size_t len = 1 + rng.below(8);
        for (std::size_t i = 0; i < len; ++i) w.push_back(u32(rng.below(2)));
        CHECK(normal_form_word(p, w, ReductionStrategy::LeftmostFirst) ==
              normal_form_word(p, w, ReductionStrategy::RightmostFirst));
    }
}

TEST_CASE("local confluence") {
    SUBCASE("single rule has no overlaps") {
        RewritePresentation p;
        p.field = make_field(7, 1, 1);
        p.generator_names = {"x"};
        p.rules.push_back({Word{0, 0}, LinComb{}});
        CHECK(check_local_confluence(p).empty());
    }
    SUBCASE("taft is confluent") { CHECK(check_local_confluence(taft3()).empty()); }
    SUBCASE("xy->0, yx->1 is not confluent") {
        RewritePresentation p;
        p.field = make_field(7, 1, 1);
        p.generator_names = {"x", "y"};
        p.rules.push_back({Word{0, 1}, LinComb{}});
        p.rules.push_back({Word{1, 0}, LinComb{{Word{}, 1}}});
        p.validate();
        auto amb = check_local_confluence(p);
        CHECK_FALSE(amb.empty());
        // x y x resolves to 0 one way and to x the other.
        bool found = false;
        for (const auto& a : amb)
            if (a.superword == Word{0, 1, 0}) found = true;
        CHECK(found);
    }
}

TEST_CASE("taft basis enumeration") {
    RewritePresentation p = taft3();
    auto basis = enumerate_basis(p);
    CHECK(basis.size() == 9);
    // Degree-lex order: unit first, then g < x, then degree-2 words.
    CHECK(basis[0] == Word{});
    CHECK(basis[1] == Word{0});
    CHECK(basis[2] == Word{1});
    CHECK(basis[3] == Word{0, 0});
    // All normal forms have the shape g^a x^b with a, b < 3.
    for (const auto& w : basis) {
        bool seen_x = false;
        for (u32 letter : w) {
            if (letter == 1) seen_x = true;
            if (letter == 0) CHECK_FALSE(seen_x);
        }
    }
}

TEST_CASE("structure constants: unit, nilpotency, associativity") {
    RewritePresentation p = taft3();
    auto basis = enumerate_basis(p);
    auto table = structure_constants(p, basis);
    const u64 fp = p.field.p;

    // Unit row and column act as identity (unit is basis index 0).
    for (std::size_t j = 0; j < basis.size(); ++j) {
        SparseVec expect{{u32(j), 1}};
        CHECK(table.at(0, j) == expect);
        CHECK(table.at(j, 0) == expect);
    }

    // x^2 * x = 0.
    std::size_t ix2 = 0, ix = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == Word{1, 1}) ix2 = i;
        if (basis[i] == Word{1}) ix = i;
    }
    CHECK(table.at(ix2, ix).empty());

    // Associativity on 100 random triples via the table itself.
    auto mul_sparse = [&](const SparseVec& a, const SparseVec& b) {
        std::map<u32, u64> acc;
        for (auto [i, ci] : a)
            for (auto [j, cj] : b)
                for (auto [k, ck] : table.at(i, j)) acc[k] += u64(ci) * cj % fp * ck;
        SparseVec out;
        for (auto [k, v] : acc)
            if (v % fp) out.emplace_back(k, u32(v % fp));
        return out;
    };
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        u32 a = u32(rng.below(basis.size()));
        u32 b = u32(rng.below(basis.size()));
        u32 c = u32(rng.below(basis.size()));
        SparseVec va{{a, 1}}, vb{{b, 1}}, vc{{c, 1}};
        CHECK(mul_sparse(mul_sparse(va, vb), vc) == mul_sparse(va, mul_sparse(vb, vc)));
    }
}

TEST_CASE("degree and basis caps") {
    RewritePresentation p;
    p.field = make_field(7, 1, 1);
    p.generator_names = {"x"};
    // No rules: free algebra on one generator is infinite dimensional.
    p.basis_cap = 32;
    CHECK_THROWS_AS(enumerate_basis(p), Error);

    p.degree_cap = 4;
    p.rules.push_back({Word{0, 0}, LinComb{{Word{0, 0, 0}, 1}}});  // grows; invalid order
    CHECK_THROWS_AS(p.validate(), Error);
}
