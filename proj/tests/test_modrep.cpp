#include "doctest.h"
#include "hopfres/modrep.hpp"

using namespace hopfres;

namespace {

AlgebraPtr taft(u64 ell = 3) {
    u64 dim = ell * ell;
    PrimeField f = make_field_auto(ell, dim);
    RewritePresentation p;
    p.field = f;
    p.generator_names = {"g", "x"};
    p.rules.push_back({Word(ell, 0), LinComb{{Word{}, 1}}});
    p.rules.push_back({Word(ell, 1), LinComb{}});
    p.rules.push_back({Word{1, 0}, LinComb{{Word{0, 1}, u32(fp_inv(f.q, f.p))}}});
    GroupLikeDeclaration gl;
    gl.generators = {0};
    gl.orders = {ell};
    return FiniteDimAlgebra::from_presentation(p, gl, "taft");
}

}  // namespace

TEST_CASE("trivial module and validation") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());
    CHECK(k.dim == 1);
    CHECK(k.act(0).at(0, 0) == 1);  // g acts by 1
    CHECK(k.act(1).at(0, 0) == 0);  // x acts by 0
    validate_module(k);

    ModuleRep reg = regular_module(a);
    validate_module(reg);

    // A module violating x^3 = 0 is rejected.
    ModuleRep bad = k;
    bad.action[1].at(0, 0) = 1;
    CHECK_THROWS_AS(validate_module(bad), Error);
}

TEST_CASE("all_basis_actions matches act_word") {
    auto a = taft();
    ModuleRep reg = regular_module(a);
    Rng rng(5);
    std::vector<u32> v(reg.dim);
    for (auto& x : v) x = u32(rng.below(a->field().p));
    auto all = all_basis_actions(reg, v);
    for (std::size_t b = 0; b < a->dim(); ++b)
        CHECK(all[b] == act_word(reg, a->basis_spelling(b), v));
}

TEST_CASE("module radical") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());
    CHECK(module_radical(k).dim() == 0);

    ModuleRep reg = regular_module(a);
    CHECK(module_radical(reg).dim() == 6);  // = rad A as a left module

    for (std::size_t c = 0; c < 3; ++c) {
        ModuleRep pc = block_projective_module(a, c);
        CHECK(module_radical(pc).dim() == pc.dim - 1);  // simple top
    }
}

TEST_CASE("hom spaces") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());
    CHECK(hom_space(k, k).size() == 1);

    for (std::size_t c = 0; c < 3; ++c) {
        ModuleRep pc = block_projective_module(a, c);
        for (std::size_t s = 0; s < 3; ++s) {
            ModuleRep simple = character_module(a, s);
            CHECK(hom_space(pc, simple).size() == (c == s ? 1 : 0));
        }
        // End contains the identity.
        auto ends = hom_space(pc, pc);
        bool has_identity = false;
        FpMat id = FpMat::identity(a->field().p, pc.dim);
        EchelonBasis eb(a->field().p, pc.dim * pc.dim);
        for (const auto& e : ends) {
            std::vector<u32> flat(pc.dim * pc.dim);
            for (std::size_t i = 0; i < pc.dim; ++i)
                for (std::size_t j = 0; j < pc.dim; ++j) flat[i * pc.dim + j] = e.at(i, j);
            eb.insert(flat);
        }
        std::vector<u32> idflat(pc.dim * pc.dim);
        for (std::size_t i = 0; i < pc.dim; ++i) idflat[i * pc.dim + i] = 1;
        has_identity = eb.contains(idflat);
        CHECK(has_identity);
    }
}

TEST_CASE("projective cover and syzygy of the trivial module") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());
    ProjectiveCover cover = projective_cover(k);
    CHECK(cover.projective.dim == 3);
    CHECK(cover.betti[a->trivial_character_index()] == 1);

    SyzygyResult omega = syzygy(k);
    CHECK(omega.module.dim == 2);
    validate_module(omega.module);

    // Minimality: the kernel lies inside rad P.
    EchelonBasis radp = module_radical(cover.projective);
    for (std::size_t i = 0; i < omega.inclusion_rows.rows(); ++i)
        CHECK(radp.contains(omega.inclusion_rows.row_vec(i)));
}

TEST_CASE("projective modules have zero syzygy") {
    auto a = taft();
    for (std::size_t c = 0; c < 3; ++c) {
        ModuleRep pc = block_projective_module(a, c);
        ProjectiveCover cover = projective_cover(pc);
        CHECK(cover.projective.dim == pc.dim);
        CHECK(syzygy(pc).module.dim == 0);
        CHECK(is_projective(pc));
    }
    ModuleRep k = character_module(a, a->trivial_character_index());
    CHECK_FALSE(is_projective(k));
    CHECK(is_projective(zero_module(a)));
    CHECK(is_projective(regular_module(a)));
}

TEST_CASE("dim Omega(M) = dim P - dim M") {
    auto a = taft();
    ModuleRep k = character_module(a, 0);
    ModuleRep m = direct_sum(k, character_module(a, 1));
    SyzygyResult s = syzygy(m);
    CHECK(s.module.dim == s.cover.projective.dim - m.dim);
}

TEST_CASE("direct sum and split") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());
    ModuleRep z = zero_module(a);
    ModuleRep kz = direct_sum(k, z);
    CHECK(kz.dim == k.dim);

    ModuleRep reg = regular_module(a);
    // Split by the identity: (M, 0).
    auto [img, ker] = split_summand(reg, FpMat::identity(a->field().p, reg.dim));
    CHECK(img.module.dim == reg.dim);
    CHECK(ker.module.dim == 0);

    // Split the regular module by right multiplication with e_chi.
    const auto& es = a->primitive_idempotents();
    FpMat re = a->right_mult_operator(es[1]);
    auto [p1, p2] = split_summand(reg, re);
    CHECK(p1.module.dim == 3);
    CHECK(p2.module.dim == 6);
    validate_module(p1.module);
    validate_module(p2.module);
}

TEST_CASE("omega commutes with direct sums (dimensions and betti)") {
    auto a = taft();
    ModuleRep m = character_module(a, 0);
    ModuleRep n = character_module(a, 1);
    SyzygyResult sm = syzygy(m), sn = syzygy(n), smn = syzygy(direct_sum(m, n));
    CHECK(smn.module.dim == sm.module.dim + sn.module.dim);
    for (std::size_t c = 0; c < 3; ++c)
        CHECK(smn.cover.betti[c] == sm.cover.betti[c] + sn.cover.betti[c]);
}

TEST_CASE("find_idempotent") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());

    // k + k has a nontrivial idempotent.
    ModuleRep kk = direct_sum(k, k);
    auto idem = find_idempotent(kk, 0);
    REQUIRE(idem.has_value());
    CHECK(mul(*idem, *idem) == *idem);
    auto [i1, i2] = split_summand(kk, *idem);
    CHECK(i1.module.dim + i2.module.dim == 2);
    CHECK(i1.module.dim > 0);
    CHECK(i2.module.dim > 0);

    // Simple module: indecomposable.
    CHECK_FALSE(find_idempotent(k, 0).has_value());

    // A e_chi has local endomorphism ring: indecomposable.
    ModuleRep pc = block_projective_module(a, 0);
    CHECK_FALSE(find_idempotent(pc, 0).has_value());
}

TEST_CASE("projective summand stripping") {
    auto a = taft();
    ModuleRep k = character_module(a, a->trivial_character_index());
    ModuleRep pc = block_projective_module(a, 1);
    ModuleRep m = direct_sum(direct_sum(pc, k), block_projective_module(a, 1));

    StrippedModule s = strip_projective_summands(m);
    CHECK(s.core.dim == 1);
    CHECK(s.stripped[1] == 2);
    CHECK(s.stripped[0] == 0);

    // Stripping a non-projective module with no projective summands is a no-op.
    StrippedModule s2 = strip_projective_summands(k);
    CHECK(s2.core.dim == 1);
}
