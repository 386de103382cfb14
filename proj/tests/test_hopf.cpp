#include "doctest.h"
#include "hopfres/presets.hpp"

using namespace hopfres;

namespace {

std::vector<std::size_t> character_multiplicities(const ModuleRep& m) {
    // Multiplicity of each character in the restriction to the group part;
    // for modules over a semisimple group algebra this is the full
    // decomposition.
    const auto& a = *m.algebra;
    const auto& es = a.primitive_idempotents();
    std::vector<std::size_t> mult;
    for (const auto& e : es) mult.push_back(rank(element_action_matrix(m, e)));
    return mult;
}

}  // namespace

TEST_CASE("trivial module acts by the counit") {
    BuiltPreset t = build(preset_taft(3));
    ModuleRep k = trivial_module(*t.hopf);
    CHECK(k.dim == 1);
    CHECK(k.act(0).at(0, 0) == 1);  // g
    CHECK(k.act(1).at(0, 0) == 0);  // x
    validate_module(k);
    // The counit is one of the simple characters.
    CHECK(t.hopf->counit_character() == t.algebra->trivial_character_index());
}

TEST_CASE("k tensor M is canonically M") {
    BuiltPreset t = build(preset_taft(3));
    ModuleRep k = trivial_module(*t.hopf);
    ModuleRep reg = regular_module(t.algebra);
    ModuleRep km = tensor_module(*t.hopf, k, reg);
    REQUIRE(km.dim == reg.dim);
    // Basis (0, n) |-> n: the action matrices agree on the nose.
    for (std::size_t g = 0; g < reg.action.size(); ++g) CHECK(km.act(g) == reg.act(g));
    ModuleRep mk = tensor_module(*t.hopf, reg, k);
    for (std::size_t g = 0; g < reg.action.size(); ++g) CHECK(mk.act(g) == reg.act(g));
}

TEST_CASE("tensor dimension is multiplicative") {
    BuiltPreset t = build(preset_taft(3));
    ModuleRep p0 = block_projective_module(t.algebra, 0);
    ModuleRep p1 = block_projective_module(t.algebra, 1);
    CHECK(tensor_module(*t.hopf, p0, p1).dim == p0.dim * p1.dim);
}

TEST_CASE("projective tensor anything is projective") {
    BuiltPreset t = build(preset_taft(3));
    ModuleRep k = trivial_module(*t.hopf);
    ModuleRep omega = syzygy(k).module;  // a 2-dimensional non-projective module
    CHECK(omega.dim == 2);
    CHECK_FALSE(is_projective(omega));
    for (std::size_t c = 0; c < 3; ++c) {
        ModuleRep pc = block_projective_module(t.algebra, c);
        CHECK(is_projective(tensor_module(*t.hopf, pc, omega)));
        CHECK(is_projective(tensor_module(*t.hopf, omega, pc)));
    }
}

TEST_CASE("duals: k* = k and double dual preserves structure") {
    BuiltPreset t = build(preset_taft(3));
    ModuleRep k = trivial_module(*t.hopf);
    ModuleRep kd = dual_module(*t.hopf, k);
    for (std::size_t g = 0; g < k.action.size(); ++g) CHECK(kd.act(g) == k.act(g));

    ModuleRep omega = syzygy(k).module;
    ModuleRep dd = dual_module(*t.hopf, dual_module(*t.hopf, omega));
    CHECK(dd.dim == omega.dim);
    // Same top characters.
    auto t1 = top_of_module(omega), t2 = top_of_module(dd);
    CHECK(t1.multiplicity == t2.multiplicity);
}

TEST_CASE("restriction of the trivial module is trivial") {
    SubalgebraEmbedding e = embed_uqplus_sl2_in_sl3(3);
    BuiltPreset big = build(preset_uqplus_sl3(3));
    // Rebuild to reuse the same algebra objects as in e.
    ModuleRep k_big = character_module(e.big, e.big->trivial_character_index());
    ModuleRep r = restrict_module(e, k_big);
    CHECK(r.dim == 1);
    for (std::size_t g = 0; g < r.action.size(); ++g) {
        u64 expect = (e.sub->module_generator_name(g) == "K") ? 1 : 0;
        CHECK(r.act(g).at(0, 0) == expect);
    }
}

TEST_CASE("regular taft module restricted to the group algebra is free of rank 3") {
    BuiltPreset t = build(preset_taft(3));
    SubalgebraEmbedding e = embed_group_algebra(t);
    ModuleRep reg = regular_module(t.algebra);
    ModuleRep res = restrict_module(e, reg);
    auto mult = character_multiplicities(res);
    CHECK(mult == std::vector<std::size_t>{3, 3, 3});
}

TEST_CASE("regular sl3 borel module restricted to its group algebra is free of rank 27") {
    BuiltPreset t = build(preset_uqplus_sl3(3));
    SubalgebraEmbedding e = embed_group_algebra(t);
    ModuleRep reg = regular_module(t.algebra);
    ModuleRep res = restrict_module(e, reg);
    auto mult = character_multiplicities(res);
    CHECK(mult == std::vector<std::size_t>(9, 27));
}

TEST_CASE("regular sl3 module restricted to the rank-1 borel is free of rank 27") {
    SubalgebraEmbedding e = embed_uqplus_sl2_in_sl3(3);
    ModuleRep reg = regular_module(e.big);
    ModuleRep res = restrict_module(e, reg);
    // Free = projective with equal multiplicities of every A e_chi summand.
    ProjectiveCover cover = projective_cover(res);
    CHECK(cover.projective.dim == res.dim);  // projective
    CHECK(cover.betti == std::vector<std::size_t>(3, 27));
}
