#include "doctest.h"
#include "hopfres/presets.hpp"

using namespace hopfres;

TEST_CASE("taft preset builds with the expected dimension and field") {
    BuiltPreset t = build(preset_taft(3));
    CHECK(t.algebra->dim() == 9);
    CHECK(t.algebra->field().p == 13);
    CHECK(t.algebra->field().ell == 3);
    REQUIRE(t.hopf != nullptr);
    CHECK(t.algebra->characters().size() == 3);
}

TEST_CASE("taft conv B builds and has the same dimension") {
    BuiltPreset t = build(preset_taft(3, true));
    CHECK(t.algebra->dim() == 9);
    REQUIRE(t.hopf != nullptr);
}

TEST_CASE("qea rank 2 builds") {
    BuiltPreset t = build(preset_qea(2, 3));
    CHECK(t.algebra->dim() == 81);
    CHECK(t.algebra->field().p == 97);
    CHECK(t.algebra->characters().size() == 9);
    REQUIRE(t.hopf != nullptr);
}

TEST_CASE("uqplus_sl2 builds in both conventions") {
    for (bool conv_b : {false, true}) {
        BuiltPreset t = build(preset_uqplus_sl2(3, conv_b));
        CHECK(t.algebra->dim() == 9);
        REQUIRE(t.hopf != nullptr);
    }
}

TEST_CASE("uqplus_sl3 builds: confluence, dim 243, characters") {
    BuiltPreset t = build(preset_uqplus_sl3(3));
    CHECK(t.algebra->dim() == 243);
    CHECK(t.algebra->field().p == 271);
    CHECK(t.algebra->characters().size() == 9);
    REQUIRE(t.hopf != nullptr);
    // Each projective indecomposable has dimension 243/9 = 27.
    for (std::size_t c = 0; c < 9; ++c) CHECK(t.algebra->block_module(c).dim() == 27);
    // Radical has codimension |G| = 9.
    CHECK(t.algebra->radical().dim() == 243 - 9);
}

TEST_CASE("uqplus_sl3 conv B builds to the same dimension") {
    BuiltPreset t = build(preset_uqplus_sl3(3, true));
    CHECK(t.algebra->dim() == 243);
}

TEST_CASE("uqplus_sl3 at ell=5 is also confluent") {
    // Confluence and the basis count are the claims; the full algebra and
    // Hopf gates are exercised at ell=3.
    RewritePresentation pres = compile_rules(preset_uqplus_sl3(5));
    pres.validate();
    CHECK(check_local_confluence(pres).empty());
    CHECK(enumerate_basis(pres).size() == 5 * 5 * 5 * 5 * 5);
}

TEST_CASE("serialization round trip is byte identical") {
    for (const auto& name : preset_names()) {
        PresentationFile f = preset_by_name(name);
        std::string s1 = serialize(f);
        PresentationFile f2 = parse_presentation(s1, name);
        std::string s2 = serialize(f2);
        CHECK(s1 == s2);
        // And building twice gives identical serializations.
        CHECK(serialize(preset_by_name(name)) == s1);
    }
}

TEST_CASE("parse errors carry a location") {
    try {
        parse_presentation("[meta\nname = \"x\"\n", "bad.toml");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == "ParseError");
        CHECK(std::string(e.what()).find("bad.toml:1") != std::string::npos);
    }
    try {
        parse_presentation("[meta]\nname \"x\"\n", "bad2.toml");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("bad2.toml:2") != std::string::npos);
    }
}

TEST_CASE("wrong expected_dim is rejected with the violated invariant named") {
    PresentationFile f = preset_taft(3);
    f.expected_dim = 10;
    CHECK_THROWS_WITH_AS((void)build(f), doctest::Contains("declares 10"), Error);
}

TEST_CASE("group algebra presets and embeddings") {
    BuiltPreset qea = build(preset_qea(2, 3));
    SubalgebraEmbedding e = embed_group_algebra(qea);
    CHECK(e.sub->dim() == 9);
    CHECK(e.big->dim() == 81);
    // Nichols-Zoeller numeric consequence: dim H | dim A.
    CHECK(e.big->dim() % e.sub->dim() == 0);
}

TEST_CASE("sl2 inside sl3 embedding validates") {
    SubalgebraEmbedding e = embed_uqplus_sl2_in_sl3(3);
    CHECK(e.sub->dim() == 9);
    CHECK(e.big->dim() == 243);
    CHECK(e.big->dim() % e.sub->dim() == 0);
    // Unit maps to unit.
    CHECK(e.basis_images.row_vec(0) == e.big->unit_vector());
}
