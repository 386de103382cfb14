#ifndef HOPFRES_PRESETS_HPP
#define HOPFRES_PRESETS_HPP

#include "hopfres/hopf.hpp"

namespace hopfres {

// Declarative presentation, mirroring the on-disk TOML format. Coefficients
// are expressions in an abstract root of unity q, evaluated in F_p when the
// presentation is built. The full grammar is documented in FORMAT.md.
struct GeneratorSpec {
    std::string name;
    std::optional<u64> group_order;         // present iff the generator is group-like
    std::optional<std::string> defined_as;  // PBW letters defined by an expression
    std::optional<std::string> coproduct;   // tensor expression, e.g. "E1@1 + K1@E1"
    std::optional<std::string> counit;      // scalar expression
    std::optional<std::string> antipode;    // element expression
};

struct RuleSpec {
    std::string lhs;  // a single word, e.g. "E2*E1"
    std::string rhs;  // an expression, e.g. "q*E1*E2 - q*E12"
};

struct PresentationFile {
    std::string name;
    u64 expected_dim = 0;
    u64 ell = 1;
    std::optional<u64> p;  // absent: smallest prime with p = 1 mod ell, p > dim
    std::optional<u64> q;  // absent: smallest element of order exactly ell
    u32 degree_cap = 64;
    u32 basis_cap = 4096;
    std::vector<GeneratorSpec> generators;  // declaration order = precedence
    std::vector<RuleSpec> rules;
};

struct BuiltPreset {
    PresentationFile file;
    AlgebraPtr algebra;
    HopfPtr hopf;  // null when no generator carries Hopf data
};

// Runs every validation gate: parse, confluence, dimension, associativity,
// group-like axioms, Hopf axioms, expected-dim comparison.
BuiltPreset build(const PresentationFile& file);

// Compiles just the rewriting system (field selection plus evaluated rule
// coefficients), without constructing the algebra. Useful for confluence
// experiments on large presentations.
RewritePresentation compile_rules(const PresentationFile& file);

// Canonical serialization; byte-identical across runs for equal inputs.
std::string serialize(const PresentationFile& file);

// Parses the TOML subset used by presentation files. `origin` is used in
// error messages (errors carry line and column).
PresentationFile parse_presentation(const std::string& text, const std::string& origin);

PresentationFile load_presentation_file(const std::string& path);
BuiltPreset load_and_build(const std::string& path);

// --- shipped builders -------------------------------------------------
// conv_b selects the alternative coproduct convention on the rank-1 Borels
// and the mirrored PBW convention on the rank-2 Borel.

PresentationFile preset_taft(u64 ell, bool conv_b = false);
PresentationFile preset_qea(u64 rank, u64 ell);
PresentationFile preset_uqplus_sl2(u64 ell, bool conv_b = false);
PresentationFile preset_uqplus_sl3(u64 ell, bool conv_b = false);
PresentationFile preset_group_algebra(u64 rank, u64 ell);

// All shipped presets by name (used by the CLI `preset` command).
std::vector<std::string> preset_names();
PresentationFile preset_by_name(const std::string& name);

// Rank-1 Borel inside the rank-2 Borel: E -> E1, K -> K1.
SubalgebraEmbedding embed_uqplus_sl2_in_sl3(u64 ell);

// Group algebra of the grading group inside a preset that has one.
SubalgebraEmbedding embed_group_algebra(const BuiltPreset& preset);

}  // namespace hopfres

#endif
