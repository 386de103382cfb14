#ifndef HOPFRES_MODREP_HPP
#define HOPFRES_MODREP_HPP

#include <optional>

#include "hopfres/algebra.hpp"

namespace hopfres {

// Finite dimensional left module: one action matrix per module generator.
// The zero module (dim 0) is a first-class value.
struct ModuleRep {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<FpMat> action;

    const FpMat& act(std::size_t g) const { return action[g]; }
};

enum class ValidationMode { Full, Probe, None };

// Checks that every presentation rule (or, for raw-table algebras, every
// structure constant) holds on the module. Probe mode verifies the identities
// on seeded random vectors only.
void validate_module(const ModuleRep& m, ValidationMode mode = ValidationMode::Full);

ModuleRep zero_module(AlgebraPtr a);
ModuleRep regular_module(AlgebraPtr a);
ModuleRep character_module(AlgebraPtr a, std::size_t character);
ModuleRep block_projective_module(AlgebraPtr a, std::size_t character);

// w |-> (word as product of module generators) applied to w.
std::vector<u32> act_word(const ModuleRep& m, const std::vector<u32>& word,
                          std::vector<u32> v);

// Action of an algebra element in dense A-coordinates.
std::vector<u32> act_element(const ModuleRep& m, const std::vector<u32>& elem,
                             const std::vector<u32>& v);

// b * v for every basis element b of the algebra, computed by dynamic
// programming over the basis spellings.
std::vector<std::vector<u32>> all_basis_actions(const ModuleRep& m, const std::vector<u32>& v);

FpMat element_action_matrix(const ModuleRep& m, const std::vector<u32>& elem);

struct ModuleMap {
    FpMat mat;  // target_dim x source_dim; commutes with every generator action
};

bool is_module_map(const ModuleRep& src, const ModuleRep& dst, const FpMat& t);

// Basis of Hom_A(M, N) as matrices.
std::vector<FpMat> hom_space(const ModuleRep& m, const ModuleRep& n);

// Submodule spanned by the given vectors (closed under the action or Error);
// returns the module in RREF-basis coordinates plus the inclusion rows.
struct Submodule {
    ModuleRep module;
    FpMat inclusion_rows;  // sub_dim x ambient_dim, RREF
};
Submodule submodule(const ModuleRep& m, const std::vector<std::vector<u32>>& spanning);

// rad M = (rad A) M as an echelonized subspace of M.
EchelonBasis module_radical(const ModuleRep& m);

// Simultaneous eigenspace decomposition of M/rad M under the generator
// actions, one eigenspace per character. tops[c] holds lifted representatives
// v in M with e_chi v covering the eigenvectors.
struct TopDecomposition {
    std::vector<std::size_t> multiplicity;           // per character
    std::vector<std::vector<std::vector<u32>>> reps;  // per character, lifted to M
    std::size_t total = 0;
};
TopDecomposition top_of_module(const ModuleRep& m);

struct ProjectiveCover {
    std::vector<std::size_t> betti;     // multiplicity per character
    std::vector<std::size_t> summands;  // character per summand, grouped
    ModuleRep projective;               // block-diagonal sum of A e_chi
    FpMat cover;                        // dim M x dim P, surjective
};
ProjectiveCover projective_cover(const ModuleRep& m);

struct SyzygyResult {
    ModuleRep module;        // Omega(M)
    FpMat inclusion_rows;    // into the cover's projective
    ProjectiveCover cover;
};
SyzygyResult syzygy(const ModuleRep& m);

bool is_projective(const ModuleRep& m);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// Splits M along an idempotent endomorphism into (image, kernel).
std::pair<Submodule, Submodule> split_summand(const ModuleRep& m, const FpMat& idem);

// Randomized search for a nontrivial idempotent endomorphism. Empty result is
// the heuristic "indecomposable" verdict after the trial budget.
std::optional<FpMat> find_idempotent(const ModuleRep& m, u64 seed, unsigned budget = 32);

// Greedy projective-summand stripping via hom-space pairings with every
// A e_chi; returns the projective-free core and the multiplicities split off.
struct StrippedModule {
    ModuleRep core;
    std::vector<std::size_t> stripped;  // per character
};
StrippedModule strip_projective_summands(const ModuleRep& m);

}  // namespace hopfres

#endif
