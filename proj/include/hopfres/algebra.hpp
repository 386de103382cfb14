#ifndef HOPFRES_ALGEBRA_HPP
#define HOPFRES_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfres/rewrite.hpp"

namespace hopfres {

// Which generators of a presentation are group-like, with their orders.
// The group they generate must be abelian and its order must be invertible
// in F_p; every order must divide ell.
struct GroupLikeDeclaration {
    std::vector<u32> generators;
    std::vector<u64> orders;
};

// The group of group-like basis elements, its full character table, and the
// characters extended to every basis word (non-group generators map to 0).
struct GroupLikeData {
    std::vector<u32> elements;                // basis indices; elements[0] = unit
    std::vector<std::vector<u64>> exponents;  // exponent tuple per element
    std::vector<u32> inverse;                 // position of g^{-1} in `elements`
    FpMat char_table;                         // characters x elements
    FpMat char_on_basis;                      // characters x basis
    std::size_t order() const { return elements.size(); }
};

// One-dimensional representation of the algebra: its value on every basis
// element (and hence on every element by linearity).
struct Character {
    std::vector<u32> values;  // per basis element
};

struct BlockDecomposition {
    std::vector<std::vector<u32>> idempotents;  // central primitive, A-coordinates
    std::vector<std::size_t> dims;              // dim of e_i A
};

// Projective indecomposable A e_chi realized as a subspace of A with dense
// generator actions in its own coordinates.
struct BlockModule {
    std::size_t character = 0;
    FpMat basis_rows;            // RREF rows spanning A e_chi inside A
    std::vector<std::size_t> pivots;
    std::vector<FpMat> gen_action;  // per module generator
    std::vector<u32> top_functional;  // row vector; kernel = rad(A e_chi)
    FpMat rad_rows;              // RREF rows of rad(A e_chi) in block coordinates
    std::vector<u32> generator_coords;  // coordinates of e_chi itself
    std::size_t dim() const { return basis_rows.rows(); }
};

class FiniteDimAlgebra {
public:
    // Construction from a validated rewriting presentation. Runs the gates:
    // associativity (full below dim 100, randomized above), unit axioms,
    // p > dim, group-like closure/invertibility, character count.
    static std::shared_ptr<const FiniteDimAlgebra> from_presentation(
        RewritePresentation pres, std::optional<GroupLikeDeclaration> gl,
        const std::string& name = "");

    // Construction from raw structure constants (used by tests and for small
    // hand-made algebras). Every basis element doubles as a module generator.
    static std::shared_ptr<const FiniteDimAlgebra> from_table(
        PrimeField field, MultiplicationTable table, std::vector<std::string> labels,
        const std::string& name = "");

    const std::string& name() const { return name_; }
    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const MultiplicationTable& table() const { return table_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::optional<RewritePresentation>& presentation() const { return pres_; }
    const std::vector<Word>& basis_words() const { return basis_words_; }

    // Module generators: the presentation's generators, or every basis
    // element for raw-table algebras.
    std::size_t module_generator_count() const { return gen_images_.size(); }
    const std::string& module_generator_name(std::size_t g) const { return gen_names_[g]; }
    const SparseVec& generator_image(std::size_t g) const { return gen_images_[g]; }

    // How basis element i spells as a product of module generators.
    const std::vector<u32>& basis_spelling(std::size_t i) const { return spellings_[i]; }

    // Basis element i (i != 0) factors as generator dp_letter(i) times basis
    // element dp_rest(i); the backbone of dynamic-programming word actions.
    u32 dp_letter(std::size_t i) const { return dp_letter_[i]; }
    u32 dp_rest(std::size_t i) const { return dp_rest_[i]; }

    // --- element arithmetic (dense coordinates) ---
    std::vector<u32> unit_vector() const;
    std::vector<u32> multiply(const std::vector<u32>& a, const std::vector<u32>& b) const;
    std::vector<u32> multiply_sparse_left(const SparseVec& a, const std::vector<u32>& b) const;
    FpMat left_mult_operator(const std::vector<u32>& a) const;
    FpMat right_mult_operator(const std::vector<u32>& a) const;
    u64 counit_free_trace(std::size_t k) const;  // trace of left multiplication by basis k

    // --- cached derived structure ---
    const EchelonBasis& radical() const;           // throws RadicalNotNilpotent on misuse
    // Small set y_1..y_s with rad A = sum_i y_i A (falls back to the whole
    // radical basis when the short set does not generate).
    const std::vector<SparseVec>& radical_right_generators() const;

    const std::optional<GroupLikeData>& group_like() const { return group_like_; }

    // All one-dimensional representations; throws NotCharacterSplit when the
    // semisimple quotient is not a split product of copies of F_p.
    const std::vector<Character>& characters() const;
    std::size_t trivial_character_index() const;  // the counit, when Hopf data exists

    // e_chi per character (requires group-like data), pairwise orthogonal,
    // summing to 1.
    const std::vector<std::vector<u32>>& primitive_idempotents() const;

    const BlockModule& block_module(std::size_t character) const;

    const EchelonBasis& center() const;
    const BlockDecomposition& blocks() const;

    // Index of the block whose idempotent acts as identity on the trivial
    // module (the principal block).
    std::size_t principal_block(const std::vector<u32>& trivial_module_action_test) const;

private:
    FiniteDimAlgebra() = default;
    void run_construction_gates();
    void compute_radical() const;
    void compute_characters() const;
    void compute_center() const;
    void compute_blocks() const;

    std::string name_;
    PrimeField field_;
    std::size_t dim_ = 0;
    MultiplicationTable table_;
    std::vector<std::string> labels_;
    std::optional<RewritePresentation> pres_;
    std::vector<Word> basis_words_;
    std::vector<std::string> gen_names_;
    std::vector<SparseVec> gen_images_;
    std::vector<std::vector<u32>> spellings_;
    std::vector<u32> dp_letter_, dp_rest_;
    std::optional<GroupLikeData> group_like_;

    mutable std::once_flag radical_once_, char_once_, center_once_, blocks_once_;
    mutable std::unique_ptr<EchelonBasis> radical_;
    mutable std::vector<SparseVec> rad_right_gens_;
    mutable std::vector<Character> characters_;
    mutable std::vector<std::vector<u32>> idempotents_;
    mutable std::vector<BlockModule> block_modules_;
    mutable std::unique_ptr<EchelonBasis> center_;
    mutable std::unique_ptr<BlockDecomposition> blocks_;
};

using AlgebraPtr = std::shared_ptr<const FiniteDimAlgebra>;

// Radical of an abstract multiplication table via the trace form of the left
// regular representation (valid for p > dim).
EchelonBasis table_trace_radical(const MultiplicationTable& table, u64 p);

}  // namespace hopfres

#endif
