#ifndef HOPFRES_HOPF_HPP
#define HOPFRES_HOPF_HPP

#include "hopfres/modrep.hpp"

namespace hopfres {

// Sparse element of A (x) A in basis-pair coordinates.
using TensorElem = std::map<std::pair<u32, u32>, u32>;

TensorElem tensor_mul(const FiniteDimAlgebra& a, const TensorElem& x, const TensorElem& y);

// Hopf structure on an algebra: coproduct, counit and antipode given on the
// module generators and extended (anti-)multiplicatively. Construction
// verifies coassociativity, the counit law and both antipode laws on every
// basis element, plus well-definedness against the rewrite rules.
class HopfStructure {
public:
    static std::shared_ptr<const HopfStructure> create(
        AlgebraPtr algebra, std::vector<TensorElem> coproduct_gen,
        std::vector<u32> counit_gen, std::vector<std::vector<u32>> antipode_gen);

    const AlgebraPtr& algebra() const { return algebra_; }
    const TensorElem& coproduct_gen(std::size_t g) const { return coproduct_gen_[g]; }
    const TensorElem& coproduct_basis(std::size_t b) const { return delta_basis_[b]; }
    u64 counit_basis(std::size_t b) const { return eps_basis_[b]; }
    const std::vector<u32>& antipode_basis(std::size_t b) const { return s_basis_[b]; }

    // The counit as a character index into algebra()->characters().
    std::size_t counit_character() const { return counit_character_; }

private:
    AlgebraPtr algebra_;
    std::vector<TensorElem> coproduct_gen_;
    std::vector<u32> counit_gen_;
    std::vector<std::vector<u32>> antipode_gen_;
    std::vector<TensorElem> delta_basis_;
    std::vector<u32> eps_basis_;
    std::vector<std::vector<u32>> s_basis_;
    std::size_t counit_character_ = 0;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

// k as a module via the counit.
ModuleRep trivial_module(const HopfStructure& h);

// M (x) N with the diagonal action through the coproduct. Basis order is
// row-major: (i_M, i_N) |-> i_M * dim N + i_N.
ModuleRep tensor_module(const HopfStructure& h, const ModuleRep& m, const ModuleRep& n);

// M* with (a f)(m) = f(S(a) m).
ModuleRep dual_module(const HopfStructure& h, const ModuleRep& m);

// Injective algebra (and Hopf) map H -> A described on H's generators.
struct SubalgebraEmbedding {
    AlgebraPtr sub, big;
    HopfPtr sub_hopf, big_hopf;                 // optional; Hopf compatibility checked if both set
    std::vector<std::vector<u32>> gen_images;   // per H module generator, dense A-coords
    FpMat basis_images;                         // dim H x dim A: images of H basis words
};

SubalgebraEmbedding make_embedding(AlgebraPtr sub, AlgebraPtr big,
                                   std::vector<std::vector<u32>> gen_images,
                                   HopfPtr sub_hopf = nullptr, HopfPtr big_hopf = nullptr);

// M over A pulled back to a module over H along the embedding.
ModuleRep restrict_module(const SubalgebraEmbedding& e, const ModuleRep& m);

}  // namespace hopfres

#endif
