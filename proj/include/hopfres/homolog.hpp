#ifndef HOPFRES_HOMOLOG_HPP
#define HOPFRES_HOMOLOG_HPP

#include "hopfres/hopf.hpp"

namespace hopfres {

struct BettiTable {
    std::vector<std::vector<std::size_t>> rows;  // per degree, per character
    std::vector<std::size_t> totals;             // per degree
};

// Minimal projective resolution of M to a fixed depth. Projectives are kept
// as block sums of the A e_chi (characters per summand); differentials are
// dense matrices into the coordinates of the previous projective (degree 0
// maps into M itself). Syzygies are stored as kernel bases inside the
// projectives and materialized as modules on demand.
struct ResolutionTrace {
    ModuleRep module;
    std::size_t depth = 0;
    std::vector<std::vector<std::size_t>> summand_chars;  // per degree
    std::vector<FpMat> diff;         // diff[0]: P_0 -> M; diff[n]: P_n -> P_{n-1}
    std::vector<FpMat> kernel_rows;  // Omega^{n+1} inside P_n
    std::vector<std::vector<std::size_t>> kernel_leads;
    BettiTable betti;

    std::size_t projective_dim(std::size_t n) const { return diff[n].cols(); }
    std::size_t syzygy_dim(std::size_t n) const;  // dim Omega^n, n = 0..depth+1

    // Omega^n(M) with inherited action, n >= 1.
    ModuleRep syzygy_module(std::size_t n) const;
    const FpMat& syzygy_inclusion(std::size_t n) const { return kernel_rows[n - 1]; }
};

struct ResolveOptions {
    std::size_t syzygy_dim_cap = 1u << 18;  // resource budget on dim Omega^n
    bool check_exactness = true;            // im d_{n+1} inside ker d_n, exactly
    bool check_minimality = true;           // im d_{n+1} inside rad P_n
};

ResolutionTrace resolve(const ModuleRep& m, std::size_t depth,
                        const ResolveOptions& opts = {});

// dim Ext^n_A(M, N) for 0 <= n < ext_count, as the cohomology of
// Hom(P_., N). For simple N the minimality shortcut (Betti multiplicities)
// is asserted against the homological route.
std::vector<std::size_t> ext_dims(const ResolutionTrace& trace, const ModuleRep& n,
                                  std::size_t ext_count);

struct ComplexityEstimate {
    std::size_t c = 0;        // round(slope) + 1, or 0 for an eventually zero tail
    double slope = 0.0;
    double residual = 0.0;    // rms residual of the log-log fit
    std::size_t window_lo = 0, window_hi = 0;
    std::size_t points_used = 0;
};

// Least-squares slope of log b_n against log n over the tail half of the
// sequence; zero entries are skipped. Throws InsufficientDepth below 6 terms.
ComplexityEstimate complexity_estimate(const std::vector<std::size_t>& betti_totals);

// --- truncated cohomology ring -----------------------------------------

struct TruncatedCohomologyRing {
    std::size_t max_degree = 0;
    std::vector<std::size_t> dims;  // dim H^n for n = 0..max_degree
    // products[{n,m}][i][j] = coordinates of (basis_i in H^n) * (basis_j in
    // H^m) inside H^{n+m}, for n, m >= 1 and n + m <= max_degree.
    std::map<std::pair<std::size_t, std::size_t>,
             std::vector<std::vector<std::vector<u32>>>>
        products;
    std::vector<std::size_t> new_generator_counts;  // per degree 1..max_degree
    u64 modulus = 0;

    std::vector<u32> multiply(std::size_t deg_a, const std::vector<u32>& a,
                              std::size_t deg_b, const std::vector<u32>& b) const;
};

// Requires trace.depth >= 2 * max_degree and trace over the trivial module.
// Chain-map lifting solves the smallest consistent system degree by degree,
// taking the lexicographically least solution.
TruncatedCohomologyRing cohomology_ring(const ResolutionTrace& trace_of_k,
                                        std::size_t max_degree);

struct CohomologyClass {
    std::size_t degree = 0;
    std::vector<u32> coords;  // in the slot basis of H^degree
};

// L_zeta: kernel of a representative Omega^n(k) -> k of a non-zero class.
struct CarlsonModule {
    ModuleRep module;            // L_zeta
    ModuleRep omega;             // Omega^n(k)
    FpMat inclusion_rows;        // L_zeta inside Omega^n(k)
    std::vector<u32> functional; // the representative, as a row on Omega^n(k)
};
CarlsonModule carlson_module(const ResolutionTrace& trace_of_k, const CohomologyClass& zeta);

struct TensorTheoremReport {
    ComplexityEstimate cx_m, cx_l, cx_tensor;
    bool drop_by_at_most_one = false;  // cx(M(x)L) in {cx M - 1, cx M}
    bool min_bound = false;            // cx(M(x)L) <= min(cx M, cx L)
};
TensorTheoremReport tensor_theorem_check(const HopfStructure& h, const ModuleRep& m,
                                         const ResolutionTrace& trace_of_k,
                                         const CohomologyClass& zeta, std::size_t depth);

struct BlockCutResult {
    ModuleRep n_zeta;              // e . (M (x) L_zeta)
    std::size_t block = 0;         // index of M's block
    std::size_t dim_bound = 0;     // (dim M)(dim Omega^{2d}(k))
    bool complement_projective = false;  // (1-e) part
};
BlockCutResult block_cut(const HopfStructure& h, const ModuleRep& m,
                         const ResolutionTrace& trace_of_k, const CohomologyClass& zeta);

// L_{zeta_1} (x) ... (x) L_{zeta_t}; the empty product is k.
ModuleRep realize_variety(const HopfStructure& h, const ResolutionTrace& trace_of_k,
                          const std::vector<CohomologyClass>& zetas);

struct SesComplexityReport {
    ComplexityEstimate sub, mid, quot;
    bool inequalities_hold = false;  // all three max-inequalities
};
SesComplexityReport ses_complexity_check(const ModuleRep& sub, const ModuleRep& mid,
                                         const ModuleRep& quot, std::size_t depth);

struct FgTruncationReport {
    std::vector<std::size_t> ring_generator_degrees;  // degrees with new generators
    ComplexityEstimate cx_k;
    ComplexityEstimate cx_m;
    bool polynomial_bound_consistent = false;  // cx_m.c <= cx_k.c at truncation
    bool conclusive = false;                   // always false: truncated check
};
FgTruncationReport fg_truncated_check(const TruncatedCohomologyRing& ring,
                                      const ResolutionTrace& trace_of_k,
                                      const ResolutionTrace& trace_of_m);

}  // namespace hopfres

#endif
