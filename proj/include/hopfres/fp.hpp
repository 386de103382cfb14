#ifndef HOPFRES_FP_HPP
#define HOPFRES_FP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hopfres/common.hpp"

namespace hopfres {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Largest modulus we accept. Keeps n * (p-1)^2 < 2^64 for n up to 2^23, so
// elimination and matrix products can accumulate in 64 bits without
// intermediate reductions.
inline constexpr u64 kMaxModulus = u64(1) << 20;

// Prime field F_p together with a distinguished element q of multiplicative
// order exactly ell (ell | p-1). All homological computations happen over
// such a field; reports always record (p, ell, q).
struct PrimeField {
    u64 p = 0;
    u64 ell = 0;
    u64 q = 0;

    bool operator==(const PrimeField&) const = default;
};

bool is_prime(u64 n);

// Smallest prime p with p ≡ 1 (mod ell) and p > lower_bound.
u64 choose_prime(u64 ell, u64 lower_bound);

// Smallest element of F_p of multiplicative order exactly ell.
u64 element_of_order(u64 p, u64 ell);

// Validates p prime, p ≡ 1 (mod ell), ord(q) = ell, p < kMaxModulus.
PrimeField make_field(u64 p, u64 ell, u64 q);
PrimeField make_field_auto(u64 ell, u64 dim_lower_bound);

u64 fp_pow(u64 base, u64 exp, u64 p);
u64 fp_inv(u64 a, u64 p);

// Dense row-major matrix over F_p. Entries are always kept reduced to [0, p).
// Matrices are immutable values in the public API of the toolkit; the
// in-place mutators here are building blocks used before a matrix is shared.
class FpMat {
public:
    FpMat() = default;
    FpMat(u64 p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FpMat identity(u64 p, std::size_t n);

    u64 modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    u32& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    u32 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const u32* row(std::size_t i) const { return a_.data() + i * cols_; }
    u32* row(std::size_t i) { return a_.data() + i * cols_; }

    void set(std::size_t i, std::size_t j, u64 v) { a_[i * cols_ + j] = u32(v % p_); }

    std::vector<u32> row_vec(std::size_t i) const {
        return std::vector<u32>(row(i), row(i) + cols_);
    }
    void set_row(std::size_t i, const std::vector<u32>& v);

    bool is_zero() const;
    bool operator==(const FpMat&) const = default;

    FpMat transpose() const;

private:
    u64 p_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<u32> a_;
};

struct RrefResult {
    FpMat mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank = 0;
};

RrefResult rref(const FpMat& m);

// Rows form an RREF basis of the right null space {x : m x = 0}.
FpMat kernel_basis(const FpMat& m);

// Kernel basis plus, per row, the column where that row is the only one with
// a (unit) entry. Reducing a vector at these columns tests membership in the
// kernel span without re-echelonizing.
struct KernelResult {
    FpMat rows;
    std::vector<std::size_t> lead_cols;
};
KernelResult kernel_basis_with_leads(const FpMat& m);

std::size_t rank(const FpMat& m);

// Solves m x = b. Empty optional means b is outside the column space (a
// contract outcome, not a fault). Free coordinates are set to zero.
std::optional<std::vector<u32>> solve(const FpMat& m, const std::vector<u32>& b);

// Among all solutions of m x = b, the one whose coordinate vector is
// lexicographically least (entries compared as integers in [0, p)).
std::optional<std::vector<u32>> solve_lexmin(const FpMat& m, const std::vector<u32>& b);

FpMat mul(const FpMat& a, const FpMat& b);
std::vector<u32> mul_vec(const FpMat& a, const std::vector<u32>& x);       // a * x
std::vector<u32> vec_mul(const std::vector<u32>& x, const FpMat& a);       // x^T * a
FpMat add(const FpMat& a, const FpMat& b);
FpMat sub(const FpMat& a, const FpMat& b);
FpMat scale(const FpMat& a, u64 c);

// Inverse of a square matrix; throws Error("NotInvertible") if singular.
FpMat inverse(const FpMat& m);

// Incremental row-space accumulator kept in reduced row echelon form.
// Supports membership tests and span growth one vector at a time.
class EchelonBasis {
public:
    EchelonBasis(u64 p, std::size_t width) : p_(p), width_(width) {}

    // Returns true if the vector enlarged the span.
    bool insert(std::vector<u32> v);

    // Residue of v after reduction against the basis (zero iff v in span).
    std::vector<u32> reduce(std::vector<u32> v) const;

    bool contains(const std::vector<u32>& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<u32>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    FpMat to_matrix() const;

    // Coordinates of v in this basis (valid when v is in the span): since the
    // rows are in RREF, these are just the entries of v at the pivot columns.
    std::vector<u32> coordinates(const std::vector<u32>& v) const;

private:
    u64 p_;
    std::size_t width_;
    std::vector<std::vector<u32>> rows_;   // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

}  // namespace hopfres

#endif
