#include "hopfres/fp.hpp"

#include <algorithm>

namespace hopfres {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 choose_prime(u64 ell, u64 lower_bound) {
    check(ell >= 1, "InvalidParameters", "ell must be positive");
    // p ≡ 1 (mod ell): walk the arithmetic progression.
    u64 p = (lower_bound / ell) * ell + 1;
    while (p <= lower_bound || p <= ell || !is_prime(p)) {
        p += ell;
        check(p < kMaxModulus, "ModulusTooLarge",
              "no admissible prime below 2^20 for ell=" + std::to_string(ell));
    }
    return p;
}

u64 fp_pow(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

u64 fp_inv(u64 a, u64 p) {
    a %= p;
    check(a != 0, "DivisionByZero", "inverse of 0 mod " + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

static bool has_order(u64 x, u64 ell, u64 p) {
    if (fp_pow(x, ell, p) != 1) return false;
    for (u64 d = 1; d * d <= ell; ++d) {
        if (ell % d != 0) continue;
        if (d < ell && fp_pow(x, d, p) == 1) return false;
        u64 e = ell / d;
        if (e < ell && fp_pow(x, e, p) == 1) return false;
    }
    return true;
}

u64 element_of_order(u64 p, u64 ell) {
    check((p - 1) % ell == 0, "InvalidParameters", "ell does not divide p-1");
    if (ell == 1) return 1;
    for (u64 x = 2; x < p; ++x)
        if (has_order(x, ell, p)) return x;
    fail("InternalError", "no element of the requested order found");
}

PrimeField make_field(u64 p, u64 ell, u64 q) {
    check(p < kMaxModulus, "ModulusTooLarge", "p must be below 2^20");
    check(is_prime(p), "InvalidParameters", std::to_string(p) + " is not prime");
    check(ell >= 1 && (p - 1) % ell == 0, "InvalidParameters",
          "need p ≡ 1 (mod ell)");
    check(has_order(q % p, ell, p), "InvalidParameters",
          "q does not have multiplicative order exactly ell");
    return PrimeField{p, ell, q % p};
}

PrimeField make_field_auto(u64 ell, u64 dim_lower_bound) {
    u64 p = choose_prime(ell, dim_lower_bound);
    return PrimeField{p, ell, element_of_order(p, ell)};
}

FpMat FpMat::identity(u64 p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = u32(1 % p);
    return m;
}

void FpMat::set_row(std::size_t i, const std::vector<u32>& v) {
    check(v.size() == cols_, "DimensionMismatch", "set_row width");
    std::copy(v.begin(), v.end(), row(i));
}

bool FpMat::is_zero() const {
    for (u32 x : a_)
        if (x != 0) return false;
    return true;
}

FpMat FpMat::transpose() const {
    FpMat t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

// Core elimination. Works on a 64-bit scratch copy so the inner loop is a
// bare multiply-accumulate; only pivot rows are reduced during the sweep.
// Deterministic: pivots are always the first usable row in column order.
namespace {

struct Scratch {
    u64 p;
    std::size_t rows, cols;
    std::vector<u64> a;

    explicit Scratch(const FpMat& m)
        : p(m.modulus()), rows(m.rows()), cols(m.cols()), a(rows * cols) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j);
    }

    u64* row(std::size_t i) { return a.data() + i * cols; }

    void reduce_row(std::size_t i) {
        u64* r = row(i);
        for (std::size_t j = 0; j < cols; ++j) r[j] %= p;
    }

    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols && r < rows; ++col) {
            std::size_t sel = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (row(i)[col] % p != 0) {
                    sel = i;
                    break;
                }
            }
            if (sel == rows) continue;
            if (sel != r) std::swap_ranges(row(sel), row(sel) + cols, row(r));
            reduce_row(r);
            u64 inv = fp_inv(row(r)[col], p);
            if (inv != 1) {
                u64* pr = row(r);
                for (std::size_t j = col; j < cols; ++j) pr[j] = pr[j] * inv % p;
            }
            const u64* pr = row(r);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r) continue;
                u64 f = row(i)[col] % p;
                if (f == 0) {
                    row(i)[col] = 0;
                    continue;
                }
                u64 f2 = p - f;
                u64* ri = row(i);
                // ri stays below pivots*(p-1)^2 + p < 2^64 for p < 2^20.
                for (std::size_t j = col; j < cols; ++j) ri[j] += f2 * pr[j];
            }
            pivots.push_back(col);
            ++r;
        }
        return pivots;
    }

    FpMat to_mat() const {
        FpMat m(p, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = u32(a[i * cols + j] % p);
        return m;
    }
};

}  // namespace

RrefResult rref(const FpMat& m) {
    Scratch s(m);
    RrefResult out;
    out.pivots = s.rref();
    out.rank = out.pivots.size();
    out.mat = s.to_mat();
    return out;
}

std::size_t rank(const FpMat& m) {
    Scratch s(m);
    return s.rref().size();
}

KernelResult kernel_basis_with_leads(const FpMat& m) {
    const u64 p = m.modulus();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    std::size_t nf = m.cols() - r.rank;
    KernelResult out;
    out.rows = FpMat(p, nf, m.cols());
    std::size_t k = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        out.rows.at(k, j) = 1;
        out.lead_cols.push_back(j);
        for (std::size_t i = 0; i < r.rank; ++i) {
            u32 v = r.mat.at(i, j);
            if (v != 0) out.rows.at(k, r.pivots[i]) = u32(p - v);
        }
        ++k;
    }
    return out;
}

FpMat kernel_basis(const FpMat& m) { return kernel_basis_with_leads(m).rows; }

std::optional<std::vector<u32>> solve(const FpMat& m, const std::vector<u32>& b) {
    check(b.size() == m.rows(), "DimensionMismatch", "solve rhs length");
    const u64 p = m.modulus();
    FpMat aug(p, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::copy(m.row(i), m.row(i) + m.cols(), aug.row(i));
        aug.at(i, m.cols()) = u32(b[i] % p);
    }
    RrefResult r = rref(aug);
    for (std::size_t c : r.pivots)
        if (c == m.cols()) return std::nullopt;  // inconsistent system
    std::vector<u32> x(m.cols(), 0);
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.mat.at(i, m.cols());
    return x;
}

std::optional<std::vector<u32>> solve_lexmin(const FpMat& m, const std::vector<u32>& b) {
    auto x0 = solve(m, b);
    if (!x0) return std::nullopt;
    const u64 p = m.modulus();
    // Reduce the particular solution against the RREF kernel basis; scanning
    // pivot columns left to right greedily zeroes the earliest coordinates
    // that are free to move, which is exactly the lex-least solution.
    RrefResult kr = rref(kernel_basis(m));
    std::vector<u32>& x = *x0;
    for (std::size_t i = 0; i < kr.rank; ++i) {
        std::size_t lead = kr.pivots[i];
        u64 f = x[lead] % p;
        if (f == 0) continue;
        u64 f2 = p - f;
        for (std::size_t j = lead; j < x.size(); ++j)
            x[j] = u32((x[j] + f2 * kr.mat.at(i, j)) % p);
    }
    return x0;
}

FpMat mul(const FpMat& a, const FpMat& b) {
    check(a.cols() == b.rows(), "DimensionMismatch", "matrix product shapes");
    check(a.modulus() == b.modulus(), "FieldMismatch", "matrix product moduli");
    const u64 p = a.modulus();
    FpMat c(p, a.rows(), b.cols());
    std::vector<u64> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const u32* ar = a.row(i);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            u64 v = ar[l];
            if (v == 0) continue;
            const u32* br = b.row(l);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += v * br[j];
        }
        u32* cr = c.row(i);
        for (std::size_t j = 0; j < b.cols(); ++j) cr[j] = u32(acc[j] % p);
    }
    return c;
}

std::vector<u32> mul_vec(const FpMat& a, const std::vector<u32>& x) {
    check(x.size() == a.cols(), "DimensionMismatch", "mul_vec length");
    const u64 p = a.modulus();
    std::vector<u32> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const u32* r = a.row(i);
        u64 acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += u64(r[j]) * x[j];
        y[i] = u32(acc % p);
    }
    return y;
}

std::vector<u32> vec_mul(const std::vector<u32>& x, const FpMat& a) {
    check(x.size() == a.rows(), "DimensionMismatch", "vec_mul length");
    const u64 p = a.modulus();
    std::vector<u64> acc(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        u64 v = x[i];
        if (v == 0) continue;
        const u32* r = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) acc[j] += v * r[j];
    }
    std::vector<u32> y(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] = u32(acc[j] % p);
    return y;
}

FpMat add(const FpMat& a, const FpMat& b) {
    check(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch", "add");
    FpMat c(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = u32((u64(a.at(i, j)) + b.at(i, j)) % a.modulus());
    return c;
}

FpMat sub(const FpMat& a, const FpMat& b) {
    check(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch", "sub");
    const u64 p = a.modulus();
    FpMat c(p, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = u32((u64(a.at(i, j)) + p - b.at(i, j)) % p);
    return c;
}

FpMat scale(const FpMat& a, u64 c) {
    const u64 p = a.modulus();
    c %= p;
    FpMat m(p, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = u32(a.at(i, j) * c % p);
    return m;
}

FpMat inverse(const FpMat& m) {
    check(m.rows() == m.cols(), "DimensionMismatch", "inverse of non-square matrix");
    const u64 p = m.modulus();
    const std::size_t n = m.rows();
    FpMat aug(p, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(m.row(i), m.row(i) + n, aug.row(i));
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    check(r.rank == n && r.pivots[n - 1] == n - 1, "NotInvertible", "singular matrix");
    FpMat inv(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        std::copy(r.mat.row(i) + n, r.mat.row(i) + 2 * n, inv.row(i));
    return inv;
}

bool EchelonBasis::insert(std::vector<u32> v) {
    check(v.size() == width_, "DimensionMismatch", "EchelonBasis::insert width");
    v = reduce(std::move(v));
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (v[j] != 0) {
            lead = j;
            break;
        }
    }
    if (lead == width_) return false;
    u64 inv = fp_inv(v[lead], p_);
    if (inv != 1)
        for (std::size_t j = lead; j < width_; ++j) v[j] = u32(v[j] * inv % p_);
    // Back-eliminate the new pivot column from existing rows.
    for (auto& row : rows_) {
        u64 f = row[lead];
        if (f == 0) continue;
        u64 f2 = p_ - f;
        for (std::size_t j = lead; j < width_; ++j)
            row[j] = u32((row[j] + f2 * v[j]) % p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = std::size_t(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

std::vector<u32> EchelonBasis::reduce(std::vector<u32> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        u64 f = v[pivots_[i]];
        if (f == 0) continue;
        u64 f2 = p_ - f;
        const auto& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < width_; ++j)
            v[j] = u32((v[j] + f2 * row[j]) % p_);
    }
    return v;
}

bool EchelonBasis::contains(const std::vector<u32>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](u32 x) { return x == 0; });
}

FpMat EchelonBasis::to_matrix() const {
    FpMat m(p_, rows_.size(), width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) m.set_row(i, rows_[i]);
    return m;
}

std::vector<u32> EchelonBasis::coordinates(const std::vector<u32>& v) const {
    std::vector<u32> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

}  // namespace hopfres
