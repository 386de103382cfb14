#include "hopfres/modrep.hpp"

#include <algorithm>

namespace hopfres {

namespace {

std::vector<u32> dense(const SparseVec& sv, std::size_t n, u64 p) {
    std::vector<u32> v(n, 0);
    for (auto [i, c] : sv) v[i] = u32((v[i] + c) % p);
    return v;
}

FpMat word_action_matrix(const ModuleRep& m, const std::vector<u32>& word) {
    FpMat acc = FpMat::identity(m.algebra->field().p, m.dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul(m.act(*it), acc);
    return acc;
}

}  // namespace

void validate_module(const ModuleRep& m, ValidationMode mode) {
    if (mode == ValidationMode::None) return;
    const auto& a = *m.algebra;
    const u64 p = a.field().p;
    check(m.action.size() == a.module_generator_count(), "InvalidModule",
          "one action matrix per module generator required");
    for (const auto& mat : m.action)
        check(mat.rows() == m.dim && mat.cols() == m.dim, "InvalidModule",
              "action matrix dimensions");

    auto probe_vectors = [&] {
        std::vector<std::vector<u32>> vs;
        Rng rng(0xbadc0de);
        for (int t = 0; t < 3; ++t) {
            std::vector<u32> v(m.dim);
            for (auto& x : v) x = u32(rng.below(p));
            vs.push_back(std::move(v));
        }
        return vs;
    };

    if (a.presentation()) {
        const auto& pres = *a.presentation();
        for (const auto& rule : pres.rules) {
            if (mode == ValidationMode::Full) {
                FpMat lhs = word_action_matrix(m, rule.lhs);
                FpMat rhs(p, m.dim, m.dim);
                for (const auto& [w, c] : rule.rhs)
                    rhs = add(rhs, scale(word_action_matrix(m, w), c));
                check(lhs == rhs, "RelationViolation",
                      "presentation rule fails as a matrix identity");
            } else {
                for (const auto& v : probe_vectors()) {
                    auto lhs = act_word(m, rule.lhs, v);
                    std::vector<u64> acc(m.dim, 0);
                    for (const auto& [w, c] : rule.rhs) {
                        auto wv = act_word(m, w, v);
                        for (std::size_t i = 0; i < m.dim; ++i) acc[i] += u64(c) * wv[i];
                    }
                    for (std::size_t i = 0; i < m.dim; ++i)
                        check(acc[i] % p == lhs[i], "RelationViolation",
                              "presentation rule fails on a probe vector");
                }
            }
        }
    } else {
        // Raw table: act(b_i) act(b_j) must equal the structure constants.
        const auto& t = a.table();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                FpMat lhs = mul(m.act(i), m.act(j));
                FpMat rhs(p, m.dim, m.dim);
                for (auto [k, c] : t.at(i, j)) rhs = add(rhs, scale(m.act(k), c));
                check(lhs == rhs, "RelationViolation",
                      "structure constants fail on the module");
                if (mode == ValidationMode::Probe) return;  // spot check only
            }
    }
}

ModuleRep zero_module(AlgebraPtr a) {
    ModuleRep m;
    m.algebra = std::move(a);
    m.dim = 0;
    for (std::size_t g = 0; g < m.algebra->module_generator_count(); ++g)
        m.action.emplace_back(m.algebra->field().p, 0, 0);
    return m;
}

ModuleRep regular_module(AlgebraPtr a) {
    ModuleRep m;
    m.dim = a->dim();
    const auto& alg = *a;
    for (std::size_t g = 0; g < alg.module_generator_count(); ++g) {
        auto img = dense(alg.generator_image(g), alg.dim(), alg.field().p);
        m.action.push_back(alg.left_mult_operator(img));
    }
    m.algebra = std::move(a);
    return m;
}

ModuleRep character_module(AlgebraPtr a, std::size_t character) {
    const auto& chars = a->characters();
    check(character < chars.size(), "InvalidParameters", "character index");
    const u64 p = a->field().p;
    ModuleRep m;
    m.dim = 1;
    for (std::size_t g = 0; g < a->module_generator_count(); ++g) {
        u64 v = 0;
        for (auto [i, c] : a->generator_image(g))
            v = (v + u64(c) * chars[character].values[i]) % p;
        FpMat mat(p, 1, 1);
        mat.at(0, 0) = u32(v);
        m.action.push_back(mat);
    }
    m.algebra = std::move(a);
    return m;
}

ModuleRep block_projective_module(AlgebraPtr a, std::size_t character) {
    const BlockModule& bm = a->block_module(character);
    ModuleRep m;
    m.dim = bm.dim();
    m.action = bm.gen_action;
    m.algebra = std::move(a);
    return m;
}

std::vector<u32> act_word(const ModuleRep& m, const std::vector<u32>& word,
                          std::vector<u32> v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = mul_vec(m.act(*it), v);
    return v;
}

std::vector<std::vector<u32>> all_basis_actions(const ModuleRep& m,
                                                const std::vector<u32>& v) {
    const auto& a = *m.algebra;
    std::vector<std::vector<u32>> out(a.dim());
    out[0] = v;  // unit
    // Basis order is graded, so dp_rest(i) < i is already computed.
    for (std::size_t i = 1; i < a.dim(); ++i)
        out[i] = mul_vec(m.act(a.dp_letter(i)), out[a.dp_rest(i)]);
    return out;
}

std::vector<u32> act_element(const ModuleRep& m, const std::vector<u32>& elem,
                             const std::vector<u32>& v) {
    const auto& a = *m.algebra;
    const u64 p = a.field().p;
    std::vector<u64> acc(m.dim, 0);
    for (std::size_t b = 0; b < a.dim(); ++b) {
        if (elem[b] == 0) continue;
        auto wv = act_word(m, a.basis_spelling(b), v);
        for (std::size_t i = 0; i < m.dim; ++i) acc[i] += u64(elem[b]) * wv[i];
    }
    std::vector<u32> out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) out[i] = u32(acc[i] % p);
    return out;
}

FpMat element_action_matrix(const ModuleRep& m, const std::vector<u32>& elem) {
    const u64 p = m.algebra->field().p;
    FpMat out(p, m.dim, m.dim);
    std::vector<u32> e(m.dim, 0);
    for (std::size_t j = 0; j < m.dim; ++j) {
        e[j] = 1;
        auto col = act_element(m, elem, e);
        e[j] = 0;
        for (std::size_t i = 0; i < m.dim; ++i) out.at(i, j) = col[i];
    }
    return out;
}

bool is_module_map(const ModuleRep& src, const ModuleRep& dst, const FpMat& t) {
    if (t.rows() != dst.dim || t.cols() != src.dim) return false;
    for (std::size_t g = 0; g < src.action.size(); ++g)
        if (mul(t, src.act(g)) != mul(dst.act(g), t)) return false;
    return true;
}

std::vector<FpMat> hom_space(const ModuleRep& m, const ModuleRep& n) {
    check(m.algebra == n.algebra, "AlgebraMismatch", "hom_space over different algebras");
    const u64 p = m.algebra->field().p;
    const std::size_t dm = m.dim, dn = n.dim, ng = m.action.size();
    const std::size_t unknowns = dm * dn;
    if (unknowns == 0) return {};
    FpMat sys(p, ng * unknowns, unknowns);
    for (std::size_t g = 0; g < ng; ++g) {
        const FpMat& am = m.act(g);
        const FpMat& an = n.act(g);
        // (T A^M - A^N T)[i][j] = sum_c T[i][c] am[c][j] - sum_r an[i][r] T[r][j]
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dm; ++j) {
                std::size_t row = g * unknowns + i * dm + j;
                for (std::size_t c = 0; c < dm; ++c) {
                    std::size_t col = i * dm + c;
                    sys.at(row, col) = u32((sys.at(row, col) + am.at(c, j)) % p);
                }
                for (std::size_t r = 0; r < dn; ++r) {
                    std::size_t col = r * dm + j;
                    sys.at(row, col) = u32((sys.at(row, col) + p - an.at(i, r)) % p);
                }
            }
    }
    FpMat ker = kernel_basis(sys);
    std::vector<FpMat> out;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
        FpMat t(p, dn, dm);
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dm; ++j) t.at(i, j) = ker.at(k, i * dm + j);
        out.push_back(std::move(t));
    }
    return out;
}

Submodule submodule(const ModuleRep& m, const std::vector<std::vector<u32>>& spanning) {
    const u64 p = m.algebra->field().p;
    EchelonBasis eb(p, m.dim);
    for (const auto& v : spanning) eb.insert(v);
    const std::size_t sd = eb.dim();

    Submodule out;
    out.module.algebra = m.algebra;
    out.module.dim = sd;
    for (std::size_t g = 0; g < m.action.size(); ++g) {
        FpMat act(p, sd, sd);
        for (std::size_t j = 0; j < sd; ++j) {
            auto w = mul_vec(m.act(g), eb.rows()[j]);
            check(eb.contains(w), "NotASubmodule",
                  "spanning set is not closed under the action");
            auto coords = eb.coordinates(w);
            for (std::size_t i = 0; i < sd; ++i) act.at(i, j) = coords[i];
        }
        out.module.action.push_back(std::move(act));
    }
    out.inclusion_rows = eb.to_matrix();
    return out;
}

EchelonBasis module_radical(const ModuleRep& m) {
    const auto& a = *m.algebra;
    const u64 p = a.field().p;
    EchelonBasis eb(p, m.dim);
    if (m.dim == 0) return eb;
    for (const auto& y : a.radical_right_generators()) {
        // Dense action of y; y is usually a single generator letter.
        FpMat ymat(p, m.dim, m.dim);
        bool single = y.size() == 1 && a.basis_spelling(y[0].first).size() == 1;
        if (single) {
            ymat = scale(m.act(a.basis_spelling(y[0].first)[0]), y[0].second);
        } else {
            ymat = element_action_matrix(m, dense(y, a.dim(), p));
        }
        for (std::size_t j = 0; j < m.dim; ++j) {
            std::vector<u32> col(m.dim);
            for (std::size_t i = 0; i < m.dim; ++i) col[i] = ymat.at(i, j);
            eb.insert(std::move(col));
        }
    }
    return eb;
}

TopDecomposition top_of_module(const ModuleRep& m) {
    const auto& a = *m.algebra;
    const u64 p = a.field().p;
    const auto& chars = a.characters();

    EchelonBasis rad = module_radical(m);
    std::vector<bool> is_pivot(m.dim, false);
    for (auto c : rad.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < m.dim; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    const std::size_t td = comp.size();

    // Generator actions on the quotient coordinates.
    std::vector<FpMat> top_act;
    for (std::size_t g = 0; g < m.action.size(); ++g) {
        FpMat t(p, td, td);
        for (std::size_t j = 0; j < td; ++j) {
            std::vector<u32> v(m.dim, 0);
            v[comp[j]] = 1;
            auto w = rad.reduce(mul_vec(m.act(g), v));
            for (std::size_t i = 0; i < td; ++i) t.at(i, j) = w[comp[i]];
        }
        top_act.push_back(std::move(t));
    }

    TopDecomposition out;
    out.multiplicity.assign(chars.size(), 0);
    out.reps.resize(chars.size());
    for (std::size_t c = 0; c < chars.size(); ++c) {
        if (td == 0) continue;
        // ker of stacked (act_top(g) - chi(g) I).
        FpMat sys(p, m.action.size() * td, td);
        for (std::size_t g = 0; g < m.action.size(); ++g) {
            u64 chi = 0;
            for (auto [i, cf] : a.generator_image(g))
                chi = (chi + u64(cf) * chars[c].values[i]) % p;
            for (std::size_t i = 0; i < td; ++i)
                for (std::size_t j = 0; j < td; ++j) {
                    u64 v = top_act[g].at(i, j);
                    if (i == j) v = (v + p - chi) % p;
                    sys.at(g * td + i, j) = u32(v);
                }
        }
        FpMat ker = kernel_basis(sys);
        out.multiplicity[c] = ker.rows();
        for (std::size_t k = 0; k < ker.rows(); ++k) {
            std::vector<u32> lift(m.dim, 0);
            for (std::size_t j = 0; j < td; ++j) lift[comp[j]] = ker.at(k, j);
            out.reps[c].push_back(std::move(lift));
        }
        out.total += ker.rows();
    }
    check(out.total == td, "NotCharacterSplit",
          "top of module does not decompose into characters");
    return out;
}

ProjectiveCover projective_cover(const ModuleRep& m) {
    const auto& a = *m.algebra;
    const u64 p = a.field().p;
    const auto& es = a.primitive_idempotents();
    TopDecomposition top = top_of_module(m);

    ProjectiveCover out;
    out.betti = top.multiplicity;

    // Assemble P = ⊕ A e_chi and the cover columns u |-> u (e_chi v).
    std::size_t pdim = 0;
    std::vector<const BlockModule*> blocks;
    std::vector<std::vector<u32>> targets;  // e_chi v per summand
    for (std::size_t c = 0; c < top.multiplicity.size(); ++c) {
        const BlockModule& bm = a.block_module(c);
        for (const auto& rep : top.reps[c]) {
            out.summands.push_back(c);
            blocks.push_back(&bm);
            targets.push_back(act_element(m, es[c], rep));
            pdim += bm.dim();
        }
    }

    out.projective.algebra = m.algebra;
    out.projective.dim = pdim;
    for (std::size_t g = 0; g < a.module_generator_count(); ++g) {
        FpMat act(p, pdim, pdim);
        std::size_t off = 0;
        for (const BlockModule* bm : blocks) {
            for (std::size_t i = 0; i < bm->dim(); ++i)
                for (std::size_t j = 0; j < bm->dim(); ++j)
                    act.at(off + i, off + j) = bm->gen_action[g].at(i, j);
            off += bm->dim();
        }
        out.projective.action.push_back(std::move(act));
    }

    out.cover = FpMat(p, m.dim, pdim);
    std::size_t off = 0;
    for (std::size_t s = 0; s < blocks.size(); ++s) {
        const BlockModule* bm = blocks[s];
        auto actions = all_basis_actions(m, targets[s]);
        for (std::size_t j = 0; j < bm->dim(); ++j) {
            // Column = (block basis vector u_j) * target, with u_j expanded
            // in the algebra basis.
            std::vector<u64> acc(m.dim, 0);
            const auto& row = bm->basis_rows;
            for (std::size_t b = 0; b < a.dim(); ++b) {
                u64 cf = row.at(j, b);
                if (!cf) continue;
                const auto& wv = actions[b];
                for (std::size_t i = 0; i < m.dim; ++i) acc[i] += cf * wv[i];
            }
            for (std::size_t i = 0; i < m.dim; ++i)
                out.cover.at(i, off + j) = u32(acc[i] % p);
        }
        off += bm->dim();
    }

    // Surjectivity (Nakayama: bijective on tops by construction).
    check(rank(out.cover) == m.dim, "InternalError", "cover map is not surjective");
    return out;
}

SyzygyResult syzygy(const ModuleRep& m) {
    SyzygyResult out;
    out.cover = projective_cover(m);
    FpMat ker = kernel_basis(out.cover.cover);
    std::vector<std::vector<u32>> rows;
    for (std::size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row_vec(i));
    Submodule sub = submodule(out.cover.projective, rows);
    out.module = std::move(sub.module);
    out.inclusion_rows = std::move(sub.inclusion_rows);
    return out;
}

bool is_projective(const ModuleRep& m) {
    if (m.dim == 0) return true;
    ProjectiveCover c = projective_cover(m);
    return c.projective.dim == m.dim;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    check(a.algebra == b.algebra, "AlgebraMismatch", "direct sum over different algebras");
    const u64 p = a.algebra->field().p;
    ModuleRep m;
    m.algebra = a.algebra;
    m.dim = a.dim + b.dim;
    for (std::size_t g = 0; g < a.action.size(); ++g) {
        FpMat act(p, m.dim, m.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) act.at(i, j) = a.act(g).at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j)
                act.at(a.dim + i, a.dim + j) = b.act(g).at(i, j);
        m.action.push_back(std::move(act));
    }
    return m;
}

std::pair<Submodule, Submodule> split_summand(const ModuleRep& m, const FpMat& idem) {
    check(is_module_map(m, m, idem), "NotIdempotent", "split by a non-endomorphism");
    check(mul(idem, idem) == idem, "NotIdempotent", "split by a non-idempotent");
    std::vector<std::vector<u32>> image_rows;
    for (std::size_t j = 0; j < m.dim; ++j) {
        std::vector<u32> col(m.dim);
        for (std::size_t i = 0; i < m.dim; ++i) col[i] = idem.at(i, j);
        image_rows.push_back(std::move(col));
    }
    Submodule image = submodule(m, image_rows);
    FpMat kerb = kernel_basis(idem);
    std::vector<std::vector<u32>> kernel_rows;
    for (std::size_t i = 0; i < kerb.rows(); ++i) kernel_rows.push_back(kerb.row_vec(i));
    Submodule kernel = submodule(m, kernel_rows);
    check(image.module.dim + kernel.module.dim == m.dim, "InternalError",
          "idempotent split dimensions");
    return {std::move(image), std::move(kernel)};
}

namespace {

using Poly = std::vector<u64>;  // coefficients, ascending; normalized (no top zeros)

void poly_trim(Poly& f, u64 p) {
    for (auto& c : f) c %= p;
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c, p);
    return c;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
    poly_trim(a, p);
    return a;
}

// a = q*b + r
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, u64 p) {
    check(!b.empty(), "DivisionByZero", "polynomial division by zero");
    Poly q;
    u64 lead_inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        u64 f = a.back() * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = (q[shift] + f) % p;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
        poly_trim(a, p);
        if (a.empty()) break;
    }
    poly_trim(q, p);
    return {q, a};
}

// Extended gcd: g = u*a + v*b with g monic.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd poly_ext_gcd(Poly a, Poly b, u64 p) {
    Poly u0{1}, v0, u1, v1{1};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, p);
        Poly nu = poly_sub(u0, poly_mul(q, u1, p), p);
        Poly nv = poly_sub(v0, poly_mul(q, v1, p), p);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = fp_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
        for (auto& c : u0) c = c * inv % p;
        for (auto& c : v0) c = c * inv % p;
    }
    return {a, u0, v0};
}

u64 poly_eval(const Poly& f, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
}

// Minimal polynomial of a square matrix by linear algebra on its powers.
Poly minimal_polynomial(const FpMat& e, u64 p) {
    const std::size_t n = e.rows();
    EchelonBasis eb(p, n * n);
    std::vector<FpMat> powers;
    FpMat cur = FpMat::identity(p, n);
    while (true) {
        std::vector<u32> flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = cur.at(i, j);
        if (!eb.insert(flat)) {
            // cur = sum of lower powers: solve for the dependency.
            FpMat sys(p, n * n, powers.size());
            for (std::size_t k = 0; k < powers.size(); ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        sys.at(i * n + j, k) = powers[k].at(i, j);
            std::vector<u32> rhs(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) rhs[i * n + j] = cur.at(i, j);
            auto sol = solve(sys, rhs);
            check(sol.has_value(), "InternalError", "minimal polynomial solve failed");
            Poly f(powers.size() + 1, 0);
            for (std::size_t k = 0; k < powers.size(); ++k) f[k] = (p - (*sol)[k]) % p;
            f[powers.size()] = 1;
            poly_trim(f, p);
            return f;
        }
        powers.push_back(cur);
        cur = mul(cur, e);
    }
}

FpMat poly_of_matrix(const Poly& f, const FpMat& e, u64 p) {
    const std::size_t n = e.rows();
    FpMat acc(p, n, n);
    FpMat cur = FpMat::identity(p, n);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i]) acc = add(acc, scale(cur, f[i]));
        if (i + 1 < f.size()) cur = mul(cur, e);
    }
    return acc;
}

}  // namespace

std::optional<FpMat> find_idempotent(const ModuleRep& m, u64 seed, unsigned budget) {
    if (m.dim == 0) return std::nullopt;
    const u64 p = m.algebra->field().p;
    auto homs = hom_space(m, m);
    if (homs.size() <= 1) return std::nullopt;  // End = k: indecomposable
    Rng rng(seed);
    for (unsigned trial = 0; trial < budget; ++trial) {
        FpMat e(p, m.dim, m.dim);
        for (const auto& h : homs) e = add(e, scale(h, rng.below(p)));
        Poly mu = minimal_polynomial(e, p);
        if (mu.size() <= 1) continue;
        // Split off the generalized eigenspace of a root in F_p.
        for (u64 lam = 0; lam < p; ++lam) {
            if (poly_eval(mu, lam, p) != 0) continue;
            Poly lin{(p - lam) % p, 1};
            Poly f{1};
            Poly rest = mu;
            while (true) {
                auto [q, r] = poly_divmod(rest, lin, p);
                if (!r.empty()) break;
                f = poly_mul(f, lin, p);
                rest = q;
            }
            if (rest.empty() || rest.size() <= 1) break;  // mu = (t-lam)^k: no split here
            ExtGcd eg = poly_ext_gcd(f, rest, p);
            if (eg.g != Poly{1}) continue;
            FpMat idem = poly_of_matrix(poly_mul(eg.u, f, p), e, p);
            if (mul(idem, idem) == idem && !idem.is_zero() &&
                idem != FpMat::identity(p, m.dim))
                return idem;
        }
    }
    return std::nullopt;
}

StrippedModule strip_projective_summands(const ModuleRep& m) {
    const auto& a = *m.algebra;
    StrippedModule out;
    out.core = m;
    out.stripped.assign(a.characters().size(), 0);

    bool progress = true;
    while (progress && out.core.dim > 0) {
        progress = false;
        for (std::size_t c = 0; c < a.characters().size() && !progress; ++c) {
            ModuleRep pc = block_projective_module(m.algebra, c);
            auto into = hom_space(pc, out.core);
            if (into.empty()) continue;
            auto back = hom_space(out.core, pc);
            for (const auto& phi : into) {
                for (const auto& psi : back) {
                    FpMat comp = mul(psi, phi);  // endomorphism of P_chi
                    if (rank(comp) != pc.dim) continue;
                    FpMat theta = mul(mul(phi, inverse(comp)), psi);
                    auto [image, kernel] = split_summand(out.core, theta);
                    check(image.module.dim == pc.dim, "InternalError",
                          "split off summand is not a copy of A e_chi");
                    out.core = std::move(kernel.module);
                    out.stripped[c] += 1;
                    progress = true;
                    break;
                }
                if (progress) break;
            }
        }
    }
    return out;
}

}  // namespace hopfres
