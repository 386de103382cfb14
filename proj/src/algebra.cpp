#include "hopfres/algebra.hpp"

#include <algorithm>
#include <map>

namespace hopfres {

namespace {

u64 table_left_trace(const MultiplicationTable& t, std::size_t k, u64 p) {
    // Trace of left multiplication by basis k.
    u64 acc = 0;
    for (std::size_t j = 0; j < t.dim; ++j)
        for (auto [idx, c] : t.at(k, j))
            if (idx == j) acc += c;
    return acc % p;
}

void sparse_acc(std::vector<u64>& acc, const SparseVec& sv, u64 scalar, u64 p) {
    scalar %= p;
    if (scalar == 0) return;
    for (auto [k, c] : sv) acc[k] = (acc[k] + scalar * c) % p;
}

std::vector<u32> finish(std::vector<u64>& acc, u64 p) {
    std::vector<u32> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = u32(acc[i] % p);
    return out;
}

}  // namespace

EchelonBasis table_trace_radical(const MultiplicationTable& table, u64 p) {
    const std::size_t n = table.dim;
    std::vector<u64> tau(n);
    for (std::size_t k = 0; k < n; ++k) tau[k] = table_left_trace(table, k, p);

    FpMat gram(p, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            u64 acc = 0;
            for (auto [k, c] : table.at(a, b)) acc = (acc + tau[k] * c) % p;
            gram.at(a, b) = u32(acc);
        }
    FpMat ker = kernel_basis(gram);
    EchelonBasis eb(p, n);
    for (std::size_t i = 0; i < ker.rows(); ++i) eb.insert(ker.row_vec(i));
    return eb;
}

std::vector<u32> FiniteDimAlgebra::unit_vector() const {
    std::vector<u32> v(dim_, 0);
    v[0] = 1;
    return v;
}

std::vector<u32> FiniteDimAlgebra::multiply(const std::vector<u32>& a,
                                            const std::vector<u32>& b) const {
    const u64 p = field_.p;
    std::vector<u64> acc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            sparse_acc(acc, table_.at(i, j), u64(a[i]) * b[j] % p, p);
        }
    }
    return finish(acc, p);
}

std::vector<u32> FiniteDimAlgebra::multiply_sparse_left(const SparseVec& a,
                                                        const std::vector<u32>& b) const {
    const u64 p = field_.p;
    std::vector<u64> acc(dim_, 0);
    for (auto [i, ci] : a) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            sparse_acc(acc, table_.at(i, j), u64(ci) * b[j] % p, p);
        }
    }
    return finish(acc, p);
}

FpMat FiniteDimAlgebra::left_mult_operator(const std::vector<u32>& a) const {
    const u64 p = field_.p;
    FpMat m(p, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            for (auto [k, c] : table_.at(i, j))
                m.at(k, j) = u32((m.at(k, j) + u64(a[i]) * c) % p);
    }
    return m;
}

FpMat FiniteDimAlgebra::right_mult_operator(const std::vector<u32>& a) const {
    const u64 p = field_.p;
    FpMat m(p, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (a[j] == 0) continue;
        for (std::size_t i = 0; i < dim_; ++i)
            for (auto [k, c] : table_.at(i, j))
                m.at(k, i) = u32((m.at(k, i) + u64(a[j]) * c) % p);
    }
    return m;
}

u64 FiniteDimAlgebra::counit_free_trace(std::size_t k) const {
    return table_left_trace(table_, k, field_.p);
}

void FiniteDimAlgebra::run_construction_gates() {
    const u64 p = field_.p;
    check(p > dim_, "InvalidParameters",
          "p must exceed dim A (got p=" + std::to_string(p) +
              ", dim=" + std::to_string(dim_) + ")");

    // Unit axioms.
    for (std::size_t j = 0; j < dim_; ++j) {
        SparseVec expect{{u32(j), 1}};
        check(table_.at(0, j) == expect, "UnitAxiom", "unit row is not the identity");
        check(table_.at(j, 0) == expect, "UnitAxiom", "unit column is not the identity");
    }

    // Associativity: all triples below dim 100, else 100 seeded random ones.
    auto assoc_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::vector<u64> left(dim_, 0), right(dim_, 0);
        for (auto [m, c] : table_.at(i, j)) sparse_acc(left, table_.at(m, k), c, p);
        for (auto [m, c] : table_.at(j, k)) sparse_acc(right, table_.at(i, m), c, p);
        for (std::size_t t = 0; t < dim_; ++t)
            if (left[t] % p != right[t] % p) return false;
        return true;
    };
    if (dim_ <= 100) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    check(assoc_triple(i, j, k), "NotAssociative",
                          "associativity fails on basis triple");
    } else {
        Rng rng(0x5eedA550C);
        for (int t = 0; t < 100; ++t) {
            std::size_t i = rng.below(dim_), j = rng.below(dim_), k = rng.below(dim_);
            check(assoc_triple(i, j, k), "NotAssociative",
                  "associativity fails on sampled basis triple");
        }
    }
}

std::shared_ptr<const FiniteDimAlgebra> FiniteDimAlgebra::from_presentation(
    RewritePresentation pres, std::optional<GroupLikeDeclaration> gl,
    const std::string& name) {
    pres.validate();
    auto ambiguities = check_local_confluence(pres);
    if (!ambiguities.empty()) {
        std::string msg = "presentation has " + std::to_string(ambiguities.size()) +
                          " unresolved overlap(s); first superword:";
        for (u32 g : ambiguities.front().superword)
            msg += " " + pres.generator_names[g];
        fail("NotConfluent", msg);
    }

    auto alg = std::shared_ptr<FiniteDimAlgebra>(new FiniteDimAlgebra());
    alg->name_ = name;
    alg->field_ = pres.field;
    alg->basis_words_ = enumerate_basis(pres);
    alg->dim_ = alg->basis_words_.size();
    alg->table_ = structure_constants(pres, alg->basis_words_);

    alg->labels_.reserve(alg->dim_);
    for (const Word& w : alg->basis_words_) {
        if (w.empty()) {
            alg->labels_.push_back("1");
            continue;
        }
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += pres.generator_names[w[i]];
        }
        alg->labels_.push_back(s);
    }

    std::map<Word, u32, DegLexLess> index;
    for (std::size_t i = 0; i < alg->dim_; ++i) index[alg->basis_words_[i]] = u32(i);

    alg->gen_names_ = pres.generator_names;
    for (u32 g = 0; g < pres.generator_count(); ++g) {
        LinComb nf = normal_form_word(pres, Word{g});
        SparseVec sv;
        for (const auto& [w, c] : nf) sv.emplace_back(index.at(w), c);
        std::sort(sv.begin(), sv.end());
        alg->gen_images_.push_back(std::move(sv));
    }
    alg->spellings_.reserve(alg->dim_);
    for (const Word& w : alg->basis_words_) alg->spellings_.push_back(w);
    alg->dp_letter_.assign(alg->dim_, 0);
    alg->dp_rest_.assign(alg->dim_, 0);
    for (std::size_t i = 1; i < alg->dim_; ++i) {
        const Word& w = alg->basis_words_[i];
        alg->dp_letter_[i] = w.front();
        Word rest(w.begin() + 1, w.end());
        auto it = index.find(rest);
        check(it != index.end(), "InternalError",
              "suffix of a normal word is not normal");
        alg->dp_rest_[i] = it->second;
    }

    alg->pres_ = std::move(pres);
    alg->run_construction_gates();

    if (gl) {
        const RewritePresentation& pr = *alg->pres_;
        const u64 p = alg->field_.p;
        const u64 ell = alg->field_.ell;
        check(gl->generators.size() == gl->orders.size(), "InvalidGroupData",
              "generator/order count mismatch");
        GroupLikeData data;
        std::size_t r = gl->generators.size();
        // Roots of unity per generator, consistent with the field's q.
        std::vector<u64> omega(r);
        for (std::size_t i = 0; i < r; ++i) {
            check(gl->orders[i] > 0 && ell % gl->orders[i] == 0, "InvalidGroupData",
                  "group-like order must divide ell");
            omega[i] = fp_pow(alg->field_.q, ell / gl->orders[i], p);
        }
        // Enumerate exponent tuples in lex order; tuple 0 is the unit.
        std::vector<std::vector<u64>> tuples{std::vector<u64>(r, 0)};
        for (std::size_t i = r; i-- > 0;) {
            std::vector<std::vector<u64>> next;
            for (u64 e = 0; e < gl->orders[i]; ++e)
                for (auto t : tuples) {
                    t[i] = e;
                    next.push_back(t);
                }
            tuples = std::move(next);
        }
        std::sort(tuples.begin(), tuples.end());
        std::map<std::vector<u64>, u32> elem_index;
        for (const auto& t : tuples) {
            Word w;
            for (std::size_t i = 0; i < r; ++i)
                for (u64 e = 0; e < t[i]; ++e) w.push_back(gl->generators[i]);
            LinComb nf = normal_form_word(pr, w);
            check(nf.size() == 1 && nf.begin()->second == 1, "InvalidGroupData",
                  "group-like monomial does not reduce to a single basis word");
            data.elements.push_back(index.at(nf.begin()->first));
            data.exponents.push_back(t);
            elem_index[t] = u32(data.elements.size() - 1);
        }
        check(data.elements[0] == 0, "InvalidGroupData", "group unit is not the algebra unit");

        // Closure and inverses through exponent arithmetic, then verified
        // against the multiplication table.
        data.inverse.resize(data.order());
        for (std::size_t a = 0; a < data.order(); ++a) {
            std::vector<u64> inv_t(r);
            for (std::size_t i = 0; i < r; ++i)
                inv_t[i] = (gl->orders[i] - data.exponents[a][i]) % gl->orders[i];
            data.inverse[a] = elem_index.at(inv_t);
            for (std::size_t b = 0; b < data.order(); ++b) {
                std::vector<u64> st(r);
                for (std::size_t i = 0; i < r; ++i)
                    st[i] = (data.exponents[a][i] + data.exponents[b][i]) % gl->orders[i];
                SparseVec expect{{data.elements[elem_index.at(st)], 1}};
                check(alg->table_.at(data.elements[a], data.elements[b]) == expect,
                      "InvalidGroupData", "group-like elements not closed under product");
            }
        }

        // Full character table of the abelian group.
        data.char_table = FpMat(p, data.order(), data.order());
        for (std::size_t c = 0; c < data.order(); ++c)
            for (std::size_t g = 0; g < data.order(); ++g) {
                u64 v = 1;
                for (std::size_t i = 0; i < r; ++i)
                    v = v * fp_pow(omega[i], data.exponents[c][i] * data.exponents[g][i], p) % p;
                data.char_table.at(c, g) = u32(v);
            }
        // Orthogonality: sum_g chi(g) psi(g^{-1}) = |G| delta.
        for (std::size_t c1 = 0; c1 < data.order(); ++c1)
            for (std::size_t c2 = 0; c2 < data.order(); ++c2) {
                u64 acc = 0;
                for (std::size_t g = 0; g < data.order(); ++g)
                    acc = (acc + u64(data.char_table.at(c1, g)) *
                                     data.char_table.at(c2, data.inverse[g])) %
                          p;
                u64 expect = (c1 == c2) ? data.order() % p : 0;
                check(acc == expect, "InvalidGroupData", "character orthogonality fails");
            }

        // Characters on every basis word (0 on words containing a
        // non-group-like generator).
        std::vector<std::optional<std::size_t>> gen_pos(pr.generator_count());
        for (std::size_t i = 0; i < r; ++i) gen_pos[gl->generators[i]] = i;
        data.char_on_basis = FpMat(p, data.order(), alg->dim_);
        for (std::size_t c = 0; c < data.order(); ++c)
            for (std::size_t b = 0; b < alg->dim_; ++b) {
                u64 v = 1;
                for (u32 letter : alg->basis_words_[b]) {
                    if (!gen_pos[letter]) {
                        v = 0;
                        break;
                    }
                    std::size_t i = *gen_pos[letter];
                    v = v * fp_pow(omega[i], data.exponents[c][i], p) % p;
                }
                data.char_on_basis.at(c, b) = u32(v);
            }
        alg->group_like_ = std::move(data);
    }
    return alg;
}

std::shared_ptr<const FiniteDimAlgebra> FiniteDimAlgebra::from_table(
    PrimeField field, MultiplicationTable table, std::vector<std::string> labels,
    const std::string& name) {
    auto alg = std::shared_ptr<FiniteDimAlgebra>(new FiniteDimAlgebra());
    alg->name_ = name;
    alg->field_ = field;
    alg->dim_ = table.dim;
    check(labels.size() == table.dim, "InvalidParameters", "label count mismatch");
    alg->table_ = std::move(table);
    alg->labels_ = std::move(labels);
    // Every basis element is a module generator; spellings are single letters.
    alg->gen_names_ = alg->labels_;
    for (std::size_t i = 0; i < alg->dim_; ++i) {
        alg->gen_images_.push_back(SparseVec{{u32(i), 1}});
        alg->spellings_.push_back({u32(i)});
        alg->basis_words_.push_back({u32(i)});
    }
    alg->dp_letter_.assign(alg->dim_, 0);
    alg->dp_rest_.assign(alg->dim_, 0);
    for (std::size_t i = 1; i < alg->dim_; ++i) {
        alg->dp_letter_[i] = u32(i);
        alg->dp_rest_[i] = 0;  // b_i = b_i * 1
    }
    alg->run_construction_gates();
    return alg;
}

void FiniteDimAlgebra::compute_radical() const {
    std::call_once(radical_once_, [&] {
        const u64 p = field_.p;
        auto rad = std::make_unique<EchelonBasis>(table_trace_radical(table_, p));

        // Nilpotency certificate: rad^{m+1} = sum_s y_s rad^m for right
        // generators y_s with rad = sum_s y_s A.
        std::vector<SparseVec> ys;
        if (pres_) {
            for (const auto& img : gen_images_) {
                std::vector<u32> dense(dim_, 0);
                for (auto [i, c] : img) dense[i] = u32((dense[i] + c) % p);
                if (rad->contains(dense)) ys.push_back(img);
            }
        }
        auto right_span_dim = [&](const std::vector<SparseVec>& gens) {
            EchelonBasis eb(p, dim_);
            for (const auto& y : gens)
                for (std::size_t j = 0; j < dim_; ++j) {
                    std::vector<u64> acc(dim_, 0);
                    for (auto [i, c] : y) sparse_acc(acc, table_.at(i, j), c, p);
                    eb.insert(finish(acc, p));
                }
            return eb.dim();
        };
        if (ys.empty() || right_span_dim(ys) != rad->dim()) {
            // Fallback: the whole radical basis right-generates trivially.
            ys.clear();
            for (const auto& row : rad->rows()) {
                SparseVec sv;
                for (std::size_t i = 0; i < dim_; ++i)
                    if (row[i]) sv.emplace_back(u32(i), row[i]);
                ys.push_back(std::move(sv));
            }
        }

        // Power tower: V_1 = rad, V_{m+1} = sum_s y_s V_m; must hit 0.
        EchelonBasis current = *rad;
        std::size_t steps = 0;
        while (current.dim() > 0) {
            check(++steps <= dim_ + 1, "RadicalNotNilpotent",
                  "radical power tower did not terminate");
            EchelonBasis next(p, dim_);
            for (const auto& y : ys)
                for (const auto& v : current.rows())
                    next.insert(multiply_sparse_left(y, v));
            check(next.dim() < current.dim() || next.dim() == 0, "RadicalNotNilpotent",
                  "radical power tower stabilized at a non-zero ideal");
            current = std::move(next);
        }

        // Semisimplicity of A/rad: recompute the trace radical on the quotient.
        const auto& pivots = rad->pivots();
        std::vector<std::size_t> comp;  // complement coordinates
        {
            std::vector<bool> is_pivot(dim_, false);
            for (auto c : pivots) is_pivot[c] = true;
            for (std::size_t i = 0; i < dim_; ++i)
                if (!is_pivot[i]) comp.push_back(i);
        }
        MultiplicationTable q;
        q.dim = comp.size();
        q.entries.resize(q.dim * q.dim);
        for (std::size_t a = 0; a < q.dim; ++a)
            for (std::size_t b = 0; b < q.dim; ++b) {
                std::vector<u32> prod(dim_, 0);
                for (auto [k, c] : table_.at(comp[a], comp[b])) prod[k] = c;
                auto res = rad->reduce(std::move(prod));
                SparseVec sv;
                for (std::size_t t = 0; t < q.dim; ++t)
                    if (res[comp[t]]) sv.emplace_back(u32(t), res[comp[t]]);
                q.entries[a * q.dim + b] = std::move(sv);
            }
        if (q.dim > 0)
            check(table_trace_radical(q, p).dim() == 0, "RadicalNotNilpotent",
                  "A/rad is not semisimple; radical computation is unsound here");

        rad_right_gens_ = std::move(ys);
        radical_ = std::move(rad);
    });
}

const EchelonBasis& FiniteDimAlgebra::radical() const {
    compute_radical();
    return *radical_;
}

const std::vector<SparseVec>& FiniteDimAlgebra::radical_right_generators() const {
    compute_radical();
    return rad_right_gens_;
}

namespace {

// Splits a commutative split-semisimple table into its one-dimensional
// common eigenspaces. Returns nullopt when some operator fails to split.
std::optional<std::vector<std::vector<u32>>> split_into_lines(const MultiplicationTable& t,
                                                              u64 p) {
    const std::size_t n = t.dim;
    if (n == 0) return std::vector<std::vector<u32>>{};
    std::vector<FpMat> spaces;
    FpMat full = FpMat::identity(p, n);
    spaces.push_back(full);

    for (std::size_t op = 0; op < n; ++op) {
        // Dense multiplication operator by basis op.
        FpMat m(p, n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (auto [k, c] : t.at(op, j)) m.at(k, j) = c;

        std::vector<FpMat> next;
        for (const FpMat& s : spaces) {
            if (s.rows() <= 1) {
                next.push_back(s);
                continue;
            }
            // Restriction of m to the row space of s, in echelonized coordinates.
            EchelonBasis eb(p, n);
            for (std::size_t i = 0; i < s.rows(); ++i) eb.insert(s.row_vec(i));
            FpMat sb = eb.to_matrix();
            FpMat r(p, sb.rows(), sb.rows());
            for (std::size_t i = 0; i < sb.rows(); ++i) {
                auto w = mul_vec(m, sb.row_vec(i));
                if (!eb.contains(w)) return std::nullopt;  // not invariant: not commutative/split
                auto coords = eb.coordinates(w);
                for (std::size_t k = 0; k < sb.rows(); ++k) r.at(k, i) = coords[k];
            }
            std::size_t found = 0;
            for (u64 lam = 0; lam < p && found < sb.rows(); ++lam) {
                FpMat shifted = r;
                for (std::size_t d = 0; d < sb.rows(); ++d)
                    shifted.at(d, d) = u32((shifted.at(d, d) + p - lam % p) % p);
                FpMat ker = kernel_basis(shifted);
                if (ker.rows() == 0) continue;
                found += ker.rows();
                FpMat sub(p, ker.rows(), n);
                for (std::size_t i = 0; i < ker.rows(); ++i) {
                    std::vector<u64> acc(n, 0);
                    for (std::size_t k = 0; k < sb.rows(); ++k) {
                        u64 f = ker.at(i, k);
                        if (!f) continue;
                        for (std::size_t j = 0; j < n; ++j) acc[j] += f * sb.at(k, j);
                    }
                    for (std::size_t j = 0; j < n; ++j) sub.at(i, j) = u32(acc[j] % p);
                }
                next.push_back(sub);
            }
            if (found != sb.rows()) return std::nullopt;  // not diagonalizable over F_p
        }
        spaces = std::move(next);
        if (std::all_of(spaces.begin(), spaces.end(),
                        [](const FpMat& s) { return s.rows() == 1; }))
            break;
    }
    std::vector<std::vector<u32>> lines;
    for (const FpMat& s : spaces) {
        if (s.rows() != 1) return std::nullopt;
        lines.push_back(s.row_vec(0));
    }
    return lines;
}

}  // namespace

void FiniteDimAlgebra::compute_characters() const {
    std::call_once(char_once_, [&] {
        compute_radical();
        const u64 p = field_.p;
        std::size_t quotient_dim = dim_ - radical_->dim();

        std::vector<Character> chars;
        if (group_like_) {
            const GroupLikeData& g = *group_like_;
            check(g.order() == quotient_dim, "NotCharacterSplit",
                  "group-like character count does not match dim(A/rad)");
            for (std::size_t c = 0; c < g.order(); ++c) {
                Character ch;
                ch.values = g.char_on_basis.row_vec(c);
                chars.push_back(std::move(ch));
            }
        } else {
            // Eigen-split of the commutative semisimple quotient.
            const auto& pivots = radical_->pivots();
            std::vector<bool> is_pivot(dim_, false);
            for (auto c : pivots) is_pivot[c] = true;
            std::vector<std::size_t> comp;
            for (std::size_t i = 0; i < dim_; ++i)
                if (!is_pivot[i]) comp.push_back(i);
            MultiplicationTable q;
            q.dim = comp.size();
            q.entries.resize(q.dim * q.dim);
            for (std::size_t a = 0; a < q.dim; ++a)
                for (std::size_t b = 0; b < q.dim; ++b) {
                    std::vector<u32> prod(dim_, 0);
                    for (auto [k, c] : table_.at(comp[a], comp[b])) prod[k] = c;
                    auto res = radical_->reduce(std::move(prod));
                    SparseVec sv;
                    for (std::size_t t = 0; t < q.dim; ++t)
                        if (res[comp[t]]) sv.emplace_back(u32(t), res[comp[t]]);
                    q.entries[a * q.dim + b] = std::move(sv);
                }
            for (std::size_t a = 0; a < q.dim; ++a)
                for (std::size_t b = 0; b < a; ++b)
                    check(q.at(a, b) == q.at(b, a), "NotCharacterSplit",
                          "A/rad is not commutative");
            auto lines = split_into_lines(q, p);
            check(lines.has_value(), "NotCharacterSplit",
                  "A/rad does not split into one-dimensional eigenspaces over F_p");
            for (const auto& line : *lines) {
                // chi(b) = eigenvalue of multiplication by the image of b.
                Character ch;
                ch.values.resize(dim_);
                std::size_t lead = 0;
                while (line[lead] == 0) ++lead;
                u64 lead_inv = fp_inv(line[lead], p);
                for (std::size_t b = 0; b < dim_; ++b) {
                    std::vector<u32> bv(dim_, 0);
                    bv[b] = 1;
                    // image of b in quotient coordinates
                    auto red = radical_->reduce(bv);
                    std::vector<u32> qb(q.dim);
                    for (std::size_t t = 0; t < q.dim; ++t) qb[t] = red[comp[t]];
                    // multiply in the quotient: (qb) * line
                    std::vector<u64> acc(q.dim, 0);
                    for (std::size_t i = 0; i < q.dim; ++i) {
                        if (qb[i] == 0) continue;
                        for (std::size_t j = 0; j < q.dim; ++j) {
                            if (line[j] == 0) continue;
                            sparse_acc(acc, q.at(i, j), u64(qb[i]) * line[j] % p, p);
                        }
                    }
                    ch.values[b] = u32(acc[lead] % p * lead_inv % p);
                }
                chars.push_back(std::move(ch));
            }
            std::sort(chars.begin(), chars.end(),
                      [](const Character& a, const Character& b) { return a.values < b.values; });
        }

        check(chars.size() == quotient_dim, "NotCharacterSplit",
              "character count does not match dim(A/rad)");
        // Multiplicativity on the whole table.
        for (const auto& ch : chars) {
            check(ch.values[0] == 1, "NotCharacterSplit", "character does not fix the unit");
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j) {
                    u64 lhs = u64(ch.values[i]) * ch.values[j] % p;
                    u64 rhs = 0;
                    for (auto [k, c] : table_.at(i, j))
                        rhs = (rhs + u64(ch.values[k]) * c) % p;
                    check(lhs == rhs, "NotCharacterSplit",
                          "candidate character is not an algebra map");
                }
        }
        for (std::size_t a = 0; a < chars.size(); ++a)
            for (std::size_t b = 0; b < a; ++b)
                check(chars[a].values != chars[b].values, "NotCharacterSplit",
                      "duplicate characters");

        characters_ = std::move(chars);

        // Primitive idempotents and block modules need group-like data.
        if (group_like_) {
            const GroupLikeData& g = *group_like_;
            check(g.order() % p != 0, "InvalidGroupData", "|G| not invertible in F_p");
            u64 ginv = fp_inv(g.order() % p, p);
            for (std::size_t c = 0; c < g.order(); ++c) {
                std::vector<u32> e(dim_, 0);
                for (std::size_t gi = 0; gi < g.order(); ++gi) {
                    u64 coeff = ginv * g.char_table.at(c, g.inverse[gi]) % p;
                    std::size_t b = g.elements[gi];
                    e[b] = u32((e[b] + coeff) % p);
                }
                idempotents_.push_back(std::move(e));
            }
            // Orthogonality and completeness.
            std::vector<u32> sum(dim_, 0);
            for (std::size_t a = 0; a < idempotents_.size(); ++a) {
                for (std::size_t b = 0; b < idempotents_.size(); ++b) {
                    auto prod = multiply(idempotents_[a], idempotents_[b]);
                    if (a == b)
                        check(prod == idempotents_[a], "IdempotentAxiom", "e_chi^2 != e_chi");
                    else
                        check(std::all_of(prod.begin(), prod.end(),
                                          [](u32 x) { return x == 0; }),
                              "IdempotentAxiom", "e_chi e_psi != 0");
                }
                for (std::size_t i = 0; i < dim_; ++i)
                    sum[i] = u32((sum[i] + idempotents_[a][i]) % p);
            }
            check(sum == unit_vector(), "IdempotentAxiom", "sum of e_chi != 1");

            // Block modules A e_chi.
            for (std::size_t c = 0; c < idempotents_.size(); ++c) {
                BlockModule bm;
                bm.character = c;
                EchelonBasis eb(p, dim_);
                for (std::size_t j = 0; j < dim_; ++j)
                    eb.insert(multiply_sparse_left(SparseVec{{u32(j), 1}}, idempotents_[c]));
                bm.basis_rows = eb.to_matrix();
                bm.pivots = eb.pivots();
                std::size_t bd = eb.dim();

                for (std::size_t gidx = 0; gidx < gen_images_.size(); ++gidx) {
                    FpMat act(p, bd, bd);
                    for (std::size_t j = 0; j < bd; ++j) {
                        auto w = multiply_sparse_left(gen_images_[gidx],
                                                      bm.basis_rows.row_vec(j));
                        check(eb.contains(w), "InternalError",
                              "A e_chi is not closed under left multiplication");
                        auto coords = eb.coordinates(w);
                        for (std::size_t i = 0; i < bd; ++i) act.at(i, j) = coords[i];
                    }
                    bm.gen_action.push_back(std::move(act));
                }
                check(eb.contains(idempotents_[c]), "InternalError",
                      "e_chi not inside A e_chi");
                bm.generator_coords = eb.coordinates(idempotents_[c]);

                // rad(A e_chi) = rad(A) e_chi; simple top certificate.
                EchelonBasis radb(p, bd);
                for (const auto& r : radical_->rows()) {
                    auto w = multiply(r, idempotents_[c]);
                    check(eb.contains(w), "InternalError", "rad e_chi escapes A e_chi");
                    radb.insert(eb.coordinates(w));
                }
                check(radb.dim() == bd - 1, "NotCharacterSplit",
                      "A e_chi does not have a simple top");
                bm.rad_rows = radb.to_matrix();
                FpMat ker = kernel_basis(bm.rad_rows);
                check(ker.rows() == 1, "InternalError", "top functional not unique");
                auto t = ker.row_vec(0);
                u64 at_gen = 0;
                for (std::size_t i = 0; i < bd; ++i)
                    at_gen = (at_gen + u64(t[i]) * bm.generator_coords[i]) % p;
                check(at_gen != 0, "InternalError", "top functional vanishes on e_chi");
                u64 scale_f = fp_inv(at_gen, p);
                for (auto& v : t) v = u32(v * scale_f % p);
                bm.top_functional = std::move(t);
                block_modules_.push_back(std::move(bm));
            }
        }
    });
}

const std::vector<Character>& FiniteDimAlgebra::characters() const {
    compute_characters();
    return characters_;
}

std::size_t FiniteDimAlgebra::trivial_character_index() const {
    compute_characters();
    // The character that is 1 on every group-like element (the counit on the
    // group part) and kills the radical.
    for (std::size_t c = 0; c < characters_.size(); ++c) {
        bool ok = true;
        if (group_like_) {
            for (u32 b : group_like_->elements)
                if (characters_[c].values[b] != 1) ok = false;
        } else {
            ok = characters_[c].values[0] == 1;
            for (std::size_t b = 1; b < dim_ && ok; ++b) {
                std::vector<u32> bv(dim_, 0);
                bv[b] = 1;
                if (!radical().contains(bv) && characters_[c].values[b] != 1) ok = false;
            }
        }
        if (ok) return c;
    }
    fail("NoTrivialCharacter", "no character restricts to 1 on the group-likes");
}

const std::vector<std::vector<u32>>& FiniteDimAlgebra::primitive_idempotents() const {
    compute_characters();
    check(group_like_.has_value(), "NoGroupData",
          "primitive idempotents require group-like data");
    return idempotents_;
}

const BlockModule& FiniteDimAlgebra::block_module(std::size_t character) const {
    compute_characters();
    check(character < block_modules_.size(), "NoGroupData",
          "block modules require group-like data");
    return block_modules_[character];
}

void FiniteDimAlgebra::compute_center() const {
    std::call_once(center_once_, [&] {
        const u64 p = field_.p;
        std::size_t ng = gen_images_.size();
        FpMat sys(p, ng * dim_, dim_);
        for (std::size_t g = 0; g < ng; ++g) {
            std::vector<u32> img(dim_, 0);
            for (auto [i, c] : gen_images_[g]) img[i] = c;
            FpMat l = left_mult_operator(img);
            FpMat r = right_mult_operator(img);
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j)
                    sys.at(g * dim_ + i, j) = u32((u64(l.at(i, j)) + p - r.at(i, j)) % p);
        }
        FpMat ker = kernel_basis(sys);
        auto eb = std::make_unique<EchelonBasis>(p, dim_);
        for (std::size_t i = 0; i < ker.rows(); ++i) eb->insert(ker.row_vec(i));
        center_ = std::move(eb);
    });
}

const EchelonBasis& FiniteDimAlgebra::center() const {
    compute_center();
    return *center_;
}

void FiniteDimAlgebra::compute_blocks() const {
    std::call_once(blocks_once_, [&] {
        compute_center();
        const u64 p = field_.p;
        const EchelonBasis& z = *center_;
        const std::size_t zd = z.dim();

        // Multiplication table of the center in its echelon basis.
        MultiplicationTable zt;
        zt.dim = zd;
        zt.entries.resize(zd * zd);
        for (std::size_t a = 0; a < zd; ++a)
            for (std::size_t b = 0; b < zd; ++b) {
                auto prod = multiply(z.rows()[a], z.rows()[b]);
                check(z.contains(prod), "InternalError", "center not closed under product");
                auto coords = z.coordinates(prod);
                SparseVec sv;
                for (std::size_t t = 0; t < zd; ++t)
                    if (coords[t]) sv.emplace_back(u32(t), coords[t]);
                zt.entries[a * zd + b] = std::move(sv);
            }

        EchelonBasis zrad = table_trace_radical(zt, p);
        // Z/rad Z in complement coordinates.
        std::vector<bool> is_pivot(zd, false);
        for (auto c : zrad.pivots()) is_pivot[c] = true;
        std::vector<std::size_t> comp;
        for (std::size_t i = 0; i < zd; ++i)
            if (!is_pivot[i]) comp.push_back(i);
        MultiplicationTable qt;
        qt.dim = comp.size();
        qt.entries.resize(qt.dim * qt.dim);
        for (std::size_t a = 0; a < qt.dim; ++a)
            for (std::size_t b = 0; b < qt.dim; ++b) {
                std::vector<u32> prod(zd, 0);
                for (auto [k, c] : zt.at(comp[a], comp[b])) prod[k] = c;
                auto res = zrad.reduce(std::move(prod));
                SparseVec sv;
                for (std::size_t t = 0; t < qt.dim; ++t)
                    if (res[comp[t]]) sv.emplace_back(u32(t), res[comp[t]]);
                qt.entries[a * qt.dim + b] = std::move(sv);
            }
        auto lines = split_into_lines(qt, p);
        check(lines.has_value(), "CenterNotSplit",
              "Z/rad Z is not a split product of copies of F_p");

        auto zmul = [&](const std::vector<u32>& a, const std::vector<u32>& b) {
            std::vector<u64> acc(zd, 0);
            for (std::size_t i = 0; i < zd; ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < zd; ++j) {
                    if (b[j] == 0) continue;
                    sparse_acc(acc, zt.at(i, j), u64(a[i]) * b[j] % p, p);
                }
            }
            return finish(acc, p);
        };

        auto blocks = std::make_unique<BlockDecomposition>();
        for (const auto& line : *lines) {
            // Normalize the line vector into an idempotent of the quotient.
            std::vector<u32> vq = line;  // quotient coordinates
            std::vector<u64> acc(qt.dim, 0);
            for (std::size_t i = 0; i < qt.dim; ++i) {
                if (vq[i] == 0) continue;
                for (std::size_t j = 0; j < qt.dim; ++j) {
                    if (vq[j] == 0) continue;
                    sparse_acc(acc, qt.at(i, j), u64(vq[i]) * vq[j] % p, p);
                }
            }
            // v^2 = c v on a line; find c from a non-zero coordinate.
            std::size_t lead = 0;
            while (vq[lead] == 0) ++lead;
            u64 c = acc[lead] % p * fp_inv(vq[lead], p) % p;
            check(c != 0, "CenterNotSplit", "nilpotent line in Z/rad Z");
            u64 cinv = fp_inv(c, p);
            for (auto& x : vq) x = u32(x * cinv % p);

            // Lift to Z: representative then Newton iteration e <- 3e^2-2e^3.
            std::vector<u32> e(zd, 0);
            for (std::size_t t = 0; t < qt.dim; ++t) e[comp[t]] = vq[t];
            std::size_t iters = 0;
            while (true) {
                auto e2 = zmul(e, e);
                if (e2 == e) break;
                check(++iters <= dim_, "InternalError",
                      "idempotent lifting did not stabilize");
                auto e3 = zmul(e2, e);
                for (std::size_t t = 0; t < zd; ++t)
                    e[t] = u32((3 * u64(e2[t]) % p + 2 * u64(p - e3[t]) % p) % p);
            }
            // Back to A coordinates.
            std::vector<u64> av(dim_, 0);
            for (std::size_t t = 0; t < zd; ++t)
                for (std::size_t i = 0; i < dim_; ++i) av[i] += u64(e[t]) * z.rows()[t][i];
            blocks->idempotents.push_back(finish(av, p));
        }

        // Deterministic order: sort by coordinate vector.
        std::sort(blocks->idempotents.begin(), blocks->idempotents.end());

        // Axioms: orthogonal, complete, central, idempotent.
        std::vector<u32> sum(dim_, 0);
        for (std::size_t a = 0; a < blocks->idempotents.size(); ++a) {
            const auto& ea = blocks->idempotents[a];
            check(multiply(ea, ea) == ea, "IdempotentAxiom", "block idempotent not idempotent");
            check(center_->contains(ea), "IdempotentAxiom", "block idempotent not central");
            for (std::size_t b = 0; b < a; ++b) {
                auto prod = multiply(ea, blocks->idempotents[b]);
                check(std::all_of(prod.begin(), prod.end(), [](u32 x) { return x == 0; }),
                      "IdempotentAxiom", "block idempotents not orthogonal");
            }
            for (std::size_t i = 0; i < dim_; ++i) sum[i] = u32((sum[i] + ea[i]) % p);
            blocks->dims.push_back(rank(left_mult_operator(ea)));
        }
        check(sum == unit_vector(), "IdempotentAxiom", "block idempotents do not sum to 1");
        blocks_ = std::move(blocks);
    });
}

const BlockDecomposition& FiniteDimAlgebra::blocks() const {
    compute_blocks();
    return *blocks_;
}

std::size_t FiniteDimAlgebra::principal_block(
    const std::vector<u32>& trivial_character_values) const {
    compute_blocks();
    const u64 p = field_.p;
    for (std::size_t i = 0; i < blocks_->idempotents.size(); ++i) {
        u64 v = 0;
        for (std::size_t k = 0; k < dim_; ++k)
            v = (v + u64(blocks_->idempotents[i][k]) * trivial_character_values[k]) % p;
        if (v == 1) return i;
    }
    fail("InternalError", "no block acts as identity on the trivial module");
}

}  // namespace hopfres
