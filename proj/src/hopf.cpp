#include "hopfres/hopf.hpp"

namespace hopfres {

namespace {

void tensor_add(TensorElem& acc, std::pair<u32, u32> key, u64 c, u64 p) {
    c %= p;
    if (!c) return;
    auto it = acc.find(key);
    if (it == acc.end()) {
        acc.emplace(key, u32(c));
    } else {
        u64 v = (it->second + c) % p;
        if (v == 0)
            acc.erase(it);
        else
            it->second = u32(v);
    }
}

}  // namespace

TensorElem tensor_mul(const FiniteDimAlgebra& a, const TensorElem& x, const TensorElem& y) {
    const u64 p = a.field().p;
    const auto& t = a.table();
    TensorElem out;
    for (const auto& [ij, c1] : x)
        for (const auto& [kl, c2] : y) {
            u64 c = u64(c1) * c2 % p;
            for (auto [m, cm] : t.at(ij.first, kl.first))
                for (auto [n, cn] : t.at(ij.second, kl.second))
                    tensor_add(out, {m, n}, c * cm % p * cn % p, p);
        }
    return out;
}

std::shared_ptr<const HopfStructure> HopfStructure::create(
    AlgebraPtr algebra, std::vector<TensorElem> coproduct_gen, std::vector<u32> counit_gen,
    std::vector<std::vector<u32>> antipode_gen) {
    const auto& a = *algebra;
    const u64 p = a.field().p;
    const std::size_t ng = a.module_generator_count();
    check(coproduct_gen.size() == ng && counit_gen.size() == ng && antipode_gen.size() == ng,
          "InvalidHopfData", "coproduct/counit/antipode must be given on every generator");

    auto h = std::shared_ptr<HopfStructure>(new HopfStructure());
    h->algebra_ = algebra;
    h->coproduct_gen_ = std::move(coproduct_gen);
    h->counit_gen_ = std::move(counit_gen);
    h->antipode_gen_ = std::move(antipode_gen);

    // Extend multiplicatively (anti-multiplicatively for S) along spellings.
    TensorElem delta_unit;
    delta_unit[{0, 0}] = 1;
    auto delta_word = [&](const std::vector<u32>& w) {
        TensorElem acc = delta_unit;
        for (u32 g : w) acc = tensor_mul(a, acc, h->coproduct_gen_[g]);
        return acc;
    };
    auto eps_word = [&](const std::vector<u32>& w) {
        u64 acc = 1;
        for (u32 g : w) acc = acc * h->counit_gen_[g] % p;
        return acc;
    };
    auto s_word = [&](const std::vector<u32>& w) {
        std::vector<u32> acc = a.unit_vector();
        for (u32 g : w) acc = a.multiply(h->antipode_gen_[g], acc);  // reversed order
        return acc;
    };

    // Well-definedness: every rewrite rule must hold under Delta, eps and S.
    if (a.presentation()) {
        for (const auto& rule : a.presentation()->rules) {
            TensorElem dl = delta_word(rule.lhs);
            TensorElem dr;
            u64 el = eps_word(rule.lhs), er = 0;
            std::vector<u64> sl_acc(a.dim(), 0), sr_acc(a.dim(), 0);
            {
                auto sl = s_word(rule.lhs);
                for (std::size_t i = 0; i < a.dim(); ++i) sl_acc[i] = sl[i];
            }
            for (const auto& [w, c] : rule.rhs) {
                for (const auto& [key, cv] : delta_word(w)) tensor_add(dr, key, u64(cv) * c, p);
                er = (er + eps_word(w) * c) % p;
                auto sw = s_word(w);
                for (std::size_t i = 0; i < a.dim(); ++i)
                    sr_acc[i] = (sr_acc[i] + u64(sw[i]) * c) % p;
            }
            check(dl == dr, "InvalidHopfData", "coproduct does not respect a rewrite rule");
            check(el == er % p, "InvalidHopfData", "counit does not respect a rewrite rule");
            for (std::size_t i = 0; i < a.dim(); ++i)
                check(sl_acc[i] % p == sr_acc[i] % p, "InvalidHopfData",
                      "antipode does not respect a rewrite rule");
        }
    }

    h->delta_basis_.resize(a.dim());
    h->eps_basis_.resize(a.dim());
    h->s_basis_.resize(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        h->delta_basis_[b] = delta_word(a.basis_spelling(b));
        h->eps_basis_[b] = u32(eps_word(a.basis_spelling(b)));
        h->s_basis_[b] = s_word(a.basis_spelling(b));
    }

    // Hopf axioms on every basis element.
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const TensorElem& d = h->delta_basis_[b];

        // Coassociativity in A (x) A (x) A.
        std::map<std::tuple<u32, u32, u32>, u64> left, right;
        for (const auto& [ij, c] : d) {
            for (const auto& [kl, c2] : h->delta_basis_[ij.first]) {
                auto& v = left[{kl.first, kl.second, ij.second}];
                v = (v + u64(c) * c2) % p;
            }
            for (const auto& [kl, c2] : h->delta_basis_[ij.second]) {
                auto& v = right[{ij.first, kl.first, kl.second}];
                v = (v + u64(c) * c2) % p;
            }
        }
        std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
        check(left == right, "HopfAxiom", "coassociativity fails on basis element " +
                                              a.basis_labels()[b]);

        // Counit law: (eps (x) id) Delta = id = (id (x) eps) Delta.
        std::vector<u64> l(a.dim(), 0), r(a.dim(), 0);
        for (const auto& [ij, c] : d) {
            l[ij.second] = (l[ij.second] + u64(c) * h->eps_basis_[ij.first]) % p;
            r[ij.first] = (r[ij.first] + u64(c) * h->eps_basis_[ij.second]) % p;
        }
        for (std::size_t i = 0; i < a.dim(); ++i) {
            u64 expect = (i == b) ? 1 : 0;
            check(l[i] == expect && r[i] == expect, "HopfAxiom",
                  "counit law fails on basis element " + a.basis_labels()[b]);
        }

        // Antipode laws: m(S (x) id) Delta = eps(.) 1 = m(id (x) S) Delta.
        std::vector<u64> sa(a.dim(), 0), sb(a.dim(), 0);
        for (const auto& [ij, c] : d) {
            std::vector<u32> bj(a.dim(), 0);
            bj[ij.second] = 1;
            auto prod1 = a.multiply(h->s_basis_[ij.first], bj);
            std::vector<u32> bi(a.dim(), 0);
            bi[ij.first] = 1;
            auto prod2 = a.multiply(bi, h->s_basis_[ij.second]);
            for (std::size_t i = 0; i < a.dim(); ++i) {
                sa[i] = (sa[i] + u64(c) * prod1[i]) % p;
                sb[i] = (sb[i] + u64(c) * prod2[i]) % p;
            }
        }
        for (std::size_t i = 0; i < a.dim(); ++i) {
            u64 expect = (i == 0) ? h->eps_basis_[b] : 0;
            check(sa[i] == expect && sb[i] == expect, "HopfAxiom",
                  "antipode law fails on basis element " + a.basis_labels()[b]);
        }
    }

    // The counit is a character; find it.
    const auto& chars = a.characters();
    bool found = false;
    for (std::size_t c = 0; c < chars.size(); ++c) {
        bool eq = true;
        for (std::size_t b = 0; b < a.dim() && eq; ++b)
            eq = chars[c].values[b] == h->eps_basis_[b];
        if (eq) {
            h->counit_character_ = c;
            found = true;
            break;
        }
    }
    check(found, "InvalidHopfData", "counit is not among the simple characters");
    return h;
}

ModuleRep trivial_module(const HopfStructure& h) {
    return character_module(h.algebra(), h.counit_character());
}

ModuleRep tensor_module(const HopfStructure& h, const ModuleRep& m, const ModuleRep& n) {
    const auto& a = *h.algebra();
    check(m.algebra == h.algebra() && n.algebra == h.algebra(), "AlgebraMismatch",
          "tensor factors over different algebras");
    const u64 p = a.field().p;
    ModuleRep out;
    out.algebra = h.algebra();
    out.dim = m.dim * n.dim;

    for (std::size_t g = 0; g < a.module_generator_count(); ++g) {
        FpMat act(p, out.dim, out.dim);
        for (const auto& [ij, c] : h.coproduct_gen(g)) {
            // Cache of element action matrices would not pay off here: each
            // coproduct has only a handful of terms.
            FpMat am = element_action_matrix(
                m, [&] {
                    std::vector<u32> v(a.dim(), 0);
                    v[ij.first] = 1;
                    return v;
                }());
            FpMat an = element_action_matrix(
                n, [&] {
                    std::vector<u32> v(a.dim(), 0);
                    v[ij.second] = 1;
                    return v;
                }());
            for (std::size_t i1 = 0; i1 < m.dim; ++i1)
                for (std::size_t j1 = 0; j1 < m.dim; ++j1) {
                    u64 x = am.at(i1, j1);
                    if (!x) continue;
                    u64 cx = u64(c) * x % p;
                    for (std::size_t i2 = 0; i2 < n.dim; ++i2)
                        for (std::size_t j2 = 0; j2 < n.dim; ++j2) {
                            u64 y = an.at(i2, j2);
                            if (!y) continue;
                            auto& cell = act.at(i1 * n.dim + i2, j1 * n.dim + j2);
                            cell = u32((cell + cx * y) % p);
                        }
                }
        }
        out.action.push_back(std::move(act));
    }
    validate_module(out, ValidationMode::Probe);
    return out;
}

ModuleRep dual_module(const HopfStructure& h, const ModuleRep& m) {
    const auto& a = *h.algebra();
    ModuleRep out;
    out.algebra = h.algebra();
    out.dim = m.dim;
    for (std::size_t g = 0; g < a.module_generator_count(); ++g) {
        // (g f)(v) = f(S(g) v): the matrix is act_M(S(g)) transposed.
        std::vector<u64> acc(a.dim(), 0);
        for (auto [b, c] : a.generator_image(g)) {
            const auto& sb = h.antipode_basis(b);
            for (std::size_t i = 0; i < a.dim(); ++i) acc[i] += u64(c) * sb[i];
        }
        std::vector<u32> s_img(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) s_img[i] = u32(acc[i] % a.field().p);
        out.action.push_back(element_action_matrix(m, s_img).transpose());
    }
    validate_module(out, ValidationMode::Probe);
    return out;
}

SubalgebraEmbedding make_embedding(AlgebraPtr sub, AlgebraPtr big,
                                   std::vector<std::vector<u32>> gen_images, HopfPtr sub_hopf,
                                   HopfPtr big_hopf) {
    const auto& hs = *sub;
    const auto& ha = *big;
    check(hs.field() == ha.field(), "FieldMismatch",
          "embedding requires the same ground field");
    const u64 p = ha.field().p;
    check(gen_images.size() == hs.module_generator_count(), "InvalidEmbedding",
          "one image per subalgebra generator required");

    SubalgebraEmbedding e;
    e.sub = sub;
    e.big = big;
    e.sub_hopf = sub_hopf;
    e.big_hopf = big_hopf;
    e.gen_images = std::move(gen_images);

    // Images of all H basis words by the spelling recursion.
    e.basis_images = FpMat(p, hs.dim(), ha.dim());
    e.basis_images.set_row(0, ha.unit_vector());
    for (std::size_t b = 1; b < hs.dim(); ++b) {
        auto rest = e.basis_images.row_vec(hs.dp_rest(b));
        auto img = ha.multiply(e.gen_images[hs.dp_letter(b)], rest);
        e.basis_images.set_row(b, img);
    }
    check(rank(e.basis_images) == hs.dim(), "InvalidEmbedding", "embedding is not injective");

    // Algebra map: the subalgebra's rules must hold on the images.
    if (hs.presentation()) {
        auto image_of_word = [&](const Word& w) {
            std::vector<u32> acc = ha.unit_vector();
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                acc = ha.multiply(e.gen_images[*it], acc);
            return acc;
        };
        for (const auto& rule : hs.presentation()->rules) {
            auto lhs = image_of_word(rule.lhs);
            std::vector<u64> rhs(ha.dim(), 0);
            for (const auto& [w, c] : rule.rhs) {
                auto wv = image_of_word(w);
                for (std::size_t i = 0; i < ha.dim(); ++i) rhs[i] += u64(c) * wv[i];
            }
            for (std::size_t i = 0; i < ha.dim(); ++i)
                check(lhs[i] == rhs[i] % p, "InvalidEmbedding",
                      "a subalgebra relation fails on the images");
        }
    } else {
        // Raw table: check all products.
        const auto& t = hs.table();
        for (std::size_t i = 0; i < hs.dim(); ++i)
            for (std::size_t j = 0; j < hs.dim(); ++j) {
                auto prod = ha.multiply(e.basis_images.row_vec(i), e.basis_images.row_vec(j));
                std::vector<u64> expect(ha.dim(), 0);
                for (auto [k, c] : t.at(i, j))
                    for (std::size_t x = 0; x < ha.dim(); ++x)
                        expect[x] += u64(c) * e.basis_images.at(k, x);
                for (std::size_t x = 0; x < ha.dim(); ++x)
                    check(prod[x] == expect[x] % p, "InvalidEmbedding",
                          "embedding is not an algebra map");
            }
    }

    // Hopf compatibility on generators when both sides carry Hopf structure.
    if (sub_hopf && big_hopf) {
        for (std::size_t g = 0; g < hs.module_generator_count(); ++g) {
            // Delta_A(iota(gen)) vs (iota (x) iota)(Delta_H(gen)).
            TensorElem lhs;
            const auto& img = e.gen_images[g];
            for (std::size_t b = 0; b < ha.dim(); ++b) {
                if (!img[b]) continue;
                for (const auto& [key, c] : big_hopf->coproduct_basis(b))
                    tensor_add(lhs, key, u64(c) * img[b], p);
            }
            TensorElem rhs;
            for (const auto& [key, c] : sub_hopf->coproduct_gen(g)) {
                const auto i_img = e.basis_images.row_vec(key.first);
                const auto j_img = e.basis_images.row_vec(key.second);
                for (std::size_t x = 0; x < ha.dim(); ++x) {
                    if (!i_img[x]) continue;
                    for (std::size_t y = 0; y < ha.dim(); ++y)
                        if (j_img[y])
                            tensor_add(rhs, {u32(x), u32(y)},
                                       u64(c) * i_img[x] % p * j_img[y], p);
                }
            }
            check(lhs == rhs, "InvalidEmbedding",
                  "embedding does not intertwine the coproducts");

            // Counit and antipode compatibility.
            u64 eps_a = 0;
            for (std::size_t b = 0; b < ha.dim(); ++b)
                eps_a = (eps_a + u64(img[b]) * big_hopf->counit_basis(b)) % p;
            u64 eps_h = 0;
            for (auto [b, c] : hs.generator_image(g))
                eps_h = (eps_h + u64(c) * sub_hopf->counit_basis(b)) % p;
            check(eps_a == eps_h, "InvalidEmbedding",
                  "embedding does not intertwine the counits");

            std::vector<u64> s_a(ha.dim(), 0);
            for (std::size_t b = 0; b < ha.dim(); ++b) {
                if (!img[b]) continue;
                const auto& sb = big_hopf->antipode_basis(b);
                for (std::size_t i = 0; i < ha.dim(); ++i) s_a[i] += u64(img[b]) * sb[i];
            }
            std::vector<u64> s_h(ha.dim(), 0);
            for (auto [b, c] : hs.generator_image(g)) {
                const auto& sb = sub_hopf->antipode_basis(b);
                for (std::size_t hb = 0; hb < hs.dim(); ++hb) {
                    if (!sb[hb]) continue;
                    for (std::size_t i = 0; i < ha.dim(); ++i)
                        s_h[i] += u64(c) * sb[hb] % p * e.basis_images.at(hb, i);
                }
            }
            for (std::size_t i = 0; i < ha.dim(); ++i)
                check(s_a[i] % p == s_h[i] % p, "InvalidEmbedding",
                      "embedding does not intertwine the antipodes");
        }
    }
    return e;
}

ModuleRep restrict_module(const SubalgebraEmbedding& e, const ModuleRep& m) {
    check(m.algebra == e.big, "AlgebraMismatch", "module is not over the big algebra");
    ModuleRep out;
    out.algebra = e.sub;
    out.dim = m.dim;
    for (std::size_t g = 0; g < e.sub->module_generator_count(); ++g)
        out.action.push_back(element_action_matrix(m, e.gen_images[g]));
    validate_module(out, ValidationMode::Probe);
    return out;
}

}  // namespace hopfres
