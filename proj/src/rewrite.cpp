#include "hopfres/rewrite.hpp"

#include <algorithm>

namespace hopfres {

LinComb lincomb_add(const LinComb& a, const LinComb& b, u64 p) {
    LinComb out = a;
    for (const auto& [w, c] : b) {
        auto it = out.find(w);
        u64 v = (it != out.end() ? it->second : 0u) + u64(c);
        v %= p;
        if (v == 0) {
            if (it != out.end()) out.erase(it);
        } else {
            out[w] = u32(v);
        }
    }
    return out;
}

LinComb lincomb_scale(const LinComb& a, u64 c, u64 p) {
    c %= p;
    LinComb out;
    if (c == 0) return out;
    for (const auto& [w, v] : a) out[w] = u32(v * c % p);
    return out;
}

void RewritePresentation::validate() const {
    const DegLexLess less;
    std::vector<Word> seen;
    for (const auto& rule : rules) {
        check(!rule.lhs.empty(), "InvalidRule", "empty lhs");
        for (u32 g : rule.lhs)
            check(g < generator_count(), "InvalidRule", "lhs generator index out of range");
        for (const auto& [w, c] : rule.rhs) {
            for (u32 g : w)
                check(g < generator_count(), "InvalidRule", "rhs generator index out of range");
            check(c % field.p != 0, "InvalidRule", "zero coefficient stored in rhs");
            check(less(w, rule.lhs), "InvalidRule",
                  "rhs word not strictly smaller than lhs in the monomial order");
        }
        check(std::find(seen.begin(), seen.end(), rule.lhs) == seen.end(), "InvalidRule",
              "two rules share an lhs");
        seen.push_back(rule.lhs);
    }
}

namespace {

// First (or last) occurrence of any rule lhs in w: (rule index, position).
std::optional<std::pair<std::size_t, std::size_t>> find_redex(
    const RewritePresentation& p, const Word& w, ReductionStrategy strategy) {
    auto match_at = [&](std::size_t pos) -> std::optional<std::size_t> {
        for (std::size_t r = 0; r < p.rules.size(); ++r) {
            const Word& lhs = p.rules[r].lhs;
            if (pos + lhs.size() > w.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return r;
        }
        return std::nullopt;
    };
    if (strategy == ReductionStrategy::LeftmostFirst) {
        for (std::size_t pos = 0; pos < w.size(); ++pos)
            if (auto r = match_at(pos)) return std::make_pair(*r, pos);
    } else {
        for (std::size_t pos = w.size(); pos-- > 0;)
            if (auto r = match_at(pos)) return std::make_pair(*r, pos);
    }
    return std::nullopt;
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& mid) {
    Word out;
    out.reserve(w.size() - len + mid.size());
    out.insert(out.end(), w.begin(), w.begin() + pos);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + pos + len, w.end());
    return out;
}

void add_term(LinComb& m, const Word& w, u64 c, u64 p) {
    c %= p;
    if (c == 0) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(w, u32(c));
    } else {
        u64 v = (it->second + c) % p;
        if (v == 0)
            m.erase(it);
        else
            it->second = u32(v);
    }
}

}  // namespace

LinComb normal_form(const RewritePresentation& p, const LinComb& input,
                    ReductionStrategy strategy) {
    const u64 fp = p.field.p;
    LinComb work;
    for (const auto& [w, c] : input) add_term(work, w, c, fp);
    LinComb out;
    // Always reduce the largest pending word; every replacement is strictly
    // smaller in the monomial order, so each word is handled exactly once.
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word w = it->first;
        u64 c = it->second;
        work.erase(it);
        auto redex = find_redex(p, w, strategy);
        if (!redex) {
            add_term(out, w, c, fp);
            continue;
        }
        const RewriteRule& rule = p.rules[redex->first];
        std::size_t pos = redex->second;
        for (const auto& [rw, rc] : rule.rhs) {
            Word nw = splice(w, pos, rule.lhs.size(), rw);
            check(nw.size() <= p.degree_cap, "DegreeOverflow",
                  "reduction escaped the degree cap (non-finite or mis-specified presentation)");
            add_term(work, nw, c * rc, fp);
        }
    }
    return out;
}

LinComb normal_form_word(const RewritePresentation& p, const Word& w,
                         ReductionStrategy strategy) {
    LinComb in;
    in[w] = u32(1 % p.field.p);
    return normal_form(p, in, strategy);
}

std::vector<Ambiguity> check_local_confluence(const RewritePresentation& p) {
    const u64 fp = p.field.p;
    std::vector<Ambiguity> bad;

    auto resolve = [&](const Word& super, std::size_t ra, std::size_t pa, std::size_t rb,
                       std::size_t pb) {
        auto first_step = [&](std::size_t r, std::size_t pos) {
            LinComb m;
            for (const auto& [rw, rc] : p.rules[r].rhs)
                add_term(m, splice(super, pos, p.rules[r].lhs.size(), rw), rc, fp);
            return normal_form(p, m);
        };
        LinComb a = first_step(ra, pa);
        LinComb b = first_step(rb, pb);
        if (a != b) bad.push_back(Ambiguity{super, ra, rb, a, b});
    };

    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Word& A = p.rules[i].lhs;
        for (std::size_t j = 0; j < p.rules.size(); ++j) {
            const Word& B = p.rules[j].lhs;
            // Overlap: a proper suffix of A equals a proper prefix of B.
            for (std::size_t o = 1; o < std::min(A.size(), B.size()); ++o) {
                if (!std::equal(A.end() - long(o), A.end(), B.begin())) continue;
                Word super = A;
                super.insert(super.end(), B.begin() + long(o), B.end());
                resolve(super, i, 0, j, A.size() - o);
            }
            // Inclusion: B occurs strictly inside A.
            if (i != j && B.size() < A.size()) {
                for (std::size_t pos = 0; pos + B.size() <= A.size(); ++pos)
                    if (std::equal(B.begin(), B.end(), A.begin() + long(pos)))
                        resolve(A, i, 0, j, pos);
            }
        }
    }
    return bad;
}

std::vector<Word> enumerate_basis(const RewritePresentation& p) {
    std::vector<Word> basis;
    basis.push_back(Word{});  // unit
    std::vector<Word> level{Word{}};

    auto has_lhs_suffix = [&](const Word& w) {
        for (const auto& rule : p.rules) {
            if (rule.lhs.size() > w.size()) continue;
            if (std::equal(rule.lhs.begin(), rule.lhs.end(), w.end() - long(rule.lhs.size())))
                return true;
        }
        return false;
    };

    while (!level.empty()) {
        std::vector<Word> next;
        for (const Word& w : level) {
            for (u32 g = 0; g < p.generator_count(); ++g) {
                Word cand = w;
                cand.push_back(g);
                // w is already normal, so any new redex must be a suffix.
                if (has_lhs_suffix(cand)) continue;
                check(cand.size() <= p.degree_cap, "DegreeOverflow",
                      "normal forms exceed the degree cap");
                next.push_back(std::move(cand));
                check(basis.size() + next.size() <= p.basis_cap, "BasisOverflow",
                      "more normal forms than the basis cap");
            }
        }
        basis.insert(basis.end(), next.begin(), next.end());
        level = std::move(next);
    }
    // Levels are produced in lex order within each degree, so the
    // concatenation is the degree-lexicographic enumeration.
    return basis;
}

MultiplicationTable structure_constants(const RewritePresentation& p,
                                        const std::vector<Word>& basis) {
    std::map<Word, u32, DegLexLess> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = u32(i);

    MultiplicationTable table;
    table.dim = basis.size();
    table.entries.resize(basis.size() * basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Word prod = basis[i];
            prod.insert(prod.end(), basis[j].begin(), basis[j].end());
            LinComb nf = normal_form_word(p, prod);
            SparseVec sv;
            sv.reserve(nf.size());
            for (const auto& [w, c] : nf) {
                auto it = index.find(w);
                check(it != index.end(), "InternalError",
                      "normal form outside the enumerated basis");
                sv.emplace_back(it->second, c);
            }
            std::sort(sv.begin(), sv.end());
            table.entries[i * basis.size() + j] = std::move(sv);
        }
    }
    return table;
}

}  // namespace hopfres
