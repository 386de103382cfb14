#ifndef HOPFRES_REWRITE_HPP
#define HOPFRES_REWRITE_HPP

#include <map>
#include <string>
#include <vector>

#include "hopfres/fp.hpp"

namespace hopfres {

// A word in the free monoid on the presentation's generators. Generators are
// identified by their declaration index, and declaration order doubles as the
// precedence used by the monomial order.
using Word = std::vector<u32>;

// Degree-lexicographic order: compare total degree (= length) first, then
// lexicographically by generator precedence.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Formal F_p-linear combination of words. Zero coefficients are never stored.
using LinComb = std::map<Word, u32, DegLexLess>;

LinComb lincomb_add(const LinComb& a, const LinComb& b, u64 p);
LinComb lincomb_scale(const LinComb& a, u64 c, u64 p);

struct RewriteRule {
    Word lhs;
    LinComb rhs;
};

enum class ReductionStrategy { LeftmostFirst, RightmostFirst };

struct RewritePresentation {
    PrimeField field;
    std::vector<std::string> generator_names;  // in increasing precedence
    std::vector<RewriteRule> rules;
    u32 degree_cap = 64;
    u32 basis_cap = 4096;

    // Validates: indices in range, no duplicate lhs, every rhs word strictly
    // smaller than its lhs, coefficients non-zero mod p.
    void validate() const;

    std::size_t generator_count() const { return generator_names.size(); }
};

// Fully reduces a linear combination; no word in the result contains any
// rule's lhs as a subword. Throws Error("DegreeOverflow") if a reduction
// escapes the degree cap.
LinComb normal_form(const RewritePresentation& p, const LinComb& input,
                    ReductionStrategy strategy = ReductionStrategy::LeftmostFirst);

LinComb normal_form_word(const RewritePresentation& p, const Word& w,
                         ReductionStrategy strategy = ReductionStrategy::LeftmostFirst);

// One overlap or inclusion of two rule left-hand sides whose two reductions
// disagree. Ambiguities are data, not faults.
struct Ambiguity {
    Word superword;
    std::size_t rule_a = 0, rule_b = 0;
    LinComb reduced_a, reduced_b;
};

// Empty result means the presentation is locally confluent (Diamond lemma).
std::vector<Ambiguity> check_local_confluence(const RewritePresentation& p);

// All normal-form words in degree-lexicographic order. Requires local
// confluence to actually be a basis. Throws Error("BasisOverflow") if the cap
// is exceeded and Error("DegreeOverflow") if words keep growing past the
// degree cap (the presentation is then not finite dimensional).
std::vector<Word> enumerate_basis(const RewritePresentation& p);

// Sparse coordinates of an algebra element in a fixed basis.
using SparseVec = std::vector<std::pair<u32, u32>>;  // (basis index, coeff)

struct MultiplicationTable {
    std::size_t dim = 0;
    std::vector<SparseVec> entries;  // entries[i*dim+j] = basis_i * basis_j

    const SparseVec& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

MultiplicationTable structure_constants(const RewritePresentation& p,
                                        const std::vector<Word>& basis);

}  // namespace hopfres

#endif
