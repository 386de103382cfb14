#include "hopfres/presets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hopfres {

namespace {

// ---------------------------------------------------------------------
// Expression grammar (documented in FORMAT.md):
//   expr    := [sign] term { ('+'|'-') term }
//   term    := factor { '*' factor }
//   factor  := INT | 'q' ['^' ['-'] INT] | GEN ['^' INT]
// A tensor expression replaces each term by  term '@' term.
// Coefficients are evaluated in F_p with the field's root of unity q.

struct ExprTerm {
    Word word;
    u64 coeff = 1;
};

struct TensorTerm {
    Word left, right;
    u64 coeff = 1;
};

class ExprParser {
public:
    ExprParser(const std::string& s, const std::map<std::string, u32>& gens,
               const PrimeField& f, const std::string& origin)
        : s_(s), gens_(gens), f_(f), origin_(origin) {}

    std::vector<ExprTerm> element() {
        std::vector<ExprTerm> out;
        parse_terms([&](u64 sign) {
            ExprTerm t;
            t.coeff = sign;
            factors(t);
            out.push_back(std::move(t));
        });
        expect_end();
        return out;
    }

    std::vector<TensorTerm> tensor() {
        std::vector<TensorTerm> out;
        parse_terms([&](u64 sign) {
            ExprTerm l;
            l.coeff = sign;
            factors(l);
            if (!eat('@')) err("expected '@' in tensor expression");
            ExprTerm r;
            r.coeff = 1;
            factors(r);
            TensorTerm t;
            t.left = std::move(l.word);
            t.right = std::move(r.word);
            t.coeff = l.coeff * r.coeff % f_.p;
            out.push_back(std::move(t));
        });
        expect_end();
        return out;
    }

private:
    template <typename F>
    void parse_terms(F per_term) {
        skip_ws();
        u64 sign = 1;
        if (eat('-')) sign = f_.p - 1;
        else eat('+');
        per_term(sign);
        skip_ws();
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            sign = (s_[pos_] == '-') ? f_.p - 1 : 1;
            ++pos_;
            per_term(sign);
            skip_ws();
        }
    }

    void factors(ExprTerm& t) {
        factor(t);
        skip_ws();
        while (eat('*')) factor(t);
    }

    void factor(ExprTerm& t) {
        skip_ws();
        if (pos_ >= s_.size()) err("unexpected end of expression");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coeff = t.coeff * (read_int() % f_.p) % f_.p;
            return;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
            err(std::string("unexpected character '") + c + "'");
        std::string name = read_ident();
        long exp = 1;
        bool neg = false;
        if (eat('^')) {
            skip_ws();
            if (eat('-')) neg = true;
            exp = long(read_int());
        }
        if (name == "q") {
            u64 v = fp_pow(f_.q, u64(exp), f_.p);
            if (neg) v = fp_inv(v, f_.p);
            t.coeff = t.coeff * v % f_.p;
            return;
        }
        auto it = gens_.find(name);
        if (it == gens_.end()) err("unknown generator '" + name + "'");
        if (neg) err("negative generator powers are not supported; use the order");
        for (long i = 0; i < exp; ++i) t.word.push_back(it->second);
    }

    u64 read_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) err("expected an integer");
        return std::stoull(s_.substr(start, pos_ - start));
    }

    std::string read_ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != s_.size())
            err("trailing input '" + s_.substr(pos_) + "'");
    }

    [[noreturn]] void err(const std::string& msg) {
        fail("ExpressionError",
             origin_ + ": " + msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                 s_ + "\"");
    }

    const std::string& s_;
    const std::map<std::string, u32>& gens_;
    PrimeField f_;
    std::string origin_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------
// TOML subset: [section], [[array-section]], key = int | "string", comments
// starting with '#'. Exactly the shapes the serializer below emits.

struct TomlEntry {
    std::map<std::string, std::string> strings;
    std::map<std::string, u64> ints;
    std::size_t line = 0;
};

struct TomlDoc {
    std::map<std::string, TomlEntry> sections;            // [meta], [field]
    std::map<std::string, std::vector<TomlEntry>> arrays;  // [[generators]], [[rules]]
};

TomlDoc parse_toml(const std::string& text, const std::string& origin) {
    TomlDoc doc;
    TomlEntry* current = nullptr;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto err = [&](std::size_t col, const std::string& msg) {
        fail("ParseError", origin + ":" + std::to_string(lineno) + ":" +
                               std::to_string(col + 1) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        if (line[i] == '[') {
            bool array = i + 1 < line.size() && line[i + 1] == '[';
            std::size_t start = i + (array ? 2 : 1);
            std::size_t close = line.find(array ? "]]" : "]", start);
            if (close == std::string::npos) err(i, "unterminated section header");
            std::string name = line.substr(start, close - start);
            if (array) {
                doc.arrays[name].push_back(TomlEntry{{}, {}, lineno});
                current = &doc.arrays[name].back();
            } else {
                current = &doc.sections[name];
                current->line = lineno;
            }
            continue;
        }
        std::size_t eq = line.find('=', i);
        if (eq == std::string::npos) err(i, "expected 'key = value'");
        if (!current) err(i, "key outside of a section");
        std::string key = line.substr(i, eq - i);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
            key.pop_back();
        std::size_t v = eq + 1;
        while (v < line.size() && std::isspace(static_cast<unsigned char>(line[v]))) ++v;
        if (v >= line.size()) err(v, "missing value");
        if (line[v] == '"') {
            std::size_t close = line.find('"', v + 1);
            if (close == std::string::npos) err(v, "unterminated string");
            current->strings[key] = line.substr(v + 1, close - v - 1);
        } else {
            std::size_t end = v;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            try {
                current->ints[key] = std::stoull(line.substr(v, end - v));
            } catch (...) {
                err(v, "expected an integer or quoted string");
            }
        }
    }
    return doc;
}

std::map<std::string, u32> generator_index_map(const PresentationFile& f) {
    std::map<std::string, u32> m;
    for (std::size_t i = 0; i < f.generators.size(); ++i) {
        const std::string& n = f.generators[i].name;
        check(n != "q", "InvalidPresentation", "'q' is reserved and cannot name a generator");
        check(!m.count(n), "InvalidPresentation", "duplicate generator name '" + n + "'");
        m[n] = u32(i);
    }
    return m;
}

Word parse_single_word(const std::string& text, const std::map<std::string, u32>& gens,
                       const PrimeField& f, const std::string& origin) {
    ExprParser p(text, gens, f, origin);
    auto terms = p.element();
    check(terms.size() == 1 && terms[0].coeff == 1 && !terms[0].word.empty(),
          "InvalidPresentation", origin + ": expected a single monic word, got \"" + text + "\"");
    return terms[0].word;
}

}  // namespace

RewritePresentation compile_rules(const PresentationFile& file) {
    auto gens = generator_index_map(file);

    // Pass 1: combinatorial skeleton (lhs words only) to learn the dimension.
    PrimeField scratch{2, 1, 1};
    RewritePresentation skeleton;
    skeleton.field = scratch;
    for (const auto& g : file.generators) skeleton.generator_names.push_back(g.name);
    skeleton.degree_cap = file.degree_cap;
    skeleton.basis_cap = file.basis_cap;
    for (const auto& r : file.rules)
        skeleton.rules.push_back({parse_single_word(r.lhs, gens, scratch,
                                                    file.name + " rule lhs"),
                                  LinComb{}});
    u64 dim = enumerate_basis(skeleton).size();

    // Field selection.
    u64 p = file.p ? *file.p : choose_prime(file.ell, std::max(dim, file.ell));
    u64 q = file.q ? *file.q : element_of_order(p, file.ell);
    PrimeField field = make_field(p, file.ell, q);

    // Pass 2: the real presentation with evaluated coefficients.
    RewritePresentation pres;
    pres.field = field;
    pres.generator_names = skeleton.generator_names;
    pres.degree_cap = file.degree_cap;
    pres.basis_cap = file.basis_cap;
    for (std::size_t i = 0; i < file.rules.size(); ++i) {
        RewriteRule rule;
        rule.lhs = skeleton.rules[i].lhs;
        ExprParser rp(file.rules[i].rhs, gens, field, file.name + " rule rhs");
        for (const auto& t : rp.element()) {
            if (t.coeff % p == 0) continue;
            LinComb single{{t.word, u32(t.coeff)}};
            rule.rhs = lincomb_add(rule.rhs, single, p);
        }
        pres.rules.push_back(std::move(rule));
    }
    return pres;
}

BuiltPreset build(const PresentationFile& file) {
    auto gens = generator_index_map(file);
    RewritePresentation pres = compile_rules(file);
    u64 p = pres.field.p;
    u64 q = pres.field.q;
    PrimeField field = pres.field;

    std::optional<GroupLikeDeclaration> gl;
    for (std::size_t i = 0; i < file.generators.size(); ++i) {
        if (!file.generators[i].group_order) continue;
        if (!gl) gl.emplace();
        gl->generators.push_back(u32(i));
        gl->orders.push_back(*file.generators[i].group_order);
    }

    BuiltPreset out;
    out.file = file;
    out.file.p = p;
    out.file.q = q;
    out.file.expected_dim = file.expected_dim;
    out.algebra = FiniteDimAlgebra::from_presentation(pres, gl, file.name);
    check(out.algebra->dim() == file.expected_dim, "DimensionMismatch",
          file.name + ": basis has dimension " + std::to_string(out.algebra->dim()) +
              " but the file declares " + std::to_string(file.expected_dim));

    const auto& alg = *out.algebra;
    std::map<Word, u32, DegLexLess> index;
    for (std::size_t i = 0; i < alg.dim(); ++i) index[alg.basis_words()[i]] = u32(i);
    const auto& rpres = *alg.presentation();

    auto resolve_word = [&](const Word& w) {
        SparseVec sv;
        for (const auto& [nw, c] : normal_form_word(rpres, w)) sv.emplace_back(index.at(nw), c);
        return sv;
    };

    // defined_as letters must reduce to themselves.
    for (std::size_t i = 0; i < file.generators.size(); ++i) {
        const auto& g = file.generators[i];
        if (!g.defined_as) continue;
        ExprParser dp(*g.defined_as, gens, field, file.name + " defined_as " + g.name);
        LinComb combo;
        for (const auto& t : dp.element())
            combo = lincomb_add(combo, LinComb{{t.word, u32(t.coeff % p)}}, p);
        LinComb nf = normal_form(rpres, combo);
        check(nf.size() == 1 && nf.begin()->first == Word{u32(i)} && nf.begin()->second == 1,
              "InvalidPresentation",
              file.name + ": defined_as of " + g.name + " does not reduce to the letter");
    }

    // Hopf data: explicit on some generators, derived through defined_as on
    // the rest; absent entirely is also fine.
    bool any_hopf = std::any_of(file.generators.begin(), file.generators.end(),
                                [](const GeneratorSpec& g) { return g.coproduct.has_value(); });
    if (!any_hopf) return out;

    std::size_t ng = file.generators.size();
    std::vector<std::optional<TensorElem>> delta(ng);
    std::vector<std::optional<u32>> eps(ng);
    std::vector<std::optional<std::vector<u32>>> anti(ng);

    for (std::size_t i = 0; i < ng; ++i) {
        const auto& g = file.generators[i];
        if (!g.coproduct) continue;
        check(g.counit && g.antipode, "InvalidHopfData",
              file.name + ": generator " + g.name + " needs coproduct, counit and antipode");
        ExprParser cp(*g.coproduct, gens, field, file.name + " coproduct " + g.name);
        TensorElem d;
        for (const auto& t : cp.tensor()) {
            for (auto [bi, ci] : resolve_word(t.left))
                for (auto [bj, cj] : resolve_word(t.right)) {
                    u64 c = t.coeff * ci % p * cj % p;
                    auto key = std::make_pair(bi, bj);
                    u64 v = ((d.count(key) ? d[key] : 0u) + c) % p;
                    if (v == 0)
                        d.erase(key);
                    else
                        d[key] = u32(v);
                }
        }
        delta[i] = std::move(d);
        ExprParser ep(*g.counit, gens, field, file.name + " counit " + g.name);
        u64 ev = 0;
        for (const auto& t : ep.element()) {
            check(t.word.empty(), "InvalidHopfData",
                  file.name + ": counit of " + g.name + " must be a scalar");
            ev = (ev + t.coeff) % p;
        }
        eps[i] = u32(ev);
        ExprParser ap(*g.antipode, gens, field, file.name + " antipode " + g.name);
        std::vector<u64> acc(alg.dim(), 0);
        for (const auto& t : ap.element())
            for (auto [b, c] : resolve_word(t.word)) acc[b] = (acc[b] + t.coeff * c) % p;
        std::vector<u32> av(alg.dim());
        for (std::size_t b = 0; b < alg.dim(); ++b) av[b] = u32(acc[b]);
        anti[i] = std::move(av);
    }

    // Derive Hopf data for defined_as letters from their expressions.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < ng; ++i) {
            if (delta[i] || !file.generators[i].defined_as) continue;
            ExprParser dp(*file.generators[i].defined_as, gens, field,
                          file.name + " defined_as " + file.generators[i].name);
            auto terms = dp.element();
            bool ready = true;
            for (const auto& t : terms)
                for (u32 letter : t.word)
                    if (!delta[letter]) ready = false;
            if (!ready) continue;

            TensorElem d;
            u64 ev = 0;
            std::vector<u64> sacc(alg.dim(), 0);
            for (const auto& t : terms) {
                // coproduct: product of letter coproducts
                TensorElem td;
                td[{0, 0}] = 1;
                u64 te = 1;
                std::vector<u32> ts = alg.unit_vector();
                for (u32 letter : t.word) {
                    td = tensor_mul(alg, td, *delta[letter]);
                    te = te * *eps[letter] % p;
                }
                // S is an anti-homomorphism: S(g1...gk) = S(gk)...S(g1).
                for (u32 letter : t.word) ts = alg.multiply(*anti[letter], ts);
                for (const auto& [key, c] : td) {
                    u64 v = ((d.count(key) ? d[key] : 0u) + t.coeff * c) % p;
                    if (v == 0)
                        d.erase(key);
                    else
                        d[key] = u32(v);
                }
                ev = (ev + t.coeff * te) % p;
                for (std::size_t b = 0; b < alg.dim(); ++b)
                    sacc[b] = (sacc[b] + t.coeff * ts[b]) % p;
            }
            delta[i] = std::move(d);
            eps[i] = u32(ev);
            std::vector<u32> av(alg.dim());
            for (std::size_t b = 0; b < alg.dim(); ++b) av[b] = u32(sacc[b]);
            anti[i] = std::move(av);
            progress = true;
        }
    }

    std::vector<TensorElem> dv;
    std::vector<u32> ev;
    std::vector<std::vector<u32>> av;
    for (std::size_t i = 0; i < ng; ++i) {
        check(delta[i].has_value(), "InvalidHopfData",
              file.name + ": no Hopf data for generator " + file.generators[i].name);
        dv.push_back(*delta[i]);
        ev.push_back(*eps[i]);
        av.push_back(*anti[i]);
    }
    out.hopf = HopfStructure::create(out.algebra, std::move(dv), std::move(ev), std::move(av));
    return out;
}

std::string serialize(const PresentationFile& file) {
    std::ostringstream o;
    o << "[meta]\n";
    o << "name = \"" << file.name << "\"\n";
    o << "expected_dim = " << file.expected_dim << "\n";
    o << "degree_cap = " << file.degree_cap << "\n";
    o << "basis_cap = " << file.basis_cap << "\n";
    o << "\n[field]\n";
    o << "ell = " << file.ell << "\n";
    if (file.p) o << "p = " << *file.p << "\n";
    if (file.q) o << "q = " << *file.q << "\n";
    for (const auto& g : file.generators) {
        o << "\n[[generators]]\n";
        o << "name = \"" << g.name << "\"\n";
        if (g.group_order) o << "group_order = " << *g.group_order << "\n";
        if (g.defined_as) o << "defined_as = \"" << *g.defined_as << "\"\n";
        if (g.coproduct) o << "coproduct = \"" << *g.coproduct << "\"\n";
        if (g.counit) o << "counit = \"" << *g.counit << "\"\n";
        if (g.antipode) o << "antipode = \"" << *g.antipode << "\"\n";
    }
    for (const auto& r : file.rules) {
        o << "\n[[rules]]\n";
        o << "lhs = \"" << r.lhs << "\"\n";
        o << "rhs = \"" << r.rhs << "\"\n";
    }
    return o.str();
}

PresentationFile parse_presentation(const std::string& text, const std::string& origin) {
    TomlDoc doc = parse_toml(text, origin);
    PresentationFile f;
    auto need = [&](const char* section) -> TomlEntry& {
        auto it = doc.sections.find(section);
        check(it != doc.sections.end(), "ParseError",
              origin + ": missing [" + section + "] section");
        return it->second;
    };
    TomlEntry& meta = need("meta");
    check(meta.strings.count("name"), "ParseError", origin + ": [meta] needs name");
    f.name = meta.strings["name"];
    check(meta.ints.count("expected_dim"), "ParseError",
          origin + ": [meta] needs expected_dim");
    f.expected_dim = meta.ints["expected_dim"];
    if (meta.ints.count("degree_cap")) f.degree_cap = u32(meta.ints["degree_cap"]);
    if (meta.ints.count("basis_cap")) f.basis_cap = u32(meta.ints["basis_cap"]);

    TomlEntry& field = need("field");
    check(field.ints.count("ell"), "ParseError", origin + ": [field] needs ell");
    f.ell = field.ints["ell"];
    if (field.ints.count("p")) f.p = field.ints["p"];
    if (field.ints.count("q")) f.q = field.ints["q"];

    for (auto& e : doc.arrays["generators"]) {
        GeneratorSpec g;
        check(e.strings.count("name"), "ParseError",
              origin + ":" + std::to_string(e.line) + ": generator needs a name");
        g.name = e.strings["name"];
        if (e.ints.count("group_order")) g.group_order = e.ints["group_order"];
        if (e.strings.count("defined_as")) g.defined_as = e.strings["defined_as"];
        if (e.strings.count("coproduct")) g.coproduct = e.strings["coproduct"];
        if (e.strings.count("counit")) g.counit = e.strings["counit"];
        if (e.strings.count("antipode")) g.antipode = e.strings["antipode"];
        f.generators.push_back(std::move(g));
    }
    for (auto& e : doc.arrays["rules"]) {
        check(e.strings.count("lhs") && e.strings.count("rhs"), "ParseError",
              origin + ":" + std::to_string(e.line) + ": rule needs lhs and rhs");
        f.rules.push_back({e.strings["lhs"], e.strings["rhs"]});
    }
    check(!f.generators.empty(), "ParseError", origin + ": no generators declared");
    return f;
}

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    check(in.good(), "FileError", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str(), path);
}

BuiltPreset load_and_build(const std::string& path) {
    return build(load_presentation_file(path));
}

// ---------------------------------------------------------------------
// Builders. p and q are pinned into the emitted file so that shipped files
// are self-contained and serialization is reproducible.

namespace {

void pin_field(PresentationFile& f, u64 dim) {
    f.expected_dim = dim;
    u64 p = choose_prime(f.ell, std::max(dim, f.ell));
    f.p = p;
    f.q = element_of_order(p, f.ell);
}

std::string pow_str(const std::string& g, u64 e) {
    return e == 1 ? g : g + "^" + std::to_string(e);
}

}  // namespace

PresentationFile preset_taft(u64 ell, bool conv_b) {
    check(ell > 1 && ell % 2 == 1, "InvalidParameters", "ell must be odd and > 1");
    PresentationFile f;
    f.name = conv_b ? "taft_l" + std::to_string(ell) + "_convB"
                    : "taft_l" + std::to_string(ell);
    f.ell = ell;
    GeneratorSpec g;
    g.name = "g";
    g.group_order = ell;
    g.coproduct = "g@g";
    g.counit = "1";
    g.antipode = pow_str("g", ell - 1);
    GeneratorSpec x;
    x.name = "x";
    x.counit = "0";
    if (conv_b) {
        x.coproduct = "x@g + 1@x";
        x.antipode = "-x*" + pow_str("g", ell - 1);
    } else {
        x.coproduct = "x@1 + g@x";
        x.antipode = "-" + pow_str("g", ell - 1) + "*x";
    }
    f.generators = {g, x};
    f.rules.push_back({pow_str("g", ell), "1"});
    f.rules.push_back({pow_str("x", ell), "0"});
    f.rules.push_back({"x*g", "q^-1*g*x"});
    pin_field(f, ell * ell);
    return f;
}

PresentationFile preset_uqplus_sl2(u64 ell, bool conv_b) {
    check(ell > 1 && ell % 2 == 1, "InvalidParameters", "ell must be odd and > 1");
    PresentationFile f;
    f.name = conv_b ? "uqplus_sl2_l" + std::to_string(ell) + "_convB"
                    : "uqplus_sl2_l" + std::to_string(ell);
    f.ell = ell;
    GeneratorSpec k;
    k.name = "K";
    k.group_order = ell;
    k.coproduct = "K@K";
    k.counit = "1";
    k.antipode = pow_str("K", ell - 1);
    GeneratorSpec e;
    e.name = "E";
    e.counit = "0";
    if (conv_b) {
        e.coproduct = "E@" + pow_str("K", ell - 1) + " + 1@E";
        e.antipode = "-E*K";
    } else {
        e.coproduct = "E@1 + K@E";
        e.antipode = "-" + pow_str("K", ell - 1) + "*E";
    }
    f.generators = {k, e};
    f.rules.push_back({pow_str("K", ell), "1"});
    f.rules.push_back({pow_str("E", ell), "0"});
    f.rules.push_back({"E*K", "q^-2*K*E"});
    pin_field(f, ell * ell);
    return f;
}

PresentationFile preset_qea(u64 rank, u64 ell) {
    check(ell > 1 && ell % 2 == 1, "InvalidParameters", "ell must be odd and > 1");
    check(rank >= 1, "InvalidParameters", "rank must be positive");
    PresentationFile f;
    f.name = "qea_r" + std::to_string(rank) + "_l" + std::to_string(ell);
    f.ell = ell;
    auto gname = [&](u64 i) { return "g" + std::to_string(i + 1); };
    auto xname = [&](u64 i) { return "x" + std::to_string(i + 1); };
    for (u64 i = 0; i < rank; ++i) {
        GeneratorSpec g;
        g.name = gname(i);
        g.group_order = ell;
        g.coproduct = g.name + "@" + g.name;
        g.counit = "1";
        g.antipode = pow_str(g.name, ell - 1);
        f.generators.push_back(std::move(g));
    }
    for (u64 i = 0; i < rank; ++i) {
        GeneratorSpec x;
        x.name = xname(i);
        x.counit = "0";
        x.coproduct = x.name + "@1 + " + gname(i) + "@" + x.name;
        x.antipode = "-" + pow_str(gname(i), ell - 1) + "*" + x.name;
        f.generators.push_back(std::move(x));
    }
    for (u64 i = 0; i < rank; ++i) f.rules.push_back({pow_str(gname(i), ell), "1"});
    for (u64 i = 0; i < rank; ++i) f.rules.push_back({pow_str(xname(i), ell), "0"});
    for (u64 j = 1; j < rank; ++j)
        for (u64 i = 0; i < j; ++i)
            f.rules.push_back({gname(j) + "*" + gname(i), gname(i) + "*" + gname(j)});
    for (u64 j = 1; j < rank; ++j)
        for (u64 i = 0; i < j; ++i)
            f.rules.push_back({xname(j) + "*" + xname(i), "q*" + xname(i) + "*" + xname(j)});
    // Braiding chi_i(g_j): q on the diagonal, q^{-1} for j>i, q for j<i;
    // the straightening coefficient is its inverse.
    for (u64 i = 0; i < rank; ++i)
        for (u64 j = 0; j < rank; ++j) {
            std::string coeff = (j == i) ? "q^-1" : (j < i ? "q" : "q^-1");
            f.rules.push_back(
                {xname(i) + "*" + gname(j), coeff + "*" + gname(j) + "*" + xname(i)});
        }
    u64 dim = 1;
    for (u64 i = 0; i < 2 * rank; ++i) dim *= ell;
    pin_field(f, dim);
    return f;
}

PresentationFile preset_uqplus_sl3(u64 ell, bool conv_b) {
    check(ell > 1 && ell % 2 == 1, "InvalidParameters", "ell must be odd and > 1");
    PresentationFile f;
    f.name = conv_b ? "uqplus_sl3_l" + std::to_string(ell) + "_convB"
                    : "uqplus_sl3_l" + std::to_string(ell);
    f.ell = ell;

    // conv A letters: E1 < E12 < E2; conv B mirrors to E2 < E21 < E1.
    std::string a = conv_b ? "E2" : "E1";
    std::string m = conv_b ? "E21" : "E12";
    std::string b = conv_b ? "E1" : "E2";
    std::string ka = conv_b ? "K2" : "K1";  // the Cartan partner of `a`
    std::string kb = conv_b ? "K1" : "K2";

    GeneratorSpec ga;
    ga.name = a;
    ga.counit = "0";
    ga.coproduct = a + "@1 + " + ka + "@" + a;
    ga.antipode = "-" + pow_str(ka, ell - 1) + "*" + a;
    GeneratorSpec gm;
    gm.name = m;
    gm.defined_as = a + "*" + b + " - q^-1*" + b + "*" + a;
    GeneratorSpec gb;
    gb.name = b;
    gb.counit = "0";
    gb.coproduct = b + "@1 + " + kb + "@" + b;
    gb.antipode = "-" + pow_str(kb, ell - 1) + "*" + b;
    GeneratorSpec gk1;
    gk1.name = "K1";
    gk1.group_order = ell;
    gk1.coproduct = "K1@K1";
    gk1.counit = "1";
    gk1.antipode = pow_str("K1", ell - 1);
    GeneratorSpec gk2 = gk1;
    gk2.name = "K2";
    gk2.coproduct = "K2@K2";
    gk2.antipode = pow_str("K2", ell - 1);
    f.generators = {ga, gm, gb, gk1, gk2};

    f.rules.push_back({b + "*" + a, "q*" + a + "*" + b + " - q*" + m});
    f.rules.push_back({m + "*" + a, "q^-1*" + a + "*" + m});
    f.rules.push_back({b + "*" + m, "q^-1*" + m + "*" + b});
    f.rules.push_back({pow_str(a, ell), "0"});
    f.rules.push_back({pow_str(m, ell), "0"});
    f.rules.push_back({pow_str(b, ell), "0"});
    f.rules.push_back({pow_str("K1", ell), "1"});
    f.rules.push_back({pow_str("K2", ell), "1"});
    f.rules.push_back({"K2*K1", "K1*K2"});
    // Cartan matrix A2: <alpha_i, alpha_j^v> = 2 on the diagonal, -1 off it.
    auto cartan = [&](const std::string& k, const std::string& e, const std::string& coeff) {
        f.rules.push_back({k + "*" + e, coeff + "*" + e + "*" + k});
    };
    cartan("K1", "E1", "q^2");
    cartan("K1", "E2", "q^-1");
    cartan("K1", conv_b ? "E21" : "E12", "q");
    cartan("K2", "E1", "q^-1");
    cartan("K2", "E2", "q^2");
    cartan("K2", conv_b ? "E21" : "E12", "q");
    pin_field(f, ell * ell * ell * ell * ell);
    return f;
}

PresentationFile preset_group_algebra(u64 rank, u64 ell) {
    check(ell > 1, "InvalidParameters", "ell must be > 1");
    PresentationFile f;
    f.name = "group_r" + std::to_string(rank) + "_l" + std::to_string(ell);
    f.ell = ell;
    auto gname = [&](u64 i) { return "g" + std::to_string(i + 1); };
    for (u64 i = 0; i < rank; ++i) {
        GeneratorSpec g;
        g.name = gname(i);
        g.group_order = ell;
        g.coproduct = g.name + "@" + g.name;
        g.counit = "1";
        g.antipode = pow_str(g.name, ell - 1);
        f.generators.push_back(std::move(g));
    }
    for (u64 i = 0; i < rank; ++i) f.rules.push_back({pow_str(gname(i), ell), "1"});
    for (u64 j = 1; j < rank; ++j)
        for (u64 i = 0; i < j; ++i)
            f.rules.push_back({gname(j) + "*" + gname(i), gname(i) + "*" + gname(j)});
    u64 dim = 1;
    for (u64 i = 0; i < rank; ++i) dim *= ell;
    pin_field(f, dim);
    return f;
}

std::vector<std::string> preset_names() {
    return {"taft_l3",        "taft_l3_convB",      "qea_r2_l3",
            "uqplus_sl2_l3",  "uqplus_sl2_l3_convB", "uqplus_sl3_l3",
            "uqplus_sl3_l3_convB", "group_r1_l3",    "group_r2_l3"};
}

PresentationFile preset_by_name(const std::string& name) {
    if (name == "taft_l3") return preset_taft(3);
    if (name == "taft_l3_convB") return preset_taft(3, true);
    if (name == "qea_r2_l3") return preset_qea(2, 3);
    if (name == "uqplus_sl2_l3") return preset_uqplus_sl2(3);
    if (name == "uqplus_sl2_l3_convB") return preset_uqplus_sl2(3, true);
    if (name == "uqplus_sl3_l3") return preset_uqplus_sl3(3);
    if (name == "uqplus_sl3_l3_convB") return preset_uqplus_sl3(3, true);
    if (name == "group_r1_l3") return preset_group_algebra(1, 3);
    if (name == "group_r2_l3") return preset_group_algebra(2, 3);
    fail("UnknownPreset", "no preset named '" + name + "'");
}

SubalgebraEmbedding embed_uqplus_sl2_in_sl3(u64 ell) {
    // The rank-1 Borel embeds via K -> K1, E -> E1. Its field must match the
    // rank-2 Borel's, so rebuild the small algebra over the big prime.
    BuiltPreset big = build(preset_uqplus_sl3(ell));
    PresentationFile small_file = preset_uqplus_sl2(ell);
    small_file.p = big.file.p;
    small_file.q = big.file.q;
    BuiltPreset small = build(small_file);

    const auto& alg = *big.algebra;
    auto dense_gen = [&](const std::string& name) {
        std::vector<u32> v(alg.dim(), 0);
        for (std::size_t g = 0; g < alg.module_generator_count(); ++g)
            if (alg.module_generator_name(g) == name)
                for (auto [i, c] : alg.generator_image(g)) v[i] = c;
        return v;
    };
    // Subalgebra generator order: K then E.
    std::vector<std::vector<u32>> images{dense_gen("K1"), dense_gen("E1")};
    return make_embedding(small.algebra, big.algebra, std::move(images), small.hopf, big.hopf);
}

SubalgebraEmbedding embed_group_algebra(const BuiltPreset& preset) {
    const auto& alg = *preset.algebra;
    check(alg.group_like().has_value(), "NoGroupData",
          "preset has no group-like generators");
    std::vector<std::string> group_gen_names;
    u64 order = 0;
    for (const auto& g : preset.file.generators)
        if (g.group_order) {
            group_gen_names.push_back(g.name);
            if (order == 0)
                order = *g.group_order;
            else
                check(order == *g.group_order, "InvalidParameters",
                      "mixed group-like orders are not supported here");
        }
    PresentationFile gf = preset_group_algebra(group_gen_names.size(), order);
    gf.p = preset.file.p;
    gf.q = preset.file.q;
    BuiltPreset g = build(gf);

    auto dense_gen = [&](const std::string& name) {
        std::vector<u32> v(alg.dim(), 0);
        for (std::size_t gi = 0; gi < alg.module_generator_count(); ++gi)
            if (alg.module_generator_name(gi) == name)
                for (auto [i, c] : alg.generator_image(gi)) v[i] = c;
        return v;
    };
    std::vector<std::vector<u32>> images;
    for (const auto& n : group_gen_names) images.push_back(dense_gen(n));
    return make_embedding(g.algebra, preset.algebra, std::move(images), g.hopf, preset.hopf);
}

}  // namespace hopfres
