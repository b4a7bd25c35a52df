#include "bialg/io.hpp"

#include <fstream>
#include <sstream>

namespace bialg::io {

ScalarKindInfo parse_scalar_kind(const std::string& s) {
    if (s == "rational") return {ScalarKind::Rational, 0};
    if (s == "neutrosophic") return {ScalarKind::Neutrosophic, 0};
    if (s == "fuzzy") return {ScalarKind::Fuzzy, 0};
    if (s.rfind("gf:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty()) throw ParseError("scalar kind 'gf:' needs a modulus");
        std::uint64_t p = 0;
        for (char c : num) {
            if (c < '0' || c > '9') throw ParseError("bad gf modulus '" + num + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return {ScalarKind::Gf, p};
    }
    throw ParseError("unknown scalar kind '" + s + "'");
}

std::string scalar_kind_string(const ScalarKindInfo& k) {
    switch (k.kind) {
        case ScalarKind::Rational: return "rational";
        case ScalarKind::Gf: return "gf:" + std::to_string(k.p);
        case ScalarKind::Neutrosophic: return "neutrosophic";
        default: return "fuzzy";
    }
}

Rational parse_rational(const std::string& s) { return Rational::from_string(s); }

std::uint64_t parse_gf(const std::string& s, const PrimeField& f) {
    if (s.empty()) throw ParseError("empty gf literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad gf literal '" + s + "'");
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw ParseError("bad gf literal '" + s + "'");
        v = v * 10 + (s[i] - '0');
        if (v > (1ll << 62)) throw ParseError("gf literal out of range '" + s + "'");
    }
    if (s[0] == '-') v = -v;
    return f.from_int(v);
}

/*
 * Neutrosophic literals are sums of signed terms, each either a rational or a
 * rational followed by 'I' ("1+2I", "2I+1", "-I", "3/4I", "5").
 */
Neutro parse_neutro(const std::string& s) {
    if (s.empty()) throw ParseError("empty neutrosophic literal");
    Neutro acc;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw ParseError("expected '+' or '-' in '" + s + "'");
        }
        std::size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw ParseError("dangling sign in '" + s + "'");
        Rational coef(1);
        bool indet = false;
        if (term.back() == 'I') {
            indet = true;
            term.pop_back();
            if (!term.empty()) coef = Rational::from_string(term);
        } else {
            coef = Rational::from_string(term);
        }
        if (sign < 0) coef = -coef;
        if (indet) acc.b += coef;
        else acc.a += coef;
        any = true;
    }
    return acc;
}

namespace {

std::int64_t parse_micro(const std::string& s) {
    const auto dot = s.find('.');
    const std::string whole = dot == std::string::npos ? s : s.substr(0, dot);
    const std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw ParseError("bad fuzzy literal '" + s + "'");
    if (frac.size() > 6)
        throw ParseError("fuzzy literal '" + s + "' exceeds 6 decimal places");
    std::int64_t w = 0;
    for (char c : whole) {
        if (c < '0' || c > '9') throw ParseError("bad fuzzy literal '" + s + "'");
        w = w * 10 + (c - '0');
        if (w > 1000) throw ParseError("fuzzy grade out of range '" + s + "'");
    }
    std::int64_t f = 0;
    for (char c : frac) {
        if (c < '0' || c > '9') throw ParseError("bad fuzzy literal '" + s + "'");
        f = f * 10 + (c - '0');
    }
    for (std::size_t i = frac.size(); i < 6; ++i) f *= 10;
    return w * Fuzzy::kScale + f;
}

}  // namespace

Fuzzy parse_fuzzy(const std::string& s) {
    if (s.empty()) throw ParseError("empty fuzzy literal");
    if (s == "I") return Fuzzy::indeterminate();
    if (s.back() == 'I') return Fuzzy::indeterminate(parse_micro(s.substr(0, s.size() - 1)));
    return Fuzzy::real(parse_micro(s));
}

std::string format_fuzzy(const Fuzzy& v) { return v.to_string(); }

namespace {

template <typename E, typename Fmt>
json matrix_json_impl(const Matrix<E>& m, Fmt fmt) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(fmt(e));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <typename E, typename Parse>
Matrix<E> matrix_parse_impl(const json& j, Parse parse) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix document needs rows, cols, entries");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw ParseError("matrix entries length != rows*cols");
    std::vector<E> data;
    data.reserve(entries.size());
    for (const auto& e : entries) data.push_back(parse(e.get<std::string>()));
    return Matrix<E>(rows, cols, std::move(data));
}

}  // namespace

json matrix_to_json(const Matrix<Rational>& m) {
    return matrix_json_impl(m, [](const Rational& r) { return r.to_string(); });
}
json matrix_to_json(const PrimeField& f, const Matrix<std::uint64_t>& m) {
    return matrix_json_impl(m, [&](std::uint64_t e) { return f.to_string(e); });
}
json matrix_to_json(const Matrix<Neutro>& m) {
    return matrix_json_impl(m, [](const Neutro& e) { return e.to_string(); });
}
json matrix_to_json(const Matrix<Fuzzy>& m) {
    return matrix_json_impl(m, [](const Fuzzy& e) { return e.to_string(); });
}

Matrix<Rational> json_to_rational_matrix(const json& j) {
    return matrix_parse_impl<Rational>(j, parse_rational);
}
Matrix<std::uint64_t> json_to_gf_matrix(const json& j, const PrimeField& f) {
    return matrix_parse_impl<std::uint64_t>(j, [&](const std::string& s) { return parse_gf(s, f); });
}
Matrix<Neutro> json_to_neutro_matrix(const json& j) {
    return matrix_parse_impl<Neutro>(j, parse_neutro);
}
Matrix<Fuzzy> json_to_fuzzy_matrix(const json& j) {
    return matrix_parse_impl<Fuzzy>(j, parse_fuzzy);
}

BimatrixDoc parse_bimatrix_doc(const json& j) {
    if (!j.is_object() || !j.contains("scalar_kind") || !j.contains("first") ||
        !j.contains("second"))
        throw ParseError("bimatrix document needs scalar_kind, first, second");
    const auto kind = parse_scalar_kind(j.at("scalar_kind").get<std::string>());
    switch (kind.kind) {
        case ScalarKind::Rational:
            return {kind, Bimatrix<Rational>{json_to_rational_matrix(j.at("first")),
                                             json_to_rational_matrix(j.at("second"))}};
        case ScalarKind::Gf: {
            PrimeField f(kind.p);
            return {kind, GfBimatrix{f, Bimatrix<std::uint64_t>{
                                            json_to_gf_matrix(j.at("first"), f),
                                            json_to_gf_matrix(j.at("second"), f)}}};
        }
        case ScalarKind::Neutrosophic:
            return {kind, Bimatrix<Neutro>{json_to_neutro_matrix(j.at("first")),
                                           json_to_neutro_matrix(j.at("second"))}};
        default:
            return {kind, Bimatrix<Fuzzy>{json_to_fuzzy_matrix(j.at("first")),
                                          json_to_fuzzy_matrix(j.at("second"))}};
    }
}

json bimatrix_doc_to_json(const BimatrixDoc& d) {
    json j{{"scalar_kind", scalar_kind_string(d.kind)}};
    std::visit(
        [&](const auto& bm) {
            using T = std::decay_t<decltype(bm)>;
            if constexpr (std::is_same_v<T, GfBimatrix>) {
                j["first"] = matrix_to_json(bm.field, bm.m.first);
                j["second"] = matrix_to_json(bm.field, bm.m.second);
            } else {
                j["first"] = matrix_to_json(bm.first);
                j["second"] = matrix_to_json(bm.second);
            }
        },
        d.value);
    return j;
}

namespace {

template <typename E, typename Parse>
Vector<E> vector_parse_impl(const json& j, Parse parse) {
    if (!j.is_array()) throw ParseError("vector document must be an array of literals");
    Vector<E> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(parse(e.get<std::string>()));
    return v;
}

}  // namespace

BivectorDoc parse_bivector_doc(const json& j) {
    if (!j.is_object() || !j.contains("scalar_kind") || !j.contains("first") ||
        !j.contains("second"))
        throw ParseError("bivector document needs scalar_kind, first, second");
    const auto kind = parse_scalar_kind(j.at("scalar_kind").get<std::string>());
    switch (kind.kind) {
        case ScalarKind::Rational:
            return {kind,
                    Bivector<Rational>{vector_parse_impl<Rational>(j.at("first"), parse_rational),
                                       vector_parse_impl<Rational>(j.at("second"), parse_rational)}};
        case ScalarKind::Gf: {
            PrimeField f(kind.p);
            auto parse = [&](const std::string& s) { return parse_gf(s, f); };
            return {kind, GfBivector{f, Bivector<std::uint64_t>{
                                            vector_parse_impl<std::uint64_t>(j.at("first"), parse),
                                            vector_parse_impl<std::uint64_t>(j.at("second"),
                                                                             parse)}}};
        }
        case ScalarKind::Neutrosophic:
            return {kind, Bivector<Neutro>{vector_parse_impl<Neutro>(j.at("first"), parse_neutro),
                                           vector_parse_impl<Neutro>(j.at("second"), parse_neutro)}};
        default:
            throw ParseError("fuzzy bivectors are not a supported document");
    }
}

std::vector<Rational> parse_rational_vector(const json& j) {
    return vector_parse_impl<Rational>(j, parse_rational);
}

json rational_vector_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

InnerProductDesc parse_ip_desc(const std::string& s) {
    if (s == "dot") return StandardDot{};
    if (s == "gfdot") return GfWeightedDot{};  // unweighted coefficient dot
    auto parse_list = [&](const std::string& body) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : body) {
            if (c == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    if (s.rfind("wdot:", 0) == 0) {
        WeightedDot w;
        for (const auto& part : parse_list(s.substr(5))) w.weights.push_back(parse_rational(part));
        return w;
    }
    if (s.rfind("l2:", 0) == 0) {
        const auto parts = parse_list(s.substr(3));
        if (parts.size() != 2) throw ParseError("l2 descriptor needs two endpoints");
        return PolyL2{parse_rational(parts[0]), parse_rational(parts[1])};
    }
    if (s.rfind("gfdot:", 0) == 0) {
        GfWeightedDot g;
        for (const auto& part : parse_list(s.substr(6))) {
            std::uint64_t w = 0;
            for (char c : part) {
                if (c < '0' || c > '9') throw ParseError("bad gfdot weight '" + part + "'");
                w = w * 10 + static_cast<std::uint64_t>(c - '0');
            }
            g.weights.push_back(w);
        }
        return g;
    }
    throw ParseError("unknown inner-product descriptor '" + s + "'");
}

std::string ip_desc_string(const InnerProductDesc& d) {
    if (std::holds_alternative<StandardDot>(d)) return "dot";
    if (const auto* w = std::get_if<WeightedDot>(&d)) {
        std::string s = "wdot:";
        for (std::size_t i = 0; i < w->weights.size(); ++i)
            s += (i ? "," : "") + w->weights[i].to_string();
        return s;
    }
    if (const auto* l = std::get_if<PolyL2>(&d))
        return "l2:" + l->a.to_string() + "," + l->b.to_string();
    const auto& g = std::get<GfWeightedDot>(d);
    if (g.weights.empty()) return "gfdot";
    std::string s = "gfdot:";
    for (std::size_t i = 0; i < g.weights.size(); ++i)
        s += (i ? "," : "") + std::to_string(g.weights[i]);
    return s;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> parse_biword(
    const std::string& s, const PrimeField& f) {
    const auto bar = s.find('|');
    if (bar == std::string::npos) throw ParseError("biword needs a '|' separator");
    auto parse_word = [&](const std::string& part) {
        std::vector<std::uint64_t> w;
        w.reserve(part.size());
        for (char c : part) {
            if (c < '0' || c > '9') throw ParseError("bad word digit '" + std::string(1, c) + "'");
            const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
            if (d >= f.p()) throw ParseError("digit " + std::string(1, c) + " outside GF(" +
                                             std::to_string(f.p()) + ")");
            w.push_back(d);
        }
        return w;
    };
    return {parse_word(s.substr(0, bar)), parse_word(s.substr(bar + 1))};
}

std::string word_string(const std::vector<std::uint64_t>& w) {
    std::string s;
    s.reserve(w.size());
    for (auto d : w) {
        if (d > 9) throw ParseError("word digit > 9 has no single-character form");
        s += static_cast<char>('0' + d);
    }
    return s;
}

std::string biword_string(const std::vector<std::uint64_t>& w1,
                          const std::vector<std::uint64_t>& w2) {
    return word_string(w1) + "|" + word_string(w2);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("in '" + path + "': " + e.what());
    }
}

}  // namespace bialg::io
