#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bialg/bialgebra.hpp"
#include "bialg/bicode.hpp"
#include "bialg/bimatrix.hpp"
#include "bialg/bispace.hpp"
#include "bialg/io.hpp"
#include "bialg/models.hpp"
#include "bialg/neutro_matrix.hpp"

#ifndef BIALG_DEFAULT_EXAMPLES_DIR
#define BIALG_DEFAULT_EXAMPLES_DIR "data/examples"
#endif

namespace {

using bialg::io::json;
using namespace bialg;

// ---------- output plumbing ----------

std::string render_text(const json& j, int indent = 0);

std::string render_matrix_block(const json& m) {
    // aligned rows of a {rows, cols, entries} document
    const std::size_t rows = m.at("rows").get<std::size_t>();
    const std::size_t cols = m.at("cols").get<std::size_t>();
    const auto& entries = m.at("entries");
    std::vector<std::size_t> width(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            width[j] = std::max(width[j], entries[i * cols + j].get<std::string>().size());
    std::ostringstream out;
    for (std::size_t i = 0; i < rows; ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < cols; ++j) {
            std::string e = entries[i * cols + j].get<std::string>();
            out << std::string(width[j] - e.size(), ' ') << e << ' ';
        }
        out << "]";
        if (i + 1 < rows) out << '\n';
    }
    return out.str();
}

bool looks_like_matrix(const json& j) {
    return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string join_union(const std::string& a, const std::string& b) {
    std::vector<std::string> la, lb;
    std::istringstream sa(a), sb(b);
    for (std::string line; std::getline(sa, line);) la.push_back(line);
    for (std::string line; std::getline(sb, line);) lb.push_back(line);
    std::size_t wa = 0;
    for (const auto& l : la) wa = std::max(wa, l.size());
    const std::size_t n = std::max(la.size(), lb.size());
    const std::size_t mid = n / 2;
    std::ostringstream out;
    for (std::size_t i = 0; i < n; ++i) {
        std::string left = i < la.size() ? la[i] : "";
        left += std::string(wa - std::min(wa, left.size()), ' ');
        out << left << (i == mid ? "  u  " : "     ") << (i < lb.size() ? lb[i] : "");
        if (i + 1 < n) out << '\n';
    }
    return out.str();
}

std::string render_text(const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    std::ostringstream out;
    if (j.is_object()) {
        if (looks_like_matrix(j)) return render_matrix_block(j);
        if (j.contains("first") && j.contains("second") && looks_like_matrix(j["first"]))
            return join_union(render_matrix_block(j["first"]), render_matrix_block(j["second"]));
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << '\n';
            first = false;
            const std::string body = render_text(it.value(), indent + 1);
            if (body.find('\n') != std::string::npos ||
                (it.value().is_object() && !it.value().empty()) ||
                (it.value().is_array() && !it.value().empty() && !it.value()[0].is_primitive())) {
                out << pad << it.key() << ":\n" << body;
            } else {
                std::string flat = body;
                const auto nonspace = flat.find_first_not_of(' ');
                if (nonspace != std::string::npos) flat = flat.substr(nonspace);
                out << pad << it.key() << ": " << flat;
            }
        }
        return out.str();
    }
    if (j.is_array()) {
        bool flat = true;
        for (const auto& e : j)
            if (!e.is_primitive()) flat = false;
        if (flat) {
            out << pad << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out << ", ";
                out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            }
            out << "]";
            return out.str();
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out << '\n';
            out << render_text(j[i], indent);
        }
        return out.str();
    }
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump());
    return out.str();
}

struct Output {
    std::string format = "doc";
    std::string path;  // empty = stdout

    void emit(const json& j) const {
        std::string body = format == "doc" ? j.dump(2) + "\n" : render_text(j) + "\n";
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path);
            if (!out) throw Error("cannot write '" + path + "'");
            out << body;
        }
    }
};

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("BIALG_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("BIALG_MAX_ENUM must be a positive integer");
    }
    return default_enumeration_cap();
}

// ---------- typed helpers ----------

Bimatrix<Rational> want_rational(const io::BimatrixDoc& d, const std::string& what) {
    if (const auto* m = std::get_if<Bimatrix<Rational>>(&d.value)) return *m;
    throw ScalarKindMismatch(what + " needs a rational bimatrix");
}

Bimatrix<Neutro> want_neutro(const io::BimatrixDoc& d, const std::string& what) {
    if (const auto* m = std::get_if<Bimatrix<Neutro>>(&d.value)) return *m;
    throw ScalarKindMismatch(what + " needs a neutrosophic bimatrix");
}

json poly_json(const RationalField& f, const Polynomial<Rational>& p) {
    json coeffs = json::array();
    for (const auto& c : p.c) coeffs.push_back(c.to_string());
    return json{{"coeffs", coeffs}, {"rendered", poly_to_string(f, p)}};
}

json gfpoly_json(const PrimeField& f, const Polynomial<std::uint64_t>& p) {
    json coeffs = json::array();
    for (const auto& c : p.c) coeffs.push_back(f.to_string(c));
    return json{{"coeffs", coeffs}, {"rendered", poly_to_string(f, p)}};
}

json neutro_poly_json(const Polynomial<Neutro>& p) {
    NeutroRing ring;
    json coeffs = json::array();
    for (const auto& c : p.c) coeffs.push_back(c.to_string());
    return json{{"coeffs", coeffs}, {"rendered", poly_to_string(ring, p)}};
}

json bipoly_json(const RationalField& f, const Bipolynomial<Rational>& p) {
    return json{{"first", poly_json(f, p.first)}, {"second", poly_json(f, p.second)}};
}

json rational_bimatrix_json(const Bimatrix<Rational>& m) {
    return json{{"scalar_kind", "rational"},
                {"first", io::matrix_to_json(m.first)},
                {"second", io::matrix_to_json(m.second)}};
}

json gf_bimatrix_json(const PrimeField& f, const Bimatrix<std::uint64_t>& m) {
    return json{{"scalar_kind", "gf:" + std::to_string(f.p())},
                {"first", io::matrix_to_json(f, m.first)},
                {"second", io::matrix_to_json(f, m.second)}};
}

json bivector_json(const Bivector<Rational>& v) {
    return json{{"first", io::rational_vector_to_json(v.first)},
                {"second", io::rational_vector_to_json(v.second)}};
}

Bivector<Rational> parse_rational_bivector(const json& j) {
    return {io::parse_rational_vector(j.at("first")), io::parse_rational_vector(j.at("second"))};
}

json eigen_decomp_json(const RationalField& f, const EigenDecomp<Rational>& d) {
    json spaces = json::array();
    for (const auto& sp : d.spaces) {
        json vecs = json::array();
        for (const auto& v : sp.eigenvectors) vecs.push_back(io::rational_vector_to_json(v));
        spaces.push_back(json{{"value", sp.value.to_string()},
                              {"multiplicity", sp.multiplicity},
                              {"eigenvectors", vecs}});
    }
    json out{{"values", spaces}};
    if (d.rootless_cofactor.degree() > 0)
        out["rootless_factor"] = poly_to_string(f, d.rootless_cofactor);
    return out;
}

// sorted multiset of roots, the "(0, 0, 0)" style view
json value_multiset_json(const EigenDecomp<Rational>& d) {
    json vals = json::array();
    for (const auto& sp : d.spaces)
        for (int k = 0; k < sp.multiplicity; ++k) vals.push_back(sp.value.to_string());
    return vals;
}

Bicode load_bicode_from_json(const json& input) {
    if (!input.is_object() || !input.contains("q"))
        throw ParseError("code document needs a field size q");
    const auto q = input.at("q").get<std::uint64_t>();
    PrimeField f(q);
    if (input.contains("parity")) {
        const auto bd = io::parse_bimatrix_doc(input.at("parity"));
        const auto* gf = std::get_if<io::GfBimatrix>(&bd.value);
        if (!gf || gf->field.p() != q)
            throw ScalarKindMismatch("parity bimatrix must be over gf:" + std::to_string(q));
        return bicode_from_parity(gf->m, q);
    }
    if (input.contains("generator")) {
        const auto bd = io::parse_bimatrix_doc(input.at("generator"));
        const auto* gf = std::get_if<io::GfBimatrix>(&bd.value);
        if (!gf || gf->field.p() != q)
            throw ScalarKindMismatch("generator bimatrix must be over gf:" + std::to_string(q));
        return bicode_from_generator(gf->m, q);
    }
    if (input.contains("generator_poly")) {
        const auto& gp = input.at("generator_poly");
        auto parse_poly = [&](const json& arr) {
            std::vector<std::uint64_t> c;
            for (const auto& e : arr) c.push_back(f.from_int(e.get<long long>()));
            return poly_from(f, c);
        };
        return cyclic_bicode({parse_poly(gp.at("g1")), parse_poly(gp.at("g2"))},
                             {gp.at("n1").get<std::size_t>(), gp.at("n2").get<std::size_t>()}, q);
    }
    throw ParseError("code document needs parity, generator, or generator_poly");
}

Bicode load_bicode(const std::string& path) {
    return load_bicode_from_json(io::load_json_file(path));
}

json bicode_json(const Bicode& c) {
    json out{{"q", c.field.p()},
             {"params", json::array({json::array({c.n1(), c.k1()}), json::array({c.n2(), c.k2()})})},
             {"generator", gf_bimatrix_json(c.field, c.generator)},
             {"parity", gf_bimatrix_json(c.field, c.parity)}};
    if (c.check_poly)
        out["check_poly"] = json{{"first", gfpoly_json(c.field, c.check_poly->first)},
                                 {"second", gfpoly_json(c.field, c.check_poly->second)}};
    if (c.generator_poly)
        out["generator_poly"] = json{{"first", gfpoly_json(c.field, c.generator_poly->first)},
                                     {"second", gfpoly_json(c.field, c.generator_poly->second)}};
    return out;
}

json decode_report_json(const DecodeReport& rep) {
    return json{{"case", rep.decode_case},
                {"bases_tried", json::array({rep.first.bases_tried, rep.second.bases_tried})},
                {"result", io::biword_string(rep.first.result, rep.second.result)},
                {"distance", json::array({rep.distance.first, rep.distance.second,
                                          rep.distance.total()})}};
}

InnerBiproduct parse_ip_pair(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("ip must be a two-element array of descriptors");
    return {io::parse_ip_desc(j[0].get<std::string>()),
            io::parse_ip_desc(j[1].get<std::string>())};
}

// ---------- examples registry ----------

std::filesystem::path examples_dir() {
    if (const char* env = std::getenv("BIALG_EXAMPLES_DIR")) return env;
    return BIALG_DEFAULT_EXAMPLES_DIR;
}

struct ExampleOutcome {
    bool match = false;
    json result;
    std::string detail;  // first mismatch description
};

void expect_eq(ExampleOutcome& out, const json& got, const json& want, const std::string& where) {
    if (got != want && out.detail.empty()) {
        out.detail = where + ": got " + got.dump() + ", want " + want.dump();
    }
}

ExampleOutcome run_example_doc(const json& doc) {
    ExampleOutcome out;
    const std::string kind = doc.at("kind").get<std::string>();
    const json& input = doc.at("input");
    const json& expect = doc.at("expect");
    const RationalField f;

    if (kind == "bimatrix-charpoly-eigen") {
        const auto a = want_rational(io::parse_bimatrix_doc(input.at("bimatrix")), "example");
        auto cp = char_bipolynomial(f, a);
        auto an = eigen_bivalues(f, a);
        out.result = json{{"charpoly", json::array({poly_to_string(f, cp.first),
                                                    poly_to_string(f, cp.second)})},
                          {"flag", eigen_flag_name(an.flag)},
                          {"values", json::array({value_multiset_json(an.first),
                                                  value_multiset_json(an.second)})}};
        expect_eq(out, out.result.at("charpoly"), expect.at("charpoly"), "charpoly");
        expect_eq(out, out.result.at("flag"), expect.at("flag"), "flag");
        expect_eq(out, out.result.at("values"), expect.at("values"), "values");
    } else if (kind == "bimatrix-diag") {
        const auto a = want_rational(io::parse_bimatrix_doc(input.at("bimatrix")), "example");
        auto bd = bidiagonalize(f, a);
        const bool relation =
            mat_eq(f, mat_mul(f, a.first, bd.p.first), mat_mul(f, bd.p.first, bd.d.first)) &&
            mat_eq(f, mat_mul(f, a.second, bd.p.second), mat_mul(f, bd.p.second, bd.d.second));
        json diag1 = json::array(), diag2 = json::array();
        for (std::size_t i = 0; i < bd.d.first.rows(); ++i)
            diag1.push_back(bd.d.first(i, i).to_string());
        for (std::size_t i = 0; i < bd.d.second.rows(); ++i)
            diag2.push_back(bd.d.second(i, i).to_string());
        out.result = json{{"d", json::array({diag1, diag2})}, {"ap_equals_pd", relation}};
        expect_eq(out, out.result.at("d"), expect.at("d"), "d");
        expect_eq(out, out.result.at("ap_equals_pd"), json(true), "ap_equals_pd");
    } else if (kind == "jordan") {
        const auto a = want_rational(io::parse_bimatrix_doc(input.at("bimatrix")), "example");
        auto jb = jordan_biform(a);
        auto blocks_json = [](const std::vector<JordanBlock>& blocks) {
            json arr = json::array();
            for (const auto& b : blocks)
                arr.push_back(json::array({b.eigenvalue.to_string(), b.size}));
            return arr;
        };
        out.result = json{{"blocks", json::array({blocks_json(jb.blocks_first),
                                                  blocks_json(jb.blocks_second)})},
                          {"fixed_point", bi_eq(f, jb.form, a)}};
        if (input.contains("minpoly_check") && input.at("minpoly_check").get<bool>()) {
            auto mp = minimal_bipolynomial(f, a);
            out.result["minpoly"] = json::array(
                {poly_to_string(f, mp.first), poly_to_string(f, mp.second)});
        }
        for (const auto& key : {"blocks", "fixed_point", "minpoly"})
            if (expect.contains(key)) expect_eq(out, out.result.at(key), expect.at(key), key);
    } else if (kind == "gram-schmidt") {
        const auto ip = parse_ip_pair(input.at("ip"));
        std::vector<Bivector<Rational>> vs;
        for (const auto& v : input.at("vectors")) vs.push_back(parse_rational_bivector(v));
        auto gs = gram_schmidt_biorthogonalize(ip, vs);
        json arr = json::array();
        for (const auto& v : gs) arr.push_back(bivector_json(v));
        out.result = json{{"vectors", arr}};
        expect_eq(out, out.result.at("vectors"), expect.at("vectors"), "vectors");
    } else if (kind == "pseudo-ip") {
        PrimeField fp(input.at("q").get<std::uint64_t>());
        const auto d1 = io::parse_ip_desc(input.at("ip")[0].get<std::string>());
        const auto d2 = io::parse_ip_desc(input.at("ip")[1].get<std::string>());
        const auto* g1 = std::get_if<GfWeightedDot>(&d1);
        const auto* g2 = std::get_if<GfWeightedDot>(&d2);
        if (!g1 || !g2) throw ParseError("pseudo-ip example needs gfdot descriptors");
        auto parse_vec = [&](const json& arr) {
            Vector<std::uint64_t> v;
            for (const auto& e : arr) v.push_back(fp.from_int(e.get<long long>()));
            return v;
        };
        const auto u1 = parse_vec(input.at("alpha").at("first"));
        const auto u2 = parse_vec(input.at("alpha").at("second"));
        const auto val1 = gf_ip_eval(fp, *g1, u1, u1);
        const auto val2 = gf_ip_eval(fp, *g2, u2, u2);
        out.result = json{{"value", json::array({val1, val2})},
                          {"alpha_nonzero", !vec_is_zero(fp, u1) || !vec_is_zero(fp, u2)}};
        expect_eq(out, out.result.at("value"), expect.at("value"), "value");
        expect_eq(out, out.result.at("alpha_nonzero"), json(true), "alpha_nonzero");
    } else if (kind == "codewords") {
        auto c = load_bicode_from_json(input);
        auto en = enumerate(c, enumeration_cap());
        json w1 = json::array(), w2 = json::array();
        for (const auto& w : en.first) w1.push_back(io::word_string(w));
        for (const auto& w : en.second) w2.push_back(io::word_string(w));
        out.result = json{{"first", w1}, {"second", w2}};
        auto sorted_expect = [](json arr) {
            std::vector<std::string> v = arr.get<std::vector<std::string>>();
            std::sort(v.begin(), v.end());
            return json(v);
        };
        expect_eq(out, out.result.at("first"), sorted_expect(expect.at("first")), "first");
        expect_eq(out, out.result.at("second"), sorted_expect(expect.at("second")), "second");
        if (expect.contains("generator"))
            expect_eq(out, gf_bimatrix_json(c.field, c.generator), expect.at("generator"),
                      "generator");
        if (expect.contains("check_poly")) {
            json cp = json{{"first", gfpoly_json(c.field, c.check_poly->first).at("rendered")},
                           {"second", gfpoly_json(c.field, c.check_poly->second).at("rendered")}};
            expect_eq(out, cp, expect.at("check_poly"), "check_poly");
        }
    } else if (kind == "encode-table") {
        auto c = load_bicode_from_json(input);
        json table = json::object();
        for (const auto& row : expect.at("table").items()) {
            const auto [m1, m2] = io::parse_biword(row.key(), c.field);
            auto x = encode(c, m1, m2);
            table[row.key()] = io::biword_string(x.first, x.second);
        }
        out.result = json{{"table", table}};
        expect_eq(out, out.result.at("table"), expect.at("table"), "table");
    } else if (kind == "decode") {
        auto c = load_bicode_from_json(input);
        const auto [b1, b2] = io::parse_biword(input.at("received").get<std::string>(), c.field);
        DecodePolicy policy;
        if (input.contains("bases")) {
            auto parse_bases = [&](const json& arr) {
                std::vector<std::vector<Word>> out_bases;
                for (const auto& basis : arr) {
                    std::vector<Word> vs;
                    for (const auto& w : basis) {
                        const std::string s = w.get<std::string>();
                        Word word;
                        for (char ch : s) word.push_back(static_cast<std::uint64_t>(ch - '0'));
                        vs.push_back(word);
                    }
                    out_bases.push_back(vs);
                }
                return out_bases;
            };
            policy.first_bases = parse_bases(input.at("bases").at("first"));
            policy.second_bases = parse_bases(input.at("bases").at("second"));
        }
        auto rep = pseudo_decode(c, {b1, b2}, policy);
        out.result = decode_report_json(rep);
        out.result["syndrome_zero"] =
            syndrome(c, {rep.first.result, rep.second.result}).is_bicodeword;
        expect_eq(out, out.result.at("result"), expect.at("result"), "result");
        expect_eq(out, out.result.at("distance"), expect.at("distance"), "distance");
        expect_eq(out, out.result.at("syndrome_zero"), json(true), "syndrome_zero");
    } else if (kind == "neutro-charpoly") {
        const auto a = io::json_to_neutro_matrix(input.at("matrix"));
        auto p = neutro_char_poly(a);
        NeutroRing ring;
        json coeffs = json::array();
        for (const auto& c : p.c) coeffs.push_back(c.to_string());
        out.result = json{{"coeffs", coeffs}, {"rendered", poly_to_string(ring, p)}};
        expect_eq(out, out.result.at("coeffs"), expect.at("coeffs"), "coeffs");
    } else if (kind == "neutro-eigen") {
        const auto a = io::json_to_neutro_matrix(input.at("matrix"));
        auto r = neutro_eigenvalues(a);
        std::vector<std::string> all, classical;
        for (const auto& ev : r.values) {
            all.push_back(ev.value.to_string());
            if (ev.classical) classical.push_back(ev.value.to_string());
        }
        std::sort(all.begin(), all.end());
        std::sort(classical.begin(), classical.end());
        const bool none = r.values.empty();
        out.result = json{{"status", none ? "no value in Q(I)" : "ok"},
                          {"all", all},
                          {"classical", classical}};
        // verify the singularity property on everything reported
        bool singular_ok = true;
        for (const auto& ev : r.values) {
            auto shifted = a;
            for (std::size_t i = 0; i < a.rows(); ++i)
                shifted(i, i) = neutro_sub(shifted(i, i), ev.value);
            if (!neutro_det(shifted).is_zero()) singular_ok = false;
        }
        out.result["singularity"] = singular_ok;
        expect_eq(out, out.result.at("status"), expect.at("status"), "status");
        if (expect.contains("all")) expect_eq(out, out.result.at("all"), expect.at("all"), "all");
        if (expect.contains("classical"))
            expect_eq(out, out.result.at("classical"), expect.at("classical"), "classical");
        expect_eq(out, out.result.at("singularity"), json(true), "singularity");
    } else if (kind == "fuzzy-compose") {
        const auto p = io::json_to_fuzzy_matrix(input.at("p"));
        const auto q = io::json_to_fuzzy_matrix(input.at("q"));
        auto r = fuzzy_compose(p, q);
        out.result = io::matrix_to_json(r);
        expect_eq(out, out.result.at("entries"), expect.at("entries"), "entries");
    } else {
        throw ParseError("unknown example kind '" + kind + "'");
    }

    out.match = out.detail.empty();
    return out;
}

int run_examples(const std::string& id, bool all, const Output& output) {
    const auto dir = examples_dir();
    std::vector<std::filesystem::path> files;
    if (all) {
        if (!std::filesystem::is_directory(dir))
            throw ParseError("examples directory '" + dir.string() + "' not found");
        for (const auto& entry : std::filesystem::directory_iterator(dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(dir / (id + ".json"));
    }
    bool ok = true;
    for (const auto& file : files) {
        const json doc = io::load_json_file(file.string());
        const std::string ex_id = doc.at("id").get<std::string>();
        ExampleOutcome outcome = run_example_doc(doc);
        if (output.format == "doc") {
            json line{{"id", ex_id},
                      {"status", outcome.match ? "MATCH" : "MISMATCH"},
                      {"result", outcome.result}};
            if (!outcome.match) line["detail"] = outcome.detail;
            std::cout << line.dump() << "\n";
        } else {
            std::cout << ex_id << "\n" << render_text(outcome.result) << "\n"
                      << (outcome.match ? "MATCH" : "MISMATCH " + outcome.detail) << "\n";
        }
        ok = ok && outcome.match;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bialg: exact linear bialgebra, bicodes, and neutrosophic models"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"text", "doc"}))
        ->capture_default_str();
    app.add_option("-o,--output", output.path, "output file (default stdout)");

    std::function<json()> task;
    int direct_exit = -1;

    // ---- bimatrix ----
    auto* bimatrix = app.add_subcommand("bimatrix", "bimatrix algebra");
    static std::string bm_a, bm_b, bm_scalar;
    for (const char* op : {"add", "mul"}) {
        auto* sub = bimatrix->add_subcommand(op, std::string(op) + " two bimatrices");
        sub->add_option("a", bm_a, "first bimatrix file")->required();
        sub->add_option("b", bm_b, "second bimatrix file")->required();
        const std::string opname = op;
        sub->callback([&, opname] {
            task = [&, opname]() -> json {
                const RationalField f;
                const auto da = io::parse_bimatrix_doc(io::load_json_file(bm_a));
                const auto db = io::parse_bimatrix_doc(io::load_json_file(bm_b));
                if (da.kind != db.kind)
                    throw ScalarKindMismatch("operands declare different scalar kinds");
                if (const auto* ma = std::get_if<Bimatrix<Rational>>(&da.value)) {
                    const auto& mb = std::get<Bimatrix<Rational>>(db.value);
                    auto r = opname == "add" ? bi_add(f, *ma, mb) : bi_mul(f, *ma, mb);
                    return rational_bimatrix_json(r);
                }
                if (const auto* ga = std::get_if<io::GfBimatrix>(&da.value)) {
                    const auto& gb = std::get<io::GfBimatrix>(db.value);
                    auto r = opname == "add" ? bi_add(ga->field, ga->m, gb.m)
                                             : bi_mul(ga->field, ga->m, gb.m);
                    return gf_bimatrix_json(ga->field, r);
                }
                if (const auto* na = std::get_if<Bimatrix<Neutro>>(&da.value)) {
                    const auto& nb = std::get<Bimatrix<Neutro>>(db.value);
                    NeutroRing ring;
                    auto r = opname == "add" ? bi_add(ring, *na, nb) : bi_mul(ring, *na, nb);
                    return json{{"scalar_kind", "neutrosophic"},
                                {"first", io::matrix_to_json(r.first)},
                                {"second", io::matrix_to_json(r.second)}};
                }
                throw ScalarKindMismatch("fuzzy bimatrices have no ring arithmetic");
            };
        });
    }
    {
        auto* sub = bimatrix->add_subcommand("scale", "scalar multiple of a bimatrix");
        sub->add_option("scalar", bm_scalar, "scalar literal")->required();
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const RationalField f;
                const auto da = io::parse_bimatrix_doc(io::load_json_file(bm_a));
                const auto m = want_rational(da, "scale");
                auto r = bi_scale(f, io::parse_rational(bm_scalar), m);
                return rational_bimatrix_json(r);
            };
        });
    }
    {
        auto* sub = bimatrix->add_subcommand("det", "componentwise determinants");
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const auto da = io::parse_bimatrix_doc(io::load_json_file(bm_a));
                if (const auto* m = std::get_if<Bimatrix<Rational>>(&da.value)) {
                    auto [d1, d2] = bi_determinant(RationalField{}, *m);
                    return json{{"det", json::array({d1.to_string(), d2.to_string()})}};
                }
                if (const auto* g = std::get_if<io::GfBimatrix>(&da.value)) {
                    auto [d1, d2] = bi_determinant(g->field, g->m);
                    return json{{"det", json::array({g->field.to_string(d1),
                                                     g->field.to_string(d2)})}};
                }
                if (const auto* n = std::get_if<Bimatrix<Neutro>>(&da.value)) {
                    auto d1 = neutro_det(n->first);
                    auto d2 = neutro_det(n->second);
                    return json{{"det", json::array({d1.to_string(), d2.to_string()})}};
                }
                throw ScalarKindMismatch("fuzzy bimatrices have no determinant");
            };
        });
    }
    {
        auto* sub = bimatrix->add_subcommand("charpoly", "characteristic bipolynomial");
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const RationalField f;
                const auto a =
                    want_rational(io::parse_bimatrix_doc(io::load_json_file(bm_a)), "charpoly");
                return bipoly_json(f, char_bipolynomial(f, a));
            };
        });
    }
    {
        auto* sub = bimatrix->add_subcommand("minpoly", "minimal bipolynomial");
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const RationalField f;
                const auto a =
                    want_rational(io::parse_bimatrix_doc(io::load_json_file(bm_a)), "minpoly");
                return bipoly_json(f, minimal_bipolynomial(f, a));
            };
        });
    }
    {
        auto* sub = bimatrix->add_subcommand("eigen", "characteristic bivalues and bivectors");
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const RationalField f;
                const auto da = io::parse_bimatrix_doc(io::load_json_file(bm_a));
                if (const auto* m = std::get_if<Bimatrix<Rational>>(&da.value)) {
                    auto an = eigen_bivalues(f, *m);
                    return json{{"flag", eigen_flag_name(an.flag)},
                                {"first", eigen_decomp_json(f, an.first)},
                                {"second", eigen_decomp_json(f, an.second)}};
                }
                if (const auto* g = std::get_if<io::GfBimatrix>(&da.value)) {
                    auto an = eigen_bivalues(g->field, g->m);
                    auto decomp_json = [&](const EigenDecomp<std::uint64_t>& d) {
                        json spaces = json::array();
                        for (const auto& sp : d.spaces) {
                            json vecs = json::array();
                            for (const auto& v : sp.eigenvectors) {
                                json vj = json::array();
                                for (auto e : v) vj.push_back(g->field.to_string(e));
                                vecs.push_back(vj);
                            }
                            spaces.push_back(json{{"value", g->field.to_string(sp.value)},
                                                  {"multiplicity", sp.multiplicity},
                                                  {"eigenvectors", vecs}});
                        }
                        return json{{"values", spaces}};
                    };
                    return json{{"flag", eigen_flag_name(an.flag)},
                                {"first", decomp_json(an.first)},
                                {"second", decomp_json(an.second)}};
                }
                throw ScalarKindMismatch("eigen needs a rational or gf bimatrix");
            };
        });
    }
    {
        auto* sub = bimatrix->add_subcommand("diag", "bidiagonalization");
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const RationalField f;
                const auto a =
                    want_rational(io::parse_bimatrix_doc(io::load_json_file(bm_a)), "diag");
                auto bd = bidiagonalize(f, a);
                return json{{"p", rational_bimatrix_json(bd.p)},
                            {"d", rational_bimatrix_json(bd.d)}};
            };
        });
    }
    static bool jordan_super = false;
    {
        auto* sub = bimatrix->add_subcommand("jordan", "jordan biform");
        sub->add_option("a", bm_a, "bimatrix file")->required();
        sub->add_flag("--super-diagonal", jordan_super, "place the 1s above the diagonal");
        sub->callback([&] {
            task = [&]() -> json {
                const auto a =
                    want_rational(io::parse_bimatrix_doc(io::load_json_file(bm_a)), "jordan");
                auto jb = jordan_biform(a, jordan_super);
                auto blocks_json = [](const std::vector<JordanBlock>& blocks) {
                    json arr = json::array();
                    for (const auto& b : blocks)
                        arr.push_back(json::array({b.eigenvalue.to_string(), b.size}));
                    return arr;
                };
                return json{{"form", rational_bimatrix_json(jb.form)},
                            {"blocks", json::array({blocks_json(jb.blocks_first),
                                                    blocks_json(jb.blocks_second)})}};
            };
        });
    }

    // ---- bispace ----
    auto* bispace = app.add_subcommand("bispace", "inner biproduct spaces");
    static std::string bs_file;
    {
        auto* sub = bispace->add_subcommand("gram-schmidt", "biorthogonalize a bivector list");
        sub->add_option("file", bs_file, "input document")->required();
        static bool rescale = false;
        sub->add_flag("--primitive", rescale, "rescale output to primitive integer vectors");
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(bs_file);
                const auto ip = parse_ip_pair(doc.at("ip"));
                std::vector<Bivector<Rational>> vs;
                for (const auto& v : doc.at("vectors")) vs.push_back(parse_rational_bivector(v));
                auto gs = gram_schmidt_biorthogonalize(ip, vs);
                if (rescale) gs = primitive_rescale_set(gs);
                json arr = json::array();
                for (const auto& v : gs) arr.push_back(bivector_json(v));
                return json{{"vectors", arr}};
            };
        });
    }
    {
        auto* sub = bispace->add_subcommand("project", "best biapproximation onto a basis");
        sub->add_option("file", bs_file, "input document")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(bs_file);
                const auto ip = parse_ip_pair(doc.at("ip"));
                std::vector<Bivector<Rational>> w;
                for (const auto& v : doc.at("basis")) w.push_back(parse_rational_bivector(v));
                const auto beta = parse_rational_bivector(doc.at("beta"));
                auto alpha = best_biapproximation(ip, w, beta);
                // report the residual orthogonality that defines the projection
                Bivector<Rational> resid{vec_sub(RationalField{}, beta.first, alpha.first),
                                         vec_sub(RationalField{}, beta.second, alpha.second)};
                bool ortho = true;
                for (const auto& wk : w)
                    if (is_biorthogonal(ip, resid, wk) != Orthogonality::Biorthogonal)
                        ortho = false;
                return json{{"projection", bivector_json(alpha)},
                            {"residual_biorthogonal", ortho}};
            };
        });
    }
    {
        auto* sub = bispace->add_subcommand("complement", "biorthogonal bicomplement basis");
        sub->add_option("file", bs_file, "input document")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(bs_file);
                const auto ip = parse_ip_pair(doc.at("ip"));
                BivectorSetPair s;
                for (const auto& v : doc.at("first"))
                    s.first.push_back(io::parse_rational_vector(v));
                for (const auto& v : doc.at("second"))
                    s.second.push_back(io::parse_rational_vector(v));
                const Bidimension ambient{doc.at("ambient")[0].get<std::size_t>(),
                                          doc.at("ambient")[1].get<std::size_t>()};
                auto comp = biorthogonal_bicomplement(ip, s, ambient);
                json f1 = json::array(), f2 = json::array();
                for (const auto& v : comp.first) f1.push_back(io::rational_vector_to_json(v));
                for (const auto& v : comp.second) f2.push_back(io::rational_vector_to_json(v));
                return json{{"first", f1}, {"second", f2},
                            {"dimensions", json::array({comp.first.size(), comp.second.size()})}};
            };
        });
    }
    {
        auto* sub = bispace->add_subcommand("pseudo-ip", "pseudo inner biproduct over GF(p)");
        sub->add_option("file", bs_file, "input document")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(bs_file);
                PrimeField fp(doc.at("q").get<std::uint64_t>());
                const auto d1 = io::parse_ip_desc(doc.at("ip")[0].get<std::string>());
                const auto d2 = io::parse_ip_desc(doc.at("ip")[1].get<std::string>());
                const auto* g1 = std::get_if<GfWeightedDot>(&d1);
                const auto* g2 = std::get_if<GfWeightedDot>(&d2);
                if (!g1 || !g2) throw ParseError("pseudo-ip needs gfdot descriptors");
                auto parse_vec = [&](const json& arr) {
                    Vector<std::uint64_t> v;
                    for (const auto& e : arr) v.push_back(fp.from_int(e.get<long long>()));
                    return v;
                };
                const auto u1 = parse_vec(doc.at("u").at("first"));
                const auto u2 = parse_vec(doc.at("u").at("second"));
                const auto v1 = parse_vec(doc.at("v").at("first"));
                const auto v2 = parse_vec(doc.at("v").at("second"));
                return json{{"value", json::array({gf_ip_eval(fp, *g1, u1, v1),
                                                   gf_ip_eval(fp, *g2, u2, v2)})}};
            };
        });
    }

    // ---- bicode ----
    auto* bicode = app.add_subcommand("bicode", "linear bicodes over GF(q)");
    static std::string code_file, word_arg;
    {
        auto* sub = bicode->add_subcommand("build", "construct a bicode and report G, H");
        sub->add_option("code", code_file, "code file")->required();
        sub->callback([&] {
            task = [&]() -> json { return bicode_json(load_bicode(code_file)); };
        });
    }
    {
        auto* sub = bicode->add_subcommand("encode", "encode a message bipair");
        sub->add_option("code", code_file, "code file")->required();
        sub->add_option("message", word_arg, "message digits 'a1|a2'")->required();
        sub->callback([&] {
            task = [&]() -> json {
                auto c = load_bicode(code_file);
                const auto [m1, m2] = io::parse_biword(word_arg, c.field);
                auto x = encode(c, m1, m2);
                return json{{"codeword", io::biword_string(x.first, x.second)}};
            };
        });
    }
    {
        auto* sub = bicode->add_subcommand("syndrome", "bisyndrome of a received word");
        sub->add_option("code", code_file, "code file")->required();
        sub->add_option("word", word_arg, "received word 'y1|y2'")->required();
        sub->callback([&] {
            task = [&]() -> json {
                auto c = load_bicode(code_file);
                const auto [y1, y2] = io::parse_biword(word_arg, c.field);
                auto s = syndrome(c, {y1, y2});
                return json{{"syndrome", io::biword_string(s.first, s.second)},
                            {"is_bicodeword", s.is_bicodeword}};
            };
        });
    }
    {
        auto* sub = bicode->add_subcommand("enumerate", "list every bicodeword component");
        sub->add_option("code", code_file, "code file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                auto c = load_bicode(code_file);
                auto en = enumerate(c, enumeration_cap());
                json w1 = json::array(), w2 = json::array();
                for (const auto& w : en.first) w1.push_back(io::word_string(w));
                for (const auto& w : en.second) w2.push_back(io::word_string(w));
                return json{{"first", w1}, {"second", w2}};
            };
        });
    }
    {
        auto* sub = bicode->add_subcommand("dual", "dual bicode");
        sub->add_option("code", code_file, "code file")->required();
        sub->callback([&] {
            task = [&]() -> json { return bicode_json(dual_bicode(load_bicode(code_file))); };
        });
    }
    static bool decode_exhaustive = false;
    static std::string bases_file;
    {
        auto* sub = bicode->add_subcommand("decode", "pseudo best biapproximation decoding");
        sub->add_option("code", code_file, "code file")->required();
        sub->add_option("word", word_arg, "received word 'y1|y2'")->required();
        sub->add_flag("--exhaustive", decode_exhaustive,
                      "scan the whole policy and keep the closest codeword");
        sub->add_option("--bases", bases_file, "explicit bases document");
        sub->callback([&] {
            task = [&]() -> json {
                auto c = load_bicode(code_file);
                const auto [y1, y2] = io::parse_biword(word_arg, c.field);
                DecodePolicy policy;
                policy.exhaustive = decode_exhaustive;
                if (!bases_file.empty()) {
                    const json doc = io::load_json_file(bases_file);
                    auto parse_bases = [&](const json& arr) {
                        std::vector<std::vector<Word>> bases;
                        for (const auto& basis : arr) {
                            std::vector<Word> vs;
                            for (const auto& w : basis) {
                                Word word;
                                for (char ch : w.get<std::string>())
                                    word.push_back(static_cast<std::uint64_t>(ch - '0'));
                                vs.push_back(word);
                            }
                            bases.push_back(vs);
                        }
                        return bases;
                    };
                    if (doc.contains("first")) policy.first_bases = parse_bases(doc.at("first"));
                    if (doc.contains("second"))
                        policy.second_bases = parse_bases(doc.at("second"));
                }
                auto rep = pseudo_decode(c, {y1, y2}, policy);
                return decode_report_json(rep);
            };
        });
    }

    // ---- markov ----
    auto* markov = app.add_subcommand("markov", "markov bichains");
    static std::string model_file;
    static std::size_t iterate_n = 1;
    auto load_markov = [](const std::string& path) {
        const json doc = io::load_json_file(path);
        const auto bd = io::parse_bimatrix_doc(doc.at("P"));
        TransitionBimatrix t{want_rational(bd, "markov"), MarkovMode::Strict};
        if (doc.contains("mode") && doc.at("mode").get<std::string>() == "smarandache")
            t.mode = MarkovMode::Smarandache;
        StateBivector x{};
        if (doc.contains("x0"))
            x.x = {io::parse_rational_vector(doc.at("x0").at("first")),
                   io::parse_rational_vector(doc.at("x0").at("second"))};
        return std::make_pair(t, x);
    };
    {
        auto* sub = markov->add_subcommand("step", "one exact transition step");
        sub->add_option("model", model_file, "model file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                auto [t, x] = load_markov(model_file);
                auto next = markov_step(t, x);
                return json{{"state", bivector_json(next.x)}};
            };
        });
    }
    {
        auto* sub = markov->add_subcommand("iterate", "n exact transition steps");
        sub->add_option("model", model_file, "model file")->required();
        sub->add_option("-n,--steps", iterate_n, "step count")->required();
        sub->callback([&] {
            task = [&]() -> json {
                auto [t, x] = load_markov(model_file);
                json states = json::array();
                for (std::size_t i = 0; i < iterate_n; ++i) {
                    x = markov_step(t, x);
                    states.push_back(bivector_json(x.x));
                }
                return json{{"states", states}};
            };
        });
    }
    {
        auto* sub = markov->add_subcommand("steady", "stationary bivectors");
        sub->add_option("model", model_file, "model file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                auto [t, x] = load_markov(model_file);
                (void)x;
                auto st = stationary_bivector(t);
                auto side = [](const std::vector<Vector<Rational>>& vs,
                               const std::vector<bool>& flags) {
                    json arr = json::array();
                    for (std::size_t i = 0; i < vs.size(); ++i)
                        arr.push_back(json{{"vector", io::rational_vector_to_json(vs[i])},
                                           {"probability", static_cast<bool>(flags[i])}});
                    return arr;
                };
                return json{{"first", side(st.first, st.first_is_probability)},
                            {"second", side(st.second, st.second_is_probability)}};
            };
        });
    }

    // ---- leontief ----
    auto* leontief = app.add_subcommand("leontief", "input-output models");
    {
        auto* sub = leontief->add_subcommand("closed", "closed exchange model Ap = p");
        sub->add_option("model", model_file, "model file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(model_file);
                const auto a = io::json_to_rational_matrix(doc.at("A"));
                auto r = leontief_closed_solve(a);
                json basis = json::array();
                for (const auto& v : r.price_basis)
                    basis.push_back(io::rational_vector_to_json(v));
                json out{{"price_basis", basis}, {"unique_positive", r.unique_positive}};
                if (!r.warning.empty()) out["warning"] = r.warning;
                return out;
            };
        });
    }
    {
        auto* sub = leontief->add_subcommand("open", "open production model (I-C)x = d");
        sub->add_option("model", model_file, "model file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(model_file);
                const auto c = io::json_to_rational_matrix(doc.at("C"));
                const auto d = io::parse_rational_vector(doc.at("d"));
                auto r = leontief_open_solve(c, d);
                return json{{"production", io::rational_vector_to_json(r.production)},
                            {"productive", r.productive},
                            {"row_sums_lt_1", r.row_sums_lt_1},
                            {"col_sums_lt_1", r.col_sums_lt_1}};
            };
        });
    }
    {
        auto* sub = leontief->add_subcommand("classify",
                                             "neutrosophic two-period productivity classes");
        sub->add_option("model", model_file, "model file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const json doc = io::load_json_file(model_file);
                const auto c = want_neutro(io::parse_bimatrix_doc(doc.at("c")), "classify");
                auto r = neutro_leontief_classify(c.first, c.second);
                return json{{"first", productivity_name(r.first)},
                            {"second", productivity_name(r.second)},
                            {"label", r.label}};
            };
        });
    }

    // ---- neutro ----
    auto* neutro = app.add_subcommand("neutro", "neutrosophic matrix algebra");
    static std::string nm_a, nm_b;
    {
        auto* sub = neutro->add_subcommand("mul", "neutrosophic matrix product");
        sub->add_option("a", nm_a, "matrix file")->required();
        sub->add_option("b", nm_b, "matrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const auto a = io::json_to_neutro_matrix(io::load_json_file(nm_a));
                const auto b = io::json_to_neutro_matrix(io::load_json_file(nm_b));
                return io::matrix_to_json(neutro_matmul(a, b));
            };
        });
    }
    {
        auto* sub = neutro->add_subcommand("charpoly", "neutrosophic characteristic polynomial");
        sub->add_option("a", nm_a, "matrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const auto a = io::json_to_neutro_matrix(io::load_json_file(nm_a));
                return neutro_poly_json(neutro_char_poly(a));
            };
        });
    }
    {
        auto* sub = neutro->add_subcommand("eigen", "neutrosophic characteristic values");
        sub->add_option("a", nm_a, "matrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const auto a = io::json_to_neutro_matrix(io::load_json_file(nm_a));
                auto r = neutro_eigenvalues(a);
                json values = json::array();
                for (const auto& ev : r.values)
                    values.push_back(json{{"value", ev.value.to_string()},
                                          {"classical", ev.classical}});
                return json{{"status", r.values.empty() ? "no value in Q(I)" : "ok"},
                            {"values", values}};
            };
        });
    }

    // ---- fuzzy ----
    auto* fuzzy = app.add_subcommand("fuzzy", "fuzzy integral neutrosophic matrices");
    {
        auto* sub = fuzzy->add_subcommand("compose", "max-min composition");
        sub->add_option("p", nm_a, "matrix file")->required();
        sub->add_option("q", nm_b, "matrix file")->required();
        sub->callback([&] {
            task = [&]() -> json {
                const auto p = io::json_to_fuzzy_matrix(io::load_json_file(nm_a));
                const auto q = io::json_to_fuzzy_matrix(io::load_json_file(nm_b));
                return io::matrix_to_json(fuzzy_compose(p, q));
            };
        });
    }

    // ---- examples ----
    auto* examples = app.add_subcommand("examples", "replay the worked-example registry");
    static std::string example_id;
    static bool examples_all = false;
    {
        auto* sub = examples->add_subcommand("run", "run one example or --all");
        sub->add_option("id", example_id, "example id, e.g. 3.2.19");
        sub->add_flag("--all", examples_all, "run the whole registry");
        sub->callback([&] {
            if (!examples_all && example_id.empty())
                throw CLI::ValidationError("examples run", "needs an id or --all");
            direct_exit = run_examples(example_id, examples_all, output);
        });
    }

    for (auto* group : app.get_subcommands(nullptr)) group->require_subcommand(1);

    // let --format / -o appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
        node->fallthrough();
        for (auto* sub : node->get_subcommands(nullptr)) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    if (direct_exit >= 0) return direct_exit;

    if (!task) {
        std::cerr << "missing subcommand; see --help\n";
        return 2;
    }

    try {
        output.emit(task());
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
