#ifndef BIALG_IO_HPP
#define BIALG_IO_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "bialg/bimatrix.hpp"
#include "bialg/bispace.hpp"
#include "bialg/fuzzy.hpp"
#include "bialg/matrix.hpp"
#include "bialg/neutrosophic.hpp"
#include "bialg/prime_field.hpp"
#include "bialg/rational.hpp"

namespace bialg::io {

using nlohmann::json;

/*
 * Scalar kinds shared by every file format. A container document declares its
 * kind once ("rational", "gf:<p>", "neutrosophic", "fuzzy") and all entries
 * are literals of that kind:
 *   rational      "p/q" or "n"
 *   gf:<p>        "k"            (residue, reduced mod p)
 *   neutrosophic  "a+bI", "a", "bI", "I"
 *   fuzzy         "0.3", "I", "0.4I"    (exact decimals, <= 6 places)
 */
enum class ScalarKind { Rational, Gf, Neutrosophic, Fuzzy };

struct ScalarKindInfo {
    ScalarKind kind = ScalarKind::Rational;
    std::uint64_t p = 0;  // modulus when kind == Gf

    bool operator==(const ScalarKindInfo&) const = default;
};

ScalarKindInfo parse_scalar_kind(const std::string& s);
std::string scalar_kind_string(const ScalarKindInfo& k);

Rational parse_rational(const std::string& s);
std::uint64_t parse_gf(const std::string& s, const PrimeField& f);
Neutro parse_neutro(const std::string& s);
Fuzzy parse_fuzzy(const std::string& s);

std::string format_fuzzy(const Fuzzy& v);

// Typed containers the CLI dispatches over.
struct GfBimatrix {
    PrimeField field;
    Bimatrix<std::uint64_t> m;
};

using AnyBimatrix =
    std::variant<Bimatrix<Rational>, GfBimatrix, Bimatrix<Neutro>, Bimatrix<Fuzzy>>;

struct BimatrixDoc {
    ScalarKindInfo kind;
    AnyBimatrix value;
};

struct GfBivector {
    PrimeField field;
    Bivector<std::uint64_t> v;
};

using AnyBivector = std::variant<Bivector<Rational>, GfBivector, Bivector<Neutro>>;

struct BivectorDoc {
    ScalarKindInfo kind;
    AnyBivector value;
};

// JSON codecs. Writers emit the same schema the parsers accept, so every
// emitted document re-parses to an equal value.
json matrix_to_json(const Matrix<Rational>& m);
json matrix_to_json(const PrimeField& f, const Matrix<std::uint64_t>& m);
json matrix_to_json(const Matrix<Neutro>& m);
json matrix_to_json(const Matrix<Fuzzy>& m);

Matrix<Rational> json_to_rational_matrix(const json& j);
Matrix<std::uint64_t> json_to_gf_matrix(const json& j, const PrimeField& f);
Matrix<Neutro> json_to_neutro_matrix(const json& j);
Matrix<Fuzzy> json_to_fuzzy_matrix(const json& j);

BimatrixDoc parse_bimatrix_doc(const json& j);
json bimatrix_doc_to_json(const BimatrixDoc& d);

BivectorDoc parse_bivector_doc(const json& j);

std::vector<Rational> parse_rational_vector(const json& j);
json rational_vector_to_json(const std::vector<Rational>& v);

// Inner-product descriptor literals: "dot", "wdot:w1,w2,...", "l2:a,b",
// "gfdot:w1,w2,...".
InnerProductDesc parse_ip_desc(const std::string& s);
std::string ip_desc_string(const InnerProductDesc& d);

// Digit-string biwords, component separator '|': "111111|11111111".
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> parse_biword(
    const std::string& s, const PrimeField& f);
std::string word_string(const std::vector<std::uint64_t>& w);
std::string biword_string(const std::vector<std::uint64_t>& w1,
                          const std::vector<std::uint64_t>& w2);

// Reads a whole file; wraps JSON syntax errors into ParseError with position.
json load_json_file(const std::string& path);

}  // namespace bialg::io

#endif  // BIALG_IO_HPP
