// Acceptance suite: one criterion per section, one PASS/FAIL line each, exit
// code = number of failed criteria. Everything asserts exact values; the only
// tolerances are the stated wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bialg/bicode.hpp"
#include "bialg/bimatrix.hpp"
#include "bialg/bispace.hpp"
#include "bialg/eigen.hpp"
#include "bialg/models.hpp"
#include "bialg/neutro_matrix.hpp"

using namespace bialg;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
    int failures = 0;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

int g_failed_criteria = 0;

void criterion(int number, const std::string& label, const std::function<void(Checker&)>& body) {
    Checker c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    if (c.failures == 0) {
        std::printf("[PASS] criterion %d: %s\n", number, label.c_str());
    } else {
        ++g_failed_criteria;
        std::printf("[FAIL] criterion %d: %s -- %s\n", number, label.c_str(),
                    c.first_failure.c_str());
    }
    std::fflush(stdout);
}

const RationalField FQ;

Matrix<Rational> rat(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix<Rational> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

Vector<Rational> rv(std::initializer_list<long> xs) {
    Vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Polynomial<Rational> qpoly(std::initializer_list<long> lo_to_hi) {
    std::vector<Rational> c;
    for (long v : lo_to_hi) c.emplace_back(v);
    return poly_from(FQ, c);
}

Matrix<std::uint64_t> bits(std::initializer_list<const char*> rows) {
    Matrix<std::uint64_t> m(rows.size(), std::string(*rows.begin()).size());
    std::size_t i = 0;
    for (const char* r : rows) {
        std::string s(r);
        for (std::size_t j = 0; j < s.size(); ++j)
            m(i, j) = static_cast<std::uint64_t>(s[j] - '0');
        ++i;
    }
    return m;
}

Word word(const std::string& s) {
    Word w;
    for (char ch : s) w.push_back(static_cast<std::uint64_t>(ch - '0'));
    return w;
}

std::set<std::string> word_set(const std::vector<Word>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) {
        std::string s;
        for (auto d : w) s += static_cast<char>('0' + d);
        out.insert(s);
    }
    return out;
}

// random invertible integer matrix (product of unit shears), exact inverse
Matrix<Rational> random_unimodular(std::mt19937_64& rng, std::size_t n) {
    auto u = mat_identity(FQ, n);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int k = 0; k < 6; ++k) {
        const std::size_t i = rng() % n;
        std::size_t j = rng() % n;
        if (i == j) j = (j + 1) % n;
        const Rational c(coef(rng));
        for (std::size_t col = 0; col < n; ++col) u(i, col) += c * u(j, col);
    }
    return u;
}

}  // namespace

int main() {
    // 1. Gram-Schmidt golden, exact, under a millisecond
    criterion(1, "gram-schmidt biorthogonalization golden, exact, < 1 ms", [](Checker& c) {
        const InnerBiproduct ip{StandardDot{}, PolyL2{Rational(0), Rational(1)}};
        const std::vector<Bivector<Rational>> input{
            {rv({3, 0, 4}), rv({1, 0, 0})},
            {rv({-1, 0, 7}), rv({0, 1, 0})},
            {rv({2, 9, 11}), rv({0, 0, 1})},
        };
        gram_schmidt_biorthogonalize(ip, input);  // warm-up
        const auto start = Clock::now();
        const auto out = gram_schmidt_biorthogonalize(ip, input);
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
        c.require(out.size() == 3, "output size");
        c.require(vec_eq(FQ, out[0].first, rv({3, 0, 4})) &&
                      vec_eq(FQ, out[0].second, rv({1, 0, 0})),
                  "alpha1 = (3,0,4) u 1");
        c.require(vec_eq(FQ, out[1].first, rv({-4, 0, 3})) &&
                      vec_eq(FQ, out[1].second,
                             Vector<Rational>{Rational(-1, 2), Rational(1), Rational(0)}),
                  "alpha2 = (-4,0,3) u (x - 1/2)");
        c.require(vec_eq(FQ, out[2].first, rv({0, 9, 0})) &&
                      vec_eq(FQ, out[2].second,
                             Vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}),
                  "alpha3 = (0,9,0) u (x^2 - x + 1/6)");
        c.require(elapsed.count() < 1000,
                  "runtime " + std::to_string(elapsed.count()) + "us >= 1ms");
    });

    // 2. characteristic bipolynomials and the three classifications
    criterion(2, "characteristic bipolynomial goldens and bivalue classifications",
              [](Checker& c) {
        const Bimatrix<Rational> a12{rat({{0, 1, 0}, {2, -2, 2}, {2, -3, 2}}),
                                     rat({{3, 1, -1}, {2, 2, -1}, {2, 2, 0}})};
        auto cp12 = char_bipolynomial(FQ, a12);
        c.require(poly_eq(FQ, cp12.first, qpoly({0, 0, 0, 1})), "3.2.12 first = x^3");
        c.require(poly_eq(FQ, cp12.second, qpoly({-4, 8, -5, 1})),
                  "3.2.12 second = x^3-5x^2+8x-4");
        auto an12 = eigen_bivalues(FQ, a12);
        c.require(an12.flag == EigenFlag::Full, "3.2.12 full bivalues");
        c.require(an12.first.spaces.size() == 1 && an12.first.spaces[0].value == Rational(0) &&
                      an12.first.spaces[0].multiplicity == 3,
                  "3.2.12 first bivalues (0,0,0)");
        c.require(an12.second.spaces.size() == 2 &&
                      an12.second.spaces[0].value == Rational(1) &&
                      an12.second.spaces[0].multiplicity == 1 &&
                      an12.second.spaces[1].value == Rational(2) &&
                      an12.second.spaces[1].multiplicity == 2,
                  "3.2.12 second bivalues (1,2,2)");

        const Bimatrix<Rational> a13{rat({{0, -1}, {1, 0}}), rat({{1, -1}, {2, 2}})};
        auto cp13 = char_bipolynomial(FQ, a13);
        c.require(poly_eq(FQ, cp13.first, qpoly({1, 0, 1})), "3.2.13 first = x^2+1");
        c.require(poly_eq(FQ, cp13.second, qpoly({4, -3, 1})), "3.2.13 second = x^2-3x+4");
        c.require(eigen_bivalues(FQ, a13).flag == EigenFlag::None,
                  "3.2.13 no characteristic bivalues");

        const Bimatrix<Rational> a14{rat({{0, -1}, {1, 0}}),
                                     rat({{3, 1, -1}, {2, 2, -1}, {2, 2, 0}})};
        auto an14 = eigen_bivalues(FQ, a14);
        c.require(an14.flag == EigenFlag::Semi, "3.2.14 semi characteristic bivalues");
        c.require(an14.second.spaces.size() == 2 && an14.second.spaces[1].multiplicity == 2,
                  "3.2.14 second bivalues (1,2,2)");

        const Bimatrix<Rational> a15{rat({{5, -6, -6}, {-1, 4, 2}, {3, -6, -4}}),
                                     rat({{-1, 0, 0}, {2, 1, 0}, {0, 1, 4}})};
        auto cp15 = char_bipolynomial(FQ, a15);
        c.require(poly_eq(FQ, cp15.first, qpoly({-4, 8, -5, 1})),
                  "3.2.15 first = (x-2)^2(x-1)");
        c.require(poly_eq(FQ, cp15.second, qpoly({4, -1, -4, 1})),
                  "3.2.15 second = (x+1)(x-1)(x-4)");
    });

    // 3. bidiagonalization golden with the exact similarity relation
    criterion(3, "bidiagonalization golden D = diag(1,2,2) u diag(-1,1,4), AP = PD",
              [](Checker& c) {
        const Bimatrix<Rational> a{rat({{5, -6, -6}, {-1, 4, 2}, {3, -6, -4}}),
                                   rat({{-1, 0, 0}, {2, 1, 0}, {0, 1, 4}})};
        auto bd = bidiagonalize(FQ, a);
        c.require(mat_eq(FQ, bd.d.first, rat({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}})),
                  "D1 = diag(1,2,2)");
        c.require(mat_eq(FQ, bd.d.second, rat({{-1, 0, 0}, {0, 1, 0}, {0, 0, 4}})),
                  "D2 = diag(-1,1,4)");
        c.require(mat_eq(FQ, mat_mul(FQ, a.first, bd.p.first),
                         mat_mul(FQ, bd.p.first, bd.d.first)),
                  "A1 P1 = P1 D1");
        c.require(mat_eq(FQ, mat_mul(FQ, a.second, bd.p.second),
                         mat_mul(FQ, bd.p.second, bd.d.second)),
                  "A2 P2 = P2 D2");
        c.require(!det_bareiss(FQ, bd.p.first).is_zero() &&
                      !det_bareiss(FQ, bd.p.second).is_zero(),
                  "P invertible");
    });

    // 4. jordan goldens and the minimal-bipolynomial erratum detection
    criterion(4, "jordan biform goldens and minimal bipolynomial correction", [](Checker& c) {
        const Matrix<Rational> j1 = rat({{2, 0, 0}, {1, 2, 0}, {0, 0, -1}});
        const Matrix<Rational> j2 =
            rat({{2, 0, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 2}});
        auto jb = jordan_biform(Bimatrix<Rational>{j1, j2});
        c.require(mat_eq(FQ, jb.form.first, j1) && mat_eq(FQ, jb.form.second, j2),
                  "3.6.1 is a fixed point");

        auto put_block = [](Matrix<Rational>& m, std::size_t pos, long lambda,
                            std::size_t size) {
            for (std::size_t i = 0; i < size; ++i) {
                m(pos + i, pos + i) = Rational(lambda);
                if (i > 0) m(pos + i, pos + i - 1) = Rational(1);
            }
        };
        Matrix<Rational> a8(8, 8, Rational(0)), a6(6, 6, Rational(0));
        put_block(a8, 0, 3, 3);
        put_block(a8, 3, 2, 2);
        put_block(a8, 5, -1, 3);
        put_block(a6, 0, 4, 4);
        put_block(a6, 4, 3, 2);
        auto big = jordan_biform(Bimatrix<Rational>{a8, a6});
        const std::vector<std::pair<long, std::size_t>> want1{{3, 3}, {2, 2}, {-1, 3}};
        const std::vector<std::pair<long, std::size_t>> want2{{4, 4}, {3, 2}};
        bool blocks_ok = big.blocks_first.size() == want1.size() &&
                         big.blocks_second.size() == want2.size();
        for (std::size_t i = 0; blocks_ok && i < want1.size(); ++i)
            blocks_ok = big.blocks_first[i].eigenvalue == Rational(want1[i].first) &&
                        big.blocks_first[i].size == want1[i].second;
        for (std::size_t i = 0; blocks_ok && i < want2.size(); ++i)
            blocks_ok = big.blocks_second[i].eigenvalue == Rational(want2[i].first) &&
                        big.blocks_second[i].size == want2[i].second;
        c.require(blocks_ok, "3.6.3 block report J(3)3,J(2)2,J(-1)3 u J(4)4,J(3)2");

        auto mp = minimal_bipolynomial(FQ, Bimatrix<Rational>{j1, j2});
        c.require(poly_eq(FQ, mp.first, qpoly({4, 0, -3, 1})),
                  "computed first minimal polynomial = (x-2)^2(x+1)");
        c.require(poly_eq(FQ, mp.second, qpoly({4, -4, 1})),
                  "second minimal polynomial = (x-2)^2");
        // the degree-2 candidate printed elsewhere does not annihilate A1
        c.require(!mat_is_zero(FQ, poly_eval_matrix(FQ, qpoly({-2, -1, 1}), j1)),
                  "(x-2)(x+1) fails to annihilate the first component");
    });

    // 5. bicode goldens
    criterion(5, "bicode goldens: parity enumeration, cyclic construction, G H^T = 0",
              [](Checker& c) {
        const Bimatrix<std::uint64_t> h372{
            bits({"011100", "101010", "110001"}),
            bits({"1110100", "0111010", "1101001"})};
        auto code = bicode_from_parity(h372, 2);
        auto en = enumerate(code);
        const std::set<std::string> want1{"000000", "011011", "110110", "001110",
                                          "100011", "111000", "010101", "101101"};
        const std::set<std::string> want2{
            "0000000", "1000101", "0100111", "0010110", "0001011", "1100010",
            "1010011", "1001110", "0110001", "0101100", "0011101", "1110100",
            "1101001", "1011000", "0111010", "1111111"};
        c.require(en.first.size() == 8 && word_set(en.first) == want1,
                  "2^3 codewords of the first component");
        c.require(en.second.size() == 16 && word_set(en.second) == want2,
                  "2^4 codewords of the second component");

        auto cyc = cyclic_bicode({Polynomial<std::uint64_t>({1, 0, 0, 1}),
                                  Polynomial<std::uint64_t>({1, 0, 1, 1})},
                                 {6, 7}, 2);
        c.require(cyc.k1() == 3 && cyc.k2() == 4, "cyclic dimensions k = n - deg g");
        c.require(cyc.check_poly.has_value() &&
                      poly_eq(cyc.field, cyc.check_poly->first,
                              Polynomial<std::uint64_t>({1, 0, 0, 1})) &&
                      poly_eq(cyc.field, cyc.check_poly->second,
                              Polynomial<std::uint64_t>({1, 0, 1, 1, 1})),
                  "check bipolynomial (x^3+1) u (x^4+x^3+x^2+1)");
        auto cen = enumerate(cyc);
        c.require(word_set(cen.second) == want2, "cyclic second component word set");
        c.require(word_set(cen.first).size() == 8, "cyclic first component size");

        // G H^T = 0 on every constructed code (construction asserts it; verify anyway)
        for (const auto* bc : {&code, &cyc}) {
            auto z1 = mat_mul(bc->field, bc->generator.first, bc->parity.first.transpose());
            auto z2 = mat_mul(bc->field, bc->generator.second, bc->parity.second.transpose());
            c.require(mat_is_zero(bc->field, z1) && mat_is_zero(bc->field, z2), "G H^T = 0");
        }
    });

    // 6. decoder golden
    criterion(6, "pseudo decode golden (100011) u (10010110), syndrome 0, distance (3,4)",
              [](Checker& c) {
        const Bimatrix<std::uint64_t> h{
            bits({"011100", "101010", "110001"}),
            bits({"11011000", "00110100", "10100010", "11110001"})};
        auto code = bicode_from_parity(h, 2);
        Biword beta{word("111111"), word("11111111")};
        c.require(!syndrome(code, beta).is_bicodeword, "received word is not a bicodeword");
        DecodePolicy policy;
        policy.first_bases = {{word("001110"), word("111000"), word("010101")}};
        policy.second_bases = {
            {word("01001001"), word("11000010"), word("11100101"), word("11111000")}};
        auto rep = pseudo_decode(code, beta, policy);
        c.require(rep.first.result == word("100011"), "first component decodes to 100011");
        c.require(rep.second.result == word("10010110"), "second component decodes to 10010110");
        c.require(syndrome(code, {rep.first.result, rep.second.result}).is_bicodeword,
                  "decoded word has zero syndrome");
        c.require(rep.distance.first == 3 && rep.distance.second == 4,
                  "hamming bidistance (3,4)");
    });

    // 7. pseudo inner biproduct golden
    criterion(7, "pseudo inner biproduct golden over Z11: <a,a> = (0,0) with a != 0",
              [](Checker& c) {
        PrimeField f11(11);
        const Vector<std::uint64_t> a1{2, 3};
        const Vector<std::uint64_t> a2{2, 2, 3, 4};
        c.require(gf_ip_eval(f11, GfWeightedDot{{2, 4}}, a1, a1) == 0, "first component 0");
        c.require(gf_ip_eval(f11, GfWeightedDot{}, a2, a2) == 0, "second component 0");
        c.require(!vec_is_zero(f11, a1) && !vec_is_zero(f11, a2), "alpha nonzero");
    });

    // 8. neutrosophic goldens
    criterion(8, "neutrosophic goldens: char poly, eigen classifications, fuzzy composition",
              [](Checker& c) {
        auto nn = [](long a, long b) { return Neutro{Rational(a), Rational(b)}; };
        NeutroMatrix a27(3, 3);
        a27(0, 0) = nn(3, 0); a27(0, 1) = nn(0, 1); a27(0, 2) = nn(-1, 0);
        a27(1, 0) = nn(2, 0); a27(1, 1) = nn(0, 2); a27(1, 2) = nn(-1, 0);
        a27(2, 0) = nn(2, 0); a27(2, 1) = nn(2, 0); a27(2, 2) = nn(0, 0);
        auto p27 = neutro_char_poly(a27);
        c.require(p27.c.size() == 4 && p27.c[3] == nn(-1, 0) && p27.c[2] == nn(3, 2) &&
                      p27.c[1] == nn(-4, -4) && p27.c[0] == nn(2, 2),
                  "char poly -x^3 + (3+2I)x^2 - (4I+4)x + (2I+2)");

        NeutroMatrix a28(2, 2);
        a28(0, 0) = nn(2, 0); a28(0, 1) = nn(0, 1);
        a28(1, 0) = nn(-2, 0); a28(1, 1) = nn(1, 0);
        auto r28 = neutro_eigenvalues(a28);
        c.require(r28.values.empty(), "no characteristic value in Q(I)");

        NeutroMatrix a29(2, 2);
        a29(0, 0) = nn(1, 2); a29(0, 1) = nn(0, 0);
        a29(1, 0) = nn(-1, 0); a29(1, 1) = nn(2, 0);
        auto r29 = neutro_eigenvalues(a29);
        std::set<std::string> classical;
        bool all_singular = true;
        for (const auto& ev : r29.values) {
            if (ev.classical) classical.insert(ev.value.to_string());
            auto shifted = a29;
            for (std::size_t i = 0; i < 2; ++i)
                shifted(i, i) = neutro_sub(shifted(i, i), ev.value);
            if (!neutro_det(shifted).is_zero()) all_singular = false;
        }
        c.require(classical == std::set<std::string>{"2", "1+2I"},
                  "classical subset {2, 2I+1}");
        c.require(all_singular, "every reported eigenvalue gives det(A - L I) = 0 + 0I");

        FuzzyMatrix p(3, 3), q(3, 1);
        auto fre = [](double v) {
            return Fuzzy::real(static_cast<std::int64_t>(v * Fuzzy::kScale + 0.5));
        };
        p(0, 0) = fre(0.3); p(0, 1) = Fuzzy::indeterminate(); p(0, 2) = fre(1.0);
        p(1, 0) = fre(0.0); p(1, 1) = fre(0.9); p(1, 2) = fre(0.2);
        p(2, 0) = fre(0.7); p(2, 1) = fre(0.0); p(2, 2) = fre(0.4);
        q(0, 0) = fre(0.1); q(1, 0) = Fuzzy::indeterminate(); q(2, 0) = fre(0.0);
        auto r = fuzzy_compose(p, q);
        c.require(r(0, 0) == Fuzzy::indeterminate() && r(1, 0) == Fuzzy::indeterminate() &&
                      r(2, 0) == fre(0.1),
                  "fuzzy composition (I, I, 0.1)");
    });

    // 9. property suites, >= 200 random cases each, exact, under 60 s total
    criterion(9, "property suites (>=200 cases each, exact, < 60 s)", [](Checker& c) {
        const auto start = Clock::now();
        std::mt19937_64 rng(20240811);
        std::uniform_int_distribution<long> small(-4, 4);
        auto rnd_mat = [&](std::size_t n) {
            Matrix<Rational> m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(small(rng));
            return m;
        };

        // componentwise independence of the bimatrix ops
        for (int t = 0; t < 200; ++t) {
            const std::size_t n1 = 1 + t % 3, n2 = 1 + (t + 1) % 4;
            Bimatrix<Rational> a{rnd_mat(n1), rnd_mat(n2)}, b{rnd_mat(n1), rnd_mat(n2)};
            c.require(mat_eq(FQ, bi_add(FQ, a, b).first, mat_add(FQ, a.first, b.first)) &&
                          mat_eq(FQ, bi_add(FQ, a, b).second, mat_add(FQ, a.second, b.second)),
                      "componentwise add");
            c.require(mat_eq(FQ, bi_mul(FQ, a, b).first, mat_mul(FQ, a.first, b.first)) &&
                          mat_eq(FQ, bi_mul(FQ, a, b).second, mat_mul(FQ, a.second, b.second)),
                      "componentwise mul");
            auto det = bi_determinant(FQ, a);
            c.require(det.first == det_bareiss(FQ, a.first) &&
                          det.second == det_bareiss(FQ, a.second),
                      "componentwise det");
            const Rational s(small(rng));
            auto sc = bi_scale(FQ, s, a);
            c.require(mat_eq(FQ, sc.first, mat_scale(FQ, s, a.first)) &&
                          mat_eq(FQ, sc.second, mat_scale(FQ, s, a.second)),
                      "componentwise scale");
            Bivector<Rational> v{Vector<Rational>(n1), Vector<Rational>(n2)};
            for (auto& e : v.first) e = Rational(small(rng));
            for (auto& e : v.second) e = Rational(small(rng));
            c.require(vec_eq(FQ, bi_apply(FQ, a, v).first, mat_apply(FQ, a.first, v.first)),
                      "componentwise apply");
        }

        // Cayley-Hamilton and minimal divides characteristic (Q and GF(p))
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + t % 5;
            auto m = rnd_mat(n);
            auto cp = charpoly_berkowitz(FQ, m);
            c.require(mat_is_zero(FQ, poly_eval_matrix(FQ, cp, m)), "cayley-hamilton");
            auto mp = minimal_polynomial(FQ, m);
            c.require(poly_divides(FQ, mp, cp), "minimal divides characteristic");
        }
        {
            PrimeField f13(13);
            std::uniform_int_distribution<long long> d13(0, 12);
            for (int t = 0; t < 200; ++t) {
                const std::size_t n = 1 + t % 4;
                Matrix<std::uint64_t> m(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) m(i, j) = f13.from_int(d13(rng));
                auto cp = charpoly_berkowitz(f13, m);
                c.require(mat_is_zero(f13, poly_eval_matrix(f13, cp, m)),
                          "cayley-hamilton over GF(13)");
            }
        }

        // eigen residuals on matrices with known rational spectrum
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 2 + t % 3;
            Matrix<Rational> tri(n, n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                tri(i, i) = Rational(small(rng));
                for (std::size_t j = 0; j < i; ++j) tri(i, j) = Rational(small(rng));
            }
            auto u = random_unimodular(rng, n);
            auto a = mat_mul(FQ, mat_mul(FQ, u, tri), *mat_inverse(FQ, u));
            auto dec = eigen_decompose(FQ, a);
            c.require(!dec.spaces.empty(), "spectrum found");
            for (const auto& sp : dec.spaces)
                for (const auto& v : sp.eigenvectors)
                    c.require(vec_eq(FQ, mat_apply(FQ, a, v), vec_scale(FQ, sp.value, v)),
                              "eigen residual zero");
        }

        // split isomorphism ring laws
        for (int t = 0; t < 200; ++t) {
            const Neutro x{Rational(small(rng), 1 + t % 3), Rational(small(rng))};
            const Neutro y{Rational(small(rng)), Rational(small(rng), 1 + t % 2)};
            auto [xu, xv] = neutro_split(x);
            auto [yu, yv] = neutro_split(y);
            auto [pu, pv] = neutro_split(neutro_mul(x, y));
            auto [su, sv] = neutro_split(neutro_add(x, y));
            c.require(pu == xu * yu && pv == xv * yv, "split multiplicative");
            c.require(su == xu + yu && sv == xv + yv, "split additive");
            c.require(neutro_unsplit(xu, xv) == x, "unsplit inverts split");
        }

        // Gram-Schmidt biorthogonality and prefix spans
        {
            const InnerBiproduct ip{StandardDot{}, PolyL2{Rational(0), Rational(1)}};
            int done = 0;
            while (done < 200) {
                std::vector<Bivector<Rational>> input;
                for (int k = 0; k < 3; ++k) {
                    Vector<Rational> a(3), b(3);
                    for (auto& e : a) e = Rational(small(rng));
                    for (auto& e : b) e = Rational(small(rng));
                    input.push_back({a, b});
                }
                std::vector<Bivector<Rational>> out;
                try {
                    out = gram_schmidt_biorthogonalize(ip, input);
                } catch (const LinearlyDependentInput&) {
                    continue;
                }
                ++done;
                for (std::size_t i = 0; i < out.size(); ++i)
                    for (std::size_t j = i + 1; j < out.size(); ++j)
                        c.require(is_biorthogonal(ip, out[i], out[j]) ==
                                      Orthogonality::Biorthogonal,
                                  "pairwise biorthogonal");
                for (std::size_t t2 = 1; t2 <= out.size(); ++t2) {
                    std::vector<Vector<Rational>> iv, ov;
                    for (std::size_t i = 0; i < t2; ++i) {
                        iv.push_back(input[i].first);
                        ov.push_back(out[i].first);
                    }
                    auto both = iv;
                    both.insert(both.end(), ov.begin(), ov.end());
                    c.require(mat_rank(FQ, Matrix<Rational>::from_rows(both)) ==
                                  mat_rank(FQ, Matrix<Rational>::from_rows(iv)),
                              "prefix span preserved");
                }
            }
        }

        // projection residual orthogonality and idempotence
        {
            const InnerBiproduct ip{StandardDot{}, PolyL2{Rational(0), Rational(1)}};
            const std::vector<Bivector<Rational>> w = gram_schmidt_biorthogonalize(
                ip, {{rv({3, 0, 4}), rv({1, 0, 0})},
                     {rv({-1, 0, 7}), rv({0, 1, 0})},
                     {rv({2, 9, 11}), rv({0, 0, 1})}});
            for (int t = 0; t < 200; ++t) {
                Bivector<Rational> beta{Vector<Rational>(3), Vector<Rational>(3)};
                for (auto& e : beta.first) e = Rational(small(rng));
                for (auto& e : beta.second) e = Rational(small(rng));
                auto alpha = best_biapproximation(ip, w, beta);
                Bivector<Rational> resid{vec_sub(FQ, beta.first, alpha.first),
                                         vec_sub(FQ, beta.second, alpha.second)};
                for (const auto& wk : w)
                    c.require(is_biorthogonal(ip, resid, wk) == Orthogonality::Biorthogonal,
                              "residual biorthogonal");
                auto again = best_biapproximation(ip, w, alpha);
                c.require(vec_eq(FQ, again.first, alpha.first) &&
                              vec_eq(FQ, again.second, alpha.second),
                          "projection idempotent");
            }
        }

        // enumerate = ker H = row space of G; dual-dual involution
        {
            PrimeField f2(2);
            int done = 0;
            while (done < 200) {
                const std::size_t n = 4 + static_cast<std::size_t>(rng() % 4);
                const std::size_t rows = 1 + static_cast<std::size_t>(rng() % 3);
                Matrix<std::uint64_t> h(rows, n);
                for (std::size_t i = 0; i < rows; ++i)
                    for (std::size_t j = 0; j < n; ++j) h(i, j) = rng() & 1;
                if (mat_rank(f2, h) != rows) continue;
                ++done;
                auto code = bicode_from_parity({h, h}, 2);
                auto en = enumerate(code);
                // kernel oracle by exhaustion
                std::set<std::string> kernel;
                for (std::uint64_t v = 0; v < (1ull << n); ++v) {
                    Word w(n);
                    for (std::size_t i = 0; i < n; ++i) w[i] = (v >> (n - 1 - i)) & 1;
                    if (vec_is_zero(f2, mat_apply(f2, h, w))) {
                        std::string s;
                        for (auto d : w) s += static_cast<char>('0' + d);
                        kernel.insert(s);
                    }
                }
                c.require(word_set(en.first) == kernel, "enumerate = ker H");
                c.require(en.first.size() == (1ull << code.k1()), "|C| = q^k");
                auto dd = dual_bicode(dual_bicode(code));
                c.require(word_set(enumerate(dd).first) == kernel, "dual-dual involution");
            }
        }

        // strict markov invariant preservation
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 2 + t % 5;
            Matrix<Rational> p(n, n);
            std::uniform_int_distribution<long> nn(0, 5);
            for (std::size_t j = 0; j < n; ++j) {
                long total = 0;
                std::vector<long> parts(n);
                for (auto& e : parts) {
                    e = nn(rng);
                    total += e;
                }
                if (total == 0) {
                    parts[j % n] = 1;
                    total = 1;
                }
                for (std::size_t i = 0; i < n; ++i) p(i, j) = Rational(parts[i], total);
            }
            Vector<Rational> x(n, Rational(0));
            x[t % n] = Rational(1);
            TransitionBimatrix tb{{p, p}, MarkovMode::Strict};
            auto next = markov_step(tb, {{x, x}});
            Rational sum(0);
            bool nonneg = true;
            for (const auto& e : next.x.first) {
                sum += e;
                nonneg = nonneg && e.sign() >= 0;
            }
            c.require(sum == Rational(1) && nonneg, "strict step preserves probability");
        }

        // leontief reconstruction (I - C) x = d
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 2 + t % 3;
            Matrix<Rational> cm(n, n);
            std::uniform_int_distribution<long> nn(0, 3);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) cm(i, j) = Rational(nn(rng), 10);
            Vector<Rational> d(n);
            for (auto& e : d) e = Rational(nn(rng));
            OpenLeontiefResult r;
            try {
                r = leontief_open_solve(cm, d);
            } catch (const SingularSystem&) {
                continue;
            }
            c.require(vec_eq(FQ, vec_sub(FQ, r.production, mat_apply(FQ, cm, r.production)), d),
                      "(I - C) x = d reconstructed");
            if (r.row_sums_lt_1) c.require(r.productive, "row-sum flag implies productive");
        }

        const auto elapsed =
            std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start);
        c.require(elapsed.count() < 60,
                  "property suites took " + std::to_string(elapsed.count()) + "s");
    });

    // 10. CLI registry determinism
    criterion(10, "examples run --all exits 0 and is byte-deterministic", [](Checker& c) {
#ifdef BIALG_CLI_PATH
        const std::string cli = BIALG_CLI_PATH;
        const std::string out1 = "acceptance_examples_run1.txt";
        const std::string out2 = "acceptance_examples_run2.txt";
        const int rc1 = std::system((cli + " examples run --all > " + out1 + " 2>&1").c_str());
        const int rc2 = std::system((cli + " examples run --all > " + out2 + " 2>&1").c_str());
        c.require(rc1 == 0, "first run exits 0");
        c.require(rc2 == 0, "second run exits 0");
        auto slurp = [](const std::string& path) {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        const std::string b1 = slurp(out1), b2 = slurp(out2);
        c.require(!b1.empty(), "output nonempty");
        c.require(b1 == b2, "outputs byte-identical");
        c.require(b1.find("MISMATCH") == std::string::npos, "no MISMATCH line");
        std::remove(out1.c_str());
        std::remove(out2.c_str());
#else
        c.require(false, "CLI path not configured");
#endif
    });

    if (g_failed_criteria == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", g_failed_criteria);
    }
    return g_failed_criteria;
}
