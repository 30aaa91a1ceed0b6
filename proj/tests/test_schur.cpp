#include "brute.hpp"

#include "monocirc/circuit_io.hpp"
#include "monocirc/eh_builders.hpp"
#include "monocirc/errors.hpp"
#include "monocirc/evaluate.hpp"
#include "monocirc/oracle.hpp"
#include "monocirc/sampling.hpp"
#include "monocirc/schur.hpp"

#include "doctest.h"
#include "json.hpp"

#include <random>

using namespace monocirc;

namespace {

Column col(std::initializer_list<unsigned> e) { return Column(std::vector<unsigned>(e)); }

std::vector<mpz_class> pt(std::initializer_list<long> xs) {
    std::vector<mpz_class> v;
    for (long x : xs) {
        v.emplace_back(x);
    }
    return v;
}

Monomial mono(std::initializer_list<unsigned> e) { return Monomial{std::vector<unsigned>(e)}; }

mpz_class pow_mpz(const mpz_class& x, unsigned e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

} // namespace

TEST_CASE("decompose splits the shape by column height") {
    const auto dec = decompose(Partition({6, 6, 4, 1, 1}));
    CHECK(dec.heights == std::vector<std::size_t>{5, 3, 2});
    CHECK(dec.widths == std::vector<unsigned>{0, 2, 1});
    CHECK(dec.pruned_conjugate == Partition({5, 3, 2}));
    CHECK(dec.pruned_shape == Partition({3, 3, 2, 1, 1}));
    CHECK(dec.s() == 3);

    const auto rr = decompose(Partition({4, 4}));
    CHECK(rr.heights == std::vector<std::size_t>{2});
    CHECK(rr.widths == std::vector<unsigned>{3});
    CHECK(rr.pruned_shape == Partition({1, 1}));

    const auto hook = decompose(Partition({3, 1}));
    CHECK(hook.heights == std::vector<std::size_t>{2, 1});
    CHECK(hook.widths == std::vector<unsigned>{0, 1});

    CHECK(decompose(Partition{}).s() == 0);
}

TEST_CASE("prunings") {
    CHECK(enumerate_prunings(decompose(Partition({5, 5})), 3).size() == 3);
    CHECK(enumerate_prunings(decompose(Partition({1})), 4).size() == 4);
    CHECK(enumerate_prunings(decompose(Partition{}), 2).size() == 1);
    CHECK_THROWS_AS(enumerate_prunings(decompose(Partition({1, 1, 1})), 2), ModelError);

    // Prunings are exactly the tableaux of the pruned shape.
    const auto dec = decompose(Partition({4, 2, 2, 1}));
    CHECK(enumerate_prunings(dec, 5).size() == enumerate_ssyt(dec.pruned_shape, 5).size());
}

TEST_CASE("pruning of a concrete tableau") {
    const Partition shape({6, 6, 4, 1, 1});
    const Tableau t{shape, {{1, 1, 2, 2, 2, 4}, {2, 2, 3, 3, 3, 5}, {4, 5, 6, 6}, {5}, {6}}};
    REQUIRE(t.is_semistandard(6));
    const auto p = pruning_of(t, decompose(shape));
    REQUIRE(p.columns.size() == 3);
    CHECK(p.columns[0] == col({1, 2, 4, 5, 6}));
    CHECK(p.columns[1] == col({2, 3, 6}));
    CHECK(p.columns[2] == col({4, 5}));
    CHECK(p.lower_bounds[0] == col({1, 2, 3, 4, 5}));
    CHECK(p.lower_bounds[1] == col({1, 2, 4}));
    CHECK(p.lower_bounds[2] == col({2, 3}));
}

TEST_CASE("every tableau prunes to one of the enumerated prunings") {
    const Partition shape({3, 2, 2});
    const auto dec = decompose(shape);
    const auto all = enumerate_prunings(dec, 4);
    for (const auto& t : enumerate_ssyt(shape, 4)) {
        CHECK(std::find(all.begin(), all.end(), pruning_of(t, dec)) != all.end());
    }
}

TEST_CASE("s_(2,2)(x1,x2,x3)") {
    const auto sc = synthesize_schur(Partition({2, 2}), 3);
    CHECK(evaluate(sc.circuit, pt({1, 1, 1})) == 6);
    const PolynomialSemiring ring{3};
    const auto vars = ring.variables();
    const auto poly = evaluate<PolynomialSemiring>(sc.circuit, vars, ring);
    const Polynomial expected{
        {mono({2, 2, 0}), 1}, {mono({2, 0, 2}), 1}, {mono({0, 2, 2}), 1},
        {mono({2, 1, 1}), 1}, {mono({1, 2, 1}), 1}, {mono({1, 1, 2}), 1},
    };
    CHECK(poly == expected);
}

TEST_CASE("symbolic expansion matches Kostka numbers") {
    const PolynomialSemiring ring{3};
    const auto vars = ring.variables();
    for (const auto& shape : {Partition({2, 1}), Partition({3, 1, 1}), Partition({3, 3}), Partition({4, 2, 1})}) {
        const auto poly = evaluate<PolynomialSemiring>(synthesize_schur(shape, 3).circuit, vars, ring);
        const auto kostka = schur_poly_map(shape, 3);
        REQUIRE(poly.size() == kostka.size());
        for (const auto& [m, c] : kostka) {
            CHECK(poly.at(m) == c);
        }
    }
}

TEST_CASE("single row agrees with the h builder") {
    std::mt19937_64 rng(17);
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned n : {1u, 2u, 5u, 9u, 17u}) {
            const auto sc = synthesize_schur(Partition({n}), k);
            CircuitBuilder b(k);
            std::vector<GateId> vars;
            for (unsigned i = 0; i < k; ++i) {
                vars.push_back(b.input(i));
            }
            const auto h = b.finish(build_h_single(b, vars, n));
            for (int trial = 0; trial < 3; ++trial) {
                const auto p = random_point(rng, k, 1, 5);
                CHECK(evaluate(sc.circuit, p) == evaluate(h, p));
                CHECK(evaluate(sc.circuit, p) == h_eval(n, p));
            }
        }
    }
}

TEST_CASE("more rows than variables is a model error") {
    CircuitBuilder b(2);
    CHECK_THROWS_AS(build_schur(b, Partition({2, 2, 1}), 2), ModelError);
    CHECK_THROWS_AS(synthesize_schur(Partition({1, 1, 1}), 2), ModelError);
    CHECK_THROWS_AS(synthesize_schur(Partition({1}), 0), ModelError);
    CircuitBuilder wrong(3);
    CHECK_THROWS_AS(build_schur(wrong, Partition({1}), 2), StructuralError);
}

TEST_CASE("empty shape is the constant one") {
    const auto sc = synthesize_schur(Partition{}, 3);
    CHECK(sc.circuit.size() == 1);
    CHECK(evaluate(sc.circuit, pt({4, 5, 6})) == 1);
}

TEST_CASE("oracle equivalence, symmetry and homogeneity for |lambda| <= 6") {
    std::mt19937_64 rng(123);
    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& shape : partitions_of(n)) {
            for (unsigned k = static_cast<unsigned>(shape.length()); k <= 4; ++k) {
                CircuitBuilder b(k);
                const auto built = build_schur(b, shape, k);
                const auto raw = b.finish(built.output);
                const auto pruned = prune(raw);
                CHECK(validate(pruned).ok());
                for (int trial = 0; trial < 3; ++trial) {
                    auto p = random_point(rng, k, 1, 5);
                    const auto v = evaluate(pruned, p);
                    CHECK_MESSAGE(v == schur_eval(shape, p), shape.to_string() << " k=" << k);
                    CHECK(evaluate(raw, p) == v);

                    for (unsigned t : {2u, 3u}) {
                        std::vector<mpz_class> scaled;
                        for (const auto& x : p) {
                            scaled.push_back(x * t);
                        }
                        CHECK(evaluate(pruned, scaled) == pow_mpz(mpz_class(t), n) * v);
                    }

                    std::shuffle(p.begin(), p.end(), rng);
                    CHECK(evaluate(pruned, p) == v);
                }
            }
        }
    }
}

TEST_CASE("predicted bound terms") {
    CHECK(predict_bound(Partition({6, 6, 4, 1, 1}), 6).d == 9);
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(predict_bound(Partition({7}), k).d == k - 1);
    }
    const auto r = predict_bound(Partition({4, 2}), 3);
    CHECK(r.bound.two_pow_kl == doctest::Approx(64));
    CHECK(r.bound.k5 == doctest::Approx(243));
    CHECK(r.bound.log2_lambda1 == doctest::Approx(2));
    CHECK(r.arith == 0);
    CHECK_THROWS_AS(predict_bound(Partition({1, 1, 1}), 2), ModelError);
}

TEST_CASE("report JSON layout") {
    const auto sc = synthesize_schur(Partition({3, 1}), 3);
    const auto j = nlohmann::json::parse(report_json(sc.report));
    for (const char* key : {"shape", "k", "arith", "total", "d", "bound_factors", "per_stage"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["shape"] == nlohmann::json::array({3, 1}));
    CHECK(j["k"] == 3);
    CHECK(j["arith"].get<std::size_t>() == gate_count(sc.circuit).arith);
    CHECK(j["per_stage"]["prunings"].get<std::size_t>() == 8);
    CHECK(j["bound_factors"].contains("headline"));
}

TEST_CASE("two-row shapes in five variables use the P(2,5) shelling") {
    // With a_1 = [4;5] the inner interval is all of P(2,5), whose five chains
    // and descent sets give the five-term h expression for s_(m,m).
    const auto dec = decompose(Partition({3, 3}));
    const auto prunings = enumerate_prunings(dec, 5);
    const auto top = std::find_if(prunings.begin(), prunings.end(),
                                  [](const Pruning& p) { return p.columns[0] == col({4, 5}); });
    REQUIRE(top != prunings.end());
    const Interval iv(5, top->lower_bounds[0], top->columns[0]);
    const auto chains = enumerate_max_chains(iv);
    CHECK(chains.size() == 5);
    CHECK(chains == enumerate_max_chains(Interval::full(2, 5)));
}

TEST_CASE("log growth in the first row for (n,1), k=3") {
    std::size_t prev = synthesize_schur(Partition({32, 1}), 3).report.arith;
    for (unsigned t = 6; t <= 12; ++t) {
        const std::size_t cur = synthesize_schur(Partition({1u << t, 1}), 3).report.arith;
        CHECK(cur <= prev + 324);
        prev = cur;
    }
}
