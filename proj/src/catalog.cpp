#include "sdw/catalog.hpp"

#include <cmath>

#include "sdw/entropy.hpp"
#include "sdw/goe.hpp"
#include "sdw/homoclinic.hpp"

namespace sdw {

namespace {

LabeledGraph even_shift_graph() {
    // runs of 1s between 0s have even length
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = 2;
    g.edges = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}};
    return g;
}

LabeledGraph at_most_one_one_graph() {
    // at most one cell holds a 1
    LabeledGraph g;
    g.alphabet = Alphabet::binary();
    g.vertex_count = 2;
    g.edges = {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}};
    return g;
}

SftSpec golden_mean_spec() {
    Alphabet b = Alphabet::binary();
    return sft_from_forbidden(1, b, {Pattern::word({1, 1})});
}

SftSpec zeros_spec() {
    Alphabet b = Alphabet::binary();
    return sft_from_forbidden(1, b, {Pattern::word({1})});
}

SftSpec aa_ab_spec() {
    Alphabet ab({"a", "b"});
    return sft_from_forbidden(1, ab, {Pattern::word({0, 0}), Pattern::word({0, 1})});
}

SftSpec constant3_spec() {
    Alphabet a3({"0", "1", "2"});
    std::vector<Pattern> forbidden;
    for (Symbol x = 0; x < 3; ++x)
        for (Symbol y = 0; y < 3; ++y)
            if (x != y) forbidden.push_back(Pattern::word({x, y}));
    return sft_from_forbidden(1, a3, forbidden);
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"full-binary", "system", "full shift on two symbols, d=1"},
        {"full-ternary", "system", "full shift on three symbols, d=1"},
        {"full-binary-2d", "system", "full shift on two symbols, d=2"},
        {"golden-mean", "system", "SFT forbidding the word 11"},
        {"even", "system", "sofic shift: runs of 1s between 0s have even length"},
        {"at-most-one-one", "system", "sofic shift: at most one cell holds a 1"},
        {"ledrappier", "system", "d=2 GF(2) triangle-relation system"},
        {"constant-3", "system", "three constant configurations"},
        {"aa-ab-sft", "system", "SFT over {a,b} forbidding aa and ab"},
        {"zeros", "system", "single configuration, all zeros"},
        {"identity:<system>", "code", "identity endomorphism"},
        {"eca:<0-255>", "code", "elementary rule on the binary full shift"},
        {"xor-full", "code", "x(0) xor x(1) on the binary full shift"},
        {"majority3-full", "code", "majority of three on the binary full shift"},
        {"golden-even", "code", "x(0) xor x(1): golden mean onto the even shift"},
        {"shift-golden", "code", "left shift on the golden mean"},
        {"constant0-full", "code", "constant-zero map on the binary full shift"},
        {"triangle-xor-full2d", "code", "x(0,0)^x(1,0)^x(0,1) on the d=2 full shift"},
    };
}

SubshiftHandle catalog_system(const std::string& id) {
    if (id == "full-binary") return SubshiftHandle::full(Alphabet::binary(), 1, id);
    if (id == "full-ternary")
        return SubshiftHandle::full(Alphabet({"0", "1", "2"}), 1, id);
    if (id == "full-binary-2d") return SubshiftHandle::full(Alphabet::binary(), 2, id);
    if (id == "golden-mean") return SubshiftHandle::from_sft(golden_mean_spec(), id);
    if (id == "even") return SubshiftHandle::from_sofic(even_shift_graph(), id);
    if (id == "at-most-one-one")
        return SubshiftHandle::from_sofic(at_most_one_one_graph(), id);
    if (id == "ledrappier") return SubshiftHandle::ledrappier();
    if (id == "constant-3") return SubshiftHandle::from_sft(constant3_spec(), id);
    if (id == "aa-ab-sft") return SubshiftHandle::from_sft(aa_ab_spec(), id);
    if (id == "zeros") return SubshiftHandle::from_sft(zeros_spec(), id);
    throw std::invalid_argument("unknown system id: " + id);
}

LocalRule catalog_rule(const std::string& spec, const Alphabet& source, int dimension) {
    if (spec == "identity") return LocalRule::identity(source, dimension);
    if (spec.rfind("eca:", 0) == 0) return LocalRule::eca(std::stoi(spec.substr(4)));
    if (spec == "xor") return LocalRule::xor_pair();
    if (spec == "majority3") return LocalRule::majority3();
    if (spec == "shift") return LocalRule::shift_left();
    if (spec == "triangle-xor") return LocalRule::triangle_xor_2d();
    if (spec.rfind("constant:", 0) == 0)
        return LocalRule::constant(source, dimension, source.index_of(spec.substr(9)));
    throw std::invalid_argument("unknown rule spec: " + spec);
}

BlockCode catalog_code(const std::string& id) {
    if (id.rfind("identity:", 0) == 0) {
        SubshiftHandle s = catalog_system(id.substr(9));
        return make_block_code(LocalRule::identity(s.alphabet(), s.dimension()), s, s,
                               id, false);
    }
    if (id.rfind("eca:", 0) == 0) {
        SubshiftHandle full = catalog_system("full-binary");
        return make_block_code(LocalRule::eca(std::stoi(id.substr(4))), full, full, id,
                               false);
    }
    if (id == "xor-full") {
        SubshiftHandle full = catalog_system("full-binary");
        return make_block_code(LocalRule::xor_pair(), full, full, id);
    }
    if (id == "majority3-full") {
        SubshiftHandle full = catalog_system("full-binary");
        return make_block_code(LocalRule::majority3(), full, full, id);
    }
    if (id == "golden-even") {
        return make_block_code(LocalRule::xor_pair(), catalog_system("golden-mean"),
                               catalog_system("even"), id);
    }
    if (id == "shift-golden") {
        SubshiftHandle g = catalog_system("golden-mean");
        return make_block_code(LocalRule::shift_left(), g, g, id);
    }
    if (id == "constant0-full") {
        SubshiftHandle full = catalog_system("full-binary");
        return make_block_code(LocalRule::constant(full.alphabet(), 1, 0), full, full,
                               id);
    }
    if (id == "triangle-xor-full2d") {
        SubshiftHandle full = catalog_system("full-binary-2d");
        return make_block_code(LocalRule::triangle_xor_2d(), full, full, id);
    }
    throw std::invalid_argument("unknown code id: " + id);
}

std::vector<std::string> catalog_verify() {
    std::vector<std::string> lines;
    auto check = [&](bool ok, const std::string& what) {
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) throw std::runtime_error("catalog verify failed: " + what);
    };

    // language sizes against closed forms (fib[i] = F_{i+1}; count = F_{n+2})
    auto golden = catalog_system("golden-mean");
    std::uint64_t fib[20] = {1, 1};
    for (int i = 2; i < 20; ++i) fib[i] = fib[i - 1] + fib[i - 2];
    for (int n = 1; n <= 8; ++n)
        check(pattern_count(golden, Shape::interval(0, n - 1), CountMode::Global1d) ==
                  BigUint(fib[n + 1]),
              "golden-mean word counts follow the Fibonacci recurrence");

    auto even = catalog_system("even");
    check(globally_admissible_1d(even, 2).size() == 4, "even shift has all 4 two-words");
    FactorDfa even_dfa = determinize(presentation_1d(even));
    check(!accepts(even_dfa, {0, 1, 0}), "even shift rejects 010");
    check(accepts(even_dfa, {0, 1, 1, 0}), "even shift accepts 0110");

    auto amoo = catalog_system("at-most-one-one");
    for (int n = 1; n <= 6; ++n)
        check(pattern_count(amoo, Shape::interval(0, n - 1), CountMode::Global1d) ==
                  BigUint(static_cast<std::uint64_t>(n) + 1),
              "at-most-one-one counts n+1 words of length n");

    auto led = catalog_system("ledrappier");
    for (int n = 1; n <= 4; ++n)
        check(pattern_count(led, Shape::box({0, 0}, {n - 1, n - 1}), CountMode::Local) ==
                  BigUint::pow(2, static_cast<std::size_t>(2 * n - 1)),
              "ledrappier local counts are 2^(2n-1)");
    check(ledrappier_finite_support_kernel(4) == 0,
          "ledrappier finite-support kernel is trivial");

    auto zeros = catalog_system("zeros");
    check(pattern_count(zeros, Shape::interval(0, 5), CountMode::Global1d) == BigUint(1),
          "zeros has a single configuration");

    auto c3 = catalog_system("constant-3");
    check(pattern_count(c3, Shape::interval(0, 3), CountMode::Global1d) == BigUint(3),
          "constant-3 has three configurations");

    auto aab = catalog_system("aa-ab-sft");
    check(globally_admissible_1d(aab, 1).size() == 1, "aa-ab SFT trims to the b loop");

    // spectral anchors
    double phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    check(std::abs(*entropy_exact_1d(golden) - phi) < 1e-9,
          "golden-mean exact entropy is ln((1+sqrt 5)/2)");
    check(std::abs(*entropy_exact_1d(catalog_system("full-binary")) - std::log(2.0)) <
              1e-12,
          "full-binary exact entropy is ln 2");
    check(std::abs(*entropy_exact_1d(aab)) < 1e-12, "aa-ab SFT has zero entropy");
    check(std::abs(*entropy_exact_1d(even) - phi) < 1e-9,
          "even shift exact entropy equals the golden mean's");

    // codes stay inside their targets and decide as expected
    auto ge = catalog_code("golden-even");
    check(is_surjective_1d(ge).surjective, "golden-even code is onto the even shift");
    check(is_preinjective_1d(ge).preinjective, "golden-even code is pre-injective");
    auto ident = catalog_code("identity:full-binary");
    check(decide_code(ident).consistency == "GOE-OK", "identity decides GOE-OK");
    return lines;
}

}  // namespace sdw
