#include <set>
#include <string>

#include "doctest.h"
#include "sdw/catalog.hpp"
#include "sdw/subshift.hpp"

using namespace sdw;

namespace {

std::string word_of(const Pattern& p, const Alphabet& a) {
    std::string s;
    for (Symbol v : p.values) s += a.token(v);
    return s;
}

std::set<std::string> words_of(const std::vector<Pattern>& pats, const Alphabet& a) {
    std::set<std::string> out;
    for (const auto& p : pats) out.insert(word_of(p, a));
    return out;
}

// oracle: binary words of length n with no "11" factor
std::set<std::string> no11_words(int n) {
    std::set<std::string> out;
    for (int m = 0; m < (1 << n); ++m) {
        std::string w;
        for (int i = n - 1; i >= 0; --i) w += (m >> i) & 1 ? '1' : '0';
        if (w.find("11") == std::string::npos) out.insert(w);
    }
    return out;
}

}  // namespace

TEST_CASE("pattern_glue") {
    Alphabet ab({"a", "b"});
    Pattern p0(Shape({Point{0}}), {0});
    Pattern p1(Shape({Point{1}}), {1});
    Pattern merged = pattern_glue(p0, p1);
    CHECK(merged.support == Shape::interval(0, 1));
    CHECK(merged.values == std::vector<Symbol>{0, 1});

    Pattern overlapping(Shape::interval(0, 1), {0, 1});
    CHECK(pattern_glue(p0, overlapping) == overlapping);

    Pattern conflict(Shape({Point{0}}), {1});
    CHECK_THROWS_WITH_AS(pattern_glue(p0, conflict),
                         doctest::Contains("conflict at {(0)}"),
                         std::invalid_argument);
}

TEST_CASE("golden mean local admissibility against brute force") {
    auto golden = catalog_system("golden-mean");
    auto pats = locally_admissible(golden, Shape::interval(0, 2));
    CHECK(words_of(pats, golden.alphabet()) == no11_words(3));
    CHECK(pats.size() == 5);

    // local enumeration is translation invariant
    CHECK(locally_admissible(golden, Shape::interval(-5, -3)).size() == 5);
}

TEST_CASE("full shift local admissibility") {
    auto full = catalog_system("full-binary");
    CHECK(locally_admissible(full, Shape::interval(0, 3)).size() == 16);
}

TEST_CASE("ledrappier local admissibility against GF(2) brute force") {
    auto led = catalog_system("ledrappier");
    Shape square = Shape::box({0, 0}, {1, 1});
    auto pats = locally_admissible(led, square);

    std::set<std::vector<Symbol>> oracle;
    for (int m = 0; m < 16; ++m) {
        // shape order of the 2x2 square: (0,0), (0,1), (1,0), (1,1)
        Symbol v00 = (m >> 3) & 1, v01 = (m >> 2) & 1, v10 = (m >> 1) & 1, v11 = m & 1;
        if ((v00 ^ v10 ^ v01) != 0) continue;  // one triangle inside
        oracle.insert({v00, v01, v10, v11});
    }
    CHECK(pats.size() == 8);
    CHECK(oracle.size() == 8);
    for (const auto& p : pats) CHECK(oracle.count(p.values) == 1);

    // counts also go through the GF(2) rank route
    for (int n = 1; n <= 4; ++n) {
        Shape sq = Shape::box({0, 0}, {n - 1, n - 1});
        BigUint fast = pattern_count(led, sq, CountMode::Local);
        CHECK(fast == BigUint::pow(2, static_cast<std::size_t>(2 * n - 1)));
        CHECK(fast == BigUint(locally_admissible(led, sq).size()));
    }
}

TEST_CASE("ledrappier counts against raw enumeration") {
    auto led = catalog_system("ledrappier");
    for (int n = 2; n <= 3; ++n) {
        Shape sq = Shape::box({0, 0}, {n - 1, n - 1});
        std::size_t count = 0;
        std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        for (std::size_t m = 0; m < (std::size_t(1) << cells); ++m) {
            auto bit = [&](int x, int y) {
                return (m >> (static_cast<std::size_t>(x) * n + y)) & 1;
            };
            bool ok = true;
            for (int x = 0; x + 1 < n && ok; ++x)
                for (int y = 0; y + 1 < n && ok; ++y)
                    if ((bit(x, y) ^ bit(x + 1, y) ^ bit(x, y + 1)) != 0) ok = false;
            if (ok) ++count;
        }
        CHECK(pattern_count(led, sq, CountMode::Local) == BigUint(count));
    }
}

TEST_CASE("globally admissible words") {
    auto golden = catalog_system("golden-mean");
    auto words = globally_admissible_1d(golden, 4);
    CHECK(words_of(words, golden.alphabet()) == no11_words(4));
    CHECK(words.size() == 8);

    // {aa, ab}-forbidding SFT: local sees both symbols, global trims 'a'
    auto aab = catalog_system("aa-ab-sft");
    CHECK(words_of(globally_admissible_1d(aab, 1), aab.alphabet()) ==
          std::set<std::string>{"b"});
    CHECK(words_of(locally_admissible(aab, Shape({Point{0}})), aab.alphabet()) ==
          std::set<std::string>{"a", "b"});

    auto full = catalog_system("full-binary");
    CHECK(globally_admissible_1d(full, 3).size() == 8);
}

TEST_CASE("pattern_count transfer-matrix route equals materialization") {
    auto golden = catalog_system("golden-mean");
    // fib[i] holds F_{i+1}: 1, 1, 2, 3, 5, ...; the count on n cells is F_{n+2}
    std::uint64_t fib[24] = {1, 1};
    for (int i = 2; i < 24; ++i) fib[i] = fib[i - 1] + fib[i - 2];
    for (int n = 1; n <= 10; ++n) {
        Shape f = Shape::interval(0, n - 1);
        BigUint counted = pattern_count(golden, f, CountMode::Global1d);
        CHECK(counted == BigUint(fib[n + 1]));
        CHECK(counted == BigUint(globally_admissible_1d(golden, n).size()));
    }
    // global admissibility refines local; they agree on intervals except at
    // n = 2, where the symmetrized three-cell window cannot fit
    for (int n = 1; n <= 12; ++n) {
        Shape f = Shape::interval(0, n - 1);
        BigUint global = pattern_count(golden, f, CountMode::Global1d);
        BigUint local = pattern_count(golden, f, CountMode::Local);
        CHECK(!(local < global));
        if (n != 2) CHECK(global == local);
        else CHECK(local == BigUint(4));
    }

    auto full3 = catalog_system("full-ternary");
    CHECK(pattern_count(full3, Shape::interval(0, 4), CountMode::Local) == BigUint(243));
}

TEST_CASE("pattern_count on scattered supports") {
    auto golden = catalog_system("golden-mean");
    // {0, 2}: both cells free since no window spans the gap globally...
    // projection of length-3 words onto positions {0, 2}
    Shape gap({Point{0}, Point{2}});
    BigUint counted = pattern_count(golden, gap, CountMode::Global1d);
    std::set<std::string> proj;
    for (const auto& w : no11_words(3)) proj.insert({w[0], w[2]});
    CHECK(counted == BigUint(proj.size()));
}

TEST_CASE("submultiplicative counts on disjoint supports") {
    auto golden = catalog_system("golden-mean");
    for (auto [a1, b1, a2, b2] :
         {std::array{0, 2, 4, 6}, std::array{0, 1, 3, 8}, std::array{-3, 0, 2, 4}}) {
        Shape f1 = Shape::interval(a1, b1), f2 = Shape::interval(a2, b2);
        BigUint joint =
            pattern_count(golden, shape_union(f1, f2), CountMode::Global1d);
        BigUint split = pattern_count(golden, f1, CountMode::Global1d) *
                        pattern_count(golden, f2, CountMode::Global1d);
        CHECK(!(split < joint));
    }
}

TEST_CASE("delta irreducibility checks") {
    auto full = catalog_system("full-binary");
    auto v = check_delta_irreducible(full, Shape({Point{0}}), 3);
    CHECK(v.status == IrreducibilityVerdict::Status::HoldsUpTo);

    auto golden = catalog_system("golden-mean");
    auto cx = check_delta_irreducible(golden, Shape({Point{0}}), 2);
    REQUIRE(cx.status == IrreducibilityVerdict::Status::Counterexample);
    CHECK(cx.omega1 == Shape({Point{0}}));
    CHECK(cx.omega2 == Shape({Point{1}}));
    CHECK(cx.p1.values == std::vector<Symbol>{1});
    CHECK(cx.p2.values == std::vector<Symbol>{1});

    auto holds = check_delta_irreducible(golden, Shape::interval(0, 1), 6);
    CHECK(holds.status == IrreducibilityVerdict::Status::HoldsUpTo);

    // apartness is monotone in delta, so enlarging delta keeps it holding
    auto wider = check_delta_irreducible(golden, Shape::interval(0, 2), 6);
    CHECK(wider.status == IrreducibilityVerdict::Status::HoldsUpTo);

    // the even shift needs two free cells to fix run parity: delta {0,1}
    // fails on the 01 / 10 pair, delta {0,1,2} is the smallest interval
    // passing the bounded check
    auto even_sys = catalog_system("even");
    auto narrow = check_delta_irreducible(even_sys, Shape::interval(0, 1), 4);
    REQUIRE(narrow.status == IrreducibilityVerdict::Status::Counterexample);
    CHECK(narrow.p1.values == std::vector<Symbol>{0, 1});
    CHECK(narrow.p2.values == std::vector<Symbol>{1, 0});
    auto even = check_delta_irreducible(even_sys, Shape::interval(0, 2), 4);
    CHECK(even.status == IrreducibilityVerdict::Status::HoldsUpTo);

    // at-most-one-one cannot glue two 1s anywhere
    auto amoo = check_delta_irreducible(catalog_system("at-most-one-one"),
                                        Shape::interval(0, 1), 3);
    CHECK(amoo.status == IrreducibilityVerdict::Status::Counterexample);
}

TEST_CASE("splice") {
    auto golden = catalog_system("golden-mean");
    const SftSpec& spec = golden.sft();
    Shape f = Shape::interval(0, 2);
    Shape support = Shape::interval(-4, 6);

    std::vector<Symbol> zeros(support.size(), 0);
    Pattern u(support, zeros);
    std::vector<Symbol> v_vals = zeros;
    v_vals[support.index_of(Point{1})] = 1;
    Pattern v(support, v_vals);

    Pattern w = splice(spec, u, v, f);
    CHECK(w.at(Point{1}) == 1);
    for (const auto& p : support.points())
        if (!(p == Point{1})) CHECK(w.at(p) == 0);

    CHECK(splice(spec, u, u, f) == u);

    // boundary disagreement at 3
    std::vector<Symbol> bad_vals = zeros;
    bad_vals[support.index_of(Point{3})] = 1;
    Pattern bad(support, bad_vals);
    CHECK_THROWS_AS(splice(spec, u, bad, f), SpliceBoundaryError);
    try {
        splice(spec, u, bad, f);
    } catch (const SpliceBoundaryError& e) {
        CHECK(e.where == Point{3});
    }
}

TEST_CASE("toroidal admissibility") {
    auto golden = catalog_system("golden-mean");
    auto pts = toroidally_admissible(golden, {3});
    std::set<std::string> expect{"000", "001", "010", "100"};
    CHECK(words_of(pts, golden.alphabet()) == expect);

    auto led = catalog_system("ledrappier");
    auto led_pts = toroidally_admissible(led, {2, 2});
    // oracle: raw loop over the 16 assignments with wrapped triangles
    std::size_t oracle = 0;
    for (int m = 0; m < 16; ++m) {
        auto bit = [&](int x, int y) { return (m >> ((x & 1) * 2 + (y & 1))) & 1; };
        bool ok = true;
        for (int x = 0; x < 2 && ok; ++x)
            for (int y = 0; y < 2 && ok; ++y)
                if ((bit(x, y) ^ bit(x + 1, y) ^ bit(x, y + 1)) != 0) ok = false;
        if (ok) ++oracle;
    }
    CHECK(led_pts.size() == oracle);
    CHECK(toroidal_count(led, {2, 2}) == BigUint(oracle));
}

TEST_CASE("budget exhaustion is reported") {
    auto full = catalog_system("full-binary");
    Budget tiny;
    tiny.max_patterns = 4;
    CHECK_THROWS_AS(locally_admissible(full, Shape::interval(0, 10), tiny),
                    BudgetExceeded);
}

TEST_CASE("generic 2-D SFT local admissibility against brute force") {
    // hard squares: no two orthogonally adjacent 1s
    Alphabet b = Alphabet::binary();
    std::vector<Pattern> forbidden{
        Pattern(Shape({Point{0, 0}, Point{1, 0}}), {1, 1}),
        Pattern(Shape({Point{0, 0}, Point{0, 1}}), {1, 1}),
    };
    SubshiftHandle hard = SubshiftHandle::from_sft(sft_from_forbidden(2, b, forbidden),
                                                   "hard-squares");
    CHECK(hard.sft().window.is_symmetric());
    CHECK(hard.sft().window.contains_origin());

    // oracle: enumerate all assignments on the 3x3 box and apply the
    // window checks by hand (the cross window fits only at the center)
    Shape box3 = Shape::box({0, 0}, {2, 2});
    std::size_t oracle = 0;
    for (int m = 0; m < (1 << 9); ++m) {
        auto bit = [&](int x, int y) { return (m >> (3 * x + y)) & 1; };
        bool ok = true;
        // forbidden translates inside the centered cross
        if (bit(0, 1) && bit(1, 1)) ok = false;
        if (bit(1, 1) && bit(2, 1)) ok = false;
        if (bit(1, 0) && bit(1, 1)) ok = false;
        if (bit(1, 1) && bit(1, 2)) ok = false;
        if (ok) ++oracle;
    }
    CHECK(oracle == 272);
    CHECK(pattern_count(hard, box3, CountMode::Local) == BigUint(oracle));
    CHECK(locally_admissible(hard, box3).size() == oracle);

    // on a 4x4 box every interior cross is checked; compare with a direct
    // adjacent-pair oracle restricted to pairs some window translate covers
    Shape box4 = Shape::box({0, 0}, {3, 3});
    std::size_t count4 = 0;
    for (int m = 0; m < (1 << 16); ++m) {
        auto bit = [&](int x, int y) { return (m >> (4 * x + y)) & 1; };
        bool ok = true;
        for (int cx = 1; cx <= 2 && ok; ++cx)
            for (int cy = 1; cy <= 2 && ok; ++cy) {
                if (bit(cx - 1, cy) && bit(cx, cy)) ok = false;
                if (bit(cx, cy) && bit(cx + 1, cy)) ok = false;
                if (bit(cx, cy - 1) && bit(cx, cy)) ok = false;
                if (bit(cx, cy) && bit(cx, cy + 1)) ok = false;
            }
        if (ok) ++count4;
    }
    CHECK(pattern_count(hard, box4, CountMode::Local) == BigUint(count4));

    // a trivial delta cannot separate adjacent conflicting 1s
    auto tight = check_delta_irreducible(hard, Shape({Point{0, 0}}), 1);
    REQUIRE(tight.status == IrreducibilityVerdict::Status::Counterexample);
    CHECK(tight.p1.values == std::vector<Symbol>{1});
    CHECK(tight.p2.values == std::vector<Symbol>{1});

    // with the cross as delta, zeros fill every gap
    Shape cross({Point{0, 0}, Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}});
    auto verdict = check_delta_irreducible(hard, cross, 1);
    CHECK(verdict.status == IrreducibilityVerdict::Status::HoldsUpTo);
}

TEST_CASE("ledrappier is not strongly irreducible: a conclusive counterexample") {
    auto led = catalog_system("ledrappier");
    Shape cross({Point{0, 0}, Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}});
    auto v = check_delta_irreducible(led, cross, 1);
    REQUIRE(v.status == IrreducibilityVerdict::Status::Counterexample);

    // the witness re-verifies by relation propagation: the triangle rule
    // forces the value the apart support pins the other way
    Pattern merged = pattern_glue(v.p1, v.p2);
    Shape big = Shape::box({-4, -4}, {6, 6});
    CHECK_FALSE(admissible_extension_exists(led, big, merged));

    // and both sides individually extend, so the failure is about gluing
    std::vector<int> lo, hi;
    v.omega1.bounds(lo, hi);
    CHECK(admissible_extension_exists(led, big, v.p1));
    CHECK(admissible_extension_exists(led, big, v.p2));
}

TEST_CASE("ledrappier admissible sets are GF(2)-linear") {
    auto led = catalog_system("ledrappier");
    Shape f = Shape::box({0, 0}, {2, 2});
    auto pats = locally_admissible(led, f);
    // contains zero and is closed under pointwise xor
    CHECK(pats.front().values == std::vector<Symbol>(f.size(), 0));
    std::set<std::vector<Symbol>> all;
    for (const auto& p : pats) all.insert(p.values);
    for (const auto& p : pats)
        for (const auto& q : pats) {
            std::vector<Symbol> x(f.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = p.values[i] ^ q.values[i];
            CHECK(all.count(x) == 1);
        }
}
