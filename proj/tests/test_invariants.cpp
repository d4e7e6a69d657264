#include <catch2/catch_amalgamated.hpp>

#include "orbitstar/invariants.hpp"

using namespace orbitstar;

namespace {

struct Setup {
    RootSystem rs;
    ChevalleyBasis cb;
    LeviSplit sp;
};

Setup make(char series, int rank, std::vector<Rat> lam) {
    RootSystem rs = build_root_system(series, rank);
    ChevalleyBasis cb = build_chevalley_basis(rs);
    LeviSplit sp = normalize_root_vectors(centralizer_split(cb, lam));
    return {std::move(rs), std::move(cb), std::move(sp)};
}

Rat binom(int n, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r = Rat(r * Rat(n - i) / Rat(i + 1));
    return r;
}

}  // namespace

TEST_CASE("chern image of a weight list") {
    std::vector<GaussRat> c = c1_image({Weight{Rat(1), Rat(0)}, Weight{Rat(0), Rat(1)}, Weight{Rat(1), Rat(1)}});
    CHECK(c == std::vector<GaussRat>{GaussRat(Rat(0), Rat(2)), GaussRat(Rat(0), Rat(2))});
    CHECK_THROWS_AS(c1_image({}), ConfigError);
    CHECK_THROWS_AS(c1_image({Weight{Rat(1)}, Weight{Rat(1), Rat(2)}}), ConfigError);
}

TEST_CASE("characteristic class of the deformation") {
    Setup a1 = make('A', 1, {Rat(5)});
    CharClass c = characteristic_class(a1.sp);
    CHECK(c.order0 == std::vector<GaussRat>{GaussRat(Rat(-5, 2), Rat(0))});
    CHECK(c.order1 == std::vector<GaussRat>{GaussRat(Rat(0), Rat(1, 2))});

    // order 0 scales with the character, order 1 does not
    Setup a1d = make('A', 1, {Rat(10)});
    CharClass cd = characteristic_class(a1d.sp);
    CHECK(cd.order0 == std::vector<GaussRat>{GaussRat(Rat(-5), Rat(0))});
    CHECK(cd.order1 == c.order1);

    Setup a2 = make('A', 2, {Rat(2), Rat(3)});
    CharClass c2 = characteristic_class(a2.sp);
    CHECK(c2.order0 == std::vector<GaussRat>{GaussRat(Rat(-7, 3), Rat(0)), GaussRat(Rat(-8, 3), Rat(0))});
    CHECK(c2.order1 == std::vector<GaussRat>{GaussRat(Rat(0), Rat(1)), GaussRat(Rat(0), Rat(1))});

    // singular character: the split's rho is no longer the full half-sum
    Setup part = make('A', 2, {Rat(2), Rat(0)});
    CharClass cp = characteristic_class(part.sp);
    CHECK(cp.order0 == std::vector<GaussRat>{GaussRat(Rat(-4, 3), Rat(0)), GaussRat(Rat(-2, 3), Rat(0))});
    CHECK(cp.order1 == std::vector<GaussRat>{GaussRat(Rat(0), Rat(1)), GaussRat(Rat(0), Rat(1, 2))});
    CHECK(split_rho(part.sp) == Weight{Rat(1), Rat(1, 2)});
}

TEST_CASE("rank-one trace of the unit counts weight spaces") {
    Setup a1 = make('A', 1, {Rat(5)});
    for (int k = 0; k <= 10; ++k) {
        Weight xi = a1.rs.fund_to_root({Rat(k)});
        CHECK(quantum_dimension(a1.rs, a1.sp, {xi}) == Rat(k + 1));
        CHECK(freudenthal_dim(a1.rs, xi) == Rat(k + 1));
    }
}

TEST_CASE("dimension tables") {
    RootSystem a2 = build_root_system('A', 2);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            Rat want = Rat(Rat((a + 1) * (b + 1) * (a + b + 2)) / 2);
            CHECK(freudenthal_dim(a2, a2.fund_to_root({Rat(a), Rat(b)})) == want);
        }

    RootSystem b2 = build_root_system('B', 2);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            Rat want = Rat(Rat((a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3)) / 6);
            CHECK(freudenthal_dim(b2, b2.fund_to_root({Rat(a), Rat(b)})) == want);
        }

    RootSystem g2 = build_root_system('G', 2);
    std::map<std::pair<int, int>, Rat> table{
        {{0, 0}, Rat(1)},  {{1, 0}, Rat(7)},   {{0, 1}, Rat(14)},
        {{2, 0}, Rat(27)}, {{1, 1}, Rat(64)},  {{0, 2}, Rat(77)},
        {{3, 0}, Rat(77)}, {{2, 2}, Rat(729)},
    };
    for (const auto& [ab, want] : table)
        CHECK(freudenthal_dim(g2, g2.fund_to_root({Rat(ab.first), Rat(ab.second)})) == want);
}

TEST_CASE("trace formula agrees with the multiplicity recursion") {
    Setup a2 = make('A', 2, {Rat(2), Rat(3)});
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            Weight xi = a2.rs.fund_to_root({Rat(a), Rat(b)});
            CHECK(quantum_dimension(a2.rs, a2.sp, {xi}) == freudenthal_dim(a2.rs, xi));
        }
    Setup b2 = make('B', 2, {Rat(1), Rat(2)});
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            Weight xi = b2.rs.fund_to_root({Rat(a), Rat(b)});
            CHECK(quantum_dimension(b2.rs, b2.sp, {xi}) == freudenthal_dim(b2.rs, xi));
        }
    Setup g2 = make('G', 2, {Rat(1), Rat(1)});
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            Weight xi = g2.rs.fund_to_root({Rat(a), Rat(b)});
            CHECK(quantum_dimension(g2.rs, g2.sp, {xi}) == freudenthal_dim(g2.rs, xi));
        }
}

TEST_CASE("trace formula is invariant under rescaling the form") {
    Setup a2 = make('A', 2, {Rat(2), Rat(3)});
    Weight xi = a2.rs.fund_to_root({Rat(2), Rat(1)});
    Rat base = detail::quantum_dimension_scaled(a2.rs, a2.sp, {xi}, Rat(1));
    CHECK(detail::quantum_dimension_scaled(a2.rs, a2.sp, {xi}, Rat(7, 3)) == base);
    CHECK_THROWS_AS(detail::quantum_dimension_scaled(a2.rs, a2.sp, {xi}, Rat(0)), DegeneracyError);
}

TEST_CASE("trace of the unit is polynomial of degree at most the number of split roots") {
    Setup a2 = make('A', 2, {Rat(2), Rat(3)});
    int npos = a2.rs.npos();
    // restrict to a rational line: a polynomial of degree <= npos has vanishing
    // (npos+1)-th finite difference
    auto sample = [&](int s) {
        Weight xi = a2.rs.fund_to_root({Rat(s) + Rat(1, 3), Rat(2 * s) - Rat(1, 2)});
        return quantum_dimension(a2.rs, a2.sp, {xi});
    };
    Rat diff(0);
    for (int j = 0; j <= npos + 1; ++j) {
        Rat sign = (npos + 1 - j) % 2 == 0 ? Rat(1) : Rat(-1);
        diff += sign * binom(npos + 1, j) * sample(j);
    }
    CHECK(diff == 0);
    // and the degree bound is sharp: the npos-th difference is a nonzero constant
    Rat lead(0);
    for (int j = 0; j <= npos; ++j) {
        Rat sign = (npos - j) % 2 == 0 ? Rat(1) : Rat(-1);
        lead += sign * binom(npos, j) * sample(j);
    }
    CHECK_FALSE(lead == 0);
}

TEST_CASE("multiplicity recursion rejects bad weights") {
    RootSystem a2 = build_root_system('A', 2);
    CHECK_THROWS_AS(freudenthal_dim(a2, a2.fund_to_root({Rat(-1), Rat(0)})), ConfigError);
    CHECK_THROWS_AS(freudenthal_dim(a2, a2.fund_to_root({Rat(1, 2), Rat(0)})), ConfigError);
    CHECK_THROWS_AS(freudenthal_dim(a2, Weight{Rat(1)}), ConfigError);
    CHECK_THROWS_AS(quantum_dimension(a2, make('A', 2, {Rat(1), Rat(1)}).sp, {Weight{Rat(1)}}), ConfigError);
}

TEST_CASE("singular characters keep a trace formula over their split roots") {
    Setup part = make('A', 2, {Rat(2), Rat(0)});
    Weight xi = part.rs.fund_to_root({Rat(1), Rat(1)});
    CHECK(quantum_dimension(part.rs, part.sp, {xi}) == Rat(35, 9));
    // the value genuinely differs from the regular-orbit trace at the same xi
    Setup reg = make('A', 2, {Rat(2), Rat(3)});
    CHECK(quantum_dimension(reg.rs, reg.sp, {xi}) == Rat(8));
}
