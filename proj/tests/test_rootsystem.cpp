#include <catch2/catch_amalgamated.hpp>

#include "orbitstar/rootsystem.hpp"

using namespace orbitstar;

TEST_CASE("positive root counts and heights per series") {
    struct Row {
        char series;
        int rank;
        int npos;
        int max_height;
    };
    // |Delta+| = (dim - rank) / 2 from the classical dimension formulas
    const Row table[] = {
        {'A', 1, 1, 1},  {'A', 2, 3, 2},  {'A', 3, 6, 3},  {'B', 2, 4, 3},   {'B', 3, 9, 5},
        {'C', 3, 9, 5},  {'D', 4, 12, 5}, {'G', 2, 6, 5},  {'F', 4, 24, 11}, {'E', 6, 36, 11},
    };
    for (const Row& r : table) {
        RootSystem rs = build_root_system(r.series, r.rank);
        INFO(r.series << r.rank);
        CHECK(rs.npos() == r.npos);
        CHECK(rs.max_height == r.max_height);
        CHECK(rs.rank == r.rank);
    }
}

TEST_CASE("roots are sorted by height then lex, with a consistent index") {
    RootSystem rs = build_root_system('B', 3);
    for (int i = 0; i + 1 < rs.npos(); ++i) {
        int ha = rs.root_height(i), hb = rs.root_height(i + 1);
        CHECK((ha < hb || (ha == hb && rs.root(i) < rs.root(i + 1))));
    }
    for (int i = 0; i < rs.npos(); ++i) CHECK(rs.pos_index.at(rs.root(i)) == i);
    CHECK(rs.is_pos_root(rs.root(2)));
    CHECK_FALSE(rs.is_pos_root(DegreeVec{5, 5, 5}));
}

TEST_CASE("invariant form matches the Cartan matrix, long roots squared 2") {
    for (auto [series, rank] : {std::pair{'A', 2}, {'B', 2}, {'C', 3}, {'G', 2}, {'F', 4}}) {
        RootSystem rs = build_root_system(series, rank);
        INFO(series << rank);
        Rat longest(0);
        for (int i = 0; i < rank; ++i) {
            for (int j = 0; j < rank; ++j) {
                CHECK(rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                      rs.form[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                // cartan[i][j] = 2 <a_i, a_j> / <a_j, a_j>
                CHECK(Rat(2) * rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                      Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * Rat(2) *
                          rs.half_sq[static_cast<size_t>(j)]);
            }
            if (rs.half_sq[static_cast<size_t>(i)] > longest) longest = rs.half_sq[static_cast<size_t>(i)];
        }
        CHECK(longest == 1);  // long simple roots have squared length 2
    }
    RootSystem b2 = build_root_system('B', 2);
    CHECK(b2.half_sq == std::vector<Rat>{Rat(1), Rat(1, 2)});  // last simple root short
    RootSystem g2 = build_root_system('G', 2);
    CHECK(g2.half_sq == std::vector<Rat>{Rat(1, 3), Rat(1)});  // first simple root short
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
    for (auto [series, rank] : {std::pair{'A', 3}, {'B', 2}, {'G', 2}, {'D', 4}}) {
        RootSystem rs = build_root_system(series, rank);
        Weight rho = rs.rho();
        for (int j = 0; j < rank; ++j) CHECK(rs.pair_coroot(rho, j) == 1);
    }
}

TEST_CASE("fundamental weights are coroot-dual and invert exactly") {
    RootSystem rs = build_root_system('G', 2);
    auto fw = rs.fundamental_weights();
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            CHECK(rs.pair_coroot(fw[static_cast<size_t>(i)], j) == (i == j ? 1 : 0));
    std::vector<Rat> fund{Rat(2), Rat(-3, 7)};
    Weight w = rs.fund_to_root(fund);
    CHECK(rs.root_to_fund(w) == fund);
}

TEST_CASE("simple reflections are involutive isometries") {
    RootSystem rs = build_root_system('B', 3);
    Weight u{Rat(1, 2), Rat(-3), Rat(2, 5)};
    Weight v{Rat(4), Rat(0), Rat(-1, 3)};
    for (int j = 0; j < rs.rank; ++j) {
        Weight su = rs.reflect_simple(u, j);
        CHECK(rs.reflect_simple(su, j) == u);
        CHECK(rs.pairing(su, rs.reflect_simple(v, j)) == rs.pairing(u, v));
        // alpha_j maps to its negative
        Weight aj(static_cast<size_t>(rs.rank), Rat(0));
        aj[static_cast<size_t>(j)] = Rat(1);
        CHECK(rs.reflect_simple(aj, j) == w_scale(Rat(-1), aj));
    }
}

TEST_CASE("highest root") {
    CHECK(build_root_system('A', 2).root(build_root_system('A', 2).highest_root_index()) == DegreeVec{1, 1});
    CHECK(build_root_system('G', 2).root(build_root_system('G', 2).highest_root_index()) == DegreeVec{3, 2});
    CHECK(build_root_system('B', 2).root(build_root_system('B', 2).highest_root_index()) == DegreeVec{1, 2});
}

TEST_CASE("exact matrix inverse") {
    std::vector<std::vector<Rat>> m{{Rat(2), Rat(1), Rat(0)}, {Rat(1), Rat(1, 3), Rat(1)}, {Rat(0), Rat(5), Rat(-2)}};
    auto inv = matrix_inverse(m);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Rat acc(0);
            for (size_t k = 0; k < 3; ++k) acc += m[i][k] * inv[k][j];
            CHECK(acc == (i == j ? 1 : 0));
        }
    std::vector<std::vector<Rat>> sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(matrix_inverse(sing), DegeneracyError);
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(build_root_system('Z', 1), ConfigError);
    CHECK_THROWS_AS(build_root_system('A', 0), ConfigError);
    CHECK_THROWS_AS(build_root_system('B', 1), ConfigError);
    CHECK_THROWS_AS(build_root_system('D', 2), ConfigError);
    CHECK_THROWS_AS(build_root_system('E', 5), ConfigError);
    CHECK_THROWS_AS(build_root_system('F', 3), ConfigError);
    CHECK_THROWS_AS(build_root_system('G', 3), ConfigError);
}

TEST_CASE("weight helpers") {
    CHECK(height(DegreeVec{2, 0, 3}) == 5);
    Weight a{Rat(1), Rat(2)}, b{Rat(-1, 2), Rat(3)};
    CHECK(w_add(a, b) == Weight{Rat(1, 2), Rat(5)});
    CHECK(w_sub(a, b) == Weight{Rat(3, 2), Rat(-1)});
    CHECK(w_scale(Rat(2), a) == Weight{Rat(2), Rat(4)});
    CHECK(w_is_zero(w_sub(a, a)));
    CHECK(weight_str(b) == "[-1/2,3]");
}
