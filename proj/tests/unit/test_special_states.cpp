#include "schurweyl/error.hpp"
#include "schurweyl/projectors.hpp"
#include "schurweyl/special_states.hpp"
#include "schurweyl/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace schurweyl;

TEST_CASE("frames") {
    CHECK(OrthonormalFrame::computational(3, 2).size() == 2);
    CHECK_THROWS_AS(OrthonormalFrame::computational(2, 3), InvalidArgument);
    const std::vector<TensorState> bad{TensorState::basis_state(2, {0}), TensorState::basis_state(2, {0})};
    CHECK_THROWS_AS(OrthonormalFrame{bad}, InvalidArgument);
    std::mt19937_64 rng(1);
    CHECK(OrthonormalFrame::from_unitary(random_unitary(4, rng), 4).local_dim() == 4);
}

TEST_CASE("Slater determinants") {
    const auto frame = OrthonormalFrame::computational(3, 3);
    CHECK(slater(frame, std::vector<int>{1}) == frame[1]);
    const auto s01 = slater_prefix(OrthonormalFrame::computational(2, 2), 2);
    CHECK(std::abs(s01[1] - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s01[2] + 1 / std::sqrt(2.0)) < 1e-15);
    const auto s012 = slater_prefix(frame, 3);
    CHECK(distance(full_antisymmetrizer(3).apply(s012), s012) < 1e-12);
    CHECK(s012.norm() == doctest::Approx(1.0));
    // Reordering indices changes the sign only.
    CHECK(distance(slater(frame, std::vector<int>{1, 0, 2}), Complex(-1.0) * s012) < 1e-14);
    CHECK_THROWS_AS(slater(frame, std::vector<int>{0, 0}), InvalidArgument);
}

TEST_CASE("coherent states") {
    const auto frame3 = OrthonormalFrame::computational(3, 3);
    const auto col = column_ordered(YoungDiagram({1, 1, 1}));
    CHECK(distance(coherent_state(col, frame3, 3), slater_prefix(frame3, 3)) < 1e-15);

    const auto frame1 = OrthonormalFrame::computational(2, 1);
    const auto row = row_ordered(YoungDiagram({3}));
    CHECK(coherent_state(row, frame1, 2) == TensorState::basis_state(2, {0, 0, 0}));

    const auto t = column_ordered(YoungDiagram({2, 1}));
    const auto frame2 = OrthonormalFrame::computational(2, 2);
    CHECK(projector_residual(orthogonal_projector(t), coherent_state(t, frame2, 2)) < 1e-9);
    CHECK_THROWS_AS(coherent_state(row_ordered(YoungDiagram({2, 1})), frame2, 2), InvalidArgument);

    std::mt19937_64 rng(4);
    for (int n = 2; n <= 5; ++n)
        for (const auto &y : partitions_of(n)) {
            const int d = std::max(y.n_rows(), 2);
            const auto frame = OrthonormalFrame::from_unitary(random_unitary(d, rng), d);
            const auto tc = column_ordered(y);
            CHECK(projector_residual(orthogonal_projector(tc), coherent_state(tc, frame, d)) < 1e-9);
        }
}

TEST_CASE("optimizer states saturate the per-box bound") {
    CHECK(schmidt_decompose(optimizer_state(YoungDiagram({1, 1, 1, 1}), {4, 1},
                                            OrthonormalFrame::computational(4, 4), 4),
                            3)
              .lambda1_sq() == doctest::Approx(0.25));
    CHECK(schmidt_decompose(optimizer_state(YoungDiagram({2, 2}), {2, 2}, OrthonormalFrame::computational(2, 2), 2),
                            3)
              .lambda1_sq() == doctest::Approx(0.5));
    CHECK(schmidt_decompose(optimizer_state(YoungDiagram({3, 2, 1}), {2, 2},
                                            OrthonormalFrame::computational(3, 3), 3),
                            5)
              .lambda1_sq() == doctest::Approx(2.0 / 3.0));

    std::mt19937_64 rng(77);
    for (int n = 2; n <= 5; ++n)
        for (const auto &y : partitions_of(n))
            for (const Box &box : removable_boxes(y)) {
                const int d = y.n_rows();
                for (int frame_kind = 0; frame_kind < 2; ++frame_kind) {
                    const auto frame = frame_kind == 0 ? OrthonormalFrame::computational(d, d)
                                                       : OrthonormalFrame::from_unitary(random_unitary(d, rng), d);
                    const auto psi = optimizer_state(y, box, frame, d);
                    CHECK(psi.norm() == doctest::Approx(1.0));
                    CHECK(std::abs(schmidt_decompose(psi, n - 1).lambda1_sq() - to_double(bound_for_box(y, box))) <
                          1e-8);
                    const auto t = optimizer_tableau(y, box);
                    CHECK(t.position(n) == box);
                    CHECK(projector_residual(orthogonal_projector(t), psi) < 1e-9);
                }
            }
    CHECK_THROWS_AS(optimizer_state(YoungDiagram({2, 1}), {1, 1}, OrthonormalFrame::computational(2, 2), 2),
                    InvalidArgument);
    CHECK_THROWS_AS(optimizer_state(YoungDiagram({1, 1, 1}), {3, 1}, OrthonormalFrame::computational(2, 2), 2),
                    InvalidArgument);
}

TEST_CASE("Coleman equality condition") {
    const auto frame = OrthonormalFrame::computational(3, 3);
    const auto phi = slater_prefix(frame, 2);
    auto c = coleman_equality_check(phi, frame[2]);
    CHECK(c.norm_sq == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(c.condition);

    c = coleman_equality_check(phi, frame[0]);
    CHECK(c.norm_sq < 1.0 / 3.0);
    CHECK_FALSE(c.condition);

    c = coleman_equality_check(frame[0], frame[1]);
    CHECK(c.norm_sq == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.condition);

    std::mt19937_64 rng(3);
    for (int k = 2; k <= 4; ++k)
        for (int i = 0; i < 10; ++i) {
            const auto p = TensorState::random(4, k - 1, rng);
            const auto u = TensorState::random(4, 1, rng);
            CHECK(coleman_equality_check(p, u).norm_sq <= 1.0 / k + 1e-12);
        }
}

TEST_CASE("contract_last") {
    const auto e = TensorState::basis_state(2, {1, 0});
    CHECK(contract_last(e, TensorState::basis_state(2, {0})) == TensorState::basis_state(2, {1}));
    CHECK(contract_last(e, TensorState::basis_state(2, {1})).norm() == 0.0);
}
