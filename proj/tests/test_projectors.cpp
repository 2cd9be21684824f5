#include <doctest.h>

#include <cmath>
#include <random>

#include "coherent.hpp"

using namespace fockproj;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Projector reference_zero_projector(const OperatorMatrix& phi) {
    // independent route: keep eigenvectors whose eigenvalue rounds to zero
    EigenSystem es = hermitian_eigensystem(phi);
    Matrix e = Matrix::Zero(phi.dimension(), phi.dimension());
    for (Eigen::Index i = 0; i < es.values.size(); ++i)
        if (std::lround(es.values(i)) == 0) e += es.vectors.col(i) * es.vectors.col(i).adjoint();
    Projector out{OperatorMatrix(phi.space(), std::move(e)), ProjectorMethod::spectral_kernel};
    return out;
}

}  // namespace

TEST_CASE("group average matches the literal sum of exponentials") {
    SpacePtr space = FockSpace::total_quanta(2, 3);
    OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
    const int K = 7;
    Projector fast = projector_group_average_u1(l3, K);

    Matrix literal = Matrix::Zero(space->dimension(), space->dimension());
    for (int k = 0; k < K; ++k)
        literal += matrix_exponential(l3, cplx(0.0, -2.0 * kPi * k / K)).entries() /
                   static_cast<double>(K);
    CHECK(spectral_norm(Matrix(fast.matrix.entries() - literal)) < 1e-12);
}

TEST_CASE("group average projects onto the rotation-invariant subspace") {
    SpacePtr space = FockSpace::total_quanta(2, 4);
    OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
    Projector e = projector_group_average_u1(l3, 9);

    CHECK(e.valid);
    CHECK(e.rank == 3);  // one invariant state per even block 0, 2, 4
    CHECK(e.idempotency_residual <= 1e-10);
    CHECK(e.hermiticity_residual <= 1e-10);
    CHECK(e.trace_defect <= 1e-8);

    Projector reference = reference_zero_projector(l3);
    CHECK(spectral_norm(Matrix(e.matrix.entries() - reference.matrix.entries())) < 1e-12);
}

TEST_CASE("zero constraint averages to the identity") {
    SpacePtr space = FockSpace::per_mode({4});
    OperatorMatrix zero = OperatorMatrix::zero(space);
    OperatorMatrix z(space, zero.entries());
    z.set_hermitian();
    Projector e = projector_group_average_u1(z, 3);
    CHECK(e.valid);
    CHECK(e.rank == space->dimension());
    CHECK(spectral_norm(Matrix(e.matrix.entries() -
                               Matrix::Identity(space->dimension(), space->dimension()))) <
          1e-12);
}

TEST_CASE("aliasing: K = 2 leaks the ±2 eigenvalues") {
    SpacePtr space = FockSpace::total_quanta(2, 2);  // spectrum {-2,-1,0,0,1,2}
    OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
    Projector aliased = projector_group_average_u1(l3, 2);

    CHECK(!aliased.valid);
    CHECK(aliased.invalid_reason.find("alias") != std::string::npos);
    // the ±2 eigenvectors leak through: rank grows from 2 to 4
    Projector reference = reference_zero_projector(l3);
    double mismatch =
        spectral_norm(Matrix(aliased.matrix.entries() - reference.matrix.entries()));
    CHECK(mismatch > 0.9);
    CHECK(aliased.rank == 4);
}

TEST_CASE("non-integer spectrum is flagged") {
    SpacePtr space = FockSpace::per_mode({3});
    OperatorMatrix q = OperatorMatrix::position(space, 0);
    Projector e = projector_group_average_u1(q, 9);
    CHECK(!e.valid);
    CHECK(e.invalid_reason.find("integer") != std::string::npos);
}

TEST_CASE("spectral projector routes") {
    SpacePtr space = FockSpace::total_quanta(2, 4);
    OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);

    SUBCASE("single first-class constraint agrees with the group average") {
        Projector spectral = projector_spectral({l3});
        Projector group = projector_group_average_u1(l3, 9);
        CHECK(spectral.valid);
        CHECK(spectral.rank == 3);
        CHECK(spectral_norm(Matrix(spectral.matrix.entries() - group.matrix.entries())) <
              1e-12);
    }

    SUBCASE("total number keeps only the vacuum") {
        Projector e = projector_spectral({OperatorMatrix::total_number(space)});
        CHECK(e.valid);
        CHECK(e.rank == 1);
        CHECK(!e.empty_subspace);
        CHECK(std::abs(e.matrix.entries()(0, 0) - cplx(1.0)) < 1e-12);
    }

    SUBCASE("a canonical pair has no common null vector") {
        SpacePtr mode = FockSpace::per_mode({12});
        OperatorMatrix r = OperatorMatrix::momentum(mode, 0);
        OperatorMatrix s = OperatorMatrix::position(mode, 0);
        Projector e = projector_spectral({r, s});
        CHECK(e.rank == 0);
        CHECK(e.empty_subspace);
        CHECK(e.valid);

        // R² + S² is (twice) an oscillator hamiltonian: ground value near 1
        OperatorMatrix c(mode, r.entries() * r.entries() + s.entries() * s.entries());
        c.set_hermitian();
        EigenSystem es = hermitian_eigensystem(c);
        CHECK(es.values(0) > 0.5);

        CHECK_THROWS_AS(
            rescaled_state(CoherentLabel::make({0.1}, {0.2}, Convention::weyl), e), Error);
    }
}

TEST_CASE("rank of the invariant subspace over a cutoff sweep") {
    for (int nmax = 0; nmax <= 12; ++nmax) {
        SpacePtr space = FockSpace::total_quanta(2, nmax);
        OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
        Projector spectral = projector_spectral({l3});
        CHECK(spectral.rank == nmax / 2 + 1);
        if (nmax >= 1) {
            Projector group = projector_group_average_u1(l3, 2 * nmax + 1);
            CHECK(group.rank == nmax / 2 + 1);
        }
    }
}

TEST_CASE("gaussian pair quadrature reproduces the vacuum projector") {
    SpacePtr mode = FockSpace::per_mode({12});
    Projector e = projector_gaussian_pair(mode, 0, 64, 10.0);

    Matrix vacuum = Matrix::Zero(13, 13);
    vacuum(0, 0) = 1.0;
    CHECK(spectral_norm(Matrix(e.matrix.entries() - vacuum)) <= 1e-6);
    CHECK(std::abs(e.matrix.trace().real() - 1.0) <= 1e-6);
    CHECK(e.idempotency_residual <= 1e-10);
    CHECK(e.hermiticity_residual <= 1e-10);
    CHECK(e.rank == 1);
    CHECK(e.valid);
    CHECK(e.refinement_residual <= 1e-6);

    // two-mode variant: vacuum pair of the second mode only
    SpacePtr full = FockSpace::per_mode({3, 5});
    Projector ef = projector_gaussian_pair(full, 1, 48, 10.0);
    CHECK(ef.rank == 4);
    for (Index i = 0; i < full->dimension(); ++i) {
        const auto& occ = full->occupations(i);
        double expect = occ[1] == 0 ? 1.0 : 0.0;
        CHECK(std::abs(ef.matrix.entries()(i, i).real() - expect) < 1e-8);
    }
}

TEST_CASE("weighted integral routes") {
    SUBCASE("single node at the origin gives the identity") {
        SpacePtr space = FockSpace::per_mode({4});
        OperatorMatrix q = OperatorMatrix::position(space, 0);
        WeightSpec w;
        w.kind = WeightKind::single_node;
        Projector e = projector_weighted_integral({q}, w);
        CHECK(spectral_norm(Matrix(e.matrix.entries() -
                                   Matrix::Identity(space->dimension(), space->dimension()))) <
              1e-12);
    }

    SUBCASE("uniform circle weight reproduces the group average") {
        SpacePtr space = FockSpace::total_quanta(2, 4);
        OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
        WeightSpec w;
        w.kind = WeightKind::uniform_circle;
        w.circle_nodes = 9;
        Projector via_integral = projector_weighted_integral({l3}, w);
        Projector via_average = projector_group_average_u1(l3, 9);
        CHECK(spectral_norm(Matrix(via_integral.matrix.entries() -
                                   via_average.matrix.entries())) < 1e-12);
        CHECK(via_integral.method == ProjectorMethod::custom_weight);
    }

    SUBCASE("gaussian weight over truncated generators carries cutoff artifacts") {
        // the generic route exponentiates the truncated constraint pair; its
        // deviation from the vacuum projector is a truncation artifact that
        // the displacement-based construction avoids
        SpacePtr mode = FockSpace::per_mode({12});
        OperatorMatrix r = OperatorMatrix::momentum(mode, 0);
        OperatorMatrix s = OperatorMatrix::position(mode, 0);
        WeightSpec w;
        w.kind = WeightKind::gaussian;
        w.nodes_per_axis = 48;
        w.halfwidth = 10.0;
        Projector e = projector_weighted_integral({r, s}, w);
        Matrix vacuum = Matrix::Zero(13, 13);
        vacuum(0, 0) = 1.0;
        double generic = spectral_norm(Matrix(e.matrix.entries() - vacuum));
        Projector exact = projector_gaussian_pair(mode, 0, 48, 10.0);
        double displaced = spectral_norm(Matrix(exact.matrix.entries() - vacuum));
        CHECK(generic > 1e-2);
        CHECK(displaced <= 1e-6);
    }
}

TEST_CASE("projector diagnostics") {
    SpacePtr space = FockSpace::total_quanta(2, 8);
    OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
    Projector e = projector_group_average_u1(l3, 17);
    ConstraintSet cs = ConstraintSet::single(l3);

    SUBCASE("first-class invariance holds for arbitrary tau") {
        DiagnosticsReport report =
            projector_diagnostics(e, &cs, {{0.3}, {1.7}, {5.0}, {-9.4}});
        CHECK(report.invariance_residual <= 1e-10);
        CHECK(report.idempotency_residual <= 1e-10);
        CHECK(report.rank == 5);
    }

    SUBCASE("identity with no constraints reports zeros") {
        Projector identity{OperatorMatrix::identity(space), ProjectorMethod::spectral_kernel};
        DiagnosticsReport report = projector_diagnostics(identity, nullptr, {});
        CHECK(report.idempotency_residual == 0.0);
        CHECK(report.invariance_residual == 0.0);
    }

    SUBCASE("second-class projectors are displaced by the constraint flow") {
        SpacePtr mode = FockSpace::per_mode({12});
        Projector vac = projector_gaussian_pair(mode, 0, 48, 10.0);
        ConstraintSet pair;
        pair.phis = {OperatorMatrix::momentum(mode, 0), OperatorMatrix::position(mode, 0)};
        DiagnosticsReport report = projector_diagnostics(vac, &pair, {{0.8, -0.5}});
        // displacement moves the vacuum: the residual is order one and is
        // reported, not failed
        CHECK(report.invariance_residual > 0.3);
    }
}

TEST_CASE("closed first-class check") {
    SUBCASE("empty set is trivially closed") {
        ConstraintSet cs;
        OperatorMatrix h = OperatorMatrix::total_number(FockSpace::per_mode({2}));
        FirstClassReport report = check_closed_first_class(cs, h);
        CHECK(report.residual_cc == 0.0);
        CHECK(report.residual_ch == 0.0);
        CHECK(cs.classification == ConstraintClass::closed_first_class);
    }

    SUBCASE("rotation constraint with the total number hamiltonian") {
        SpacePtr space = FockSpace::total_quanta(2, 6);
        ConstraintSet cs = ConstraintSet::single(OperatorMatrix::rotation_generator(space, 0, 1));
        FirstClassReport report =
            check_closed_first_class(cs, OperatorMatrix::total_number(space));
        CHECK(report.residual_cc <= 1e-12);
        CHECK(report.residual_ch <= 1e-12);
        CHECK(cs.classification == ConstraintClass::closed_first_class);
    }

    SUBCASE("a canonical pair cannot close with vanishing structure constants") {
        SpacePtr mode = FockSpace::per_mode({10});
        ConstraintSet cs;
        cs.phis = {OperatorMatrix::momentum(mode, 0), OperatorMatrix::position(mode, 0)};
        cs.structure_c = std::vector<std::vector<std::vector<double>>>(
            2, std::vector<std::vector<double>>(2, std::vector<double>(2, 0.0)));
        cs.structure_h = std::vector<std::vector<double>>(2, std::vector<double>(2, 0.0));
        FirstClassReport report =
            check_closed_first_class(cs, OperatorMatrix::total_number(mode));
        CHECK(report.residual_cc > 1e-3);
        CHECK(cs.classification == ConstraintClass::unverified);
    }

    SUBCASE("missing structure constants are rejected") {
        SpacePtr space = FockSpace::total_quanta(2, 4);
        ConstraintSet cs;
        cs.phis = {OperatorMatrix::rotation_generator(space, 0, 1)};
        CHECK_THROWS_AS(check_closed_first_class(cs, OperatorMatrix::total_number(space)),
                        Error);
    }
}

TEST_CASE("projector commutes with symmetry evolution") {
    SpacePtr space = FockSpace::total_quanta(2, 8);
    OperatorMatrix l3 = OperatorMatrix::rotation_generator(space, 0, 1);
    OperatorMatrix h = OperatorMatrix::total_number(space);
    Projector e = projector_group_average_u1(l3, 17);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    for (int trial = 0; trial < 4; ++trial) {
        OperatorMatrix u = matrix_exponential(h, cplx(0.0, -dist(rng)));
        Matrix defect = e.matrix.entries() * u.entries() - u.entries() * e.matrix.entries();
        CHECK(spectral_norm(defect) <= 1e-12);
    }
}
