// Exercises the shared-library surface: handle lifecycles, error codes,
// and the JSON suite entry point. Plain asserts, no framework.

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "fockproj/fockproj.h"

#define REQUIRE(cond)                                                        \
    do {                                                                     \
        if (!(cond)) {                                                       \
            std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                        \
        }                                                                    \
    } while (0)

int main() {
    REQUIRE(std::strlen(fockproj_version()) > 0);
    REQUIRE(std::string(fockproj_status_string(FOCKPROJ_OK)) == "ok");
    REQUIRE(std::strlen(fockproj_status_string(FOCKPROJ_ERR_NOT_HERMITIAN)) > 0);

    // space lifecycle and index maps
    fockproj_space* space = nullptr;
    const int32_t cutoffs[2] = {3, 3};
    REQUIRE(fockproj_space_create_per_mode(cutoffs, 2, &space) == FOCKPROJ_OK);
    REQUIRE(fockproj_space_dimension(space) == 16);
    REQUIRE(fockproj_space_modes(space) == 2);

    const int32_t occ[2] = {1, 2};
    int64_t flat = -1;
    REQUIRE(fockproj_space_flat_index(space, occ, &flat) == FOCKPROJ_OK);
    int32_t back[2] = {-1, -1};
    REQUIRE(fockproj_space_occupations(space, flat, back) == FOCKPROJ_OK);
    REQUIRE(back[0] == 1 && back[1] == 2);

    fockproj_space* tq = nullptr;
    REQUIRE(fockproj_space_create_total_quanta(2, 4, &tq) == FOCKPROJ_OK);
    REQUIRE(fockproj_space_dimension(tq) == 15);

    // error paths surface as status codes with messages
    fockproj_space* bad = nullptr;
    REQUIRE(fockproj_space_create_total_quanta(0, 4, &bad) == FOCKPROJ_ERR_INVALID_ARGUMENT);
    REQUIRE(std::strlen(fockproj_last_error()) > 0);
    REQUIRE(fockproj_space_create_per_mode(nullptr, 2, &bad) == FOCKPROJ_ERR_NULL_POINTER);

    fockproj_operator* a = nullptr;
    REQUIRE(fockproj_operator_annihilation(space, 5, &a) == FOCKPROJ_ERR_MODE_OUT_OF_RANGE);
    REQUIRE(fockproj_operator_annihilation(space, 0, &a) == FOCKPROJ_OK);

    // eigenvalues of a non-hermitian operator are refused
    std::vector<double> evals(16);
    REQUIRE(fockproj_operator_eigenvalues(a, evals.data()) == FOCKPROJ_ERR_NOT_HERMITIAN);

    // [Q, P] = i on the interior of a single-mode space
    fockproj_space* mode = nullptr;
    const int32_t five[1] = {5};
    REQUIRE(fockproj_space_create_per_mode(five, 1, &mode) == FOCKPROJ_OK);
    fockproj_operator* q = nullptr;
    fockproj_operator* p = nullptr;
    REQUIRE(fockproj_operator_position(mode, 0, &q) == FOCKPROJ_OK);
    REQUIRE(fockproj_operator_momentum(mode, 0, &p) == FOCKPROJ_OK);
    fockproj_operator* qp = nullptr;
    REQUIRE(fockproj_operator_commutator(q, p, &qp) == FOCKPROJ_OK);
    double re = 0.0, im = 0.0;
    REQUIRE(fockproj_operator_element(qp, 0, 0, &re, &im) == FOCKPROJ_OK);
    REQUIRE(std::abs(re) < 1e-14 && std::abs(im - 1.0) < 1e-14);
    REQUIRE(fockproj_operator_element(qp, 99, 0, &re, &im) == FOCKPROJ_ERR_INVALID_ARGUMENT);

    // exp(-iπ N)|1> = -|1>
    fockproj_operator* n = nullptr;
    REQUIRE(fockproj_operator_number(mode, 0, &n) == FOCKPROJ_OK);
    fockproj_operator* u = nullptr;
    REQUIRE(fockproj_operator_exponential(n, 0.0, -M_PI, &u) == FOCKPROJ_OK);
    REQUIRE(fockproj_operator_element(u, 1, 1, &re, &im) == FOCKPROJ_OK);
    REQUIRE(std::abs(re + 1.0) < 1e-13 && std::abs(im) < 1e-13);

    // coherent amplitudes and the closed-form overlap agree
    const double pv[1] = {0.0};
    const double qv[1] = {std::sqrt(2.0)};  // z = 1
    std::vector<double> amps(2 * 6);
    double deficit = -1.0;
    REQUIRE(fockproj_coherent_amplitudes(mode, pv, qv, 1, amps.data(), &deficit) == FOCKPROJ_OK);
    REQUIRE(std::abs(amps[0] - std::exp(-0.5)) < 1e-12);
    REQUIRE(deficit > 0.0);

    const double origin[1] = {0.0};
    REQUIRE(fockproj_overlap_closed_form(1, origin, origin, 1, pv, qv, 1, &re, &im) ==
            FOCKPROJ_OK);
    REQUIRE(std::abs(re - std::exp(-0.5)) < 1e-14 && std::abs(im) < 1e-14);

    // upper symbol of the number operator is |z|²
    REQUIRE(fockproj_upper_symbol(n, pv, qv, 1, &re, &im) == FOCKPROJ_OK);
    REQUIRE(std::abs(re - 1.0) < 1e-10 && std::abs(im) < 1e-12);

    // bessel guard
    REQUIRE(fockproj_bessel_i0(0.0, 0.0, &re, &im) == FOCKPROJ_OK && re == 1.0);
    REQUIRE(fockproj_bessel_i0(60.0, 0.0, &re, &im) == FOCKPROJ_ERR_GUARD_EXCEEDED);

    // projector construction through the C surface
    fockproj_operator* l3 = nullptr;
    REQUIRE(fockproj_operator_rotation_generator(tq, 0, 1, &l3) == FOCKPROJ_OK);
    fockproj_projector* group = nullptr;
    REQUIRE(fockproj_projector_group_average_u1(l3, 9, &group) == FOCKPROJ_OK);
    REQUIRE(fockproj_projector_rank(group) == 3);
    REQUIRE(fockproj_projector_is_valid(group) == 1);

    const fockproj_operator* phis[1] = {l3};
    fockproj_projector* spectral = nullptr;
    REQUIRE(fockproj_projector_spectral(phis, 1, 1e-10, &spectral) == FOCKPROJ_OK);
    REQUIRE(fockproj_projector_rank(spectral) == 3);

    double idem = 1.0, herm = 1.0;
    REQUIRE(fockproj_projector_residuals(group, &idem, &herm) == FOCKPROJ_OK);
    REQUIRE(idem <= 1e-10 && herm <= 1e-10);

    // the two constructions agree entry by entry
    fockproj_operator* gm = nullptr;
    fockproj_operator* sm = nullptr;
    REQUIRE(fockproj_projector_matrix(group, &gm) == FOCKPROJ_OK);
    REQUIRE(fockproj_projector_matrix(spectral, &sm) == FOCKPROJ_OK);
    fockproj_operator* diff = nullptr;
    REQUIRE(fockproj_operator_add_scaled(gm, sm, -1.0, 0.0, &diff) == FOCKPROJ_OK);
    double norm = 1.0;
    REQUIRE(fockproj_operator_spectral_norm(diff, &norm) == FOCKPROJ_OK);
    REQUIRE(norm <= 1e-12);

    // projected evolution commutes through for H = N_total
    fockproj_operator* ntot = nullptr;
    REQUIRE(fockproj_operator_total_number(tq, &ntot) == FOCKPROJ_OK);
    fockproj_operator* trotter = nullptr;
    REQUIRE(fockproj_evolve_projected_trotter(ntot, group, 1.0, 5, &trotter) == FOCKPROJ_OK);
    fockproj_operator* exact = nullptr;
    REQUIRE(fockproj_evolve_projected_exact(ntot, group, 1.0, &exact) == FOCKPROJ_OK);
    fockproj_operator* dyn_diff = nullptr;
    REQUIRE(fockproj_operator_add_scaled(trotter, exact, -1.0, 0.0, &dyn_diff) == FOCKPROJ_OK);
    REQUIRE(fockproj_operator_spectral_norm(dyn_diff, &norm) == FOCKPROJ_OK);
    REQUIRE(norm <= 1e-12);

    // gaussian-pair projector on a single mode
    fockproj_space* m12 = nullptr;
    const int32_t twelve[1] = {12};
    REQUIRE(fockproj_space_create_per_mode(twelve, 1, &m12) == FOCKPROJ_OK);
    fockproj_projector* vacuum = nullptr;
    REQUIRE(fockproj_projector_gaussian_pair(m12, 0, 48, 10.0, &vacuum) == FOCKPROJ_OK);
    REQUIRE(fockproj_projector_rank(vacuum) == 1);

    // kernel of the invariant projector at the origin
    const double zero2[2] = {0.0, 0.0};
    REQUIRE(fockproj_kernel_value(gm, zero2, zero2, zero2, zero2, &re, &im) == FOCKPROJ_OK);
    REQUIRE(std::abs(re - 1.0) < 1e-12);

    // run a small suite through the JSON entry point
    char* report = nullptr;
    int32_t all_passed = 0;
    REQUIRE(fockproj_run_suite(
                R"({"subcommand": "unity", "per_mode": [6], "points": 16})", &report,
                &all_passed) == FOCKPROJ_OK);
    REQUIRE(all_passed == 1);
    REQUIRE(std::strstr(report, "\"checks\"") != nullptr);

    char* csv = nullptr;
    REQUIRE(fockproj_report_to_csv(report, &csv) == FOCKPROJ_OK);
    REQUIRE(std::strncmp(csv, "name,value,tolerance,pass\n", 26) == 0);
    fockproj_string_free(csv);
    fockproj_string_free(report);

    REQUIRE(fockproj_run_suite("{\"subcommand\": \"nope\"}", &report, &all_passed) ==
            FOCKPROJ_ERR_INVALID_ARGUMENT);
    REQUIRE(fockproj_run_suite(nullptr, &report, &all_passed) == FOCKPROJ_ERR_NULL_POINTER);

    fockproj_operator_free(a);
    fockproj_operator_free(q);
    fockproj_operator_free(p);
    fockproj_operator_free(qp);
    fockproj_operator_free(n);
    fockproj_operator_free(u);
    fockproj_operator_free(l3);
    fockproj_operator_free(gm);
    fockproj_operator_free(sm);
    fockproj_operator_free(diff);
    fockproj_operator_free(ntot);
    fockproj_operator_free(trotter);
    fockproj_operator_free(exact);
    fockproj_operator_free(dyn_diff);
    fockproj_projector_free(group);
    fockproj_projector_free(spectral);
    fockproj_projector_free(vacuum);
    fockproj_space_free(space);
    fockproj_space_free(tq);
    fockproj_space_free(mode);
    fockproj_space_free(m12);

    std::puts("capi tests passed");
    return 0;
}
