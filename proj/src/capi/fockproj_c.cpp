#include "fockproj/fockproj.h"

#include <cstring>
#include <new>

#include "../core/dynamics.hpp"
#include "../core/special_functions.hpp"
#include "../core/suite.hpp"

using namespace fockproj;

struct fockproj_space {
    SpacePtr impl;
};

struct fockproj_operator {
    OperatorMatrix impl;
};

struct fockproj_projector {
    Projector impl;
};

namespace {

thread_local std::string g_last_error;

fockproj_status map_errc(errc code) {
    switch (code) {
        case errc::invalid_argument: return FOCKPROJ_ERR_INVALID_ARGUMENT;
        case errc::dimension_mismatch: return FOCKPROJ_ERR_DIMENSION_MISMATCH;
        case errc::mode_out_of_range: return FOCKPROJ_ERR_MODE_OUT_OF_RANGE;
        case errc::dimension_ceiling: return FOCKPROJ_ERR_DIMENSION_CEILING;
        case errc::not_hermitian: return FOCKPROJ_ERR_NOT_HERMITIAN;
        case errc::guard_exceeded: return FOCKPROJ_ERR_GUARD_EXCEEDED;
        case errc::annihilated_state: return FOCKPROJ_ERR_ANNIHILATED_STATE;
        case errc::quadrature_failure: return FOCKPROJ_ERR_QUADRATURE;
        case errc::non_finite: return FOCKPROJ_ERR_NON_FINITE;
        case errc::io_failure: return FOCKPROJ_ERR_IO;
    }
    return FOCKPROJ_ERR_INTERNAL;
}

template <typename F>
fockproj_status guarded(F&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const Error& err) {
        g_last_error = err.what();
        return map_errc(err.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FOCKPROJ_ERR_INTERNAL;
    } catch (const std::exception& ex) {
        g_last_error = ex.what();
        return FOCKPROJ_ERR_INTERNAL;
    }
}

bool all_nonnull(std::initializer_list<const void*> ptrs) {
    for (const void* p : ptrs)
        if (p == nullptr) return false;
    return true;
}

fockproj_status null_fail() {
    g_last_error = "null pointer argument";
    return FOCKPROJ_ERR_NULL_POINTER;
}

CoherentLabel label_from(const fockproj_space* space, const double* p, const double* q,
                         int32_t weyl) {
    int modes = space->impl->modes();
    std::vector<double> pv(p, p + modes), qv(q, q + modes);
    return CoherentLabel::make(std::move(pv), std::move(qv),
                               weyl ? Convention::weyl : Convention::canonical);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* fockproj_version(void) { return library_version(); }

const char* fockproj_status_string(fockproj_status status) {
    switch (status) {
        case FOCKPROJ_OK: return "ok";
        case FOCKPROJ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case FOCKPROJ_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
        case FOCKPROJ_ERR_MODE_OUT_OF_RANGE: return "mode out of range";
        case FOCKPROJ_ERR_DIMENSION_CEILING: return "dimension ceiling exceeded";
        case FOCKPROJ_ERR_NOT_HERMITIAN: return "operator not hermitian";
        case FOCKPROJ_ERR_GUARD_EXCEEDED: return "magnitude guard exceeded";
        case FOCKPROJ_ERR_ANNIHILATED_STATE: return "state annihilated";
        case FOCKPROJ_ERR_QUADRATURE: return "quadrature did not converge";
        case FOCKPROJ_ERR_NON_FINITE: return "non-finite values";
        case FOCKPROJ_ERR_IO: return "i/o failure";
        case FOCKPROJ_ERR_NULL_POINTER: return "null pointer";
        case FOCKPROJ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fockproj_last_error(void) { return g_last_error.c_str(); }

/* ---- spaces ---- */

fockproj_status fockproj_space_create_per_mode(const int32_t* n_max, int32_t modes,
                                               fockproj_space** out) {
    if (!all_nonnull({n_max, out})) return null_fail();
    return guarded([&] {
        std::vector<int> cutoffs(n_max, n_max + std::max<int32_t>(modes, 0));
        *out = new fockproj_space{FockSpace::per_mode(std::move(cutoffs))};
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_space_create_total_quanta(int32_t modes, int32_t total_max,
                                                   fockproj_space** out) {
    if (!all_nonnull({out})) return null_fail();
    return guarded([&] {
        *out = new fockproj_space{FockSpace::total_quanta(modes, total_max)};
        return FOCKPROJ_OK;
    });
}

void fockproj_space_free(fockproj_space* space) { delete space; }

int64_t fockproj_space_dimension(const fockproj_space* space) {
    return space ? space->impl->dimension() : 0;
}

int32_t fockproj_space_modes(const fockproj_space* space) {
    return space ? space->impl->modes() : 0;
}

fockproj_status fockproj_space_flat_index(const fockproj_space* space, const int32_t* occ,
                                          int64_t* out_flat) {
    if (!all_nonnull({space, occ, out_flat})) return null_fail();
    return guarded([&] {
        std::vector<int> o(occ, occ + space->impl->modes());
        *out_flat = space->impl->flat_index(o);
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_space_occupations(const fockproj_space* space, int64_t flat,
                                           int32_t* out_occ) {
    if (!all_nonnull({space, out_occ})) return null_fail();
    return guarded([&] {
        const auto& occ = space->impl->occupations(flat);
        for (std::size_t j = 0; j < occ.size(); ++j) out_occ[j] = occ[j];
        return FOCKPROJ_OK;
    });
}

/* ---- operators ---- */

namespace {

template <typename F>
fockproj_status make_operator(fockproj_operator** out, F&& build) {
    if (out == nullptr) return null_fail();
    return guarded([&] {
        *out = new fockproj_operator{build()};
        return FOCKPROJ_OK;
    });
}

}  // namespace

fockproj_status fockproj_operator_identity(const fockproj_space* space, fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::identity(space->impl); });
}

fockproj_status fockproj_operator_annihilation(const fockproj_space* space, int32_t mode,
                                               fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::annihilation(space->impl, mode); });
}

fockproj_status fockproj_operator_creation(const fockproj_space* space, int32_t mode,
                                           fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::creation(space->impl, mode); });
}

fockproj_status fockproj_operator_position(const fockproj_space* space, int32_t mode,
                                           fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::position(space->impl, mode); });
}

fockproj_status fockproj_operator_momentum(const fockproj_space* space, int32_t mode,
                                           fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::momentum(space->impl, mode); });
}

fockproj_status fockproj_operator_number(const fockproj_space* space, int32_t mode,
                                         fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::number(space->impl, mode); });
}

fockproj_status fockproj_operator_total_number(const fockproj_space* space,
                                               fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(out, [&] { return OperatorMatrix::total_number(space->impl); });
}

fockproj_status fockproj_operator_rotation_generator(const fockproj_space* space, int32_t mode_a,
                                                     int32_t mode_b, fockproj_operator** out) {
    if (!all_nonnull({space})) return null_fail();
    return make_operator(
        out, [&] { return OperatorMatrix::rotation_generator(space->impl, mode_a, mode_b); });
}

void fockproj_operator_free(fockproj_operator* op) { delete op; }

fockproj_status fockproj_operator_add_scaled(const fockproj_operator* a,
                                             const fockproj_operator* b, double scale_re,
                                             double scale_im, fockproj_operator** out) {
    if (!all_nonnull({a, b})) return null_fail();
    return make_operator(out, [&] {
        return a->impl.plus(b->impl.scaled(cplx(scale_re, scale_im)));
    });
}

fockproj_status fockproj_operator_multiply(const fockproj_operator* a, const fockproj_operator* b,
                                           fockproj_operator** out) {
    if (!all_nonnull({a, b})) return null_fail();
    return make_operator(out, [&] { return a->impl.times(b->impl); });
}

fockproj_status fockproj_operator_adjoint(const fockproj_operator* a, fockproj_operator** out) {
    if (!all_nonnull({a})) return null_fail();
    return make_operator(out, [&] { return a->impl.adjoint(); });
}

fockproj_status fockproj_operator_commutator(const fockproj_operator* a,
                                             const fockproj_operator* b,
                                             fockproj_operator** out) {
    if (!all_nonnull({a, b})) return null_fail();
    return make_operator(out, [&] { return commutator(a->impl, b->impl); });
}

fockproj_status fockproj_operator_exponential(const fockproj_operator* a, double t_re,
                                              double t_im, fockproj_operator** out) {
    if (!all_nonnull({a})) return null_fail();
    return make_operator(out, [&] {
        OperatorMatrix base = a->impl;
        if (!base.hermitian_flag() &&
            base.hermiticity_residual() <= OperatorMatrix::flag_tolerance)
            base.set_hermitian();
        return matrix_exponential(base, cplx(t_re, t_im));
    });
}

fockproj_status fockproj_operator_element(const fockproj_operator* a, int64_t row, int64_t col,
                                          double* out_re, double* out_im) {
    if (!all_nonnull({a, out_re, out_im})) return null_fail();
    return guarded([&] {
        require(row >= 0 && row < a->impl.dimension() && col >= 0 && col < a->impl.dimension(),
                errc::invalid_argument, "matrix element out of range");
        cplx v = a->impl.entries()(row, col);
        *out_re = v.real();
        *out_im = v.imag();
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_operator_trace(const fockproj_operator* a, double* out_re,
                                        double* out_im) {
    if (!all_nonnull({a, out_re, out_im})) return null_fail();
    return guarded([&] {
        cplx v = a->impl.trace();
        *out_re = v.real();
        *out_im = v.imag();
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_operator_spectral_norm(const fockproj_operator* a, double* out) {
    if (!all_nonnull({a, out})) return null_fail();
    return guarded([&] {
        *out = spectral_norm(a->impl);
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_operator_eigenvalues(const fockproj_operator* a, double* out) {
    if (!all_nonnull({a, out})) return null_fail();
    return guarded([&] {
        EigenSystem es = hermitian_eigensystem(a->impl);
        for (Eigen::Index i = 0; i < es.values.size(); ++i) out[i] = es.values(i);
        return FOCKPROJ_OK;
    });
}

/* ---- coherent states ---- */

fockproj_status fockproj_coherent_amplitudes(const fockproj_space* space, const double* p,
                                             const double* q, int32_t weyl,
                                             double* out_amplitudes, double* out_norm_deficit) {
    if (!all_nonnull({space, p, q, out_amplitudes, out_norm_deficit})) return null_fail();
    return guarded([&] {
        StateVector st = coherent_state(space->impl, label_from(space, p, q, weyl));
        for (Index i = 0; i < st.amplitudes.size(); ++i) {
            out_amplitudes[2 * i] = st.amplitudes(i).real();
            out_amplitudes[2 * i + 1] = st.amplitudes(i).imag();
        }
        *out_norm_deficit = st.norm_deficit;
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_overlap_closed_form(int32_t modes, const double* p_bra,
                                             const double* q_bra, int32_t weyl_bra,
                                             const double* p_ket, const double* q_ket,
                                             int32_t weyl_ket, double* out_re, double* out_im) {
    if (!all_nonnull({p_bra, q_bra, p_ket, q_ket, out_re, out_im})) return null_fail();
    return guarded([&] {
        require(modes >= 1, errc::invalid_argument, "mode count must be at least 1");
        auto make = [&](const double* p, const double* q, int32_t weyl) {
            return CoherentLabel::make(std::vector<double>(p, p + modes),
                                       std::vector<double>(q, q + modes),
                                       weyl ? Convention::weyl : Convention::canonical);
        };
        cplx v = overlap_closed_form(make(p_bra, q_bra, weyl_bra), make(p_ket, q_ket, weyl_ket));
        *out_re = v.real();
        *out_im = v.imag();
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_upper_symbol(const fockproj_operator* op, const double* p,
                                      const double* q, int32_t weyl, double* out_re,
                                      double* out_im) {
    if (!all_nonnull({op, p, q, out_re, out_im})) return null_fail();
    return guarded([&] {
        int modes = op->impl.space()->modes();
        cplx v = upper_symbol(op->impl,
                              CoherentLabel::make(std::vector<double>(p, p + modes),
                                                  std::vector<double>(q, q + modes),
                                                  weyl ? Convention::weyl : Convention::canonical));
        *out_re = v.real();
        *out_im = v.imag();
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_unity_residual(const fockproj_space* space, double box,
                                        int32_t points_per_axis, int32_t quanta_cut,
                                        double* out) {
    if (!all_nonnull({space, out})) return null_fail();
    return guarded([&] {
        *out = unity_resolution_residual(space->impl, box, points_per_axis, quanta_cut);
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_bessel_i0(double z_re, double z_im, double* out_re, double* out_im) {
    if (!all_nonnull({out_re, out_im})) return null_fail();
    return guarded([&] {
        cplx v = bessel_i0(cplx(z_re, z_im));
        *out_re = v.real();
        *out_im = v.imag();
        return FOCKPROJ_OK;
    });
}

/* ---- projectors ---- */

fockproj_status fockproj_projector_group_average_u1(const fockproj_operator* phi,
                                                    int32_t average_points,
                                                    fockproj_projector** out) {
    if (!all_nonnull({phi, out})) return null_fail();
    return guarded([&] {
        OperatorMatrix base = phi->impl;
        if (!base.hermitian_flag()) base.set_hermitian();
        *out = new fockproj_projector{projector_group_average_u1(base, average_points)};
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_projector_spectral(const fockproj_operator* const* phis, int32_t count,
                                            double zero_tol, fockproj_projector** out) {
    if (!all_nonnull({phis, out})) return null_fail();
    return guarded([&] {
        require(count >= 1, errc::invalid_argument, "need at least one constraint");
        std::vector<OperatorMatrix> ops;
        for (int32_t i = 0; i < count; ++i) {
            require(phis[i] != nullptr, errc::invalid_argument, "null constraint handle");
            ops.push_back(phis[i]->impl);
            if (!ops.back().hermitian_flag()) ops.back().set_hermitian();
        }
        *out = new fockproj_projector{projector_spectral(ops, zero_tol)};
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_projector_gaussian_pair(const fockproj_space* space, int32_t mode,
                                                 int32_t nodes_per_axis, double halfwidth,
                                                 fockproj_projector** out) {
    if (!all_nonnull({space, out})) return null_fail();
    return guarded([&] {
        *out = new fockproj_projector{
            projector_gaussian_pair(space->impl, mode, nodes_per_axis, halfwidth)};
        return FOCKPROJ_OK;
    });
}

void fockproj_projector_free(fockproj_projector* projector) { delete projector; }

fockproj_status fockproj_projector_matrix(const fockproj_projector* projector,
                                          fockproj_operator** out) {
    if (!all_nonnull({projector})) return null_fail();
    return make_operator(out, [&] { return projector->impl.matrix; });
}

int32_t fockproj_projector_rank(const fockproj_projector* projector) {
    return projector ? projector->impl.rank : -1;
}

int32_t fockproj_projector_is_valid(const fockproj_projector* projector) {
    return projector && projector->impl.valid ? 1 : 0;
}

int32_t fockproj_projector_is_empty_subspace(const fockproj_projector* projector) {
    return projector && projector->impl.empty_subspace ? 1 : 0;
}

fockproj_status fockproj_projector_residuals(const fockproj_projector* projector,
                                             double* out_idempotency,
                                             double* out_hermiticity) {
    if (!all_nonnull({projector, out_idempotency, out_hermiticity})) return null_fail();
    *out_idempotency = projector->impl.idempotency_residual;
    *out_hermiticity = projector->impl.hermiticity_residual;
    return FOCKPROJ_OK;
}

/* ---- dynamics ---- */

fockproj_status fockproj_evolve_projected_trotter(const fockproj_operator* h,
                                                  const fockproj_projector* e, double total_time,
                                                  int32_t slices, fockproj_operator** out) {
    if (!all_nonnull({h, e})) return null_fail();
    return make_operator(out, [&] {
        OperatorMatrix base = h->impl;
        if (!base.hermitian_flag()) base.set_hermitian();
        return evolve_projected_trotter(base, e->impl, total_time, slices);
    });
}

fockproj_status fockproj_evolve_projected_exact(const fockproj_operator* h,
                                                const fockproj_projector* e, double total_time,
                                                fockproj_operator** out) {
    if (!all_nonnull({h, e})) return null_fail();
    return make_operator(out, [&] {
        OperatorMatrix base = h->impl;
        if (!base.hermitian_flag()) base.set_hermitian();
        return evolve_projected_exact(base, e->impl, total_time);
    });
}

fockproj_status fockproj_kernel_value(const fockproj_operator* op, const double* p_bra,
                                      const double* q_bra, const double* p_ket,
                                      const double* q_ket, double* out_re, double* out_im) {
    if (!all_nonnull({op, p_bra, q_bra, p_ket, q_ket, out_re, out_im})) return null_fail();
    return guarded([&] {
        int modes = op->impl.space()->modes();
        auto make = [&](const double* p, const double* q) {
            return CoherentLabel::make(std::vector<double>(p, p + modes),
                                       std::vector<double>(q, q + modes), Convention::weyl);
        };
        KernelReport report =
            kernel_grid(op->impl, {{make(p_bra, q_bra), make(p_ket, q_ket)}});
        *out_re = report.entries.front().matrix_value.real();
        *out_im = report.entries.front().matrix_value.imag();
        return FOCKPROJ_OK;
    });
}

/* ---- suites ---- */

fockproj_status fockproj_run_suite(const char* config_json, char** out_report_json,
                                   int32_t* out_all_passed) {
    if (!all_nonnull({config_json, out_report_json, out_all_passed})) return null_fail();
    return guarded([&] {
        RunConfig config = config_from_json(config_json);
        RunReport report = run_suite(std::move(config));
        *out_report_json = dup_string(report_to_json(report));
        *out_all_passed = report.all_passed ? 1 : 0;
        return FOCKPROJ_OK;
    });
}

fockproj_status fockproj_report_to_csv(const char* report_json, char** out_csv) {
    if (!all_nonnull({report_json, out_csv})) return null_fail();
    return guarded([&] {
        *out_csv = dup_string(report_json_to_csv(report_json));
        return FOCKPROJ_OK;
    });
}

void fockproj_string_free(char* text) { delete[] text; }

}  // extern "C"
