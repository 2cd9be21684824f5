#ifndef FOCKPROJ_CORE_ERRORS_HPP
#define FOCKPROJ_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fockproj {

enum class errc {
    invalid_argument,
    dimension_mismatch,
    mode_out_of_range,
    dimension_ceiling,
    not_hermitian,
    guard_exceeded,
    annihilated_state,
    quadrature_failure,
    non_finite,
    io_failure,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace fockproj

#endif
