#ifndef AFFSYM_SRC_VERIFY_CHECKS_HPP
#define AFFSYM_SRC_VERIFY_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace affsym::verify::detail {

struct Context {
    long n;
    long trials;
    std::uint64_t stream;
    double tol_alg;
    double tol_fd;
    double fd_step;
};

/// alg: tol_alg absolute. fd: tol_fd relative. exact: must be 0.
/// pairing: 1e-12, for identities whose only error is a Gram solve.
enum class Tier { alg, fd, exact, pairing };

struct CheckSpec {
    std::string name;
    std::string description;
    Tier tier;
    double (*residual)(const Context&);
};

const std::vector<CheckSpec>& registry();

}  // namespace affsym::verify::detail

#endif  // AFFSYM_SRC_VERIFY_CHECKS_HPP
