#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cra {

/// Input outside the mathematical domain of an operation (k outside the
/// Brillouin zone, energy inside the band, even lattice size, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure could not produce a trustworthy answer.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A resource precondition failed; carries the smallest lattice that would work.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& what, std::size_t required_sites)
        : std::runtime_error(what), required_sites_(required_sites) {}

    std::size_t required_sites() const noexcept { return required_sites_; }

private:
    std::size_t required_sites_;
};

}  // namespace cra
