#pragma once

#include <stdexcept>
#include <string>

namespace catena {

// Failure classes a caller can dispatch on.  Input problems (the monoid is
// not reduced, a generator is zero, ...) are distinct from resource limits
// (search budget, fiber cap) so a CLI can map them to different exit codes.
enum class errc {
    overflow,
    budget_exceeded,
    fiber_cap_exceeded,
    not_reduced,
    zero_generator,
    duplicate_generator,
    not_minimal_generating,
    bad_input,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline bool is_resource_error(errc c) {
    return c == errc::overflow || c == errc::budget_exceeded || c == errc::fiber_cap_exceeded;
}

} // namespace catena
