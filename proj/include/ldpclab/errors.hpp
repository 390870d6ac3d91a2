#pragma once

#include <stdexcept>
#include <string>

namespace ldpclab {

// Bad user-facing configuration (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeded a configured cap: ball too large, kernel too big to
// enumerate, rejection sampler out of retries (CLI exit code 3).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ldpclab
