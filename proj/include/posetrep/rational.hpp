#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace posetrep {

// Exact rational scalar. All linear algebra in this project is exact; no
// floating point is used anywhere in the computational core.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3", "-7/2". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& s);

std::string to_string(const Rat& r);

}  // namespace posetrep
