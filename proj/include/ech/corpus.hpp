#pragma once

#include <string>
#include <vector>

#include "ech/geometry.hpp"

namespace ech {

struct NamedDomain {
    std::string name;
    ConvexDomain domain;
    std::string note;
};

// The built-in example domains used by tests and the `sweep` command. Covers
// lattice and rational domains, standard and free position, weight sequences
// with and without a unit weight, and gcd 1 and gcd > 1.
const std::vector<NamedDomain>& corpus();

// Lookup by name; throws std::invalid_argument listing the known names.
const NamedDomain& corpus_domain(const std::string& name);

}  // namespace ech
