#ifndef TWC_FAMILY_HPP
#define TWC_FAMILY_HPP

#include <random>
#include <string>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

// Named families, parsed from descriptors like "path:4", "cycle:5",
// "complete:4", "star:3", "b1:3,3", "b2:3,3,2", "b3:1,1,1".
struct FamilySpec {
    std::string kind;
    std::vector<int> params;
};

FamilySpec parse_family_spec(const std::string& text);
Graph family(const FamilySpec& spec);
Graph family(const std::string& text);
bool looks_like_family_spec(const std::string& text);

// Canonical vertex numbering (base first in traversal order):
//   b1:p,q   shared vertex 1; C_p = 1,2..p; C_q = 1,p+1..p+q-1.
//   b2:p,q,r C_p = 1..p with hub 1; path 1,p+1,..,p+r-2 ending at hub
//            p+r-1; C_q = hub,p+r,..,p+q+r-2. r is the path order (r=2
//            means the hubs are adjacent).
//   b3:p,q,r hubs 1,2; internal path vertices 3..p+2, p+3..p+q+2,
//            p+q+3..p+q+r+2.

// Random members of the parity-classified unicyclic families: even n, all
// hanging trees with even edge count have >= 2 edges and those with odd
// count have >= 3. s = number of even hanging trees on cycle vertices is odd
// for the first family, even for the second.
Graph random_unicyclic_parity_family(std::mt19937& rng, bool s_odd);

// Random labeled tree on n vertices (uniform via Pruefer sequences).
Graph random_tree(std::mt19937& rng, int n);

}  // namespace twc

#endif
