#ifndef PHENYLO_ISOMORPHISM_HPP
#define PHENYLO_ISOMORPHISM_HPP

#include <string>

#include "phenylo/molecular_graph.hpp"

namespace phenylo {

// Exact isomorphism test: backtracking over color classes obtained from
// degree / distance-profile refinement. Intended for graphs up to ~80
// vertices; can be slow on adversarial inputs outside that envelope.
bool are_isomorphic(const MolecularGraph& g1, const MolecularGraph& g2);

// Label-invariant certificate: canonical adjacency encoding minimized over
// refinement-respecting labelings. Isomorphic graphs yield identical bytes.
// Collision-freeness at desk scale is asserted by tests against
// are_isomorphic, not assumed.
std::string certificate(const MolecularGraph& g);

// Short stable display form of a certificate (FNV-1a 64 in hex).
std::string certificate_hash(const std::string& cert);

}  // namespace phenylo

#endif
