#ifndef PHENYLO_FAMILIES_HPP
#define PHENYLO_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "phenylo/phenylene.hpp"

namespace phenylo {

// Segment-notation chain spec: k+1 segment parameters t_1..t_{k+1}
// (segment lengths t_1+1, t_2+2, ..., t_k+2, t_{k+1}+1) plus one flag per
// internal segment S_2..S_k, true = zigzag. sum(t) + k must equal h.
struct SegmentSpec {
    std::vector<int> t_values;
    std::vector<bool> zigzag;  // size max(k-1, 0); defaulted to all-true

    int h() const;
};

// Linear chain L_h. Throws std::invalid_argument for h < 1.
PhenyleneTree linear(int h);

// Chain from a turn word over {S, L, R}, one letter per internal hexagon
// (word length h-2; empty word gives L_2).
PhenyleneTree chain_from_turns(const std::string& word);

// Chain realizing spec; segments(result) round-trips the lengths and flags.
PhenyleneTree segment_chain(const SegmentSpec& spec);

// C_L(t_1,...,t_{k+1}): all internal segments zigzag.
PhenyleneTree cl(const std::vector<int>& t_values);

// P_L(j,k,n): one full-hexagon with three linear branches, 1 <= j <= k <= n,
// h = j+k+n+1. Branches attach at full-hexagon slots {0, 2, 4}.
PhenyleneTree pl(int j, int k, int n);

struct NamedTree {
    std::string name;
    PhenyleneTree tree;
};

struct FamilySet {
    std::vector<NamedTree> members;
    bool complete = false;  // all named members admissible and distinct
};

// {C_L(1,h-2), C_L(1,h-4,1)}: the chains attaining the second-minimal value.
// h >= 4; at h = 4 the two coincide up to isomorphism is impossible (both
// exist and are distinct from h >= 4 on). Throws for h < 4.
FamilySet second_minimal_set(int h);

// The seven chains attaining the third-minimal chain value. Members whose
// t-values are inadmissible at the given h are dropped and `complete` is
// false. Throws for h < 5 (no admissible member below that).
FamilySet third_minimal_chain_set(int h);

// CLI family grammar: "linear:h", "chain:WORD", "cl:t1,t2,...", "pl:j,k,n".
PhenyleneTree parse_family_spec(const std::string& spec);

// Best-effort inverse: family name whose construction is
// certificate-identical to t, if any is recognized at this h.
std::optional<std::string> recognize_family(const PhenyleneTree& t);

}  // namespace phenylo

#endif
