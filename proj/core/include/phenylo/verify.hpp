#ifndef PHENYLO_VERIFY_HPP
#define PHENYLO_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phenylo/cuts.hpp"
#include "phenylo/enumeration.hpp"
#include "phenylo/families.hpp"

namespace phenylo {

struct ValueGroup {
    long long value = 0;
    std::vector<int> members;            // indices into catalog.entries
    std::vector<std::string> labels;     // recognized family names or cert hashes
};

// Full ranking of a catalog by Mostar value, groups strictly increasing.
struct RankingReport {
    int h = 0;
    bool chains_only = false;
    bool planar_only = false;
    ClassCatalog catalog;
    std::vector<ValueGroup> groups;
};

RankingReport rank(int h, const EnumerateOptions& opts = {});
RankingReport rank(const ClassCatalog& catalog);

// Outcome of one theorem / lemma check. pass requires exact integer equality
// of values and exact set equality (by certificate) of attaining classes.
struct Verdict {
    std::string name;
    bool pass = false;
    bool asserted = true;  // false: empirical report only, no theorem claim
    long long expected_value = 0;
    long long observed_value = 0;
    std::vector<std::string> expected_members;
    std::vector<std::string> observed_members;
    std::string detail;
};

// Minimum is L_h alone (h >= 2; h = 1 has a single class and is reported
// unasserted).
Verdict verify_min(int h, const EnumerateOptions& opts = {});
Verdict verify_min(const RankingReport& report);

// Second group: {C_L(1,h-2), C_L(1,h-4,1)} for h >= 5, {P_L(1,1,1)} at 288
// for h = 4; below that the observed group is reported without a claim.
Verdict verify_second(int h, const EnumerateOptions& opts = {});
Verdict verify_second(const RankingReport& report);

// Third group: {P_L(1,1,h-3)} for h >= 5; reported unasserted for h = 4.
Verdict verify_third(int h, const EnumerateOptions& opts = {});
Verdict verify_third(const RankingReport& report);

// Attachment-transformation check: P with a free boundary edge (hex, slot)
// and a linear chain L_k attached in its three orientations. Asserts
// Mo(P_2) <= Mo(P_1) with equality iff |r_t - r_s| >= k-1 and
// min(r_s, r_t) = 0, and Mo(P_2) < Mo(P_3).
struct Lemma31Result {
    bool pass = false;
    long long mo_p1 = 0, mo_p2 = 0, mo_p3 = 0;
    int r_s = 0, r_t = 0;
    bool equality_expected = false;
    std::string detail;
};
Lemma31Result check_lemma_3_1(const PhenyleneTree& p, int hex, int slot, int k);

// Straightening check: attaching L_k at the middle free edge of a turn
// hexagon never exceeds attaching any chain C_k there (over all terminal
// attachment edges and both mirror orientations of C_k).
struct LemmaCheck {
    bool pass = false;
    std::string detail;
};
LemmaCheck check_corollary_3_2(const PhenyleneTree& p, int turn_hex,
                               const PhenyleneTree& c_k);

// Branch-merging check: two linear branches L_j, L_k on a terminal hexagon
// versus one merged branch L_{j+k}; the merged form is strictly smaller.
// Preconditions: j, k >= 1 and p.h - 1 >= max(j, k).
LemmaCheck check_lemma_3_3(const PhenyleneTree& p, int terminal_hex, int j, int k);

// Mo(C_L(j, h-j-1)) strictly increasing for j = 1..floor((h-1)/2).
LemmaCheck check_lemma_4_1(int h);

// Trichotomy of Mo(P_L(j,k,n)) against Mo(C_L(2,h-3)) over all admissible
// triples with j+k+n+1 = h, including the exact tie P_L(1,2,2) at h = 6.
LemmaCheck check_lemma_5_2(int h);

// Seeded random decorated trees for the trial suites (plumbing; uniform over
// growth choices, not over isomorphism classes).
PhenyleneTree random_tree(int h, std::mt19937_64& rng);
PhenyleneTree random_chain(int h, std::mt19937_64& rng);

struct TrialSummary {
    std::string lemma;
    int trials = 0;
    int failures = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string detail;
};

// Seeded random-instance suites over h <= max_h.
TrialSummary run_lemma_3_1_trials(int trials, std::uint64_t seed, int max_h = 8);
TrialSummary run_corollary_3_2_trials(int trials, std::uint64_t seed, int max_h = 8);
TrialSummary run_lemma_3_3_trials(int trials, std::uint64_t seed, int max_h = 8);

}  // namespace phenylo

#endif
