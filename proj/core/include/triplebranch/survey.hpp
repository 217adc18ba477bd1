#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplebranch/congruence.hpp"
#include "triplebranch/decomposition.hpp"

namespace tb {

enum class InertiaStatus {
    kClasses,           // at least one inertia class exists
    kNoInertia,         // numerically valid tuple, no compatible inertia type
    kUnsupportedShape,  // s > 1 outside the two-generator divisibility chain
};

struct RamificationEntry {
    RamificationType z;
    InertiaStatus status = InertiaStatus::kClasses;
    std::vector<InertiaType> classes;
    std::string note;
};

struct GenusSurvey {
    int genus = 0;
    std::vector<RamificationEntry> entries;  // sorted by (s, c0, c1, cinf)

    long long class_count() const;
};

GenusSurvey survey_genus(int genus);

struct CoverAnalysis {
    RamificationType z;
    InertiaType a;
    CongruenceSet supersingular;  // mod the group exponent
};

struct GenusAnalysis {
    int genus = 0;
    std::vector<CoverAnalysis> covers;  // canonical cover order
    CongruenceSet sg;                   // union over all covers
    Rational natural_density;
};

// Per-cover supersingular congruence sets and the genus-level union.
// Work items fan out over a bounded worker pool; the merge is canonical.
GenusAnalysis analyze_genus(int genus, int jobs = 1);

// Every non-cyclic cover paired with its curated Kani-Rosen ledger.
struct DecomposedCover {
    RamificationType z;
    InertiaType a;
    JacobianLedger ledger;
};
std::vector<DecomposedCover> noncyclic_decompositions(int genus);

}  // namespace tb
