#pragma once

#include <map>
#include <string>
#include <vector>

#include "triplebranch/oracle.hpp"
#include "triplebranch/survey.hpp"

namespace tb {

// Quadratic non-residues among the units mod M, by brute force.
std::vector<long long> qnr_set(long long modulus);

// Human-readable form: "p = QNR mod 11", "p != 1, 3, 9 mod 13", or the
// explicit residue list. Recognition is display-only; the canonical datum
// stays the residue set.
std::string display_congruence(const CongruenceSet& cs);

std::string to_json(const CongruenceSet& cs);
std::string to_json(const NewtonPolygon& np);
std::string to_json(const JacobianLedger& ledger);
std::string to_json(const OracleReport& rep);

enum class OutputFormat { kJson, kCsv, kMarkdown };
OutputFormat parse_format(const std::string& name);

std::string render_enumerate(const std::vector<GenusSurvey>& surveys, OutputFormat fmt);
std::string render_analyze(const std::vector<GenusAnalysis>& analyses, OutputFormat fmt,
                           const std::vector<std::string>& paper_diffs);
std::string render_density(const std::vector<GenusAnalysis>& analyses, OutputFormat fmt);

// ---- versioned golden fixtures -----------------------------------------

// One table row: a ramification type, the inertia classes sharing the row,
// and the printed supersingularity condition.
struct PaperCondition {
    enum class Kind { kList, kNotList, kQnr };
    Kind kind = Kind::kList;
    long long modulus = 1;
    std::vector<long long> residues;  // unused for kQnr
};

CongruenceSet expand_condition(const PaperCondition& cond);

struct PaperRow {
    RamificationType z;
    std::vector<InertiaType> classes;  // as printed, not canonicalized
    PaperCondition condition;
};

struct PaperTables {
    std::map<int, std::vector<PaperRow>> rows;                  // genus -> rows
    std::map<int, std::vector<RamificationType>> no_inertia;    // genus -> flagged tuples
    std::map<int, Rational> densities;                          // genus -> delta_g
    std::vector<long long> genus5_mod120_printed;               // the printed residue list
};

// Fixture directory: $TRIPLE_BRANCH_FIXTURES when set, otherwise the
// compiled-in repository default.
std::string fixtures_dir();
PaperTables load_paper_tables(const std::string& dir = fixtures_dir());

// Diffs against the golden tables; empty means full agreement.
std::vector<std::string> check_enumeration_against_paper(const GenusSurvey& survey,
                                                         const PaperTables& tables);
std::vector<std::string> check_analysis_against_paper(const GenusAnalysis& analysis,
                                                      const PaperTables& tables);

// The known genus-5 discrepancy: computed union of the mod-120 covers vs
// the printed list, with the density cross-check.
struct Genus5Mod120Report {
    CongruenceSet computed;                 // mod 120
    CongruenceSet printed;                  // mod 120
    std::vector<long long> missing_from_printed;
    std::vector<long long> extra_in_printed;
    Rational assembled_density;             // with the mod-11 part joined back in
};
Genus5Mod120Report genus5_mod120_report(const GenusAnalysis& g5, const PaperTables& tables);

}  // namespace tb
