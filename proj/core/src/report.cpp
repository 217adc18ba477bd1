#include "triplebranch/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef TB_DEFAULT_FIXTURES_DIR
#define TB_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace tb {

using nlohmann::json;

std::vector<long long> qnr_set(long long modulus) {
    std::set<long long> squares;
    for (long long u : units(modulus)) squares.insert((u * u) % modulus);
    std::vector<long long> out;
    for (long long u : units(modulus))
        if (!squares.count(u)) out.push_back(u);
    return out;
}

namespace {

std::string join(const std::vector<long long>& xs, const std::string& sep) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

bool qnr_displayable_modulus(long long m) {
    // The paper writes "QNR mod n" only for odd primes and twice odd primes.
    if (m < 3) return false;
    long long odd = m % 2 == 0 ? m / 2 : m;
    if (m % 2 == 0 && odd % 2 == 0) return false;
    for (long long d = 3; d * d <= odd; d += 2)
        if (odd % d == 0) return false;
    return odd >= 3;
}

}  // namespace

std::string display_congruence(const CongruenceSet& cs) {
    const CongruenceSet r = reduce_modulus(cs);
    if (r.modulus == 1) return r.residues.empty() ? "no p" : "all p";
    if (r.residues.empty()) return "no p";
    if (qnr_displayable_modulus(r.modulus) && r.residues == qnr_set(r.modulus))
        return "p = QNR mod " + std::to_string(r.modulus);
    const long long phi = euler_phi(r.modulus);
    if (static_cast<long long>(r.residues.size()) > phi / 2 &&
        static_cast<long long>(r.residues.size()) < phi) {
        std::vector<long long> complement;
        for (long long u : units(r.modulus))
            if (!r.contains(u)) complement.push_back(u);
        return "p != " + join(complement, ", ") + " mod " + std::to_string(r.modulus);
    }
    if (r.full()) return "p coprime to " + std::to_string(r.modulus);
    return "p = " + join(r.residues, ", ") + " mod " + std::to_string(r.modulus);
}

namespace {

json congruence_json(const CongruenceSet& cs) {
    const Rational d = density(cs);
    json out;
    out["modulus"] = cs.modulus;
    out["residues"] = cs.residues;
    out["density"] = {{"num", static_cast<long long>(numerator(d))},
                      {"den", static_cast<long long>(denominator(d))}};
    out["display"] = display_congruence(cs);
    return out;
}

json polygon_json(const NewtonPolygon& np) {
    json slopes = json::array();
    for (const auto& [slope, mult] : np.slopes)
        slopes.push_back({static_cast<long long>(numerator(slope)),
                          static_cast<long long>(denominator(slope)), mult});
    return slopes;
}

json inertia_json(const InertiaType& a) {
    json out = json::array();
    for (const GroupElement& g : a.gens) {
        if (a.shape.cyclic())
            out.push_back(g.x1);
        else
            out.push_back(json::array({g.x1, g.x2}));
    }
    return out;
}

json ramification_json(const RamificationType& z) {
    return json::array({z.c0, z.c1, z.cinf, z.s});
}

json ledger_json(const JacobianLedger& ledger) {
    json terms = json::array();
    for (const auto& [piece, mult] : ledger.terms) {
        json term;
        if (piece.cyclic())
            term["m"] = piece.modulus();
        else
            term["shape"] = json::array({piece.inertia.shape.n1, piece.inertia.shape.n2});
        term["inertia"] = inertia_json(piece.inertia);
        term["multiplicity"] = mult;
        terms.push_back(std::move(term));
    }
    return json{{"terms", std::move(terms)}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

const char* status_name(InertiaStatus s) {
    switch (s) {
        case InertiaStatus::kClasses: return "classes";
        case InertiaStatus::kNoInertia: return "no-inertia";
        case InertiaStatus::kUnsupportedShape: return "unsupported-shape";
    }
    return "?";
}

}  // namespace

std::string to_json(const CongruenceSet& cs) { return congruence_json(cs).dump(2); }

std::string to_json(const NewtonPolygon& np) { return polygon_json(np).dump(); }

std::string to_json(const JacobianLedger& ledger) { return ledger_json(ledger).dump(2); }

std::string to_json(const OracleReport& rep) {
    json out;
    out["m"] = rep.m;
    out["a"] = rep.a;
    out["p"] = rep.p;
    out["counts"] = rep.counts;
    json lpoly = json::array();
    for (const BigInt& c : rep.l_poly) lpoly.push_back(c.str());
    out["l_poly"] = std::move(lpoly);
    out["slopes"] = polygon_json(rep.np);
    return out.dump(2);
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::kJson;
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "markdown") return OutputFormat::kMarkdown;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_enumerate(const std::vector<GenusSurvey>& surveys, OutputFormat fmt) {
    if (fmt == OutputFormat::kJson) {
        json genera = json::array();
        for (const GenusSurvey& s : surveys) {
            json entries = json::array();
            for (const RamificationEntry& e : s.entries) {
                json entry;
                entry["z"] = ramification_json(e.z);
                entry["status"] = status_name(e.status);
                if (e.status != InertiaStatus::kUnsupportedShape) {
                    const AbelianGroupShape shape = group_shape(e.z);
                    entry["group"] = json::array({shape.n1, shape.n2});
                }
                json classes = json::array();
                for (const InertiaType& a : e.classes) classes.push_back(inertia_json(a));
                entry["inertia_classes"] = std::move(classes);
                if (!e.note.empty()) entry["note"] = e.note;
                entries.push_back(std::move(entry));
            }
            genera.push_back(json{{"genus", s.genus}, {"entries", std::move(entries)}});
        }
        return json{{"command", "enumerate"}, {"genera", std::move(genera)}}.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::kCsv) {
        os << "genus,z,group,status,inertia_classes,note\n";
        for (const GenusSurvey& s : surveys) {
            for (const RamificationEntry& e : s.entries) {
                std::string group;
                if (e.status != InertiaStatus::kUnsupportedShape) {
                    const AbelianGroupShape shape = group_shape(e.z);
                    group = shape.cyclic() ? "Z/" + std::to_string(shape.n1)
                                           : "Z/" + std::to_string(shape.n1) + " x Z/" +
                                                 std::to_string(shape.n2);
                }
                std::string classes;
                for (size_t i = 0; i < e.classes.size(); ++i) {
                    if (i) classes += " ";
                    classes += to_string(e.classes[i]);
                }
                os << s.genus << ',' << csv_escape(to_string(e.z)) << ',' << csv_escape(group)
                   << ',' << status_name(e.status) << ',' << csv_escape(classes) << ','
                   << csv_escape(e.note) << '\n';
            }
        }
        return os.str();
    }
    for (const GenusSurvey& s : surveys) {
        os << "## Genus " << s.genus << "\n\n";
        os << "| z | group | inertia classes | note |\n|---|---|---|---|\n";
        for (const RamificationEntry& e : s.entries) {
            std::string group = "-";
            if (e.status != InertiaStatus::kUnsupportedShape) {
                const AbelianGroupShape shape = group_shape(e.z);
                group = shape.cyclic()
                            ? "Z/" + std::to_string(shape.n1)
                            : "Z/" + std::to_string(shape.n1) + " x Z/" + std::to_string(shape.n2);
            }
            std::string classes;
            for (size_t i = 0; i < e.classes.size(); ++i) {
                if (i) classes += ", ";
                classes += to_string(e.classes[i]);
            }
            if (classes.empty()) classes = "-";
            os << "| " << to_string(e.z) << " | " << group << " | " << classes << " | "
               << (e.note.empty() ? "-" : e.note) << " |\n";
        }
        os << '\n';
    }
    return os.str();
}

std::string render_analyze(const std::vector<GenusAnalysis>& analyses, OutputFormat fmt,
                           const std::vector<std::string>& paper_diffs) {
    if (fmt == OutputFormat::kJson) {
        json genera = json::array();
        for (const GenusAnalysis& g : analyses) {
            json covers = json::array();
            for (const CoverAnalysis& c : g.covers) {
                covers.push_back(json{{"z", ramification_json(c.z)},
                                      {"a", inertia_json(c.a)},
                                      {"supersingular", congruence_json(c.supersingular)}});
            }
            genera.push_back(json{{"genus", g.genus},
                                  {"covers", std::move(covers)},
                                  {"union", congruence_json(g.sg)}});
        }
        json out{{"command", "analyze"}, {"genera", std::move(genera)}};
        if (!paper_diffs.empty()) out["paper_check"] = paper_diffs;
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::kCsv) {
        os << "genus,z,a,modulus,residues,density,display\n";
        for (const GenusAnalysis& g : analyses) {
            for (const CoverAnalysis& c : g.covers) {
                const Rational d = density(c.supersingular);
                os << g.genus << ',' << csv_escape(to_string(c.z)) << ','
                   << csv_escape(to_string(c.a)) << ',' << c.supersingular.modulus << ','
                   << csv_escape(join(c.supersingular.residues, " ")) << ','
                   << numerator(d) << '/' << denominator(d) << ','
                   << csv_escape(display_congruence(c.supersingular)) << '\n';
            }
        }
        for (const std::string& diff : paper_diffs) os << "# " << diff << '\n';
        return os.str();
    }
    for (const GenusAnalysis& g : analyses) {
        os << "## Genus " << g.genus << "\n\n";
        os << "| z | a | supersingular primes |\n|---|---|---|\n";
        for (const CoverAnalysis& c : g.covers)
            os << "| " << to_string(c.z) << " | " << to_string(c.a) << " | "
               << display_congruence(c.supersingular) << " |\n";
        const Rational d = g.natural_density;
        os << "\nUnion: " << display_congruence(g.sg) << " -- density " << numerator(d) << '/'
           << denominator(d) << "\n\n";
    }
    for (const std::string& diff : paper_diffs) os << "> " << diff << "\n";
    return os.str();
}

std::string render_density(const std::vector<GenusAnalysis>& analyses, OutputFormat fmt) {
    if (fmt == OutputFormat::kJson) {
        json genera = json::array();
        for (const GenusAnalysis& g : analyses) {
            const Rational d = g.natural_density;
            genera.push_back(json{{"genus", g.genus},
                                  {"density",
                                   {{"num", static_cast<long long>(numerator(d))},
                                    {"den", static_cast<long long>(denominator(d))}}},
                                  {"modulus", g.sg.modulus}});
        }
        return json{{"command", "density"}, {"genera", std::move(genera)}}.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::kCsv) {
        os << "genus,density\n";
        for (const GenusAnalysis& g : analyses)
            os << g.genus << ',' << numerator(g.natural_density) << '/'
               << denominator(g.natural_density) << '\n';
        return os.str();
    }
    os << "| g | density of S_g |\n|---|---|\n";
    for (const GenusAnalysis& g : analyses)
        os << "| " << g.genus << " | " << numerator(g.natural_density) << '/'
           << denominator(g.natural_density) << " |\n";
    return os.str();
}

CongruenceSet expand_condition(const PaperCondition& cond) {
    switch (cond.kind) {
        case PaperCondition::Kind::kList:
            return make_congruence_set(cond.modulus, cond.residues);
        case PaperCondition::Kind::kNotList: {
            std::vector<long long> out;
            for (long long u : units(cond.modulus))
                if (std::find(cond.residues.begin(), cond.residues.end(), u) ==
                    cond.residues.end())
                    out.push_back(u);
            return make_congruence_set(cond.modulus, std::move(out));
        }
        case PaperCondition::Kind::kQnr:
            return make_congruence_set(cond.modulus, qnr_set(cond.modulus));
    }
    throw std::logic_error("expand_condition: unreachable");
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("TRIPLE_BRANCH_FIXTURES")) return env;
    return TB_DEFAULT_FIXTURES_DIR;
}

namespace {

RamificationType parse_z(const json& j) {
    return RamificationType{j.at(0).get<long long>(), j.at(1).get<long long>(),
                            j.at(2).get<long long>(), j.at(3).get<long long>()};
}

InertiaType parse_inertia(const json& j, const AbelianGroupShape& shape) {
    std::array<GroupElement, 3> gens;
    for (int i = 0; i < 3; ++i) {
        const json& entry = j.at(static_cast<size_t>(i));
        if (entry.is_array())
            gens[static_cast<size_t>(i)] =
                reduce(shape, entry.at(0).get<long long>(), entry.at(1).get<long long>());
        else
            gens[static_cast<size_t>(i)] = reduce(shape, entry.get<long long>(), 0);
    }
    return make_inertia(shape, gens[0], gens[1], gens[2]);
}

PaperCondition parse_condition(const json& j) {
    PaperCondition cond;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "list") cond.kind = PaperCondition::Kind::kList;
    else if (kind == "not-list") cond.kind = PaperCondition::Kind::kNotList;
    else if (kind == "qnr") cond.kind = PaperCondition::Kind::kQnr;
    else throw std::invalid_argument("fixtures: unknown condition kind " + kind);
    cond.modulus = j.at("modulus").get<long long>();
    if (j.contains("residues")) cond.residues = j.at("residues").get<std::vector<long long>>();
    return cond;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

}  // namespace

PaperTables load_paper_tables(const std::string& dir) {
    const std::string path = dir + "/paper_golden.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    json root = json::parse(in);

    PaperTables tables;
    for (const json& genus_block : root.at("genus_tables")) {
        const int genus = genus_block.at("genus").get<int>();
        for (const json& row : genus_block.at("rows")) {
            PaperRow out;
            out.z = parse_z(row.at("z"));
            const AbelianGroupShape shape = group_shape(out.z);
            for (const json& cls : row.at("inertia")) out.classes.push_back(parse_inertia(cls, shape));
            out.condition = parse_condition(row.at("supersingular"));
            tables.rows[genus].push_back(std::move(out));
        }
        if (genus_block.contains("no_inertia"))
            for (const json& z : genus_block.at("no_inertia"))
                tables.no_inertia[genus].push_back(parse_z(z));
    }
    for (const json& d : root.at("densities"))
        tables.densities[d.at("genus").get<int>()] =
            parse_rational(d.at("density").get<std::string>());
    tables.genus5_mod120_printed =
        root.at("theorem_genus5_mod120").get<std::vector<long long>>();
    return tables;
}

std::vector<std::string> check_enumeration_against_paper(const GenusSurvey& survey,
                                                         const PaperTables& tables) {
    std::vector<std::string> diffs;
    const auto it = tables.rows.find(survey.genus);
    if (it == tables.rows.end()) {
        diffs.push_back("no golden table for genus " + std::to_string(survey.genus));
        return diffs;
    }

    // Expected classes per ramification type, canonicalized.
    std::map<RamificationType, std::set<InertiaType>> expected;
    for (const PaperRow& row : it->second)
        for (const InertiaType& a : row.classes)
            expected[row.z].insert(canonicalize_inertia(a));
    std::set<RamificationType> expected_empty;
    if (const auto ni = tables.no_inertia.find(survey.genus); ni != tables.no_inertia.end())
        expected_empty.insert(ni->second.begin(), ni->second.end());

    std::set<RamificationType> seen;
    for (const RamificationEntry& e : survey.entries) {
        seen.insert(e.z);
        if (e.status == InertiaStatus::kUnsupportedShape) {
            diffs.push_back(to_string(e.z) + ": unsupported group shape");
            continue;
        }
        const bool should_be_empty = expected_empty.count(e.z) > 0;
        if (e.classes.empty() != should_be_empty) {
            diffs.push_back(to_string(e.z) + ": inertia-less flag disagrees with the table");
            continue;
        }
        if (should_be_empty) continue;
        const auto exp = expected.find(e.z);
        if (exp == expected.end()) {
            diffs.push_back(to_string(e.z) + ": not present in the printed tables");
            continue;
        }
        std::set<InertiaType> got(e.classes.begin(), e.classes.end());
        if (got != exp->second)
            diffs.push_back(to_string(e.z) + ": inertia classes differ from the printed tables");
    }
    for (const auto& [z, cls] : expected)
        if (!seen.count(z)) diffs.push_back(to_string(z) + ": printed row missing from enumeration");
    for (const RamificationType& z : expected_empty)
        if (!seen.count(z))
            diffs.push_back(to_string(z) + ": printed inertia-less tuple missing from enumeration");
    return diffs;
}

std::vector<std::string> check_analysis_against_paper(const GenusAnalysis& analysis,
                                                      const PaperTables& tables) {
    std::vector<std::string> diffs;
    const auto it = tables.rows.find(analysis.genus);
    if (it == tables.rows.end()) {
        diffs.push_back("no golden table for genus " + std::to_string(analysis.genus));
        return diffs;
    }
    for (const PaperRow& row : it->second) {
        const CongruenceSet expected = expand_condition(row.condition);
        for (const InertiaType& printed : row.classes) {
            const InertiaType a = canonicalize_inertia(printed);
            const CoverAnalysis* found = nullptr;
            for (const CoverAnalysis& c : analysis.covers)
                if (c.a == a) found = &c;
            if (!found) {
                diffs.push_back(to_string(row.z) + " " + to_string(printed) +
                                ": cover missing from analysis");
                continue;
            }
            const long long m = lcm_checked(expected.modulus, found->supersingular.modulus);
            if (lift(expected, m).residues != lift(found->supersingular, m).residues)
                diffs.push_back(to_string(row.z) + " " + to_string(printed) +
                                ": supersingular residues differ from the printed condition");
        }
    }
    if (const auto d = tables.densities.find(analysis.genus); d != tables.densities.end())
        if (analysis.natural_density != d->second)
            diffs.push_back("genus " + std::to_string(analysis.genus) +
                            ": density differs from the corollary value");
    return diffs;
}

Genus5Mod120Report genus5_mod120_report(const GenusAnalysis& g5, const PaperTables& tables) {
    if (g5.genus != 5) throw std::invalid_argument("genus5_mod120_report: needs the genus-5 analysis");
    std::vector<CongruenceSet> mod120_parts, mod11_parts;
    for (const CoverAnalysis& c : g5.covers) {
        const CongruenceSet reduced = reduce_modulus(c.supersingular);
        if (120 % reduced.modulus == 0)
            mod120_parts.push_back(reduced);
        else
            mod11_parts.push_back(reduced);
    }
    Genus5Mod120Report rep;
    rep.computed = lift(union_sets(mod120_parts), 120);
    rep.printed = make_congruence_set(120, tables.genus5_mod120_printed);
    for (long long u : rep.computed.residues)
        if (!rep.printed.contains(u)) rep.missing_from_printed.push_back(u);
    for (long long u : rep.printed.residues)
        if (!rep.computed.contains(u)) rep.extra_in_printed.push_back(u);
    std::vector<CongruenceSet> all = mod11_parts;
    all.push_back(rep.computed);
    rep.assembled_density = density(union_sets(all));
    return rep;
}

}  // namespace tb
