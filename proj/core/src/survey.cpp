#include "triplebranch/survey.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace tb {

long long GenusSurvey::class_count() const {
    long long total = 0;
    for (const RamificationEntry& e : entries) total += static_cast<long long>(e.classes.size());
    return total;
}

GenusSurvey survey_genus(int genus) {
    GenusSurvey survey;
    survey.genus = genus;
    for (const RamificationType& z : enumerate_ramification_types(genus)) {
        RamificationEntry entry;
        entry.z = z;
        try {
            entry.classes = enumerate_inertia_types(z);
            entry.status =
                entry.classes.empty() ? InertiaStatus::kNoInertia : InertiaStatus::kClasses;
            if (entry.status == InertiaStatus::kNoInertia)
                entry.note = "no inertia type realizes this ramification type";
        } catch (const std::invalid_argument& err) {
            entry.status = InertiaStatus::kUnsupportedShape;
            entry.note = err.what();
        }
        // Round-trip consistency: every class reproduces z and the genus.
        for (const InertiaType& a : entry.classes) {
            if (ramification_of(a) != z || genus_of_inertia(a) != genus)
                throw std::logic_error("survey_genus: enumeration round-trip failed");
        }
        survey.entries.push_back(std::move(entry));
    }
    return survey;
}

GenusAnalysis analyze_genus(int genus, int jobs) {
    const GenusSurvey survey = survey_genus(genus);
    std::vector<std::pair<RamificationType, InertiaType>> work;
    for (const RamificationEntry& e : survey.entries)
        for (const InertiaType& a : e.classes) work.emplace_back(e.z, a);

    std::vector<CoverAnalysis> covers(work.size());
    const int n_workers = std::max(1, jobs);
    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            covers[i] = CoverAnalysis{work[i].first, work[i].second,
                                      supersingular_residues(work[i].second)};
        }
    };
    if (n_workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(run);
        for (std::thread& th : pool) th.join();
    }

    std::vector<std::pair<InertiaType, CongruenceSet>> pairs;
    pairs.reserve(covers.size());
    for (const CoverAnalysis& c : covers) pairs.emplace_back(c.a, c.supersingular);

    GenusAnalysis out;
    out.genus = genus;
    out.covers = std::move(covers);
    if (genus >= 5 && genus <= 10) {
        SgResult sg = sg_set(genus, pairs);
        out.sg = std::move(sg.primes);
        out.natural_density = std::move(sg.natural_density);
    } else {
        std::vector<CongruenceSet> sets;
        for (const auto& [a, cs] : pairs) sets.push_back(cs);
        out.sg = sets.empty() ? CongruenceSet{1, {}} : union_sets(sets);
        out.natural_density = density(out.sg);
    }
    return out;
}

std::vector<DecomposedCover> noncyclic_decompositions(int genus) {
    std::vector<DecomposedCover> out;
    for (const RamificationEntry& e : survey_genus(genus).entries) {
        if (e.z.s == 1) continue;
        for (const InertiaType& a : e.classes)
            out.push_back(DecomposedCover{e.z, a, standard_ledger(a)});
    }
    return out;
}

}  // namespace tb
