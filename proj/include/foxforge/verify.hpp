#pragma once

#include "foxforge/endomorphism.hpp"
#include "foxforge/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace foxforge {

struct RelatorCheck {
    std::size_t index = 0;
    std::string relator;
    bool holds = false;
};

struct VerificationReport {
    std::vector<RelatorCheck> relators;
    bool all_pass = true;
};

/// Evaluates a relator under an assignment of endomorphisms and reports, per
/// relator, whether the image is the identity endomorphism.
///
/// Products are evaluated as right actions: in the word g*h the automorphism
/// assigned to g acts first. This is the convention under which the builtin
/// braid and conjugation tables compose correctly (it is pinned down by the
/// order-sensitive pure braid relations; see the tests).
///
/// Negative letters require an explicit inverse in the assignment; for each
/// pair that gets used, both compositions with the forward map are checked to
/// be the identity before any relator is evaluated.
inline VerificationReport verify_homomorphism(const Presentation& p,
                                              const std::map<std::string, EndoPair>& assignment) {
    const AlphabetPtr& alpha = p.alphabet();
    std::vector<const EndoPair*> assigned;
    assigned.reserve(static_cast<std::size_t>(alpha->size()));
    int rank = -1;
    for (int i = 0; i < alpha->size(); ++i) {
        auto it = assignment.find(alpha->name(i));
        if (it == assignment.end())
            throw Error("verify: no endomorphism assigned to generator '" + alpha->name(i) + "'");
        assigned.push_back(&it->second);
        if (rank < 0)
            rank = it->second.map.rank();
        else if (it->second.map.rank() != rank)
            throw Error("verify: assigned endomorphisms have mixed ranks");
    }
    // which generators appear inverted in some relator?
    std::vector<bool> needs_inverse(static_cast<std::size_t>(alpha->size()), false);
    for (const Word& r : p.relators())
        for (const Letter& l : r.letters())
            if (l.sign < 0)
                needs_inverse[static_cast<std::size_t>(l.gen)] = true;
    for (int i = 0; i < alpha->size(); ++i) {
        const EndoPair& pair = *assigned[static_cast<std::size_t>(i)];
        if (!needs_inverse[static_cast<std::size_t>(i)])
            continue;
        if (!pair.inverse)
            throw Error("verify: generator '" + alpha->name(i) +
                        "' occurs inverted but has no inverse endomorphism");
        if (!compose(pair.map, *pair.inverse).is_identity() ||
            !compose(*pair.inverse, pair.map).is_identity())
            throw Error("verify: supplied inverse for '" + alpha->name(i) +
                        "' is not a two-sided inverse");
    }

    VerificationReport report;
    const Endomorphism id = Endomorphism::identity(assigned.front()->map.alphabet());
    for (std::size_t idx = 0; idx < p.relators().size(); ++idx) {
        const Word& r = p.relators()[idx];
        Endomorphism image = id;
        for (const Letter& l : r.letters()) {
            const EndoPair& pair = *assigned[static_cast<std::size_t>(l.gen)];
            const Endomorphism& step = l.sign > 0 ? pair.map : *pair.inverse;
            image = compose(step, image); // right action: earlier letters act first
        }
        bool holds = image.is_identity();
        report.relators.push_back(RelatorCheck{idx, r.str(), holds});
        report.all_pass = report.all_pass && holds;
    }
    return report;
}

} // namespace foxforge
