#ifndef SNC_CERTIFICATE_HPP
#define SNC_CERTIFICATE_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snp.hpp"

namespace snc {

enum class theorem_id {
    tournament,       ///< feed of a median order of a tournament
    tournament_two,   ///< two SNP vertices in a tournament without a sink
    kings_stars,
    star_matching,
    matching_two,     ///< matching, F empty, no sink: two SNP vertices
    single_star,
    two_stars,
    two_stars_two,
    three_stars,
    three_stars_two,
};

inline constexpr std::array<theorem_id, 10> all_theorems{
    theorem_id::tournament,  theorem_id::tournament_two, theorem_id::kings_stars, theorem_id::star_matching,
    theorem_id::matching_two, theorem_id::single_star,   theorem_id::two_stars,   theorem_id::two_stars_two,
    theorem_id::three_stars, theorem_id::three_stars_two};

inline const char* to_string(theorem_id t) {
    switch (t) {
        case theorem_id::tournament:
            return "tournament";
        case theorem_id::tournament_two:
            return "tournament-two";
        case theorem_id::kings_stars:
            return "kings-stars";
        case theorem_id::star_matching:
            return "star+matching";
        case theorem_id::matching_two:
            return "matching-F-empty-no-sink";
        case theorem_id::single_star:
            return "single-star";
        case theorem_id::two_stars:
            return "two-stars";
        case theorem_id::two_stars_two:
            return "two-stars-two";
        case theorem_id::three_stars:
            return "three-stars";
        case theorem_id::three_stars_two:
            return "three-stars-two";
    }
    return "?";
}

inline std::optional<theorem_id> parse_theorem_id(std::string_view name) {
    for (theorem_id t : all_theorems)
        if (name == to_string(t)) return t;
    return std::nullopt;
}

/// true for procedures that promise two distinct witnesses
inline bool promises_two(theorem_id t) {
    return t == theorem_id::tournament_two || t == theorem_id::matching_two || t == theorem_id::two_stars_two ||
           t == theorem_id::three_stars_two;
}

struct hypothesis_check {
    std::string clause;
    bool passed = false;
    std::string evidence;
};

/**
 * @brief outcome of a witness procedure
 *
 * `witnesses` are listed in the order the procedure produced them. Every
 * returned certificate has been re-checked against the SNP oracle: each
 * verdict holds. `findings` collects consistency checks on the
 * construction that did not go as the argument predicts (they do not
 * invalidate the witnesses, which are checked independently).
 */
struct snp_certificate {
    theorem_id theorem = theorem_id::tournament;
    std::vector<hypothesis_check> hypotheses;
    std::vector<vertex> witnesses;
    std::vector<std::string> trace;
    std::vector<snp_verdict> verdicts;
    std::vector<std::string> findings;
    std::vector<std::string> notes;

    vertex_set witness_set() const { return vertex_set::from(witnesses); }
    bool verified() const {
        return !verdicts.empty() &&
               std::all_of(verdicts.begin(), verdicts.end(), [](const snp_verdict& v) { return v.holds; });
    }
};

class hypothesis_failed : public error {
   public:
    hypothesis_failed(theorem_id t, std::vector<hypothesis_check> report, const std::string& clause)
        : error(std::string(to_string(t)) + ": hypothesis failed: " + clause), theorem(t), report(std::move(report)),
          clause(clause) {}

    theorem_id theorem;
    std::vector<hypothesis_check> report;
    std::string clause;
};

/// A procedure produced a vertex that the oracle rejects.
class oracle_rejected : public consistency_violation {
   public:
    explicit oracle_rejected(snp_certificate cert)
        : consistency_violation(std::string(to_string(cert.theorem)) + ": oracle rejected a witness"),
          certificate(std::move(cert)) {}

    snp_certificate certificate;
};

/// Fills the verdicts and enforces the postconditions; throws on violation.
inline snp_certificate certify(const digraph& d, snp_certificate cert) {
    cert.verdicts.clear();
    for (vertex w : cert.witnesses) cert.verdicts.push_back(snp_check(d, w));
    if (cert.witnesses.empty() || !cert.verified()) throw oracle_rejected(std::move(cert));
    if (promises_two(cert.theorem) && cert.witness_set().size() < 2)
        throw consistency_violation(std::string(to_string(cert.theorem)) + ": fewer than two distinct witnesses");
    return cert;
}

}  // namespace snc

#endif
