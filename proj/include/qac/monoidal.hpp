#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qac/cluster.hpp"
#include "qac/invariants.hpp"

namespace qac {

// Indexed family of standard modules with an exchange matrix.  A valid
// seed is a strongly commuting family: every module is internally a
// commuting family and all cross pairs commute.
struct MonoidalSeed {
    AffineTypeData type;
    ExchangeMatrix B;
    std::map<Idx, StandardModule> modules;

    const StandardModule& module_at(Idx i) const;
};

// Pairs (i,j) violating strong commutation; (i,i) marks a module whose
// own factors fail to commute.
std::vector<std::pair<Idx, Idx>> family_violations(const MonoidalSeed& seed);

struct IntMatrix {
    std::map<std::pair<Idx, Idx>, long long> v;

    long long at(Idx i, Idx j) const {
        auto it = v.find({i, j});
        return it == v.end() ? 0 : it->second;
    }
    void set(Idx i, Idx j, long long x) {
        if (x == 0) v.erase({i, j});
        else v[{i, j}] = x;
    }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct FamilyError : std::runtime_error {
    std::vector<std::pair<Idx, Idx>> pairs;
    explicit FamilyError(std::vector<std::pair<Idx, Idx>> p);
};

// Entrywise lambda of the family, no validity requirement.
IntMatrix lambda_matrix_raw(const MonoidalSeed& seed);

// Lambda matrix of a valid seed; throws FamilyError listing offending
// pairs when the family is not strongly commuting.
IntMatrix lambda_matrix(const MonoidalSeed& seed);

struct AdmissibilityReport {
    IntMatrix lambda;                                  // Lambda^S
    std::vector<std::pair<Idx, Idx>> family_defects;   // noncommuting pairs
    std::vector<std::pair<Idx, Idx>> defects;          // (j,k) with (Lambda^S B)_jk != -2 delta_jk
    std::map<Idx, bool> column_ok;                     // per exchangeable direction
    bool compatible() const { return defects.empty(); }
};

// Evaluates (Lambda^S B)_jk = -2 delta_jk over K x Kex.
AdmissibilityReport check_lambda_admissible(const MonoidalSeed& seed);

// The two sides of the exchange sequence in direction k, read off the
// k-th column: X over b_ik > 0, Y over b_ik < 0.
std::pair<StandardModule, StandardModule> exchange_targets(const MonoidalSeed& seed, Idx k);

struct CandidateReport {
    Idx direction = 0;
    bool candidate_commuting = false;  // candidate is internally a commuting family
    bool de_ok = false;                // de(M_j, cand) = delta_jk for all j
    bool larel_ok = false;             // both exchange relations for lambda rows
    bool weight_ok = false;            // weight(M_k) + weight(cand) matches a side
    bool lmatrix_ok = false;           // -Lambda of mutated family = mutate_L(-Lambda^S, B, k)
    bool column_admissible = false;    // cross-check: no defects in column k
    std::string weight_side;           // "X", "Y" or "X,Y" when weight_ok
    std::vector<std::string> witnesses;

    bool pass() const {
        return candidate_commuting && de_ok && larel_ok && weight_ok && lmatrix_ok;
    }
};

// Numeric consistency checks for a proposed exchange partner in
// direction k.  Failures are data, not errors.
CandidateReport verify_candidate(const MonoidalSeed& seed, Idx k, const StandardModule& cand);

// Bounded brute-force search: the candidate's node content is forced by
// the weight identity; parameters range over (-q)^t, |t| <= radius.
// nullopt means "none found in grid", never "does not exist".
std::optional<StandardModule> search_candidate(const MonoidalSeed& seed, Idx k,
                                               long long radius,
                                               std::string* note = nullptr);

// Monoidal seed file: the cluster schema plus "type" (builtin name or
// path to a type data file) and "modules" {"<id>": "<expression>"}.
MonoidalSeed load_monoidal_seed(const std::string& path);
MonoidalSeed parse_monoidal_seed(const std::string& json_text,
                                 const std::string& base_dir = ".");

} // namespace qac
