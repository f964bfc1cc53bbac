#include "qac/monoidal.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace qac {

const StandardModule& MonoidalSeed::module_at(Idx i) const {
    auto it = modules.find(i);
    if (it == modules.end())
        throw SeedError("monoidal seed: no module for index " + std::to_string(i));
    return it->second;
}

std::vector<std::pair<Idx, Idx>> family_violations(const MonoidalSeed& seed) {
    std::vector<std::pair<Idx, Idx>> bad;
    for (size_t a = 0; a < seed.B.ids.size(); ++a) {
        Idx i = seed.B.ids[a];
        if (!commuting_family(seed.type, seed.module_at(i))) bad.push_back({i, i});
        for (size_t c = a + 1; c < seed.B.ids.size(); ++c) {
            Idx j = seed.B.ids[c];
            const auto& mi = seed.module_at(i);
            const auto& mj = seed.module_at(j);
            bool ok = true;
            for (const auto& f : mi.factors)
                for (const auto& g : mj.factors)
                    ok = ok && strongly_commutes(seed.type, f, g);
            if (!ok) bad.push_back({i, j});
        }
    }
    return bad;
}

FamilyError::FamilyError(std::vector<std::pair<Idx, Idx>> p)
    : std::runtime_error([&p] {
          std::string msg = "family is not strongly commuting; offending pairs:";
          for (const auto& [i, j] : p)
              msg += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return msg;
      }()),
      pairs(std::move(p)) {}

IntMatrix lambda_matrix_raw(const MonoidalSeed& seed) {
    IntMatrix out;
    for (Idx i : seed.B.ids)
        for (Idx j : seed.B.ids)
            out.set(i, j, lambda(seed.type, seed.module_at(i), seed.module_at(j)));
    return out;
}

IntMatrix lambda_matrix(const MonoidalSeed& seed) {
    auto bad = family_violations(seed);
    if (!bad.empty()) throw FamilyError(std::move(bad));
    return lambda_matrix_raw(seed);
}

AdmissibilityReport check_lambda_admissible(const MonoidalSeed& seed) {
    AdmissibilityReport r;
    r.lambda = lambda_matrix_raw(seed);
    r.family_defects = family_violations(seed);
    for (Idx k : seed.B.ex) r.column_ok[k] = true;
    for (Idx j : seed.B.ids)
        for (Idx k : seed.B.ex) {
            long long sum = 0;
            for (Idx i : seed.B.ids) sum += r.lambda.at(j, i) * seed.B.entry(i, k);
            long long want = (j == k) ? -2 : 0;
            if (sum != want) {
                r.defects.push_back({j, k});
                r.column_ok[k] = false;
            }
        }
    return r;
}

std::pair<StandardModule, StandardModule> exchange_targets(const MonoidalSeed& seed, Idx k) {
    if (!seed.B.is_ex(k))
        throw SeedError("exchange_targets: direction " + std::to_string(k) +
                        " is not exchangeable");
    StandardModule X, Y;
    for (Idx i : seed.B.ids) {
        long long bik = seed.B.entry(i, k);
        for (long long s = 0; s < bik; ++s) X = tensor(X, seed.module_at(i));
        for (long long s = 0; s < -bik; ++s) Y = tensor(Y, seed.module_at(i));
    }
    return {X, Y};
}

CandidateReport verify_candidate(const MonoidalSeed& seed, Idx k, const StandardModule& cand) {
    if (!seed.B.is_ex(k))
        throw SeedError("verify_candidate: direction " + std::to_string(k) +
                        " is not exchangeable");
    const AffineTypeData& T = seed.type;
    CandidateReport r;
    r.direction = k;
    r.candidate_commuting = commuting_family(T, cand);
    if (!r.candidate_commuting)
        r.witnesses.push_back("candidate is not an internally commuting family");

    // (1) de(M_j, cand) = delta_jk
    r.de_ok = true;
    for (Idx j : seed.B.ids) {
        long long got = de(T, seed.module_at(j), cand).value;
        long long want = (j == k) ? 1 : 0;
        if (got != want) {
            r.de_ok = false;
            r.witnesses.push_back("de(M_" + std::to_string(j) + ", cand) = " +
                                  std::to_string(got) + ", want " + std::to_string(want));
        }
    }

    // (2) the exchange relations for both lambda rows
    r.larel_ok = true;
    for (Idx j : seed.B.ids) {
        long long lhs1 = lambda(T, seed.module_at(j), cand);
        long long rhs1 = -lambda(T, seed.module_at(j), seed.module_at(k));
        long long lhs2 = lambda(T, cand, seed.module_at(j));
        long long rhs2 = -lambda(T, seed.module_at(k), seed.module_at(j));
        for (Idx i : seed.B.ids) {
            long long bik = seed.B.entry(i, k);
            if (bik < 0) rhs1 -= lambda(T, seed.module_at(j), seed.module_at(i)) * bik;
            if (bik > 0) rhs2 += lambda(T, seed.module_at(i), seed.module_at(j)) * bik;
        }
        if (lhs1 != rhs1 || lhs2 != rhs2) {
            r.larel_ok = false;
            r.witnesses.push_back("exchange relation fails at j = " + std::to_string(j) +
                                  ": (" + std::to_string(lhs1) + "," + std::to_string(lhs2) +
                                  ") vs (" + std::to_string(rhs1) + "," + std::to_string(rhs2) +
                                  ")");
        }
    }

    // (3) weight bookkeeping: the head side of the exchange sequence
    // carries weight(M_k) + weight(cand)
    auto [X, Y] = exchange_targets(seed, k);
    Weight sum = weight_sum(weight(seed.module_at(k)), weight(cand));
    bool wx = sum == weight(X), wy = sum == weight(Y);
    r.weight_ok = wx || wy;
    r.weight_side = wx && wy ? "X,Y" : wx ? "X" : wy ? "Y" : "";
    if (!r.weight_ok)
        r.witnesses.push_back("weight(M_k) + weight(cand) matches neither side of the exchange");

    // (4) the mutated family reproduces mutate_L on -Lambda^S
    IntMatrix lam = lambda_matrix_raw(seed);
    LMatrix L;
    bool skew_ok = true;
    for (size_t a = 0; a < seed.B.ids.size(); ++a)
        for (size_t c = a + 1; c < seed.B.ids.size(); ++c) {
            Idx i = seed.B.ids[a], j = seed.B.ids[c];
            if (lam.at(i, j) != -lam.at(j, i)) {
                r.witnesses.push_back("Lambda^S is not skew-symmetric at (" + std::to_string(i) +
                                      "," + std::to_string(j) + "); seed family is invalid");
                skew_ok = false;
                continue;
            }
            L.set(i, j, -lam.at(i, j));
        }
    MonoidalSeed mutated = seed;
    mutated.modules[k] = cand;
    IntMatrix lam2 = lambda_matrix_raw(mutated);
    LMatrix expect = mutate_L(L, seed.B, k);
    r.lmatrix_ok = skew_ok;
    for (Idx i : seed.B.ids)
        for (Idx j : seed.B.ids)
            if (-lam2.at(i, j) != expect.entry(i, j)) {
                r.lmatrix_ok = false;
                r.witnesses.push_back("mutated L mismatch at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "): " + std::to_string(-lam2.at(i, j)) +
                                      " vs " + std::to_string(expect.entry(i, j)));
            }

    // cross-identity with the compatibility half of admissibility
    r.column_admissible = check_lambda_admissible(seed).column_ok.at(k);
    return r;
}

namespace {

void enumerate_params(const std::vector<int>& nodes, size_t pos, long long radius,
                      long long lo_for_pos, std::vector<FundParam>& acc,
                      const std::function<bool(const StandardModule&)>& test, bool& found,
                      StandardModule& result) {
    if (found) return;
    if (pos == nodes.size()) {
        StandardModule m;
        m.factors = acc;
        if (test(m)) {
            found = true;
            result = m;
        }
        return;
    }
    long long lo = (pos > 0 && nodes[pos] == nodes[pos - 1]) ? lo_for_pos : -radius;
    for (long long t = lo; t <= radius && !found; ++t) {
        acc.push_back({nodes[pos], neg_q_pow(t)});
        enumerate_params(nodes, pos + 1, radius, t, acc, test, found, result);
        acc.pop_back();
    }
}

} // namespace

std::optional<StandardModule> search_candidate(const MonoidalSeed& seed, Idx k,
                                               long long radius, std::string* note) {
    auto [X, Y] = exchange_targets(seed, k);
    Weight wk = weight(seed.module_at(k));
    std::vector<Weight> targets;
    for (const Weight& side : {weight(X), weight(Y)}) {
        Weight need = side;
        bool feasible = true;
        for (const auto& [node, c] : wk) {
            auto it = need.find(node);
            long long have = it == need.end() ? 0 : it->second;
            if (have < c) { feasible = false; break; }
            if (have == c) need.erase(node);
            else it->second = have - c;
        }
        for (const auto& [node, c] : need)
            if (c < 0) { (void)node; feasible = false; }
        if (feasible && std::find(targets.begin(), targets.end(), need) == targets.end())
            targets.push_back(need);
    }
    if (targets.empty()) {
        if (note) *note = "no side of the exchange dominates weight(M_k); no candidate exists with fundamental factors";
        return std::nullopt;
    }
    for (const Weight& need : targets) {
        std::vector<int> nodes;
        long long total = 0;
        for (const auto& [node, c] : need) {
            total += c;
            for (long long s = 0; s < c; ++s) nodes.push_back(node);
        }
        if (total > 3) {
            if (note) *note = "candidate would need more than 3 factors; grid search skipped";
            continue;
        }
        bool found = false;
        StandardModule result;
        std::vector<FundParam> acc;
        std::function<bool(const StandardModule&)> test = [&](const StandardModule& m) {
            return verify_candidate(seed, k, m).pass();
        };
        enumerate_params(nodes, 0, radius, -radius, acc, test, found, result);
        if (found) return result;
    }
    if (note && note->empty())
        *note = "none found in grid (-q)^t, |t| <= " + std::to_string(radius);
    return std::nullopt;
}

MonoidalSeed parse_monoidal_seed(const std::string& json_text, const std::string& base_dir) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SeedError(std::string("monoidal seed: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j.contains("modules"))
        throw SeedError("monoidal seed: expected object with type, modules, K, frozen, B");

    MonoidalSeed seed;
    std::string type_name = j["type"].get<std::string>();
    try {
        seed.type = resolve_type(type_name);
    } catch (const TypeDataError& e) {
        // retry relative to the seed file only when the path was not found
        if (std::string(e.what()).find("cannot open") == std::string::npos) throw;
        seed.type = resolve_type(base_dir + "/" + type_name);
    }

    ClusterSeed skeleton = parse_seed(j.dump());
    seed.B = skeleton.B;

    if (!j["modules"].is_object())
        throw SeedError("monoidal seed: modules must be an object of id -> expression");
    for (const auto& [key, expr] : j["modules"].items()) {
        Idx id = 0;
        try {
            id = std::stoi(key);
        } catch (...) {
            throw SeedError("monoidal seed: module key '" + key + "' is not an index");
        }
        if (!seed.B.has_id(id))
            throw SeedError("monoidal seed: module for index " + key + " outside K");
        seed.modules[id] = parse_module(seed.type, expr.get<std::string>());
    }
    for (Idx i : seed.B.ids)
        if (!seed.modules.count(i))
            throw SeedError("monoidal seed: missing module for index " + std::to_string(i));
    return seed;
}

MonoidalSeed load_monoidal_seed(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SeedError("cannot open monoidal seed file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string dir = ".";
    auto slash = path.find_last_of('/');
    if (slash != std::string::npos) dir = path.substr(0, slash);
    return parse_monoidal_seed(buf.str(), dir);
}

} // namespace qac
