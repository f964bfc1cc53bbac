#include "qac/cluster.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qac {

LaurentPoly LaurentPoly::constant(size_t nvars, const Coeff& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(size_t nvars, size_t pos, int power) {
    LaurentPoly p(nvars);
    Exponents e(nvars, 0);
    e.at(pos) = power;
    p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponents e, const Coeff& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly& LaurentPoly::add_term(const Exponents& e, const Coeff& c) {
    if (c == 0) return *this;
    if (e.size() != nvars_) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else if ((it->second += c) == 0) {
        terms_.erase(it);
    }
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.nvars_);
    LaurentPoly::Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::pow(long long k) const {
    if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative power");
    LaurentPoly out = constant(nvars_, 1);
    for (long long s = 0; s < k; ++s) out = out * *this;
    return out;
}

namespace {

// degree-then-lex; a well-order on the shifted (nonnegative) exponents
struct DegLex {
    bool operator()(const LaurentPoly::Exponents& a, const LaurentPoly::Exponents& b) const {
        long long da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

} // namespace

std::optional<LaurentPoly> LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    if (b.is_zero()) return std::nullopt;
    const size_t n = a.nvars_;
    if (a.is_zero()) return LaurentPoly(n);

    // shift both operands into nonnegative exponents; the offsets are
    // restored on the quotient at the end
    auto min_exps = [n](const LaurentPoly& p) {
        Exponents m(n, 0);
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            for (size_t v = 0; v < n; ++v) m[v] = first ? e[v] : std::min(m[v], e[v]);
            first = false;
        }
        return m;
    };
    Exponents amin = min_exps(a), bmin = min_exps(b);

    std::map<Exponents, Coeff, DegLex> f, g;
    Exponents tmp(n);
    for (const auto& [e, c] : a.terms()) {
        for (size_t v = 0; v < n; ++v) tmp[v] = e[v] - amin[v];
        f[tmp] = c;
    }
    for (const auto& [e, c] : b.terms()) {
        for (size_t v = 0; v < n; ++v) tmp[v] = e[v] - bmin[v];
        g[tmp] = c;
    }

    const auto& [eg, cg] = *g.rbegin();
    LaurentPoly q(n);
    while (!f.empty()) {
        const auto& [ef, cf] = *f.rbegin();
        Exponents et(n);
        for (size_t v = 0; v < n; ++v) {
            et[v] = ef[v] - eg[v];
            if (et[v] < 0) return std::nullopt;
        }
        if (!mpz_divisible_p(cf.get_mpz_t(), cg.get_mpz_t())) return std::nullopt;
        Coeff ct = cf / cg;
        // restore the Laurent offset on the quotient term
        for (size_t v = 0; v < n; ++v) tmp[v] = et[v] + amin[v] - bmin[v];
        q.add_term(tmp, ct);
        for (const auto& [e2, c2] : g) {
            for (size_t v = 0; v < n; ++v) tmp[v] = e2[v] + et[v];
            auto it = f.find(tmp);
            if (it == f.end()) {
                Coeff nv = -ct * c2;
                if (nv != 0) f.emplace(tmp, std::move(nv));
            } else if ((it->second -= ct * c2) == 0) {
                f.erase(it);
            }
        }
    }
    return q;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        Coeff ac = abs(c);
        std::string mono;
        for (size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(v);
            if (e[v] != 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) out += ac.get_str();
        else if (ac == 1) out += mono;
        else out += ac.get_str() + "*" + mono;
    }
    return out;
}

bool ExchangeMatrix::has_id(Idx i) const {
    return std::find(ids.begin(), ids.end(), i) != ids.end();
}

size_t ExchangeMatrix::pos(Idx i) const {
    auto it = std::find(ids.begin(), ids.end(), i);
    if (it == ids.end()) throw SeedError("unknown index " + std::to_string(i));
    return (size_t)(it - ids.begin());
}

long long ExchangeMatrix::entry(Idx i, Idx j) const {
    if (is_ex(j)) {
        auto it = b.find({i, j});
        return it == b.end() ? 0 : it->second;
    }
    if (is_ex(i)) {
        auto it = b.find({j, i});
        return it == b.end() ? 0 : -it->second;
    }
    return 0;
}

void ExchangeMatrix::set(Idx i, Idx j, long long v) {
    if (!is_ex(j)) throw SeedError("ExchangeMatrix::set: column " + std::to_string(j) + " is frozen");
    if (v == 0) b.erase({i, j});
    else b[{i, j}] = v;
}

void ExchangeMatrix::validate() const {
    std::set<Idx> seen(ids.begin(), ids.end());
    if (seen.size() != ids.size()) throw SeedError("duplicate indices in K");
    for (Idx e : ex)
        if (!seen.count(e)) throw SeedError("exchangeable index " + std::to_string(e) + " not in K");
    for (const auto& [key, v] : b) {
        if (!seen.count(key.first) || !seen.count(key.second))
            throw SeedError("B entry references unknown index");
        if (!is_ex(key.second)) throw SeedError("B entry has frozen column index");
        if (v == 0) throw SeedError("B stores an explicit zero");
    }
    for (Idx i : ex)
        for (Idx j : ex)
            if (entry(i, j) != -entry(j, i))
                throw SeedError("principal part is not skew-symmetric at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
}

long long LMatrix::entry(Idx i, Idx j) const {
    auto it = lam.find({i, j});
    return it == lam.end() ? 0 : it->second;
}

void LMatrix::set(Idx i, Idx j, long long v) {
    if (i == j) {
        if (v != 0) throw SeedError("LMatrix: nonzero diagonal");
        return;
    }
    if (v == 0) {
        lam.erase({i, j});
        lam.erase({j, i});
    } else {
        lam[{i, j}] = v;
        lam[{j, i}] = -v;
    }
}

CompatibilityResult check_compatible(const LMatrix& L, const ExchangeMatrix& B) {
    for (Idx i : B.ids)
        for (Idx j : B.ids) {
            if (!B.is_ex(j)) continue;
            long long sum = 0;
            for (Idx t : B.ids) sum += L.entry(i, t) * B.entry(t, j);
            long long want = (i == j) ? 2 : 0;
            if (sum != want) return {false, i, j, sum};
        }
    return {};
}

ExchangeMatrix mutate_B(const ExchangeMatrix& B, Idx k) {
    if (!B.is_ex(k)) throw SeedError("mutate_B: direction " + std::to_string(k) + " is not exchangeable");
    ExchangeMatrix out = B;
    out.b.clear();
    for (Idx i : B.ids)
        for (Idx j : B.ex) {
            long long v = B.entry(i, j);
            long long nv;
            if (i == k || j == k) {
                nv = -v;
            } else {
                long long bik = B.entry(i, k), bkj = B.entry(k, j);
                long long adj = std::max(bik * bkj, 0LL);
                nv = v + (bik < 0 ? -adj : adj);
            }
            out.set(i, j, nv);
        }
    return out;
}

LMatrix mutate_L(const LMatrix& L, const ExchangeMatrix& B, Idx k) {
    if (!B.is_ex(k)) throw SeedError("mutate_L: direction " + std::to_string(k) + " is not exchangeable");
    LMatrix out;
    auto col_sum = [&](Idx j) {  // sum_t max(0, -b_tk) lambda_tj
        long long s = 0;
        for (Idx t : B.ids) s += std::max(0LL, -B.entry(t, k)) * L.entry(t, j);
        return s;
    };
    for (size_t a = 0; a < B.ids.size(); ++a)
        for (size_t c = a + 1; c < B.ids.size(); ++c) {
            Idx i = B.ids[a], j = B.ids[c];
            long long v;
            if (i == k) v = -L.entry(k, j) + col_sum(j);
            else if (j == k) v = -(-L.entry(k, i) + col_sum(i));  // skew image of row k
            else v = L.entry(i, j);
            out.set(i, j, v);
        }
    return out;
}

ClusterSeed ClusterSeed::initial(ExchangeMatrix B, std::optional<LMatrix> L) {
    B.validate();
    ClusterSeed s;
    s.B = std::move(B);
    s.L = std::move(L);
    if (s.L) {
        auto compat = check_compatible(*s.L, s.B);
        if (!compat)
            throw SeedError("(L,B) is not compatible with d=2: sum at (" +
                            std::to_string(compat.i) + "," + std::to_string(compat.j) +
                            ") is " + std::to_string(compat.got));
    }
    for (Idx i : s.B.ids)
        s.vars.emplace(i, LaurentPoly::variable(s.B.ids.size(), s.B.pos(i)));
    return s;
}

LaurentPoly mutate_var(const ClusterSeed& seed, Idx k) {
    if (!seed.B.is_ex(k))
        throw SeedError("mutate: direction " + std::to_string(k) + " is not exchangeable");
    const size_t n = seed.B.ids.size();
    LaurentPoly plus = LaurentPoly::constant(n, 1);
    LaurentPoly minus = LaurentPoly::constant(n, 1);
    for (Idx i : seed.B.ids) {
        long long bik = seed.B.entry(i, k);
        if (bik > 0) plus = plus * seed.vars.at(i).pow(bik);
        else if (bik < 0) minus = minus * seed.vars.at(i).pow(-bik);
    }
    auto q = LaurentPoly::div_exact(plus + minus, seed.vars.at(k));
    if (!q)
        throw LaurentFault("exact division failed while exchanging variable " +
                           std::to_string(k) + "; the seed violates the Laurent property");
    return *q;
}

ClusterSeed mutate_seed(const ClusterSeed& seed, Idx k) {
    ClusterSeed out = seed;
    out.vars[k] = mutate_var(seed, k);
    out.B = mutate_B(seed.B, k);
    if (seed.L) {
        out.L = mutate_L(*seed.L, seed.B, k);
        auto compat = check_compatible(*out.L, out.B);
        if (!compat)
            throw std::logic_error("mutation broke (L,B) compatibility at (" +
                                   std::to_string(compat.i) + "," + std::to_string(compat.j) + ")");
    }
    return out;
}

Quiver to_quiver(const ExchangeMatrix& B) {
    Quiver q;
    q.ids = B.ids;
    for (Idx i : B.ids)
        if (!B.is_ex(i)) q.frozen.insert(i);
    for (Idx i : B.ids)
        for (Idx j : B.ids) {
            long long v = B.entry(i, j);
            if (v > 0) q.arrows[{i, j}] = v;
        }
    return q;
}

ExchangeMatrix from_quiver(const Quiver& q) {
    ExchangeMatrix B;
    B.ids = q.ids;
    std::set<Idx> seen(q.ids.begin(), q.ids.end());
    if (seen.size() != q.ids.size()) throw SeedError("quiver: duplicate vertices");
    for (Idx i : q.ids)
        if (!q.frozen.count(i)) B.ex.insert(i);
    for (const auto& [arrow, count] : q.arrows) {
        auto [s, t] = arrow;
        if (!seen.count(s) || !seen.count(t)) throw SeedError("quiver: arrow on unknown vertex");
        if (count <= 0) throw SeedError("quiver: arrow multiplicity must be positive");
        if (s == t) throw SeedError("quiver: loop at vertex " + std::to_string(s));
        if (q.arrows.count({t, s}))
            throw SeedError("quiver: 2-cycle between " + std::to_string(s) + " and " +
                            std::to_string(t));
        if (q.frozen.count(s) && q.frozen.count(t))
            throw SeedError("quiver: arrow between frozen vertices " + std::to_string(s) +
                            " and " + std::to_string(t));
        if (B.is_ex(t)) B.set(s, t, B.entry(s, t) + count);
        if (B.is_ex(s)) B.set(t, s, B.entry(t, s) - count);
    }
    B.validate();
    return B;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::array<long long, 3>> read_triples(const nlohmann::json& arr,
                                                   const std::string& what) {
    if (!arr.is_array()) throw SeedError("seed: " + what + " must be an array of [i,j,value]");
    std::vector<std::array<long long, 3>> out;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3)
            throw SeedError("seed: " + what + " entries must be [i,j,value]");
        out.push_back({t[0].get<long long>(), t[1].get<long long>(), t[2].get<long long>()});
    }
    return out;
}

} // namespace

ClusterSeed parse_seed(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SeedError(std::string("seed: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("K") || !j.contains("frozen") || !j.contains("B"))
        throw SeedError("seed: expected object with K, frozen and B");

    ExchangeMatrix B;
    for (const auto& v : j["K"]) B.ids.push_back(v.get<Idx>());
    std::set<Idx> frozen;
    for (const auto& v : j["frozen"]) {
        Idx f = v.get<Idx>();
        if (!B.has_id(f)) throw SeedError("seed: frozen index " + std::to_string(f) + " not in K");
        frozen.insert(f);
    }
    for (Idx i : B.ids)
        if (!frozen.count(i)) B.ex.insert(i);

    for (const auto& [i, jj, v] : read_triples(j["B"], "B")) {
        if (!B.has_id((Idx)i) || !B.has_id((Idx)jj))
            throw SeedError("seed: B entry references index outside K");
        if (!B.is_ex((Idx)jj))
            throw SeedError("seed: B column " + std::to_string(jj) +
                            " is frozen (only exchangeable columns are stored)");
        if (B.b.count({(Idx)i, (Idx)jj}))
            throw SeedError("seed: duplicate B entry (" + std::to_string(i) + "," +
                            std::to_string(jj) + ")");
        if (v != 0) B.b[{(Idx)i, (Idx)jj}] = v;
    }
    // complete the skew pair on exchangeable-exchangeable entries
    for (auto [key, v] : std::map<std::pair<Idx, Idx>, long long>(B.b)) {
        auto [i, jj] = key;
        if (B.is_ex(i)) {
            auto it = B.b.find({jj, i});
            if (it == B.b.end()) B.b[{jj, i}] = -v;
            else if (it->second != -v)
                throw SeedError("seed: B entries (" + std::to_string(i) + "," + std::to_string(jj) +
                                ") and (" + std::to_string(jj) + "," + std::to_string(i) +
                                ") are not skew");
        }
    }
    B.validate();

    std::optional<LMatrix> L;
    if (j.contains("L")) {
        LMatrix lm;
        for (const auto& [i, jj, v] : read_triples(j["L"], "L")) {
            if (!B.has_id((Idx)i) || !B.has_id((Idx)jj))
                throw SeedError("seed: L entry references index outside K");
            if (i == jj) {
                if (v != 0) throw SeedError("seed: L has a nonzero diagonal entry");
                continue;
            }
            long long cur = lm.entry((Idx)i, (Idx)jj);
            if (cur != 0 && cur != v)
                throw SeedError("seed: conflicting L entries at (" + std::to_string(i) + "," +
                                std::to_string(jj) + ")");
            lm.set((Idx)i, (Idx)jj, v);
        }
        L = lm;
    }
    return ClusterSeed::initial(std::move(B), std::move(L));
}

ClusterSeed load_seed(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SeedError("cannot open seed file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_seed(buf.str());
}

std::string render_seed(const ClusterSeed& seed) {
    ordered_json out;
    out["K"] = seed.B.ids;
    std::vector<Idx> frozen;
    for (Idx i : seed.B.ids)
        if (!seed.B.is_ex(i)) frozen.push_back(i);
    out["frozen"] = frozen;

    auto by_pos = [&](const std::pair<Idx, Idx>& a, const std::pair<Idx, Idx>& b) {
        return std::make_pair(seed.B.pos(a.first), seed.B.pos(a.second)) <
               std::make_pair(seed.B.pos(b.first), seed.B.pos(b.second));
    };
    std::vector<std::pair<Idx, Idx>> keys;
    for (const auto& [key, v] : seed.B.b) {
        (void)v;
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), by_pos);
    ordered_json barr = ordered_json::array();
    for (const auto& [i, j] : keys) barr.push_back({i, j, seed.B.b.at({i, j})});
    out["B"] = barr;

    if (seed.L) {
        keys.clear();
        for (const auto& [key, v] : seed.L->lam) {
            (void)v;
            if (seed.B.pos(key.first) < seed.B.pos(key.second)) keys.push_back(key);
        }
        std::sort(keys.begin(), keys.end(), by_pos);
        ordered_json larr = ordered_json::array();
        for (const auto& [i, j] : keys) larr.push_back({i, j, seed.L->entry(i, j)});
        out["L"] = larr;
    }
    return out.dump(2) + "\n";
}

} // namespace qac
