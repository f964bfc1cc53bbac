#include "qac/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qac {

void AffineTypeData::validate() const {
    if (rank < 1) throw TypeDataError(name + ": rank must be >= 1");
    if ((int)dual.size() != rank) throw TypeDataError(name + ": dual map must list all nodes");
    if ((int)m.size() != rank) throw TypeDataError(name + ": m must list all nodes");
    for (int i = 1; i <= rank; ++i) {
        int di = dual[i - 1];
        if (di < 1 || di > rank)
            throw TypeDataError(name + ": dual(" + std::to_string(i) + ") out of range");
        if (dual[di - 1] != i)
            throw TypeDataError(name + ": dual map is not an involution at node " +
                                std::to_string(i));
        if (m[i - 1] < 1 || m[i - 1] > 3)
            throw TypeDataError(name + ": m_" + std::to_string(i) + " must be in {1,2,3}");
    }
    if (!(ptilde == pstar * pstar))
        throw TypeDataError(name + ": ptilde != pstar^2");
    check_ptilde(ptilde);
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            auto it = denom.find({i, j});
            if (it == denom.end())
                throw TypeDataError(name + ": missing denominator for pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            for (const auto& [root, mult] : it->second.roots())
                if (mult <= 0)
                    throw TypeDataError(name + ": non-positive root multiplicity in d_{" +
                                        std::to_string(i) + "," + std::to_string(j) + "}");
        }
    for (const auto& [key, value] : denom) {
        (void)value;
        if (key.first < 1 || key.first > rank || key.second < 1 || key.second > rank)
            throw TypeDataError(name + ": denominator entry for unknown node pair");
    }
}

AffineTypeData builtin_type_A(int n) {
    if (n < 2) throw TypeDataError("builtin_type_A: n must be >= 2");
    AffineTypeData T;
    T.name = "A" + std::to_string(n - 1) + "~1";
    T.rank = n - 1;
    T.pstar = neg_q_pow(n);
    T.ptilde = T.pstar * T.pstar;
    T.dual.resize(T.rank);
    T.m.assign(T.rank, 1);
    for (int i = 1; i <= T.rank; ++i) T.dual[i - 1] = n - i;
    for (int i = 1; i <= T.rank; ++i)
        for (int j = 1; j <= T.rank; ++j) {
            RootMultiset d;
            int bound = std::min(std::min(i, j), std::min(n - i, n - j));
            for (int s = 1; s <= bound; ++s) d.add(neg_q_pow(2 * s + std::abs(i - j)));
            T.denom[{i, j}] = d;
        }
    T.validate();
    return T;
}

namespace {

Rat json_rat(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    throw TypeDataError(where + ": expected rational as \"p/q\" string or integer");
}

SpectralParam json_param(const nlohmann::json& v, const std::string& where) {
    if (!v.is_object() || !v.contains("zeta") || !v.contains("qexp"))
        throw TypeDataError(where + ": expected object with zeta and qexp");
    return SpectralParam(json_rat(v["zeta"], where + ".zeta"), json_rat(v["qexp"], where + ".qexp"));
}

} // namespace

AffineTypeData parse_type_data(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw TypeDataError(std::string("type data: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw TypeDataError("type data: top level must be an object");
    for (const char* field : {"name", "rank", "pstar", "dual", "m", "denominators"})
        if (!j.contains(field))
            throw TypeDataError(std::string("type data: missing field '") + field + "'");

    AffineTypeData T;
    if (!j["name"].is_string()) throw TypeDataError("type data: name must be a string");
    T.name = j["name"].get<std::string>();
    if (!j["rank"].is_number_integer()) throw TypeDataError("type data: rank must be an integer");
    T.rank = j["rank"].get<int>();
    T.pstar = json_param(j["pstar"], "pstar");
    T.ptilde = T.pstar * T.pstar;

    if (!j["dual"].is_array() || !j["m"].is_array())
        throw TypeDataError("type data: dual and m must be arrays");
    for (const auto& v : j["dual"]) T.dual.push_back(v.get<int>());
    for (const auto& v : j["m"]) T.m.push_back(v.get<int>());

    if (!j["denominators"].is_object())
        throw TypeDataError("type data: denominators must be an object");
    for (const auto& [key, arr] : j["denominators"].items()) {
        std::istringstream ss(key);
        int i = 0, jj = 0;
        char comma = 0;
        if (!(ss >> i >> comma >> jj) || comma != ',' || !ss.eof())
            throw TypeDataError("type data: bad denominator key '" + key + "' (want \"i,j\")");
        if (!arr.is_array())
            throw TypeDataError("type data: denominators[\"" + key + "\"] must be an array");
        RootMultiset d;
        for (const auto& entry : arr) {
            long long mult = 1;
            if (entry.contains("mult")) mult = entry["mult"].get<long long>();
            d.add(json_param(entry, "denominators[\"" + key + "\"]"), mult);
        }
        T.denom[{i, jj}] = d;
    }
    T.validate();
    return T;
}

AffineTypeData load_type(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TypeDataError("cannot open type data file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_type_data(buf.str());
}

AffineTypeData resolve_type(const std::string& name_or_path) {
    // builtin names look like "A<n>~1"
    if (name_or_path.size() >= 4 && name_or_path[0] == 'A' &&
        name_or_path.substr(name_or_path.size() - 2) == "~1") {
        std::string mid = name_or_path.substr(1, name_or_path.size() - 3);
        if (!mid.empty() && std::all_of(mid.begin(), mid.end(), [](unsigned char c) {
                return std::isdigit(c);
            }))
            return builtin_type_A(std::stoi(mid) + 1);
    }
    return load_type(name_or_path);
}

GFun universal_coefficient(const AffineTypeData& T, int i, int j) {
    T.require_node(i);
    T.require_node(j);
    GFun a;
    for (const auto& [y, mult] : T.denom_at(T.dual_node(i), j).roots()) {
        a.mul_factor(T.pstar * y, mult);
        a.mul_factor(T.pstar * param_bar(y), mult);
    }
    for (const auto& [x, mult] : T.denom_at(i, j).roots()) {
        a.mul_factor(x, -mult);
        a.mul_factor(T.ptilde * param_bar(x), -mult);
    }
    return a;
}

GFun fundamental_c(const AffineTypeData& T, int i, int j) {
    return embed_poly(T.denom_at(i, j), T.ptilde) / universal_coefficient(T, i, j);
}

} // namespace qac
