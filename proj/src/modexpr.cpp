#include "qac/modexpr.hpp"

#include <algorithm>
#include <cctype>

namespace qac {

StandardModule tensor(const StandardModule& m, const StandardModule& n) {
    StandardModule out = m;
    out.factors.insert(out.factors.end(), n.factors.begin(), n.factors.end());
    return out;
}

StandardModule shifted(const StandardModule& m, const SpectralParam& a) {
    StandardModule out = m;
    for (auto& f : out.factors) f.param = f.param * a;
    return out;
}

namespace {

StandardModule dual_once(const AffineTypeData& T, const StandardModule& m, bool right) {
    StandardModule out;
    out.factors.reserve(m.factors.size());
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        SpectralParam p = right ? it->param * T.pstar : it->param * inverse(T.pstar);
        out.factors.push_back({T.dual_node(it->node), p});
    }
    return out;
}

} // namespace

StandardModule left_dual(const AffineTypeData& T, const StandardModule& m) {
    return dual_once(T, m, false);
}

StandardModule right_dual(const AffineTypeData& T, const StandardModule& m) {
    return dual_once(T, m, true);
}

StandardModule dual_power(const AffineTypeData& T, const StandardModule& m, long long k) {
    StandardModule out = m;
    for (long long s = 0; s < (k >= 0 ? k : -k); ++s) out = dual_once(T, out, k >= 0);
    return out;
}

StandardModule barred(const StandardModule& m) {
    StandardModule out;
    out.factors.reserve(m.factors.size());
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it)
        out.factors.push_back({it->node, param_bar(it->param)});
    return out;
}

bool iso_equal(const AffineTypeData& T, const StandardModule& m, const StandardModule& n) {
    if (m.factors.size() != n.factors.size()) return false;
    // canonical form: zeta reduced mod 1/m_i, so params equal iff m_i-equivalent
    auto canon = [&](const StandardModule& x) {
        std::vector<FundParam> v;
        v.reserve(x.factors.size());
        for (const auto& f : x.factors) {
            Rat step(1, T.m_of(f.node));
            Rat z = f.param.zeta - step * Rat((f.param.zeta / step).floor());
            v.push_back({f.node, SpectralParam(z, f.param.qexp)});
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    return canon(m) == canon(n);
}

Weight weight(const StandardModule& m) {
    Weight w;
    for (const auto& f : m.factors)
        if (++w[f.node] == 0) w.erase(f.node);
    return w;
}

Weight weight_sum(const Weight& a, const Weight& b) {
    Weight w = a;
    for (const auto& [node, c] : b) {
        auto it = w.find(node);
        if (it == w.end()) {
            w[node] = c;
        } else if ((it->second += c) == 0) {
            w.erase(it);
        }
    }
    return w;
}

std::string render_module(const StandardModule& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& f : m.factors) {
        if (!out.empty()) out += " * ";
        out += "V(" + std::to_string(f.node) + ")[" + render_param(f.param) + "]";
    }
    return out;
}

StandardModule parse_module(const AffineTypeData& T, std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    };
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(pos, std::string("expected '") + c + "'");
        ++pos;
    };

    StandardModule out;
    bool first = true;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) throw ParseError(pos, "empty module expression");
            throw ParseError(pos, "expected factor after '*'");
        }
        if (text[pos] == '1') {
            ++pos;  // trivial factor contributes nothing
        } else if (text[pos] == 'V') {
            ++pos;
            skip_ws();
            expect('(');
            skip_ws();
            size_t nstart = pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            if (pos == nstart) throw ParseError(pos, "expected node index");
            int node = std::stoi(std::string(text.substr(nstart, pos - nstart)));
            if (node < 1 || node > T.rank)
                throw ParseError(nstart, "node " + std::to_string(node) + " out of range 1.." +
                                             std::to_string(T.rank) + " for type " + T.name);
            skip_ws();
            expect(')');
            skip_ws();
            expect('[');
            size_t pstart = pos;
            int depth = 1;
            while (pos < text.size() && depth > 0) {
                if (text[pos] == '[') ++depth;
                if (text[pos] == ']') --depth;
                if (depth > 0) ++pos;
            }
            if (depth != 0) throw ParseError(pstart, "unterminated parameter, expected ']'");
            SpectralParam p;
            try {
                p = parse_param(text.substr(pstart, pos - pstart));
            } catch (const std::invalid_argument& e) {
                throw ParseError(pstart, e.what());
            }
            ++pos;  // ']'
            out.factors.push_back({node, p});
        } else {
            throw ParseError(pos, "expected 'V(' or '1'");
        }
        first = false;
        skip_ws();
        if (pos >= text.size()) break;
        expect('*');
    }
    return out;
}

} // namespace qac
