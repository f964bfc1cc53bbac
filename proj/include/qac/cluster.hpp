#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qac {

using Idx = int;

struct SeedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact multivariate Laurent polynomial over Z, exponent vectors of a
// fixed length, arbitrary-precision coefficients.  No zero coefficients
// are stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using Coeff = mpz_class;

    explicit LaurentPoly(size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(size_t nvars, const Coeff& c);
    static LaurentPoly variable(size_t nvars, size_t pos, int power = 1);
    static LaurentPoly monomial(Exponents e, const Coeff& c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Coeff>& terms() const { return terms_; }

    LaurentPoly& add_term(const Exponents& e, const Coeff& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly pow(long long k) const;

    // Exact quotient a / b, or nullopt when b does not divide a.
    static std::optional<LaurentPoly> div_exact(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string str(const std::vector<std::string>& names) const;

private:
    size_t nvars_;
    std::map<Exponents, Coeff> terms_;
};

// K x Kex integer matrix with skew-symmetric principal part, stored
// sparsely; entries with a frozen column index exist only through the
// extension b_ij = -b_ji (and 0 between frozen indices).
struct ExchangeMatrix {
    std::vector<Idx> ids;  // all of K, presentation order
    std::set<Idx> ex;      // exchangeable indices
    std::map<std::pair<Idx, Idx>, long long> b;  // keys (i,j) with j in ex

    bool is_ex(Idx i) const { return ex.count(i) != 0; }
    bool has_id(Idx i) const;
    size_t pos(Idx i) const;  // position in ids; throws SeedError when unknown

    long long entry(Idx i, Idx j) const;
    void set(Idx i, Idx j, long long v);  // j must be exchangeable

    // Principal skew-symmetry and index sanity.  Throws SeedError.
    void validate() const;

    friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

// Skew-symmetric K x K integer matrix, both orientations stored.
struct LMatrix {
    std::map<std::pair<Idx, Idx>, long long> lam;

    long long entry(Idx i, Idx j) const;
    void set(Idx i, Idx j, long long v);  // also records (j,i) = -v

    friend bool operator==(const LMatrix&, const LMatrix&) = default;
};

struct CompatibilityResult {
    bool ok = true;
    Idx i = 0, j = 0;       // first violating pair when !ok
    long long got = 0;      // value of sum_k lambda_ik b_kj there
    explicit operator bool() const { return ok; }
};

// sum_k lambda_ik b_kj = 2 delta_ij for all i in K, j in Kex.
CompatibilityResult check_compatible(const LMatrix& L, const ExchangeMatrix& B);

ExchangeMatrix mutate_B(const ExchangeMatrix& B, Idx k);
LMatrix mutate_L(const LMatrix& L, const ExchangeMatrix& B, Idx k);

// Cluster with variables tracked as exact Laurent polynomials in the
// initial indeterminates.  L is optional at this level; when present,
// (L, B) is required to be compatible with 2.
struct ClusterSeed {
    ExchangeMatrix B;
    std::optional<LMatrix> L;
    std::map<Idx, LaurentPoly> vars;

    static ClusterSeed initial(ExchangeMatrix B, std::optional<LMatrix> L);

    friend bool operator==(const ClusterSeed&, const ClusterSeed&) = default;
};

// Exact division failed during a variable exchange.  This contradicts
// the Laurent phenomenon, so it is an engine fault, not user error.
struct LaurentFault : std::logic_error {
    using std::logic_error::logic_error;
};

// (prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0} x_i^{-b_ik}) / x_k over the
// current variables.  Throws LaurentFault if the division is not exact.
LaurentPoly mutate_var(const ClusterSeed& seed, Idx k);

ClusterSeed mutate_seed(const ClusterSeed& seed, Idx k);

// Directed multigraph without loops, 2-cycles or frozen-frozen arrows.
struct Quiver {
    std::vector<Idx> ids;
    std::set<Idx> frozen;
    std::map<std::pair<Idx, Idx>, long long> arrows;  // (i,j) -> count > 0

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

Quiver to_quiver(const ExchangeMatrix& B);
ExchangeMatrix from_quiver(const Quiver& q);  // throws SeedError on invalid quivers

// Seed file schema: {"K": [...], "frozen": [...], "B": [[i,j,v],...],
// "L": [[i,j,v],...] optional}.  Variables start as the indeterminates.
ClusterSeed load_seed(const std::string& path);
ClusterSeed parse_seed(const std::string& json_text);
std::string render_seed(const ClusterSeed& seed);  // deterministic ordering

} // namespace qac
