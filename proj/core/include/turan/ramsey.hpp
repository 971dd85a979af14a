#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"
#include "turan/patterns.hpp"
#include "turan/search.hpp"

namespace turan {

// s_r = max{s : sum_{k=6}^s C(k,2) <= r-1},  t_r = max{t : C(t,3) <= r}
long long ramsey_s(long long r);
long long ramsey_t(long long r);

// Total r-coloring of the edges of K_n^{(3)}, one color per colex rank.
struct Coloring {
    int n = 0;
    int r = 0;
    std::vector<int> colors;

    Hypergraph3 color_class(int c) const;
};

struct LowerBoundColoring {
    int n = 0;                // vertices colored
    int certified_bound = 0;  // the Ramsey number is at least this (= n+1)
    char variant = 't';       // which construction branch was used
    Coloring coloring;
};

// Proper coloring of K_{r+max(s_r,t_r)} with no monochromatic minimal
// 4-path member; verified before returning.
LowerBoundColoring ramsey_lower_bound(int r);

struct MonochromaticWitness {
    int color = 0;
    std::vector<Triple> edges;
};
std::optional<MonochromaticWitness> monochromatic_witness(const Coloring& c,
                                                          const FamilySpec& family);
bool is_proper(const Coloring& c, const FamilySpec& family);

// True iff every r-coloring of K_n^{(3)} has a monochromatic family member.
// Enumerates colorings up to color permutation (colors first appear in
// increasing order along colex ranks). A false result returns a proper
// coloring through `counterexample`.
bool ramsey_exhaustive(int n, int r, const FamilySpec& family,
                       Coloring* counterexample = nullptr,
                       int worker_count = 1,
                       long double enumeration_guard = 1e15L);

// min{n : C(n,3) / floor(n/3) > r}, evaluated in integers
int ramsey_formula_p2(long long r);

enum class Provenance { Search, Published };
std::string provenance_name(Provenance p);

struct TuranValue {
    long long value = -1;
    Provenance provenance = Provenance::Published;
    std::string citation;

    static TuranValue from_record(const TuranRecord& rec);
};

// (n, order) -> certified Turán value for the minimal 4-path family
class TuranDb {
public:
    void put(int n, int order, TuranValue v);
    std::optional<TuranValue> get(int n, int order) const;
    const std::map<std::pair<int, int>, TuranValue>& entries() const {
        return entries_;
    }

private:
    std::map<std::pair<int, int>, TuranValue> entries_;
};

// The published first/second/third order values at n = 9, 10 used by the
// multicolor chains, plus ex(7) and ex(8).
TuranDb published_values_db();

struct UpperBoundCertificate {
    int n = 0;
    int r = 0;
    long long turan_value = 0;
    Provenance provenance = Provenance::Search;
    std::string inequality;  // "C(n,3) > r * value" instantiated
};

// Certificate that the Ramsey number is at most n, valid iff
// C(n,3) > r * turan_value.
std::optional<UpperBoundCertificate> turan_to_ramsey_upper(int n, int r,
                                                           const TuranValue& v);

struct DerivationStep {
    std::string id;
    std::string kind;  // lower-bound | averaging | deletion | classify | degree-obstruction | turan-cite
    std::string detail;
    bool pass = false;
};

struct RamseyDerivation {
    int r = 0;
    int verdict = 0;  // the Ramsey number established
    std::vector<DerivationStep> steps;
    bool pass = false;
};

// Replays the upper-bound chain for r in {1,2,3,4} against the supplied
// Turán values, re-checking every arithmetic step, and pairs it with the
// lower-bound coloring. Throws on a failing step or missing db entry.
RamseyDerivation verify_theorem_rn(int r, const TuranDb& db);

}  // namespace turan
