#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcrank/bivariate.hpp"
#include "kcrank/crank_table.hpp"

namespace kcrank {

enum class Relation { Less, Equal, Greater };

/// What a theorem clause asserts at an index; None marks recorded-only
/// indices that the source states no claim about.
enum class Expectation { Less, LessEq, Equal, GreaterEq, Greater, None };

enum class Status { Pass, Exception, Recorded, Violation };

std::string to_string(Relation r);
std::string to_string(Expectation e);
std::string to_string(Status s);

/// One checked index of one clause. Values are decimal strings so consumers
/// never face integer-width limits.
struct CheckRecord {
    std::string suite;
    std::string clause;
    int k = 0;        // 0 when not applicable
    int modulus = 0;  // 0 when not applicable
    int j = -1;       // -1 when not applicable
    long n = 0;
    std::string lhs;
    std::string rhs;
    Relation observed = Relation::Equal;
    Expectation expected = Expectation::None;
    Status status = Status::Recorded;
};

/// Outcome of one suite run: records plus tallies. Fully deterministic:
/// identical inputs produce byte-identical serializations.
struct Report {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<CheckRecord> records;
    std::size_t passes = 0;
    std::size_t exceptions = 0;
    std::size_t recorded = 0;
    std::size_t violations = 0;

    bool green() const { return violations == 0; }
    void tally();  // recompute the summary counts from the records
};

std::string render_report_json(const Report& r);
std::string render_report_text(const Report& r);
std::string render_report_csv(const Report& r);
std::string render_reports_json(const std::vector<Report>& rs);

/// Lazily builds and memoizes the tables the suites share. k = 1 goes through
/// the bivariate expansion, k >= 2 through the part-count convolution with
/// the D(m,w) kernel shared across k. Not synchronized; suites run in turn.
/// Requesting a larger order for a k rebuilds that table and invalidates
/// previously returned references for that k.
class TableCache {
public:
    explicit TableCache(int jobs = 1) : jobs_(jobs) {}

    const KCrankTable& table(int k, int order);
    const std::vector<Integer>& pk(int k, int order);
    int jobs() const { return jobs_; }

private:
    int jobs_;
    std::optional<CrankKernel> kernel_;
    std::map<int, KCrankTable> tables_;
    std::map<int, std::vector<Integer>> pks_;
};

/// k-crank mod 2: sign alternation for k in {1,2,3}, alternation/equality for
/// k = 4, strict dominance for k >= 5, over all n in [0, N].
Report suite_mod2(TableCache& cache, int N, int kmax);

/// k-crank mod 3: Kane's four clauses for k = 1 (equalities at weights 14 and
/// 17, weight 5 recorded unjudged), the +-- pattern for k = 2 (weight 5 is a
/// declared exception: the unique zero coefficient of (q;q^3)(q^2;q^3)),
/// >,=,= by residue class for k = 3, strict dominance for k >= 4; plus the
/// 27-periodic 3-dissection of J_1/J_3 checked coefficient-wise to
/// dissection_order (defaults to N).
Report suite_mod3(TableCache& cache, int N, int kmax, int dissection_order = -1);

/// k-crank mod 4 chains with the declared exceptions (k=1: weights 2 and 3,
/// k=2: weight 4).
Report suite_mod4(TableCache& cache, int N, int kmax);

/// Moment checks: positivity of (-1)^n mu_{2j,k}(-1,n) for k in {1,2,3},
/// j <= j_max, j <= n <= N; and three-way route equality (direct = gf1 = gf2)
/// for every k in [1, kmax], capped at order <= 60 and j <= 4 (the gf2 tuple
/// enumeration is exponential in j).
Report suite_moments(TableCache& cache, int N, int j_max, int kmax);

/// Mean-square identity for k <= kmax with the divisibility remark, the
/// mod-8 crank identity for 4n+1 <= N, and Lewis's rank parity inequalities
/// by enumeration for weights <= min(N, rank_budget).
Report suite_identities(TableCache& cache, int N, int kmax, int rank_budget = 60);

/// Unimodality scan for k in [2, kmax] (declared exception (k,n) = (2,1)),
/// the three k = 2 monotonicity relations, half-monotonicity, and the crank
/// counter-pattern for 4 <= n <= min(N, 100).
Report suite_unimodal(TableCache& cache, int N, int kmax);

/// All suites in a fixed order with the given global parameters.
std::vector<Report> run_all_suites(TableCache& cache, int N, int kmax, int j_max = 5,
                                   int rank_budget = 60);

}  // namespace kcrank
