#include "kcrank/crank_table.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "kcrank/parallel.hpp"
#include "kcrank/partitions.hpp"

namespace kcrank {

KCrankTable::KCrankTable(int k, int order) : k_(k), order_(order) {
    if (k < 1) throw Error("table needs k >= 1");
    if (order < 0) throw Error("table order must be >= 0");
    rows_.resize(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        rows_[n].resize(static_cast<std::size_t>(k_ >= 2 ? n + 1 : 2 * n + 1));
}

namespace {
const Integer kZero{};
}

const Integer& KCrankTable::entry(int m, int n) const {
    if (n < 0 || n > order_)
        throw OrderExceededError("row " + std::to_string(n) + " exceeds table order " +
                                 std::to_string(order_));
    int am = m < 0 ? -m : m;
    if (am > n) return kZero;
    return k_ >= 2 ? rows_[n][am] : rows_[n][m + n];
}

Integer& KCrankTable::slot(int m, int n) {
    return k_ >= 2 ? rows_[n][m] : rows_[n][m + n];
}

Integer KCrankTable::row_sum(int n) const {
    Integer s;
    for (int m = -n; m <= n; ++m) s += entry(m, n);
    return s;
}

ResidueTable::ResidueTable(int k, int modulus, int order)
    : k_(k), d_(modulus), order_(order) {
    if (modulus < 2) throw Error("residue modulus must be >= 2");
    values_.resize(static_cast<std::size_t>(modulus));
    for (auto& col : values_) col.resize(static_cast<std::size_t>(order) + 1);
}

const Integer& ResidueTable::count(int r, int n) const {
    if (r < 0 || r >= d_) throw Error("residue out of range");
    if (n < 0 || n > order_) throw OrderExceededError("row exceeds residue table order");
    return values_[r][n];
}

Integer& ResidueTable::slot(int r, int n) { return values_[r][n]; }

// ---------------------------------------------------------------------------
// D(m,w) kernel.
//
// For N <= 400 the double convolution runs in native integers: every p#(n,t)
// is at most p(400) < 2^63, and every partial sum is bounded by its target
// D(m,w) <= p_2(400) < 2^126 since all summands are nonnegative. A runtime
// check on max p#(n,t) guards the path before it is taken.
// ---------------------------------------------------------------------------

namespace {

constexpr int kNativeLimit = 400;

Integer int128_to_mpz(unsigned __int128 v) {
    Integer hi(static_cast<unsigned long>(v >> 64));
    Integer lo(static_cast<unsigned long>(v & ~0ULL));
    return (hi << 64) + lo;
}

std::vector<std::vector<std::int64_t>> native_parts_count(int N) {
    std::vector<std::vector<std::int64_t>> pc(
        static_cast<std::size_t>(N) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(N) + 1, 0));
    pc[0][0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int t = 1; t <= n; ++t)
            pc[n][t] = pc[n - 1][t - 1] + (n - t >= 0 ? pc[n - t][t] : 0);
    return pc;
}

}  // namespace

CrankKernel::CrankKernel(int order, int jobs, bool force_exact) : order_(order) {
    if (order < 0) throw Error("kernel order must be >= 0");
    const int N = order;
    d_.resize(static_cast<std::size_t>(N) + 1);

    if (N <= kNativeLimit && !force_exact) {
        auto pc = native_parts_count(N);
        {
            // p(N) must fit int64 for the native rows to be exact
            std::vector<Integer> p1 = pk_table(1, N);
            if (!p1[N].fits_slong_p()) throw Error("native parts-count bound violated");
            Integer check;
            for (int t = 0; t <= N; ++t) check += Integer(static_cast<long>(pc[N][t]));
            if (check != p1[N]) throw Error("native parts-count row disagrees with exact");
        }
        parallel_for(0, N + 1, jobs, [&](int m) {
            std::vector<unsigned __int128> acc(static_cast<std::size_t>(N) + 1, 0);
            for (int t = 0; m + 2 * t <= N; ++t) {
                for (int a = t + m; a + t <= N; ++a) {
                    std::int64_t pa = pc[a][t + m];
                    if (pa == 0) continue;
                    for (int b = t; a + b <= N; ++b) {
                        std::int64_t pb = pc[b][t];
                        if (pb)
                            acc[a + b] += static_cast<unsigned __int128>(pa) *
                                          static_cast<unsigned __int128>(pb);
                    }
                }
            }
            auto& row = d_[m];
            row.resize(static_cast<std::size_t>(N) + 1);
            for (int w = 0; w <= N; ++w) row[w] = int128_to_mpz(acc[w]);
        });
    } else {
        PartsCountTable pc(N);
        parallel_for(0, N + 1, jobs, [&](int m) {
            auto& row = d_[m];
            row.resize(static_cast<std::size_t>(N) + 1);
            for (int t = 0; m + 2 * t <= N; ++t)
                for (int a = t + m; a + t <= N; ++a) {
                    const Integer& pa = pc.count(a, t + m);
                    if (sgn(pa) == 0) continue;
                    for (int b = t; a + b <= N; ++b)
                        mpz_addmul(row[a + b].get_mpz_t(), pa.get_mpz_t(),
                                   pc.count(b, t).get_mpz_t());
                }
        });
    }
}

KCrankTable CrankKernel::table_for(int k) const {
    if (k < 2) throw Error("the convolution build needs k >= 2");
    const int N = order_;
    KCrankTable t(k, N);
    if (k == 2) {
        for (int n = 0; n <= N; ++n)
            for (int m = 0; m <= n; ++m) t.slot(m, n) = d_[m][n];
        return t;
    }
    std::vector<Integer> pk2 = pk_table(k - 2, N);
    for (int m = 0; m <= N; ++m) {
        const auto& dm = d_[m];
        for (int n = m; n <= N; ++n) {
            Integer& out = t.slot(m, n);
            for (int w = m; w <= n; ++w)
                mpz_addmul(out.get_mpz_t(), dm[w].get_mpz_t(), pk2[n - w].get_mpz_t());
        }
    }
    return t;
}

KCrankTable build(int k, int N, int jobs) {
    return CrankKernel(N, jobs).table_for(k);
}

ResidueTable residues(const KCrankTable& t, int d) {
    if (d < 2) throw Error("residue modulus must be >= 2");
    ResidueTable rt(t.k(), d, t.order());
    for (int n = 0; n <= t.order(); ++n)
        for (int m = -n; m <= n; ++m) {
            int r = ((m % d) + d) % d;
            rt.slot(r, n) += t.entry(m, n);
        }
    return rt;
}

QSeries residue_difference_series(const KCrankTable& t, int d, int r1, int r2) {
    if (d < 2) throw Error("residue modulus must be >= 2");
    if (r1 < 0 || r1 >= d || r2 < 0 || r2 >= d) throw Error("residue out of range");
    ResidueTable rt = residues(t, d);
    std::vector<Integer> c(static_cast<std::size_t>(t.order()) + 1);
    for (int n = 0; n <= t.order(); ++n) c[n] = rt.count(r1, n) - rt.count(r2, n);
    return QSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Cache format
// ---------------------------------------------------------------------------

void write_cache(const KCrankTable& t, std::ostream& out) {
    out << "KCRANK v1 k=" << t.k() << " N=" << t.order() << '\n';
    for (int n = 0; n <= t.order(); ++n) {
        out << n << ':';
        if (t.k() == 1) {
            out << " full";
            for (int m = -n; m <= n; ++m) out << ' ' << t.entry(m, n).get_str();
        } else {
            for (int m = 0; m <= n; ++m) out << ' ' << t.entry(m, n).get_str();
        }
        out << '\n';
    }
    out << "END " << t.order() + 1 << '\n';
}

namespace {
Integer parse_value(const std::string& tok) {
    // mpz_class(str) aborts on garbage; validate first
    if (tok.empty()) throw CacheFormatError("empty value token");
    std::size_t start = tok[0] == '-' ? 1 : 0;
    if (start == tok.size()) throw CacheFormatError("bare sign in value token");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw CacheFormatError("malformed value token '" + tok + "'");
    return Integer(tok, 10);
}
}  // namespace

KCrankTable read_cache(std::istream& in, int expect_k, int expect_order) {
    std::string line;
    if (!std::getline(in, line)) throw CacheFormatError("missing header line");
    {
        std::istringstream hs(line);
        std::string magic, version, ktok, ntok, extra;
        hs >> magic >> version >> ktok >> ntok;
        if (magic != "KCRANK" || version != "v1")
            throw CacheFormatError("foreign or unversioned cache header: '" + line + "'");
        if (ktok != "k=" + std::to_string(expect_k) ||
            ntok != "N=" + std::to_string(expect_order))
            throw CacheFormatError("cache header mismatch: expected k=" +
                                   std::to_string(expect_k) + " N=" +
                                   std::to_string(expect_order) + ", got '" + line + "'");
        if (hs >> extra) throw CacheFormatError("trailing tokens in header");
    }
    KCrankTable t(expect_k, expect_order);
    for (int n = 0; n <= expect_order; ++n) {
        if (!std::getline(in, line))
            throw CacheFormatError("truncated cache: missing row " + std::to_string(n));
        std::istringstream rs(line);
        std::string label;
        rs >> label;
        if (label != std::to_string(n) + ":")
            throw CacheFormatError("unexpected row label '" + label + "' for row " +
                                   std::to_string(n));
        std::vector<std::string> toks;
        std::string tok;
        while (rs >> tok) toks.push_back(tok);
        if (expect_k == 1) {
            if (toks.empty() || toks[0] != "full")
                throw CacheFormatError("k=1 rows must carry the 'full' tag");
            if (static_cast<int>(toks.size()) != 2 * n + 2)
                throw CacheFormatError("row " + std::to_string(n) + " has wrong width");
            for (int m = -n; m <= n; ++m) t.slot(m, n) = parse_value(toks[m + n + 1]);
        } else {
            if (static_cast<int>(toks.size()) != n + 1)
                throw CacheFormatError("row " + std::to_string(n) + " has wrong width");
            for (int m = 0; m <= n; ++m) t.slot(m, n) = parse_value(toks[m]);
        }
    }
    if (!std::getline(in, line)) throw CacheFormatError("truncated cache: missing END line");
    {
        std::istringstream es(line);
        std::string word;
        long count = -1;
        es >> word >> count;
        if (word != "END" || count != expect_order + 1)
            throw CacheFormatError("bad END line: '" + line + "'");
    }
    return t;
}

}  // namespace kcrank
