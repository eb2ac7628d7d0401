#include "resolvent/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <thread>

#include "resolvent/analysis.hpp"
#include "resolvent/families.hpp"
#include "resolvent/formulas.hpp"
#include "resolvent/isomorphism.hpp"
#include "resolvent/products.hpp"
#include "resolvent/resolving.hpp"
#include "resolvent/strong.hpp"
#include "resolvent/vertex_cover.hpp"

namespace resolvent {

namespace {

[[noreturn]] void bad_ranges(const std::string& why)
{
    throw Error(ErrorCode::bad_ranges, why);
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::optional<long> to_long(std::string_view s)
{
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

bool is_k_head(std::string_view s)
{
    return s.size() >= 2 && s[0] == 'K' && to_long(s.substr(1)).has_value();
}

std::vector<std::string> split_values(std::string_view key, std::string_view text)
{
    std::vector<std::string> out;
    if (trim(text).empty())
        return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (token.empty())
            bad_ranges("empty value for '" + std::string(key) + "'");
        if (!out.empty() && is_k_head(out.back()) && to_long(token)) {
            out.back() += "," + std::string(token);
        } else if (auto dots = token.find(".."); dots != std::string_view::npos) {
            auto lo = to_long(trim(token.substr(0, dots)));
            auto hi = to_long(trim(token.substr(dots + 2)));
            if (!lo || !hi)
                bad_ranges("bad interval '" + std::string(token) + "' for '" + std::string(key) + "'");
            if (*hi < *lo)
                bad_ranges("empty interval '" + std::string(token) + "' for '" + std::string(key) + "'");
            if (*hi - *lo > 100000)
                bad_ranges("interval too long for '" + std::string(key) + "'");
            for (long v = *lo; v <= *hi; ++v)
                out.push_back(std::to_string(v));
        } else {
            out.emplace_back(token);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::uint64_t mix(std::uint64_t x)
{
    // SplitMix64 finalizer; derives per-case seeds from the suite seed.
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// One grid point. `run` fills values and verdict; it may throw.
struct Case {
    Params params;
    std::function<void(CaseRow&)> run;
};

class Suite {
public:
    Suite(std::string name, const Ranges& ranges, const Caps& caps, std::uint64_t seed)
        : name_(std::move(name)), ranges_(ranges), caps_(caps), seed_(seed)
    {
    }

    [[nodiscard]] SearchLimits limits() const { return {caps_.node_budget, caps_.time_budget}; }
    [[nodiscard]] CoverOptions cover_options() const { return {limits(), false}; }

    /// Marks the row skipped when `order` exceeds the size cap.
    bool fits(CaseRow& row, std::size_t order) const
    {
        if (order <= caps_.size_cap)
            return true;
        row.verdict = Verdict::skipped;
        row.reason = "oracle input has " + std::to_string(order) + " vertices, above size cap " +
                     std::to_string(caps_.size_cap);
        return false;
    }

    static void compare(CaseRow& row)
    {
        row.verdict = row.formula_value == row.oracle_value ? Verdict::pass : Verdict::fail;
    }

    void add(Params params, std::function<void(CaseRow&)> run) { cases_.push_back({std::move(params), std::move(run)}); }

    [[nodiscard]] const Ranges& ranges() const { return ranges_; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    VerificationReport execute(std::string effective_ranges) const;

private:
    std::string repro(const Params& params) const;

    std::string name_;
    const Ranges& ranges_;
    Caps caps_;
    std::uint64_t seed_;
    std::vector<Case> cases_;
};

std::string Suite::repro(const Params& params) const
{
    std::string grid;
    for (const auto& [k, v] : params) {
        if (!grid.empty())
            grid += ';';
        grid += k + "=" + v;
    }
    return "resolvent verify --suite " + name_ + " --ranges '" + grid + "' --seed " + std::to_string(seed_) +
           " --cap " + std::to_string(caps_.size_cap);
}

VerificationReport Suite::execute(std::string effective_ranges) const
{
    std::vector<CaseRow> rows(cases_.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (auto i = next++; i < cases_.size(); i = next++) {
            auto& row = rows[i];
            row.suite = name_;
            row.params = cases_[i].params;
            row.repro_cmd = repro(row.params);
            const auto start = std::chrono::steady_clock::now();
            try {
                cases_[i].run(row);
            } catch (const BudgetExceeded& e) {
                row.verdict = Verdict::skipped;
                row.reason = "search budget exhausted; bounds " + std::to_string(e.lower_bound()) + ".." +
                             std::to_string(e.upper_bound());
            } catch (const Error& e) {
                switch (e.code()) {
                case ErrorCode::not_2mmf:
                case ErrorCode::precondition_failed:
                case ErrorCode::bad_params:
                case ErrorCode::not_a_tree:
                case ErrorCode::too_large:
                    row.verdict = Verdict::skipped;
                    row.reason = std::string("outside hypotheses or caps: ") + e.what();
                    break;
                default:
                    row.verdict = Verdict::fail;
                    row.reason = e.what();
                }
            } catch (const std::exception& e) {
                row.verdict = Verdict::fail;
                row.reason = e.what();
            }
            if (caps_.record_timing)
                row.elapsed_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const auto workers = std::min(worker_count(), std::max<std::size_t>(cases_.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < workers; ++i)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    VerificationReport report;
    report.suite = name_;
    report.ranges = std::move(effective_ranges);
    report.seed = seed_;
    report.caps = caps_;
    for (const auto& row : rows) {
        switch (row.verdict) {
        case Verdict::pass: ++report.summary.pass; break;
        case Verdict::fail: ++report.summary.fail; break;
        case Verdict::skipped: ++report.summary.skipped; break;
        }
    }
    report.rows = std::move(rows);
    return report;
}

std::string num(long v)
{
    return std::to_string(v);
}

std::string grid_echo(const std::vector<std::pair<std::string, std::vector<std::string>>>& grid)
{
    Ranges r{grid};
    return r.to_string();
}

Graph family(const std::string& spec)
{
    return make_family(parse_family_spec(spec));
}

// Shared shape: closed form versus exact metric dimension of a product.
void metric_rows(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo,
                 std::vector<long> r_default, std::vector<long> t_default, bool need_r_le_t,
                 std::function<Graph(long)> first, std::function<std::size_t(long, long)> formula)
{
    auto rs = s.ranges().integers("r", std::move(r_default));
    auto ts = s.ranges().integers("t", std::move(t_default));
    echo = {{"r", {}}, {"t", {}}};
    for (auto r : rs)
        echo[0].second.push_back(num(r));
    for (auto t : ts)
        echo[1].second.push_back(num(t));
    for (auto r : rs)
        for (auto t : ts) {
            if (need_r_le_t && (r > t || t < 3 || r < 2))
                continue;
            s.add({{"r", num(r)}, {"t", num(t)}}, [&s, r, t, first, formula](CaseRow& row) {
                row.formula_value = formula(r, t);
                if (r < 1 || t < 1)
                    throw Error(ErrorCode::bad_params, "factor orders must be positive");
                if (!s.fits(row, static_cast<std::size_t>(r * t)))
                    return;
                auto d = metric_dimension(direct_product(first(r), complete_graph(static_cast<std::size_t>(t))),
                                          s.limits());
                row.oracle_value = d.value;
                row.witness = d.witness;
                Suite::compare(row);
            });
        }
}

const std::vector<std::string> kStructureFixtures = {"P4", "P5", "P6", "C6", "C8", "subdivstar:3"};
const std::vector<std::string> kTreeFixtures = {"P4", "P5", "P6", "P7", "P8", "subdivstar:2", "subdivstar:3"};
const std::vector<std::string> kReductionFixtures = {"P4",  "P5",       "P6",           "C5",       "C6",
                                                     "C8",  "K4",       "K2,3",         "star:4",   "petersen",
                                                     "mobius:8", "subdivstar:3"};

std::vector<long> ns_of(const Suite& s)
{
    return s.ranges().integers("n", {3, 4});
}

void add_structure_suite(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo,
                         const std::string& which)
{
    // K4 is the one fixture with triangles; lem3.3 skips it as outside its hypotheses.
    auto fixtures = s.ranges().strings("G", [] {
        auto f = kStructureFixtures;
        f.push_back("K4");
        return f;
    }());
    auto ns = ns_of(s);
    echo = {{"G", fixtures}, {"n", {}}};
    for (auto n : ns)
        echo[1].second.push_back(num(n));
    for (const auto& spec : fixtures)
        for (auto n : ns)
            s.add({{"G", spec}, {"n", num(n)}}, [&s, spec, n, which](CaseRow& row) {
                const auto g = family(spec);
                const auto nn = static_cast<std::size_t>(n);
                if (which == "thm3.1") {
                    auto overlay = sr_overlay_complete(g, nn);
                    row.formula_value = overlay.size();
                    if (!s.fits(row, g.order() * nn))
                        return;
                    auto sr = strong_resolving_graph(direct_product(g, complete_graph(nn))).on_host(g.order() * nn);
                    row.oracle_value = sr.size();
                    row.verdict = is_isomorphic(overlay, sr) ? Verdict::pass : Verdict::fail;
                    if (row.verdict == Verdict::fail)
                        row.reason = "overlay is not isomorphic to the strong resolving graph";
                } else if (which == "lem3.3") {
                    if (!is_triangle_free(g))
                        throw Error(ErrorCode::precondition_failed, spec + " has triangles");
                    if (nn < 3)
                        throw Error(ErrorCode::bad_params, "n must be at least 3");
                    auto joined = overlay_union(g.without_labels(), strong_resolving_graph(g).on_host(g.order()));
                    row.formula_value = nn * vertex_cover_number(joined, s.cover_options()).value;
                    if (!s.fits(row, g.order() * nn))
                        return;
                    row.oracle_value = vertex_cover_number(sr_overlay_complete(g, nn), s.cover_options()).value;
                    Suite::compare(row);
                } else {
                    row.formula_value = sdim_structure_complete(g, nn);
                    if (!s.fits(row, g.order() * nn))
                        return;
                    auto d = strong_metric_dimension(direct_product(g, complete_graph(nn)), s.cover_options());
                    row.oracle_value = d.value;
                    row.witness = d.witness;
                    Suite::compare(row);
                }
            });
}

void strong_oracle(const Suite& s, CaseRow& row, const Graph& product)
{
    if (!s.fits(row, product.order()))
        return;
    auto d = strong_metric_dimension(product, s.cover_options());
    row.oracle_value = d.value;
    row.witness = d.witness;
    Suite::compare(row);
}

using Builder = void (*)(Suite&, std::vector<std::pair<std::string, std::vector<std::string>>>&);

void build_thm22(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    metric_rows(
        s, echo, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 6}, true,
        [](long r) { return complete_graph(static_cast<std::size_t>(r)); },
        [](long r, long t) { return dim_complete_complete(static_cast<std::size_t>(r), static_cast<std::size_t>(t)); });
}

void build_prop23(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    metric_rows(
        s, echo, {4, 5, 6, 7, 8}, {3, 4}, false, [](long r) { return cycle_graph(static_cast<std::size_t>(r)); },
        [](long r, long t) { return dim_cycle_complete(static_cast<std::size_t>(r), static_cast<std::size_t>(t)); });
}

void build_prop24(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    metric_rows(
        s, echo, {3, 4, 5, 6, 7, 8}, {3, 4}, false, [](long r) { return path_graph(static_cast<std::size_t>(r)); },
        [](long r, long t) { return dim_path_complete(static_cast<std::size_t>(r), static_cast<std::size_t>(t)); });
}

void build_cor25(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    auto ks = s.ranges().integers("k", {1, 2});
    echo = {{"k", {}}};
    for (auto k : ks) {
        echo[0].second.push_back(num(k));
        s.add({{"k", num(k)}}, [&s, k](CaseRow& row) {
            if (k < 1)
                throw Error(ErrorCode::bad_params, "k must be at least 1");
            const auto c = static_cast<std::size_t>(2 * k + 1);
            row.formula_value = dim_odd_cycle_pair(static_cast<std::size_t>(k));
            if (!s.fits(row, c * c))
                return;
            auto cyc = cycle_graph(c);
            auto d = metric_dimension(direct_product(cyc, cyc), s.limits());
            row.oracle_value = d.value;
            row.witness = d.witness;
            Suite::compare(row);
        });
    }
}

void build_thm31(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    add_structure_suite(s, echo, "thm3.1");
}

void build_lem33(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    add_structure_suite(s, echo, "lem3.3");
}

void build_thm34(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    add_structure_suite(s, echo, "thm3.4");
}

void build_prop35(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    auto trees = s.ranges().strings("T", kTreeFixtures);
    if (!s.ranges().has("T")) {
        auto count = s.ranges().integers("random", {30});
        if (count.size() != 1 || count[0] < 0)
            bad_ranges("random takes one non-negative count");
        for (long i = 0; i < count[0]; ++i)
            trees.push_back(to_string(random_2mmf_tree_spec(4, 12, mix(s.seed() ^ mix(static_cast<std::uint64_t>(i))))));
    }
    auto ns = ns_of(s);
    echo = {{"T", trees}, {"n", {}}};
    for (auto n : ns)
        echo[1].second.push_back(num(n));
    for (const auto& spec : trees)
        for (auto n : ns)
            s.add({{"T", spec}, {"n", num(n)}}, [&s, spec, n](CaseRow& row) {
                const auto t = family(spec);
                const auto nn = static_cast<std::size_t>(n);
                row.formula_value = sdim_tree_complete(t, nn);
                strong_oracle(s, row, direct_product(t, complete_graph(nn)));
            });
}

void build_cor36(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    auto paths = s.ranges().integers("path", {4, 5, 6, 7, 8});
    auto legs = s.ranges().integers("legs", {2, 3});
    auto ns = ns_of(s);
    echo = {{"path", {}}, {"legs", {}}, {"n", {}}};
    for (auto p : paths)
        echo[0].second.push_back(num(p));
    for (auto l : legs)
        echo[1].second.push_back(num(l));
    for (auto n : ns)
        echo[2].second.push_back(num(n));
    for (auto p : paths)
        for (auto n : ns)
            s.add({{"path", num(p)}, {"legs", ""}, {"n", num(n)}}, [&s, p, n](CaseRow& row) {
                const auto nn = static_cast<std::size_t>(n);
                row.formula_value = sdim_path_complete(static_cast<std::size_t>(p), nn);
                strong_oracle(s, row, direct_product(path_graph(static_cast<std::size_t>(p)), complete_graph(nn)));
            });
    for (auto l : legs)
        for (auto n : ns)
            s.add({{"path", ""}, {"legs", num(l)}, {"n", num(n)}}, [&s, l, n](CaseRow& row) {
                const auto nn = static_cast<std::size_t>(n);
                row.formula_value = sdim_subdivided_star_complete(static_cast<std::size_t>(l), nn);
                strong_oracle(s, row,
                              direct_product(subdivided_star(static_cast<std::size_t>(l)), complete_graph(nn)));
            });
}

void bipartite_rows(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo, bool structural)
{
    auto rs = s.ranges().integers("r", {1, 2, 3});
    auto ts = s.ranges().integers("t", {1, 2, 3});
    auto ns = ns_of(s);
    echo = {{"r", {}}, {"t", {}}, {"n", {}}};
    for (auto r : rs)
        echo[0].second.push_back(num(r));
    for (auto t : ts)
        echo[1].second.push_back(num(t));
    for (auto n : ns)
        echo[2].second.push_back(num(n));
    for (auto r : rs)
        for (auto t : ts)
            for (auto n : ns)
                s.add({{"r", num(r)}, {"t", num(t)}, {"n", num(n)}}, [&s, r, t, n, structural](CaseRow& row) {
                    if (r < 1 || t < 1 || n < 3)
                        throw Error(ErrorCode::bad_params, "needs r, t >= 1 and n >= 3");
                    const auto rr = static_cast<std::size_t>(r);
                    const auto tt = static_cast<std::size_t>(t);
                    const auto nn = static_cast<std::size_t>(n);
                    const auto product = direct_product(complete_bipartite_graph(rr, tt), complete_graph(nn));
                    if (r == 1 && t == 1)
                        row.reason = "configuration flagged: K_{1,1} = K_2, so both parts are single vertices";
                    if (structural) {
                        auto expected = sr_bipartite_complete(rr, tt, nn);
                        row.formula_value = expected.size();
                        if (!s.fits(row, product.order()))
                            return;
                        auto sr = strong_resolving_graph(product).on_host(product.order());
                        row.oracle_value = sr.size();
                        row.verdict = is_isomorphic(expected, sr) ? Verdict::pass : Verdict::fail;
                    } else {
                        row.formula_value = sdim_bipartite_complete(rr, tt, nn);
                        strong_oracle(s, row, product);
                    }
                });
}

void build_thm37(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    bipartite_rows(s, echo, true);
}

void build_thm38(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    bipartite_rows(s, echo, false);
}

void build_thm39(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    auto gs = s.ranges().strings("G", {"C5", "petersen"});
    auto ks = s.ranges().integers("k", {1, 2});
    auto ls = s.ranges().integers("l", {2});
    echo = {{"G", gs}, {"k", {}}, {"l", {}}};
    for (auto k : ks)
        echo[1].second.push_back(num(k));
    for (auto l : ls)
        echo[2].second.push_back(num(l));
    for (const auto& spec : gs)
        for (auto k : ks)
            for (auto l : ls)
                s.add({{"G", spec}, {"k", num(k)}, {"l", num(l)}}, [&s, spec, k, l](CaseRow& row) {
                    if (k < 1 || l < 1)
                        throw Error(ErrorCode::bad_params, "k and l must be positive");
                    const auto g = family(spec);
                    const auto kk = static_cast<std::size_t>(k);
                    const auto ll = static_cast<std::size_t>(l);
                    row.formula_value = sdim_c5_complete_bipartite(g, kk, ll);
                    strong_oracle(s, row, direct_product(g, complete_bipartite_graph(kk, ll)));
                });
}

void build_thm310(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    auto gs = s.ranges().strings("G", {"C5", "petersen"});
    auto hs = s.ranges().strings("H", {"C5", "petersen"});
    echo = {{"G", gs}, {"H", hs}};
    for (const auto& gspec : gs)
        for (const auto& hspec : hs)
            s.add({{"G", gspec}, {"H", hspec}}, [&s, gspec, hspec](CaseRow& row) {
                const auto g = family(gspec);
                const auto h = family(hspec);
                const auto product = direct_product(g, h);
                if (!s.fits(row, product.order())) {
                    // The closed form is itself an exact cover computation.
                    return;
                }
                row.formula_value = sdim_c5_pair(g, h, {false, 30, s.limits()});
                auto sr = strong_resolving_graph(product);
                row.oracle_value = vertex_cover_number(sr.graph, s.cover_options()).value;
                Suite::compare(row);
                if (row.verdict == Verdict::pass && !is_isomorphic(sr.on_host(product.order()), cartesian_product(g, h))) {
                    row.verdict = Verdict::fail;
                    row.reason = "strong resolving graph is not isomorphic to the Cartesian product";
                }
            });
}

void build_reduction(Suite& s, std::vector<std::pair<std::string, std::vector<std::string>>>& echo)
{
    auto graphs = s.ranges().strings("G", kReductionFixtures);
    if (!s.ranges().has("G")) {
        auto count = s.ranges().integers("random", {200});
        if (count.size() != 1 || count[0] < 0)
            bad_ranges("random takes one non-negative count");
        for (long i = 0; i < count[0]; ++i) {
            auto x = mix(s.seed() ^ mix(static_cast<std::uint64_t>(i) + 1));
            const auto order = 3 + x % 7;
            const auto percent = 20 + (x >> 8) % 41;
            graphs.push_back("gnp:" + std::to_string(order) + ":" + std::to_string(percent) +
                             ":seed=" + std::to_string(mix(x)));
        }
    }
    echo = {{"G", graphs}};
    for (const auto& spec : graphs)
        s.add({{"G", spec}}, [&s, spec](CaseRow& row) {
            const auto g = family(spec);
            if (!is_connected(g))
                throw Error(ErrorCode::precondition_failed, spec + " is not connected");
            auto reduced = strong_metric_dimension(g, s.cover_options());
            row.formula_value = reduced.value;
            row.witness = reduced.witness;
            if (!s.fits(row, g.order()))
                return;
            row.oracle_value = strong_metric_dimension_bruteforce(g, s.limits()).value;
            Suite::compare(row);
        });
}

const std::vector<std::pair<std::string, Builder>>& registry()
{
    static const std::vector<std::pair<std::string, Builder>> table = {
        {"thm2.2", build_thm22},   {"prop2.3", build_prop23}, {"prop2.4", build_prop24},
        {"cor2.5", build_cor25},   {"thm3.1", build_thm31},   {"lem3.3", build_lem33},
        {"thm3.4", build_thm34},   {"prop3.5", build_prop35}, {"cor3.6", build_cor36},
        {"thm3.7", build_thm37},   {"thm3.8", build_thm38},   {"thm3.9", build_thm39},
        {"thm3.10", build_thm310}, {"oellermann-reduction", build_reduction},
    };
    return table;
}

}  // namespace

bool Ranges::has(std::string_view key) const
{
    return find(key) != nullptr;
}

const std::vector<std::string>* Ranges::find(std::string_view key) const
{
    for (const auto& [k, v] : entries)
        if (k == key)
            return &v;
    return nullptr;
}

std::vector<long> Ranges::integers(std::string_view key, std::vector<long> fallback) const
{
    const auto* values = find(key);
    if (!values)
        return fallback;
    std::vector<long> out;
    for (const auto& v : *values) {
        auto x = to_long(v);
        if (!x)
            bad_ranges("'" + std::string(key) + "' expects integers, got '" + v + "'");
        out.push_back(*x);
    }
    return out;
}

std::vector<std::string> Ranges::strings(std::string_view key, std::vector<std::string> fallback) const
{
    const auto* values = find(key);
    return values ? *values : fallback;
}

std::string Ranges::to_string() const
{
    std::string out;
    for (const auto& [k, values] : entries) {
        if (!out.empty())
            out += ';';
        out += k + "=";
        for (std::size_t i = 0; i < values.size(); ++i)
            out += (i ? "," : "") + values[i];
    }
    return out;
}

Ranges parse_ranges(std::string_view text)
{
    Ranges r;
    std::size_t start = 0;
    while (start < text.size()) {
        auto semi = text.find(';', start);
        auto item = trim(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
        start = semi == std::string_view::npos ? text.size() : semi + 1;
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            bad_ranges("expected key=values in '" + std::string(item) + "'");
        auto key = std::string(trim(item.substr(0, eq)));
        if (key.empty())
            bad_ranges("empty key in '" + std::string(item) + "'");
        if (r.has(key))
            bad_ranges("key '" + key + "' given twice");
        r.entries.emplace_back(key, split_values(key, item.substr(eq + 1)));
    }
    return r;
}

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::size_t worker_count()
{
    if (const char* env = std::getenv("RESOLVENT_THREADS")) {
        if (auto v = to_long(env); v && *v > 0)
            return static_cast<std::size_t>(*v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport run_suite(std::string_view name, const Ranges& ranges, const Caps& caps, std::uint64_t seed)
{
    const auto& table = registry();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
    if (it == table.end())
        throw Error(ErrorCode::unknown_suite, "unknown suite '" + std::string(name) + "'");
    Suite suite(it->first, ranges, caps, seed);
    std::vector<std::pair<std::string, std::vector<std::string>>> echo;
    it->second(suite, echo);
    for (const auto& [key, _] : ranges.entries)
        if (std::none_of(echo.begin(), echo.end(), [&](const auto& e) { return e.first == key; }) &&
            !(key == "random" && (it->first == "prop3.5" || it->first == "oellermann-reduction")))
            bad_ranges("suite " + it->first + " has no parameter '" + key + "'");
    if (const auto* count = ranges.find("random"))
        echo.emplace_back("random", *count);
    return suite.execute(grid_echo(echo));
}

}  // namespace resolvent
