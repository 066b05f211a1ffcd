#include "coprime_ramsey/thresholds.hpp"
#include "coprime_ramsey/primes.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace coprime {

Demands::Demands(std::initializer_list<int> ks) : Demands(std::vector<int>(ks)) {}

Demands::Demands(std::vector<int> ks) : ks_(std::move(ks))
{
    if (ks_.empty())
        throw std::invalid_argument("demand vector needs at least one color");
    for (int k : ks_)
        if (k < 2)
            throw std::invalid_argument("every demand must be at least 2, got " + std::to_string(k));
}

Demands Demands::diagonal(int k, int colors)
{
    if (colors < 1)
        throw std::invalid_argument("need at least one color");
    return Demands(std::vector<int>(static_cast<std::size_t>(colors), k));
}

std::int64_t Demands::rank_sum() const noexcept
{
    std::int64_t m = 0;
    for (int k : ks_)
        m += k - 1;
    return m;
}

int Demands::min_demand() const noexcept { return *std::min_element(ks_.begin(), ks_.end()); }
int Demands::max_demand() const noexcept { return *std::max_element(ks_.begin(), ks_.end()); }

bool Demands::is_diagonal() const noexcept
{
    return std::all_of(ks_.begin(), ks_.end(), [&](int k) { return k == ks_.front(); });
}

std::vector<int> Demands::sorted() const
{
    auto out = ks_;
    std::sort(out.begin(), out.end());
    return out;
}

std::string Demands::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ks_[i]);
    }
    return s + ")";
}

Demands parse_demands(const std::string& text)
{
    std::string cleaned = text;
    std::replace_if(cleaned.begin(), cleaned.end(), [](char c) { return c == ',' || c == '(' || c == ')'; }, ' ');
    std::istringstream in(cleaned);
    std::vector<int> ks;
    for (int k; in >> k;)
        ks.push_back(k);
    if (!in.eof())
        throw std::invalid_argument("cannot parse demand vector '" + text + "'");
    return Demands(std::move(ks));
}

std::string RamseyBound::to_string() const
{
    if (exact())
        return std::to_string(lower);
    return std::to_string(lower) + "--" + std::to_string(upper);
}

namespace {

std::string join(std::span<const int> ks)
{
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ks[i]);
    }
    return s;
}

ClassicalEntry clique_entry(std::vector<int> demands, std::int64_t lower, std::int64_t upper)
{
    return {std::move(demands), 2, ClassicalTarget::Clique, {lower, upper}};
}

} // namespace

std::string ClassicalEntry::label() const
{
    if (target == ClassicalTarget::GallaiTriangle)
        return "gr_" + std::to_string(demands.size()) + "(K_3)";
    if (uniformity != 2)
        return "R^(" + std::to_string(uniformity) + ")(" + join(demands) + ")";
    return "R(" + join(demands) + ")";
}

ClassicalTable ClassicalTable::embedded()
{
    // Two-color windows from the Small Ramsey Numbers survey, plus the
    // three-color triangle values quoted alongside them.
    ClassicalTable t;
    const std::vector<ClassicalEntry> rows = {
        clique_entry({3, 3}, 6, 6),       clique_entry({3, 4}, 9, 9),       clique_entry({3, 5}, 14, 14),
        clique_entry({3, 6}, 18, 18),     clique_entry({3, 7}, 23, 23),     clique_entry({3, 8}, 28, 28),
        clique_entry({3, 9}, 36, 36),     clique_entry({3, 10}, 40, 41),    clique_entry({4, 4}, 18, 18),
        clique_entry({4, 5}, 25, 25),     clique_entry({4, 6}, 36, 40),     clique_entry({4, 7}, 49, 58),
        clique_entry({4, 8}, 59, 79),     clique_entry({4, 9}, 73, 105),    clique_entry({4, 10}, 92, 135),
        clique_entry({5, 5}, 43, 46),     clique_entry({5, 6}, 59, 85),     clique_entry({5, 7}, 80, 133),
        clique_entry({5, 8}, 101, 193),   clique_entry({5, 9}, 133, 282),   clique_entry({5, 10}, 149, 381),
        clique_entry({6, 6}, 102, 160),   clique_entry({6, 7}, 115, 270),   clique_entry({6, 8}, 134, 423),
        clique_entry({6, 9}, 183, 651),   clique_entry({6, 10}, 204, 944),  clique_entry({7, 7}, 205, 492),
        clique_entry({7, 8}, 219, 832),   clique_entry({7, 9}, 252, 1368),  clique_entry({7, 10}, 292, 2119),
        clique_entry({2, 3}, 3, 3),       clique_entry({2, 4}, 4, 4),       clique_entry({3, 3, 3}, 17, 17),
        {{3, 3, 3}, 2, ClassicalTarget::GallaiTriangle, {11, 11}},
    };
    for (const auto& row : rows)
        t.insert(row);
    return t;
}

void ClassicalTable::insert(ClassicalEntry entry)
{
    std::sort(entry.demands.begin(), entry.demands.end());
    if (entry.demands.empty())
        throw std::invalid_argument("classical entry needs demands");
    if (entry.window.lower > entry.window.upper)
        throw std::invalid_argument("classical window " + entry.label() + " has lower > upper");
    if (entry.window.lower < 2)
        throw std::invalid_argument("classical value must be at least 2");
    for (auto& existing : entries_) {
        if (existing.demands == entry.demands && existing.uniformity == entry.uniformity
            && existing.target == entry.target) {
            existing = std::move(entry);
            return;
        }
    }
    entries_.push_back(std::move(entry));
}

bool ClassicalTable::contains(std::span<const int> demands, int uniformity, ClassicalTarget target) const
{
    std::vector<int> key(demands.begin(), demands.end());
    std::sort(key.begin(), key.end());
    return std::any_of(entries_.begin(), entries_.end(), [&](const ClassicalEntry& e) {
        return e.demands == key && e.uniformity == uniformity && e.target == target;
    });
}

const ClassicalEntry& ClassicalTable::lookup(std::span<const int> demands, int uniformity,
                                             ClassicalTarget target) const
{
    std::vector<int> key(demands.begin(), demands.end());
    std::sort(key.begin(), key.end());
    for (const auto& e : entries_)
        if (e.demands == key && e.uniformity == uniformity && e.target == target)
            return e;
    ClassicalEntry probe{key, uniformity, target, {}};
    throw UnknownValueError("no classical value tabulated for " + probe.label());
}

ClassicalTable ClassicalTable::parse_json(std::string_view text)
{
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array())
        throw std::invalid_argument("classical table JSON must be an array of entries");
    ClassicalTable t;
    for (const auto& item : doc) {
        ClassicalEntry e;
        e.demands = item.at("demands").get<std::vector<int>>();
        e.window.lower = item.at("lower").get<std::int64_t>();
        e.window.upper = item.at("upper").get<std::int64_t>();
        e.uniformity = item.value("uniformity", 2);
        const std::string target = item.value("target", std::string("clique"));
        if (target == "clique")
            e.target = ClassicalTarget::Clique;
        else if (target == "gallai")
            e.target = ClassicalTarget::GallaiTriangle;
        else
            throw std::invalid_argument("unknown classical target '" + target + "'");
        t.insert(std::move(e));
    }
    return t;
}

ClassicalTable ClassicalTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open classical table " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

std::string ClassicalTable::to_json() const
{
    auto doc = nlohmann::json::array();
    for (const auto& e : entries_) {
        nlohmann::json item = {{"demands", e.demands}, {"lower", e.window.lower}, {"upper", e.window.upper}};
        if (e.uniformity != 2)
            item["uniformity"] = e.uniformity;
        if (e.target == ClassicalTarget::GallaiTriangle)
            item["target"] = "gallai";
        doc.push_back(std::move(item));
    }
    return doc.dump(2);
}

std::int64_t r_cop(const Demands& d)
{
    return nth_prime(d.rank_sum());
}

std::int64_t r_cop_covering(const Demands& d)
{
    return nth_prime(d.rank_sum());
}

std::int64_t prime_index_transfer(std::int64_t classical)
{
    if (classical < 2)
        throw std::invalid_argument("prime-index transfer needs a classical value >= 2");
    return nth_prime(classical - 1);
}

RamseyBound prime_index_transfer(const RamseyBound& classical)
{
    return {prime_index_transfer(classical.lower), prime_index_transfer(classical.upper)};
}

RamseyBound r_cop_edge(const Demands& d, const ClassicalTable& table)
{
    return prime_index_transfer(table.lookup(d.ks()).window);
}

RamseyBound gallai_edge(const Demands& d, const ClassicalTable& table)
{
    return prime_index_transfer(table.lookup(d.ks(), 2, ClassicalTarget::GallaiTriangle).window);
}

std::vector<TransferRow> transfer_bound_table(const ClassicalTable& table)
{
    std::vector<TransferRow> rows;
    for (const auto& e : table.entries())
        rows.push_back({e.label(), e.window, prime_index_transfer(e.window)});
    return rows;
}

RamseyBound gcd_scaled_edge(const Demands& d, std::int64_t divisor, const ClassicalTable& table)
{
    if (divisor < 1)
        throw std::invalid_argument("gcd divisor must be positive");
    const auto base = r_cop_edge(d, table);
    return {divisor * base.lower, divisor * base.upper};
}

namespace {

void require_uniform_demands(int t, const Demands& d)
{
    if (t < 2)
        throw std::invalid_argument("hypergraph uniformity must be at least 2");
    if (d.min_demand() < t)
        throw std::invalid_argument("hypergraph variant needs every demand >= t = " + std::to_string(t));
}

} // namespace

std::int64_t hypergraph_vertex(int t, const Demands& d)
{
    require_uniform_demands(t, d);
    return r_cop(d);
}

RamseyBound hypergraph_edge(int t, const Demands& d, const ClassicalTable& table)
{
    require_uniform_demands(t, d);
    return prime_index_transfer(table.lookup(d.ks(), t).window);
}

std::int64_t rank_trigger(const Demands& d, RankMode mode, const ClassicalTable& table)
{
    if (mode == RankMode::Vertex)
        return 1 + d.rank_sum();
    const auto& e = table.lookup(d.ks());
    if (!e.window.exact())
        throw UnknownValueError(e.label() + " is only known as the window " + e.window.to_string());
    return e.window.lower;
}

std::int64_t rank_threshold(std::int64_t trigger)
{
    return prime_index_transfer(trigger);
}

std::int64_t shifted_upper_bound(std::int64_t shift, int k)
{
    if (k < 2)
        throw std::invalid_argument("shifted_upper_bound needs k >= 2");
    if (shift < 0)
        throw std::invalid_argument("shift must be nonnegative");
    const auto base = shared_primes(std::max<std::int64_t>(shift, 2));
    const std::int64_t target_index = base->pi(shift) + 2 * k - 1;
    return nth_prime(target_index) - shift;
}

} // namespace coprime
