#include "ucpg/search.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <thread>

#include "ucpg/coloring.hpp"
#include "ucpg/discharging.hpp"

namespace ucpg::search {

using ordered_json = nlohmann::ordered_json;

std::set<std::string> all_checks() {
    return {check::theorem12, check::theorem11, check::edge_bound, check::triangles, check::lemma21};
}

SearchRecord evaluate(const PlaneGraph& g, std::size_t id, const std::set<std::string>& checks) {
    SearchRecord r;
    r.id = id;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.faces = g.face_count();
    for (const auto& pair : adjacent_face_pairs(g)) {
        r.face_pair_degrees.insert({pair.degree_low, pair.degree_high});
        if (pair.degree_low == 3 && (!r.min_adjacent_3k || pair.degree_high < *r.min_adjacent_3k))
            r.min_adjacent_3k = pair.degree_high;
    }
    for (const auto& f : g.faces())
        r.has_three_face = r.has_three_face || f.degree() == 3;

    const Graph abs = g.abstract();
    r.triangle_count = count_triangles(abs);
    r.three_connected = is_k_connected(abs, 3);
    const auto partition = unique_coloring(abs, 3);
    r.uniquely_3_colorable = partition.has_value();

    auto flag = [&](const std::string& name, bool failed) {
        if (failed && checks.contains(name))
            r.violations.push_back(name);
    };
    if (partition) {
        flag(check::theorem12, !r.min_adjacent_3k || *r.min_adjacent_3k > 5);
        flag(check::theorem11, !class_pair_connectivity(abs, *partition).all_connected);
        flag(check::edge_bound, r.m < 2 * r.n - 3);
        flag(check::triangles, (r.n >= 4 && r.triangle_count < 2) || (r.n >= 5 && r.triangle_count < 3));
    }
    const auto ledger = audit(g);
    r.discharging_hypothesis = ledger.hypothesis_met;
    if (ledger.hypothesis_met) {
        const bool lemma = ledger.conservation_holds && ledger.all_faces_at_least_four &&
                           ledger.edges_at_least_twice_faces;
        flag(check::lemma21, !lemma || !verify_theorem12_inequality(g));
    }
    return r;
}

bool FilterSpec::accepts(const SearchRecord& r) const {
    if (r.n < n_min || r.n > n_max)
        return false;
    if (require_unique3 && !r.uniquely_3_colorable)
        return false;
    if (require_three_connected && !r.three_connected)
        return false;
    for (const auto& p : require_pairs)
        if (!r.face_pair_degrees.contains(p))
            return false;
    for (const auto& p : forbid_pairs)
        if (r.face_pair_degrees.contains(p))
            return false;
    return true;
}

namespace {

std::vector<SearchRecord> evaluate_range(std::span<const PlaneGraph> catalog, std::size_t begin, std::size_t end,
                                         const std::set<std::string>& checks, unsigned jobs) {
    std::vector<SearchRecord> out(end - begin);
    std::atomic<std::size_t> cursor{begin};
    auto worker = [&] {
        for (std::size_t i = cursor++; i < end; i = cursor++)
            out[i - begin] = evaluate(catalog[i], i, checks);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
        return out;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    pool.clear();
    return out;
}

std::string fingerprint(std::span<const PlaneGraph> catalog, const std::set<std::string>& checks) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(catalog.size());
    for (const auto& g : catalog) {
        mix(static_cast<std::uint64_t>(g.vertex_count()));
        for (const auto& rot : g.rotations()) {
            for (Vertex w : rot)
                mix(static_cast<std::uint64_t>(w) + 1);
            mix(0);
        }
    }
    for (const auto& c : checks)
        for (char ch : c)
            mix(static_cast<unsigned char>(ch));
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

ordered_json to_json(const SearchRecord& r) {
    ordered_json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["faces"] = r.faces;
    j["unique3"] = r.uniquely_3_colorable;
    auto pairs = ordered_json::array();
    for (const auto& p : r.face_pair_degrees)
        pairs.push_back(format_pair(p));
    j["face_pairs"] = pairs;
    j["min_3k"] = r.min_adjacent_3k ? ordered_json(*r.min_adjacent_3k) : ordered_json(nullptr);
    j["triangles"] = r.triangle_count;
    j["three_connected"] = r.three_connected;
    j["has_3_face"] = r.has_three_face;
    j["discharging_hypothesis"] = r.discharging_hypothesis;
    j["violations"] = r.violations;
    return j;
}

SearchRecord from_json(const ordered_json& j) {
    SearchRecord r;
    r.id = j.at("id").get<std::size_t>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.faces = j.at("faces").get<int>();
    r.uniquely_3_colorable = j.at("unique3").get<bool>();
    for (const auto& p : j.at("face_pairs"))
        r.face_pair_degrees.insert(parse_pair(p.get<std::string>()));
    if (!j.at("min_3k").is_null())
        r.min_adjacent_3k = j.at("min_3k").get<int>();
    r.triangle_count = j.at("triangles").get<long long>();
    r.three_connected = j.at("three_connected").get<bool>();
    r.has_three_face = j.at("has_3_face").get<bool>();
    r.discharging_hypothesis = j.at("discharging_hypothesis").get<bool>();
    r.violations = j.at("violations").get<std::vector<std::string>>();
    return r;
}

struct Checkpoint {
    std::size_t offset = 0;
    std::vector<SearchRecord> records;
};

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path, const std::string& expected) {
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    try {
        const auto j = ordered_json::parse(in);
        if (j.at("fingerprint").get<std::string>() != expected)
            return std::nullopt;
        Checkpoint cp;
        cp.offset = j.at("offset").get<std::size_t>();
        for (const auto& rec : j.at("records"))
            cp.records.push_back(from_json(rec));
        if (cp.records.size() != cp.offset)
            return std::nullopt;
        return cp;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

void save_checkpoint(const std::filesystem::path& path, const std::string& print,
                     const std::vector<SearchRecord>& records) {
    ordered_json j;
    j["fingerprint"] = print;
    j["offset"] = records.size();
    auto arr = ordered_json::array();
    for (const auto& r : records)
        arr.push_back(to_json(r));
    j["records"] = std::move(arr);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::vector<SearchRecord> scan_catalog(std::span<const PlaneGraph> catalog, const FilterSpec& filter,
                                       const ScanOptions& options) {
    std::vector<SearchRecord> all;
    const bool checkpointing = options.checkpoint_every > 0 && !options.checkpoint_file.empty();
    std::string print;
    if (checkpointing) {
        print = fingerprint(catalog, options.checks);
        if (auto cp = load_checkpoint(options.checkpoint_file, print))
            all = std::move(cp->records);
    }
    const std::size_t chunk = checkpointing ? options.checkpoint_every : catalog.size();
    while (all.size() < catalog.size()) {
        const std::size_t begin = all.size();
        const std::size_t end = std::min(catalog.size(), begin + std::max<std::size_t>(chunk, 1));
        auto part = evaluate_range(catalog, begin, end, options.checks, options.jobs);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        if (checkpointing)
            save_checkpoint(options.checkpoint_file, print, all);
    }
    std::vector<SearchRecord> out;
    for (auto& r : all)
        if (filter.accepts(r))
            out.push_back(std::move(r));
    return out;
}

Conjecture1Summary conjecture1_report(std::span<const PlaneGraph> catalog, unsigned jobs) {
    FilterSpec filter;
    filter.require_unique3 = true;
    filter.require_three_connected = true;
    ScanOptions options;
    options.jobs = jobs;
    Conjecture1Summary summary;
    summary.examined = catalog.size();
    for (auto& r : scan_catalog(catalog, filter, options)) {
        ++summary.qualifying;
        ++summary.histogram[r.min_adjacent_3k.value_or(0)];
        if (!r.min_adjacent_3k || *r.min_adjacent_3k >= 5)
            summary.candidates.push_back(std::move(r));
    }
    return summary;
}

std::vector<SearchRecord> witness_search(std::span<const PlaneGraph> catalog, const std::set<DegreePair>& forbidden,
                                         unsigned jobs) {
    for (const auto& p : forbidden)
        if (p.first != 3 || p.second < 3 || p.second > 5)
            throw std::invalid_argument("forbidden pairs must be among 3-3, 3-4, 3-5");
    if (forbidden.size() > 2)
        throw std::invalid_argument("forbidding 3-3, 3-4 and 3-5 together contradicts the (3,k<=5) theorem");
    FilterSpec filter;
    filter.require_unique3 = true;
    filter.forbid_pairs = forbidden;
    ScanOptions options;
    options.jobs = jobs;
    return scan_catalog(catalog, filter, options);
}

std::string to_json_line(const SearchRecord& r) { return to_json(r).dump(); }

SearchRecord from_json_line(const std::string& line) { return from_json(ordered_json::parse(line)); }

std::string format_pair(const DegreePair& p) { return std::to_string(p.first) + "-" + std::to_string(p.second); }

DegreePair parse_pair(const std::string& text) {
    const auto sep = text.find_first_of("-,");
    if (sep == std::string::npos)
        throw std::invalid_argument("expected a face pair like 3-4, got '" + text + "'");
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const int a = std::stoi(text.substr(0, sep), &used_a);
        const int b = std::stoi(text.substr(sep + 1), &used_b);
        if (used_a != sep || used_b != text.size() - sep - 1)
            throw std::invalid_argument(text);
        return {std::min(a, b), std::max(a, b)};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("expected a face pair like 3-4, got '" + text + "'");
    }
}

}  // namespace ucpg::search
