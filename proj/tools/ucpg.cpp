#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ucpg/catalog.hpp"
#include "ucpg/coloring.hpp"
#include "ucpg/criticality.hpp"
#include "ucpg/discharging.hpp"
#include "ucpg/families.hpp"
#include "ucpg/io_formats.hpp"
#include "ucpg/search.hpp"

using namespace ucpg;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Thrown for bad flag values that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutFormat { planar_code, rot, dot };

OutFormat parse_out_format(const std::string& name) {
    if (name == "planar_code" || name == "pc")
        return OutFormat::planar_code;
    if (name == "rot" || name == "rotation" || name == "rotation_text")
        return OutFormat::rot;
    if (name == "dot")
        return OutFormat::dot;
    throw UsageError("unknown format '" + name + "' (expected planar_code, rot or dot)");
}

std::optional<OutFormat> out_format_from_path(const std::string& path) {
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".pc")
        return OutFormat::planar_code;
    if (ext == ".rot")
        return OutFormat::rot;
    if (ext == ".dot" || ext == ".gv")
        return OutFormat::dot;
    return std::nullopt;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::set<search::DegreePair> parse_pairs(const std::vector<std::string>& items) {
    std::set<search::DegreePair> out;
    for (const auto& item : items)
        for (const auto& p : split_list(item)) {
            try {
                out.insert(search::parse_pair(p));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    return out;
}

void write_bytes(const std::string& output, const std::string& data) {
    if (output.empty() || output == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + output + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string serialize(std::span<const PlaneGraph> graphs, OutFormat format, bool color) {
    switch (format) {
        case OutFormat::planar_code: {
            const auto bytes = io::write_planar_code(graphs, true);
            return std::string(bytes.begin(), bytes.end());
        }
        case OutFormat::rot:
            if (graphs.size() != 1)
                throw UsageError("rotation text holds exactly one graph, got " + std::to_string(graphs.size()));
            return io::write_rotation_text(graphs[0]);
        case OutFormat::dot: {
            std::string out;
            for (const auto& g : graphs) {
                std::optional<ColorPartition> p;
                if (color)
                    p = unique_coloring(g.abstract(), 3);
                out += p ? io::write_dot(g, *p) : io::write_dot(g);
            }
            return out;
        }
    }
    return {};
}

// Input selection shared by the catalog-driven subcommands.
struct CatalogSource {
    std::string input;
    std::string format;
    int tiny = 0;
    std::string mode = "all-embeddings";

    void add_to(CLI::App* cmd, bool allow_tiny) {
        auto* in = cmd->add_option("--input,-i", input, "Catalog file (.pc or .rot, '-' for stdin)");
        cmd->add_option("--format", format, "Input format override: planar_code or rot");
        if (allow_tiny) {
            auto* t = cmd->add_option("--tiny", tiny, "Generate all connected plane graphs with n <= N")
                          ->check(CLI::Range(1, 8));
            cmd->add_option("--mode", mode, "Tiny catalog mode: one or all-embeddings")
                ->check(CLI::IsMember({"one", "all-embeddings"}));
            in->excludes(t);
        } else {
            in->required();
        }
    }

    std::vector<PlaneGraph> load() const {
        if (tiny > 0)
            return catalog::tiny_plane_graphs(tiny, mode == "one" ? catalog::EmbeddingMode::one_per_graph
                                                                  : catalog::EmbeddingMode::all_embeddings);
        if (input.empty())
            throw UsageError("one of --input or --tiny is required");
        std::optional<io::Format> f;
        if (!format.empty()) {
            f = io::format_from_name(format);
            if (!f)
                throw UsageError("unknown input format '" + format + "'");
        }
        if (!f && input == "-")
            throw UsageError("--format is required when reading standard input");
        return io::CatalogStream::open(input, f).read_all();
    }
};

unsigned resolve_jobs(unsigned jobs) {
    return jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
}

// ---- gen -------------------------------------------------------------------

int run_gen(const std::string& family, int k, int n, const std::string& format, const std::string& output,
            bool color) {
    PlaneGraph g = [&] {
        if (family == "gk")
            return families::generate_gk(k);
        if (family == "fan")
            return families::generate_fan(n);
        if (family == "y9")
            return families::generate_y9();
        return families::generate_octahedron();
    }();
    OutFormat f = OutFormat::planar_code;
    if (!format.empty())
        f = parse_out_format(format);
    else if (auto inferred = out_format_from_path(output))
        f = *inferred;
    const std::vector<PlaneGraph> one{g};
    write_bytes(output, serialize(one, f, color));
    return kOk;
}

// ---- verify ----------------------------------------------------------------

struct Expectation {
    std::string name;
    enum Kind { unique3, edge_critical, three_connected, adjacent, not_adjacent } kind;
    search::DegreePair pair{};
};

Expectation parse_expectation(const std::string& name) {
    if (name == "unique3")
        return {name, Expectation::unique3};
    if (name == "edge-critical")
        return {name, Expectation::edge_critical};
    if (name == "3-connected")
        return {name, Expectation::three_connected};
    for (auto [prefix, kind] : {std::pair{std::string("no-adj-"), Expectation::not_adjacent},
                                std::pair{std::string("adj-"), Expectation::adjacent}}) {
        if (name.starts_with(prefix)) {
            try {
                return {name, kind, search::parse_pair(name.substr(prefix.size()))};
            } catch (const std::invalid_argument&) {
                break;
            }
        }
    }
    throw UsageError("unknown expectation '" + name +
                     "' (expected unique3, edge-critical, 3-connected, adj-i-j or no-adj-i-j)");
}

int run_verify(const CatalogSource& src, const std::vector<std::string>& expect_items) {
    std::vector<Expectation> expectations;
    for (const auto& item : expect_items)
        for (const auto& name : split_list(item))
            expectations.push_back(parse_expectation(name));
    const auto graphs = src.load();
    if (graphs.empty())
        throw io::ParseError("input holds no graphs", 0, 0);

    bool all_ok = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        const Graph abs = g.abstract();
        std::set<search::DegreePair> pairs;
        for (const auto& p : adjacent_face_pairs(g))
            pairs.insert({p.degree_low, p.degree_high});
        std::optional<bool> unique;
        auto is_unique = [&] {
            if (!unique)
                unique = is_uniquely_k_colorable(abs, 3);
            return *unique;
        };

        std::cout << "graph " << i + 1 << ": n=" << g.vertex_count() << " m=" << g.edge_count()
                  << " faces=" << g.face_count() << "\n";
        for (const auto& e : expectations) {
            bool ok = false;
            std::string note;
            switch (e.kind) {
                case Expectation::unique3:
                    ok = is_unique();
                    break;
                case Expectation::edge_critical:
                    if (is_unique()) {
                        const auto report = criticality_report(abs, 3);
                        ok = report.is_edge_critical;
                        if (!ok)
                            note = " (" + std::to_string(report.removable_edges.size()) + " removable edges)";
                    } else {
                        note = " (not uniquely 3-colorable)";
                    }
                    break;
                case Expectation::three_connected:
                    ok = g.vertex_count() > 3 && is_k_connected(g, 3);
                    break;
                case Expectation::adjacent:
                    ok = pairs.contains(e.pair);
                    break;
                case Expectation::not_adjacent:
                    ok = !pairs.contains(e.pair);
                    break;
            }
            all_ok = all_ok && ok;
            std::cout << "  " << e.name << ": " << (ok ? "ok" : "FAILED") << note << "\n";
        }
    }
    std::cout << (all_ok ? "verified" : "verification failed") << "\n";
    return all_ok ? kOk : kViolation;
}

// ---- audit -----------------------------------------------------------------

int run_audit(const CatalogSource& src) {
    const auto graphs = src.load();
    if (graphs.empty())
        throw io::ParseError("input holds no graphs", 0, 0);
    bool all_ok = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs.size() > 1)
            std::cout << "graph " << i + 1 << "\n";
        std::cout << format_ledger(audit(graphs[i]));
        all_ok = all_ok && verify_theorem12_inequality(graphs[i]);
    }
    return all_ok ? kOk : kViolation;
}

// ---- scan ------------------------------------------------------------------

struct ScanFlags {
    std::string checks;
    unsigned jobs = 0;
    std::vector<std::string> require_pairs;
    std::vector<std::string> forbid_pairs;
    bool unique3 = false;
    bool three_connected = false;
    int n_min = 1;
    int n_max = 1 << 20;
    std::size_t checkpoint_every = 256;
    std::string output;
};

int run_scan(const CatalogSource& src, const ScanFlags& flags) {
    search::FilterSpec filter;
    filter.require_pairs = parse_pairs(flags.require_pairs);
    filter.forbid_pairs = parse_pairs(flags.forbid_pairs);
    filter.require_unique3 = flags.unique3;
    filter.require_three_connected = flags.three_connected;
    filter.n_min = flags.n_min;
    filter.n_max = flags.n_max;

    search::ScanOptions opts;
    opts.jobs = resolve_jobs(flags.jobs);
    if (!flags.checks.empty()) {
        opts.checks.clear();
        const auto known = search::all_checks();
        for (const auto& c : split_list(flags.checks)) {
            if (!known.contains(c))
                throw UsageError("unknown check '" + c + "'");
            opts.checks.insert(c);
        }
    }
    if (const char* dir = std::getenv("UCPG_CHECKPOINT_DIR"); dir && *dir) {
        std::filesystem::create_directories(dir);
        opts.checkpoint_file = std::filesystem::path(dir) / "scan.checkpoint.json";
        opts.checkpoint_every = flags.checkpoint_every;
    }

    const auto graphs = src.load();
    const auto records = search::scan_catalog(graphs, filter, opts);
    std::string text;
    std::size_t violations = 0;
    for (const auto& r : records) {
        text += search::to_json_line(r);
        text += '\n';
        violations += r.violations.size();
    }
    write_bytes(flags.output, text);
    std::cerr << "scanned " << graphs.size() << " graphs, " << records.size() << " matched, " << violations
              << " violations\n";
    return violations == 0 ? kOk : kViolation;
}

// ---- conjecture ------------------------------------------------------------

int run_conjecture(const CatalogSource& src, const std::vector<int>& gk, unsigned jobs) {
    std::vector<PlaneGraph> graphs;
    if (src.tiny > 0 || !src.input.empty())
        graphs = src.load();
    for (int k : gk)
        graphs.push_back(families::generate_gk(k));
    if (graphs.empty())
        throw UsageError("nothing to examine: give --tiny, --input or --gk");

    const auto s = search::conjecture1_report(graphs, resolve_jobs(jobs));
    std::cout << "examined: " << s.examined << "\n";
    std::cout << "3-connected uniquely 3-colorable: " << s.qualifying << "\n";
    std::cout << "minimum adjacent (3,k) histogram:\n";
    for (const auto& [k, count] : s.histogram)
        std::cout << "  " << (k == 0 ? std::string("none") : "k=" + std::to_string(k)) << ": " << count << "\n";
    std::cout << "candidates: " << s.candidates.size() << "\n";
    for (const auto& r : s.candidates)
        std::cout << search::to_json_line(r) << "\n";
    return s.candidates.empty() ? kOk : kViolation;
}

// ---- witness ---------------------------------------------------------------

int run_witness(const CatalogSource& src, const std::vector<std::string>& forbid, unsigned jobs) {
    const auto forbidden = parse_pairs(forbid);
    const auto graphs = src.load();
    std::vector<search::SearchRecord> found;
    try {
        found = search::witness_search(graphs, forbidden, resolve_jobs(jobs));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& r : found)
        std::cout << search::to_json_line(r) << "\n";
    std::cerr << "examined " << graphs.size() << " graphs, " << found.size() << " witnesses\n";
    return kOk;
}

// ---- bounds ----------------------------------------------------------------

int run_bounds(int n) {
    const auto b = families::size_bounds(n);
    std::cout << families::format_rational(b.lower) << " <= size(" << n
              << ") <= " << families::format_rational(b.upper) << "\n";
    if (b.lower_witnessed)
        std::cout << "lower bound attained by G_" << (n - 2) / 3 << "\n";
    return kOk;
}

// ---- convert ---------------------------------------------------------------

int run_convert(const CatalogSource& src, const std::string& format, const std::string& output, bool color) {
    OutFormat f = OutFormat::planar_code;
    if (!format.empty())
        f = parse_out_format(format);
    else if (auto inferred = out_format_from_path(output))
        f = *inferred;
    else
        throw UsageError("cannot infer output format; use --to");
    const auto graphs = src.load();
    write_bytes(output, serialize(graphs, f, color));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for uniquely 3-colorable plane graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a family member");
    std::string gen_family;
    int gen_k = 3;
    int gen_n = 6;
    std::string gen_format;
    std::string gen_output;
    bool gen_color = false;
    gen->add_option("family", gen_family, "gk, fan, octahedron or y9")
        ->required()
        ->check(CLI::IsMember({"gk", "fan", "octahedron", "y9"}));
    gen->add_option("--k", gen_k, "Odd k >= 3 for G_k");
    gen->add_option("--n", gen_n, "Vertex count for the fan (n >= 3)");
    gen->add_option("--format", gen_format, "planar_code, rot or dot (default planar_code)");
    gen->add_option("--output,-o", gen_output, "Output file (default stdout)");
    gen->add_flag("--color", gen_color, "DOT only: fill nodes by their unique 3-coloring");

    // verify
    auto* verify = app.add_subcommand("verify", "Check expected properties of each input graph");
    CatalogSource verify_src;
    verify_src.add_to(verify, false);
    std::vector<std::string> verify_expect;
    verify->add_option("--expect", verify_expect, "Comma-separated: unique3, edge-critical, 3-connected, adj-i-j, no-adj-i-j")
        ->required();

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "Discharging ledger for each input graph");
    CatalogSource audit_src;
    audit_src.add_to(audit_cmd, false);

    // scan
    auto* scan = app.add_subcommand("scan", "Evaluate properties across a catalog, JSON lines on stdout");
    CatalogSource scan_src;
    scan_src.add_to(scan, true);
    ScanFlags scan_flags;
    scan->add_option("--check", scan_flags.checks, "Comma-separated checks (default all)");
    scan->add_option("--jobs,-j", scan_flags.jobs, "Worker threads (default: hardware concurrency)");
    scan->add_option("--require-pair", scan_flags.require_pairs, "Keep graphs with these adjacent face pairs");
    scan->add_option("--forbid-pair", scan_flags.forbid_pairs, "Drop graphs with these adjacent face pairs");
    scan->add_flag("--unique3", scan_flags.unique3, "Keep uniquely 3-colorable graphs only");
    scan->add_flag("--three-connected", scan_flags.three_connected, "Keep 3-connected graphs only");
    scan->add_option("--n-min", scan_flags.n_min, "Minimum vertex count");
    scan->add_option("--n-max", scan_flags.n_max, "Maximum vertex count");
    scan->add_option("--checkpoint-every", scan_flags.checkpoint_every,
                     "Checkpoint interval in graphs when UCPG_CHECKPOINT_DIR is set");
    scan->add_option("--output,-o", scan_flags.output, "Output file (default stdout)");

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "Minimum adjacent (3,k) histogram for 3-connected unique graphs");
    CatalogSource conj_src;
    conj_src.add_to(conj, true);
    std::vector<int> conj_gk;
    unsigned conj_jobs = 0;
    conj->add_option("--gk", conj_gk, "Also examine G_k for these k")->delimiter(',');
    conj->add_option("--jobs,-j", conj_jobs, "Worker threads");

    // witness
    auto* witness = app.add_subcommand("witness", "Uniquely 3-colorable graphs avoiding the given face pairs");
    CatalogSource witness_src;
    witness_src.add_to(witness, true);
    std::vector<std::string> witness_forbid;
    unsigned witness_jobs = 0;
    witness->add_option("--forbid", witness_forbid, "Comma-separated pairs among 3-3, 3-4, 3-5")->required();
    witness->add_option("--jobs,-j", witness_jobs, "Worker threads");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Bounds on the size of edge-critical unique graphs");
    int bounds_n = 0;
    bounds->add_option("--n", bounds_n, "Vertex count")->required();

    // convert
    auto* convert = app.add_subcommand("convert", "Transcode between planar_code, rotation text and DOT");
    CatalogSource convert_src;
    convert->add_option("--input,-i", convert_src.input, "Input file ('-' for stdin)")->required();
    convert->add_option("--from", convert_src.format, "Input format override: planar_code or rot");
    std::string convert_format;
    std::string convert_output;
    bool convert_color = false;
    convert->add_option("--format,--to", convert_format, "Output format: planar_code, rot or dot");
    convert->add_option("--output,-o", convert_output, "Output file (default stdout)");
    convert->add_flag("--color", convert_color, "DOT only: fill nodes by their unique 3-coloring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_family, gen_k, gen_n, gen_format, gen_output, gen_color);
        if (verify->parsed())
            return run_verify(verify_src, verify_expect);
        if (audit_cmd->parsed())
            return run_audit(audit_src);
        if (scan->parsed())
            return run_scan(scan_src, scan_flags);
        if (conj->parsed())
            return run_conjecture(conj_src, conj_gk, conj_jobs);
        if (witness->parsed())
            return run_witness(witness_src, witness_forbid, witness_jobs);
        if (bounds->parsed())
            return run_bounds(bounds_n);
        if (convert->parsed())
            return run_convert(convert_src, convert_format, convert_output, convert_color);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
