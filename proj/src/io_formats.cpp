#include "ucpg/io_formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace ucpg::io {

ParseError::ParseError(const std::string& what, std::size_t graph_index, std::size_t byte_offset)
    : std::runtime_error(graph_index > 0 ? "graph " + std::to_string(graph_index) + " (byte " +
                                               std::to_string(byte_offset) + "): " + what
                                         : what),
      graph_index_(graph_index),
      byte_offset_(byte_offset) {}

std::optional<Format> format_from_name(std::string_view name) {
    if (name == "planar_code" || name == "pc")
        return Format::planar_code;
    if (name == "rot" || name == "rotation" || name == "rotation_text")
        return Format::rotation_text;
    return std::nullopt;
}

std::optional<Format> format_from_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".pc")
        return Format::planar_code;
    if (ext == ".rot")
        return Format::rotation_text;
    return std::nullopt;
}

PlanarCodeReader::PlanarCodeReader(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
    // plantri may write ">>planar_code le<<" etc.; everything up to "<<" is header.
    const std::string_view prefix = ">>planar_code";
    if (bytes_.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), bytes_.begin())) {
        for (std::size_t i = prefix.size(); i + 1 < bytes_.size(); ++i) {
            if (bytes_[i] == '<' && bytes_[i + 1] == '<') {
                pos_ = i + 2;
                header_ = true;
                break;
            }
        }
        if (!header_)
            throw ParseError("unterminated planar_code header", 0, 0);
    }
}

std::optional<PlaneGraph> PlanarCodeReader::next() {
    if (pos_ >= bytes_.size())
        return std::nullopt;
    const std::size_t index = count_ + 1;
    const std::size_t start = pos_;
    const int n = bytes_[pos_++];
    if (n == 0)
        throw ParseError("vertex count 0 (multi-byte planar_code is not supported)", index, start);

    std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        while (true) {
            if (pos_ >= bytes_.size())
                throw ParseError("truncated record", index, pos_);
            const int b = bytes_[pos_++];
            if (b == 0)
                break;
            if (b > n)
                throw ParseError("neighbor " + std::to_string(b) + " out of range 1.." + std::to_string(n), index,
                                 pos_ - 1);
            rotations[v].push_back(b - 1);
        }
    }
    try {
        auto g = PlaneGraph::from_rotation_system(n, std::move(rotations));
        ++count_;
        return g;
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what(), index, start);
    }
}

std::vector<PlaneGraph> parse_planar_code(std::span<const std::uint8_t> bytes) {
    PlanarCodeReader reader({bytes.begin(), bytes.end()});
    std::vector<PlaneGraph> out;
    while (auto g = reader.next())
        out.push_back(std::move(*g));
    return out;
}

std::vector<std::uint8_t> write_planar_code(const PlaneGraph& g) {
    const int n = g.vertex_count();
    if (n > 255)
        throw std::invalid_argument("planar_code supports at most 255 vertices");
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(1 + n + g.dart_count()));
    out.push_back(static_cast<std::uint8_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.rotation(v))
            out.push_back(static_cast<std::uint8_t>(w + 1));
        out.push_back(0);
    }
    return out;
}

std::vector<std::uint8_t> write_planar_code(std::span<const PlaneGraph> graphs, bool with_header) {
    std::vector<std::uint8_t> out;
    if (with_header)
        out.insert(out.end(), kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (const auto& g : graphs) {
        const auto record = write_planar_code(g);
        out.insert(out.end(), record.begin(), record.end());
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::size_t line) {
    int value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0)
        throw ParseError("line " + std::to_string(line) + ": malformed token '" + std::string(token) + "'", 0, 0);
    return value;
}

}  // namespace

PlaneGraph parse_rotation_text(std::string_view text) {
    std::vector<std::pair<int, std::vector<Vertex>>> lines;
    std::set<int> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'v: neighbors'", 0, 0);
        const int v = parse_int(trim(line.substr(0, colon)), line_no);
        if (!seen.insert(v).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate vertex " + std::to_string(v), 0, 0);
        std::vector<Vertex> rotation;
        std::string_view rest = line.substr(colon + 1);
        while (true) {
            rest = trim(rest);
            if (rest.empty())
                break;
            const auto space = rest.find_first_of(" \t");
            rotation.push_back(parse_int(rest.substr(0, space), line_no));
            rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space);
        }
        lines.emplace_back(v, std::move(rotation));
    }
    const int n = static_cast<int>(lines.size());
    if (n == 0)
        throw ParseError("no vertices", 0, 0);
    if (*seen.rbegin() != n - 1)
        throw ParseError("non-contiguous vertex labels", 0, 0);
    std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(n));
    for (auto& [v, rot] : lines)
        rotations[v] = std::move(rot);
    try {
        return PlaneGraph::from_rotation_system(n, std::move(rotations));
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what(), 0, 0);
    }
}

std::string write_rotation_text(const PlaneGraph& g) {
    std::ostringstream out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (Vertex w : g.rotation(v))
            out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

namespace {

std::string dot_text(const PlaneGraph& g, const std::vector<int>* label) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (label)
            out << " [colorscheme=set19, style=filled, fillcolor=" << ((*label)[v] % 9) + 1 << "]";
        out << ";\n";
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (Vertex w : g.rotation(v))
            if (v < w)
                out << "  " << v << " -- " << w << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string write_dot(const PlaneGraph& g) { return dot_text(g, nullptr); }

std::string write_dot(const PlaneGraph& g, const ColorPartition& partition) {
    const auto label = partition.labels(g.vertex_count());
    return dot_text(g, &label);
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    if (path == "-") {
        std::istreambuf_iterator<char> begin(std::cin), end;
        std::vector<char> raw(begin, end);
        return {raw.begin(), raw.end()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0, 0);
    std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {raw.begin(), raw.end()};
}

CatalogStream::CatalogStream(std::vector<std::uint8_t> bytes, Format format) : format_(format) {
    if (format == Format::planar_code)
        planar_.emplace(std::move(bytes));
    else
        text_.assign(bytes.begin(), bytes.end());
}

CatalogStream CatalogStream::open(const std::filesystem::path& path, std::optional<Format> format) {
    if (!format)
        format = format_from_path(path);
    if (!format)
        throw ParseError("cannot infer format of " + path.string() + " (use .pc or .rot, or --format)", 0, 0);
    return CatalogStream(read_file_bytes(path), *format);
}

CatalogStream CatalogStream::from_bytes(std::vector<std::uint8_t> bytes, Format format) {
    return CatalogStream(std::move(bytes), format);
}

std::optional<PlaneGraph> CatalogStream::next() {
    if (format_ == Format::planar_code) {
        auto g = planar_->next();
        if (g)
            ++count_;
        return g;
    }
    if (text_done_)
        return std::nullopt;
    text_done_ = true;
    ++count_;
    return parse_rotation_text(text_);
}

std::vector<PlaneGraph> CatalogStream::read_all() {
    std::vector<PlaneGraph> out;
    while (auto g = next())
        out.push_back(std::move(*g));
    return out;
}

}  // namespace ucpg::io
