#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ucpg/coloring.hpp"
#include "ucpg/plane_graph.hpp"

namespace ucpg::io {

/// Decode failure. graph_index is 1-based (0 when not tied to a record).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t graph_index, std::size_t byte_offset);

    std::size_t graph_index() const { return graph_index_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t graph_index_;
    std::size_t byte_offset_;
};

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

enum class Format { planar_code, rotation_text };

/// Format from extension: ".pc" is planar_code, ".rot" rotation text.
std::optional<Format> format_from_path(const std::filesystem::path& path);
std::optional<Format> format_from_name(std::string_view name);

/// Incremental planar_code decoder over an in-memory byte buffer.
class PlanarCodeReader {
public:
    explicit PlanarCodeReader(std::vector<std::uint8_t> bytes);

    /// Next graph in file order, or nullopt at a clean end of input.
    std::optional<PlaneGraph> next();

    bool had_header() const { return header_; }
    std::size_t graphs_read() const { return count_; }
    std::size_t offset() const { return pos_; }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t pos_ = 0;
    std::size_t count_ = 0;
    bool header_ = false;
};

std::vector<PlaneGraph> parse_planar_code(std::span<const std::uint8_t> bytes);

/// One planar_code record (no header). Requires n <= 255.
std::vector<std::uint8_t> write_planar_code(const PlaneGraph& g);
std::vector<std::uint8_t> write_planar_code(std::span<const PlaneGraph> graphs, bool with_header);

/// Native text: one "v: a b c" line per vertex, counterclockwise rotation.
PlaneGraph parse_rotation_text(std::string_view text);
std::string write_rotation_text(const PlaneGraph& g);

/// Undirected DOT; with a partition every node is filled by class index.
std::string write_dot(const PlaneGraph& g);
std::string write_dot(const PlaneGraph& g, const ColorPartition& partition);

/// Sequential catalog over a file or standard input ("-").
class CatalogStream {
public:
    static CatalogStream open(const std::filesystem::path& path, std::optional<Format> format = std::nullopt);
    static CatalogStream from_bytes(std::vector<std::uint8_t> bytes, Format format);

    std::optional<PlaneGraph> next();
    Format format() const { return format_; }
    std::size_t count() const { return count_; }

    std::vector<PlaneGraph> read_all();

private:
    CatalogStream(std::vector<std::uint8_t> bytes, Format format);

    Format format_;
    std::optional<PlanarCodeReader> planar_;
    std::string text_;
    bool text_done_ = false;
    std::size_t count_ = 0;
};

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace ucpg::io
