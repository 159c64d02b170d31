#pragma once

#include "mvl/polarity.hpp"
#include "mvl/semantics.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace mvl::io {

using Json = nlohmann::json;

/// Document format version understood by this build.
inline constexpr int kFormatVersion = 1;

/// "luk11" / "L11" / "lukasiewicz:11", "godel5" / "G5", "bool" (= L2).
TruthLattice lattice_from_name(std::string_view name);

/// Parses JSON text; syntax errors become SpecError carrying line and column.
Json parse_json(std::string_view text, std::string_view origin = "<input>");
Json read_json_file(const std::filesystem::path& path);

/// Every loader below reports structural problems as SpecError whose message
/// starts with the JSON pointer of the offending node, e.g. "/frame/r_dia/matrix/1".
/// `base` resolves relative "path" references; `fallback` is used when the
/// document has no "lattice" member.
LatticePtr parse_lattice(const Json& j, const std::filesystem::path& base = {}, std::string_view where = "/lattice");

struct LoadContext {
  std::filesystem::path base;
  LatticePtr fallback;
};

APolarity parse_context(const Json& doc, const LoadContext& ctx = {});
FramePtr parse_frame(const Json& doc, const LoadContext& ctx = {});
Model parse_model(const Json& doc, const LoadContext& ctx = {});

APolarity load_context(const std::filesystem::path& path, LatticePtr fallback = nullptr);
FramePtr load_frame(const std::filesystem::path& path, LatticePtr fallback = nullptr);
Model load_model(const std::filesystem::path& path, LatticePtr fallback = nullptr);

/// Builds a graph from {"states", "matrix"} or {"states", "arrows", "orientation"}.
/// Arrow a -> b labelled v is stored as E(a, b) = v ("as-drawn", default) or
/// E(b, a) = v ("transposed"). Missing arrows are 0, loops 1.
AGraph parse_graph(const TruthLattice& L, const Json& j, std::string_view where);

/// Dense matrix of truth values (numbers on the grid, or label/fraction strings).
ARelation parse_matrix(const TruthLattice& L, const Json& j, Index rows, Index cols, std::string_view where);
ASet parse_vector(const TruthLattice& L, const Json& j, Index size, std::string_view where);
Value parse_value(const TruthLattice& L, const Json& j, std::string_view where);

}  // namespace mvl::io
