#include "mvl/io.hpp"

#include "mvl/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace mvl::io {

namespace {

[[noreturn]] void fail(std::string_view where, const std::string& msg) {
  throw SpecError(std::string(where.empty() ? "/" : where) + ": " + msg);
}

std::string child(std::string_view where, std::string_view key) { return std::string(where) + "/" + std::string(key); }
std::string child(std::string_view where, std::size_t i) { return std::string(where) + "/" + std::to_string(i); }

const Json& member(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing member \"") + key + "\"");
  return *it;
}

std::string string_at(const Json& j, std::string_view where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> names_at(const Json& j, std::string_view where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string s = string_at(j[i], child(where, i));
    for (const auto& prev : out)
      if (prev == s) fail(child(where, i), "duplicate name " + s);
    out.push_back(std::move(s));
  }
  return out;
}

void check_version(const Json& doc) {
  if (!doc.is_object()) fail("", "document must be a JSON object");
  auto it = doc.find("version");
  if (it == doc.end()) fail("", "missing member \"version\"");
  if (!it->is_number_integer() || it->get<int>() != kFormatVersion)
    fail("/version", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");
}

Index index_of(const std::vector<std::string>& names, const std::string& name, std::string_view where) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Index>(i);
  fail(where, "unknown state " + name);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

OpTable op_table(const std::vector<std::string>& labels, const Json& j, std::string_view where) {
  const auto n = static_cast<Index>(labels.size());
  if (!j.is_array() || static_cast<Index>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " rows");
  OpTable t(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    const std::string rw = child(where, static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != n) fail(rw, "expected " + std::to_string(n) + " entries");
    for (Index c = 0; c < n; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      const std::string ew = child(rw, static_cast<std::size_t>(c));
      if (e.is_number_integer()) {
        const int v = e.get<int>();
        if (v < 0 || v >= n) fail(ew, "index out of range");
        t(r, c) = v;
      } else if (e.is_string()) {
        t(r, c) = static_cast<Value>(index_of(labels, e.get<std::string>(), ew));
      } else {
        fail(ew, "expected a label or an index");
      }
    }
  }
  return t;
}

}  // namespace

TruthLattice lattice_from_name(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "bool" || s == "boolean") return TruthLattice::lukasiewicz(2);
  auto take = [&](std::string_view prefix) -> std::optional<int> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    std::string_view rest = std::string_view(s).substr(prefix.size());
    if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
    return n;
  };
  for (const char* p : {"lukasiewicz", "luk", "l"})
    if (auto n = take(p)) return TruthLattice::lukasiewicz(*n);
  for (const char* p : {"godel", "goedel", "g"})
    if (auto n = take(p)) return TruthLattice::godel(*n);
  throw SpecError("unknown lattice name \"" + std::string(name) + "\" (try luk11, godel3, bool)");
}

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw SpecError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

Value parse_value(const TruthLattice& L, const Json& j, std::string_view where) {
  try {
    if (j.is_number()) return L.from_double(j.get<double>());
    if (j.is_string()) return L.parse(j.get<std::string>());
  } catch (const DomainError& e) {
    fail(where, e.what());
  }
  fail(where, "expected a truth value");
}

ASet parse_vector(const TruthLattice& L, const Json& j, Index size, std::string_view where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size) fail(where, "expected an array of " + std::to_string(size) + " values");
  ASet out(size);
  for (Index i = 0; i < size; ++i) out(i) = parse_value(L, j[static_cast<std::size_t>(i)], child(where, static_cast<std::size_t>(i)));
  return out;
}

ARelation parse_matrix(const TruthLattice& L, const Json& j, Index rows, Index cols, std::string_view where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  ARelation out(rows, cols);
  for (Index r = 0; r < rows; ++r)
    out.row(r) = parse_vector(L, j[static_cast<std::size_t>(r)], cols, child(where, static_cast<std::size_t>(r))).transpose();
  return out;
}

LatticePtr parse_lattice(const Json& j, const std::filesystem::path& base, std::string_view where) {
  try {
    if (j.is_string()) return share(lattice_from_name(j.get<std::string>()));
    if (!j.is_object()) fail(where, "expected a lattice name or object");
    if (auto p = j.find("path"); p != j.end()) {
      const auto path = resolve(base, string_at(*p, child(where, "path")));
      Json doc = read_json_file(path);
      return parse_lattice(doc.contains("lattice") ? doc["lattice"] : doc, path.parent_path(), path.string());
    }
    const std::string kind = string_at(member(j, "kind", where), child(where, "kind"));
    if (kind == "lukasiewicz" || kind == "godel") {
      const Json& n = member(j, "size", where);
      if (!n.is_number_integer()) fail(child(where, "size"), "expected an integer");
      return share(kind == "godel" ? TruthLattice::godel(n.get<int>()) : TruthLattice::lukasiewicz(n.get<int>()));
    }
    if (kind == "table") {
      TruthLattice::Tables t;
      t.labels = names_at(member(j, "labels", where), child(where, "labels"));
      t.meet = op_table(t.labels, member(j, "meet", where), child(where, "meet"));
      t.join = op_table(t.labels, member(j, "join", where), child(where, "join"));
      t.otimes = op_table(t.labels, member(j, "otimes", where), child(where, "otimes"));
      t.imp = op_table(t.labels, member(j, "imp", where), child(where, "imp"));
      return share(TruthLattice::from_tables(std::move(t)));
    }
    fail(child(where, "kind"), "unknown lattice kind " + kind);
  } catch (const InvalidLattice& e) {
    fail(where, e.what());
  }
}

AGraph parse_graph(const TruthLattice& L, const Json& j, std::string_view where) {
  const auto states = names_at(member(j, "states", where), child(where, "states"));
  const auto n = static_cast<Index>(states.size());
  ARelation E;
  if (j.contains("matrix")) {
    E = parse_matrix(L, j["matrix"], n, n, child(where, "matrix"));
  } else if (j.contains("arrows")) {
    bool transposed = false;
    if (auto o = j.find("orientation"); o != j.end()) {
      const std::string orient = string_at(*o, child(where, "orientation"));
      if (orient == "transposed")
        transposed = true;
      else if (orient != "as-drawn")
        fail(child(where, "orientation"), "expected \"as-drawn\" or \"transposed\"");
    }
    E = ARelation::Constant(n, n, L.bottom());
    E.matrix().diagonal().setConstant(L.top());
    const Json& arrows = j["arrows"];
    const std::string aw = child(where, "arrows");
    if (!arrows.is_array()) fail(aw, "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string w = child(aw, i);
      const Index a = index_of(states, string_at(member(arrows[i], "from", w), child(w, "from")), child(w, "from"));
      const Index b = index_of(states, string_at(member(arrows[i], "to", w), child(w, "to")), child(w, "to"));
      const Value v = parse_value(L, member(arrows[i], "value", w), child(w, "value"));
      if (transposed)
        E(b, a) = v;
      else
        E(a, b) = v;
    }
  } else {
    fail(where, "graph needs \"matrix\" or \"arrows\"");
  }
  try {
    return make_graph(L, std::move(E), states);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

namespace {

ARelation parse_cross(const TruthLattice& L, const Json& j, const AGraph& row_side, const AGraph& col_side, std::string_view where) {
  if (j.is_array()) return parse_matrix(L, j, row_side.size(), col_side.size(), where);
  if (!j.is_object()) fail(where, "expected a matrix or an object");
  // Optional row/col names may list the states in any order.
  std::vector<Index> rmap(static_cast<std::size_t>(row_side.size())), cmap(static_cast<std::size_t>(col_side.size()));
  for (Index i = 0; i < row_side.size(); ++i) rmap[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < col_side.size(); ++i) cmap[static_cast<std::size_t>(i)] = i;
  auto reorder = [&](const char* key, const AGraph& side, std::vector<Index>& map) {
    auto it = j.find(key);
    if (it == j.end()) return;
    const auto names = names_at(*it, child(where, key));
    if (static_cast<Index>(names.size()) != side.size()) fail(child(where, key), "must list every state once");
    for (std::size_t i = 0; i < names.size(); ++i) map[i] = index_of(side.states, names[i], child(child(where, key), i));
  };
  reorder("rows", row_side, rmap);
  reorder("cols", col_side, cmap);
  ARelation out = ARelation::Constant(row_side.size(), col_side.size(), L.bottom());
  if (j.contains("matrix")) {
    ARelation m = parse_matrix(L, j["matrix"], row_side.size(), col_side.size(), child(where, "matrix"));
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) out(rmap[static_cast<std::size_t>(r)], cmap[static_cast<std::size_t>(c)]) = m(r, c);
  } else if (j.contains("arrows")) {
    const Json& arrows = j["arrows"];
    const std::string aw = child(where, "arrows");
    if (!arrows.is_array()) fail(aw, "expected an array");
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string w = child(aw, i);
      const Index a = index_of(row_side.states, string_at(member(arrows[i], "from", w), child(w, "from")), child(w, "from"));
      const Index b = index_of(col_side.states, string_at(member(arrows[i], "to", w), child(w, "to")), child(w, "to"));
      out(a, b) = parse_value(L, member(arrows[i], "value", w), child(w, "value"));
    }
  } else {
    fail(where, "relation needs \"matrix\" or \"arrows\"");
  }
  return out;
}

LatticePtr document_lattice(const Json& doc, const LoadContext& ctx) {
  if (doc.contains("lattice")) return parse_lattice(doc["lattice"], ctx.base, "/lattice");
  if (ctx.fallback) return ctx.fallback;
  fail("", "missing member \"lattice\" (or pass --lattice)");
}

FramePtr frame_block(const LatticePtr& lattice, const Json& j, const LoadContext& ctx, std::string_view where) {
  if (j.contains("path")) {
    const auto path = resolve(ctx.base, string_at(j["path"], child(where, "path")));
    return load_frame(path, lattice);
  }
  const TruthLattice& L = *lattice;
  AGraph social = parse_graph(L, member(j, "social", where), child(where, "social"));
  AGraph political = parse_graph(L, member(j, "political", where), child(where, "political"));
  ARelation r_dia = parse_cross(L, member(j, "r_dia", where), political, social, child(where, "r_dia"));
  ARelation r_loz = parse_cross(L, member(j, "r_loz", where), social, political, child(where, "r_loz"));
  return std::make_shared<const HeteroFrame>(make_frame(lattice, std::move(social), std::move(political), std::move(r_dia), std::move(r_loz)));
}

}  // namespace

APolarity parse_context(const Json& doc, const LoadContext& ctx) {
  check_version(doc);
  LatticePtr lattice = document_lattice(doc, ctx);
  const auto objects = names_at(member(doc, "objects", ""), "/objects");
  const auto attributes = names_at(member(doc, "attributes", ""), "/attributes");
  ARelation I = parse_matrix(*lattice, member(doc, "incidence", ""), static_cast<Index>(objects.size()),
                             static_cast<Index>(attributes.size()), "/incidence");
  APolarity P = make_polarity(lattice, std::move(I));
  P.objects = objects;
  P.attributes = attributes;
  return P;
}

FramePtr parse_frame(const Json& doc, const LoadContext& ctx) {
  check_version(doc);
  return frame_block(document_lattice(doc, ctx), member(doc, "frame", ""), ctx, "/frame");
}

Model parse_model(const Json& doc, const LoadContext& ctx) {
  Model m(parse_frame(doc, ctx));
  const TruthLattice& L = m.L();
  const Json& atoms = member(doc, "atoms", "");
  if (!atoms.is_object()) fail("/atoms", "expected an object keyed by sort");
  for (const auto& [sort_name, entries] : atoms.items()) {
    const std::string sw = child("/atoms", sort_name);
    Sort s;
    if (sort_name == "SD")
      s = Sort::SD;
    else if (sort_name == "PP")
      s = Sort::PP;
    else
      fail(sw, "expected sort SD or PP");
    if (!entries.is_object()) fail(sw, "expected an object keyed by atom name");
    const AGraph& g = m.graph(s);
    for (const auto& [name, entry] : entries.items()) {
      const std::string w = child(sw, name);
      try {
        if (entry.is_array()) {
          m.set_atom_descr(name, s, parse_vector(L, entry, g.size(), w));
        } else if (entry.is_object() && entry.contains("descr")) {
          m.set_atom_descr(name, s, parse_vector(L, entry["descr"], g.size(), child(w, "descr")));
        } else if (entry.is_object() && entry.contains("val")) {
          ARelation t = parse_matrix(L, entry["val"], L.size(), g.size(), child(w, "val"));
          ARelation row_major = t.transpose();
          m.set_atom_val(name, s, Eigen::Map<const ASet>(row_major.data(), t.size()));
        } else {
          fail(w, "expected a descr array, {\"descr\": [...]} or {\"val\": [[...]]}");
        }
      } catch (const NotStable& e) {
        fail(w, e.what());
      }
    }
  }
  return m;
}

APolarity load_context(const std::filesystem::path& path, LatticePtr fallback) {
  return parse_context(read_json_file(path), {path.parent_path(), std::move(fallback)});
}

FramePtr load_frame(const std::filesystem::path& path, LatticePtr fallback) {
  return parse_frame(read_json_file(path), {path.parent_path(), std::move(fallback)});
}

Model load_model(const std::filesystem::path& path, LatticePtr fallback) {
  return parse_model(read_json_file(path), {path.parent_path(), std::move(fallback)});
}

}  // namespace mvl::io
