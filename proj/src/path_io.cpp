#include "middlevels/path_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace middlevels {

namespace {

constexpr std::string_view kMagic = "middlevels";
constexpr std::string_view kVersion = "v1";

template <typename T>
T parse_field(const std::string& token, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) throw FormatError("expected " + prefix + "..., got '" + token + "'");
  T value{};
  const char* first = token.data() + prefix.size();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw FormatError("bad value in '" + token + "'");
  return value;
}

}  // namespace

std::string_view to_string(FileKind kind) { return kind == FileKind::rpath ? "rpath" : "mcycle"; }

void write_vertex_file(std::ostream& os, FileKind kind, int k, std::span<const BitString> vertices) {
  os << kMagic << ' ' << kVersion << " kind=" << to_string(kind) << " k=" << k << " n=" << 2 * k + 1
     << " count=" << vertices.size() << '\n';
  for (const BitString& x : vertices) os << to_string(x) << '\n';
}

void write_rpath(std::ostream& os, int k, std::span<const RVertex> path) {
  std::vector<BitString> reps;
  reps.reserve(path.size());
  for (const auto& v : path) reps.push_back(v.rep);
  write_vertex_file(os, FileKind::rpath, k, reps);
}

VertexFile read_vertex_file(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw FormatError("empty file");
  std::istringstream hs(header);
  std::string magic, version, kind, k_tok, n_tok, count_tok, extra;
  if (!(hs >> magic >> version >> kind >> k_tok >> n_tok >> count_tok) || (hs >> extra)) {
    throw FormatError("malformed header");
  }
  if (magic != kMagic || version != kVersion) throw FormatError("unknown file magic or version");

  VertexFile out;
  if (kind == "kind=rpath") {
    out.kind = FileKind::rpath;
  } else if (kind == "kind=mcycle") {
    out.kind = FileKind::mcycle;
  } else {
    throw FormatError("unknown kind '" + kind + "'");
  }
  out.k = parse_field<int>(k_tok, "k");
  const int n = parse_field<int>(n_tok, "n");
  const auto count = parse_field<std::size_t>(count_tok, "count");
  if (out.k < 1 || n != 2 * out.k + 1 || n > kMaxLength) throw FormatError("inconsistent k and n");

  out.vertices.reserve(count);
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != static_cast<std::size_t>(n)) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " bits");
    }
    try {
      out.vertices.push_back(parse_bits(line));
    } catch (const std::invalid_argument& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (out.vertices.size() != count) {
    throw FormatError("header count " + std::to_string(count) + " but " + std::to_string(out.vertices.size()) +
                      " vertex lines");
  }
  return out;
}

std::vector<RVertex> as_rpath(const VertexFile& file) {
  std::vector<RVertex> out;
  out.reserve(file.vertices.size());
  for (const BitString& x : file.vertices) out.push_back({x, file.k});
  return out;
}

}  // namespace middlevels
