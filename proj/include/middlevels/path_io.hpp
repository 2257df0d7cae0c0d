#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "middlevels/necklace.hpp"

namespace middlevels {

// Text format shared by R-path and M-cycle files:
//
//   middlevels v1 kind=<rpath|mcycle> k=<k> n=<n> count=<len>
//   <n binary characters, x_1 first>
//   ...

enum class FileKind { rpath, mcycle };
std::string_view to_string(FileKind kind);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VertexFile {
  FileKind kind = FileKind::rpath;
  int k = 0;
  std::vector<BitString> vertices;
};

void write_vertex_file(std::ostream& os, FileKind kind, int k, std::span<const BitString> vertices);
void write_rpath(std::ostream& os, int k, std::span<const RVertex> path);

// Throws FormatError on any malformed header or vertex line.
VertexFile read_vertex_file(std::istream& is);

std::vector<RVertex> as_rpath(const VertexFile& file);

}  // namespace middlevels
