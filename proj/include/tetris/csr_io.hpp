#ifndef TETRIS_CSR_IO_HPP
#define TETRIS_CSR_IO_HPP

#include <iosfwd>
#include <string>

#include "tetris/graph.hpp"

namespace tetris {

// Binary CSR cache. Layout (all integers little-endian):
//   bytes 0..3   magic "RWTG"
//   u32          format version (currently 1)
//   u64          n, u64 m
//   u64 x (n+1)  CSR offsets
//   u32 x (2m)   neighbor ids
//   u64 x n      original labels
void save_csr(const Graph& g, std::ostream& out);
Graph load_csr(std::istream& in);

void save_csr_file(const Graph& g, const std::string& path);
Graph load_csr_file(const std::string& path);

inline constexpr char kCsrMagic[4] = {'R', 'W', 'T', 'G'};
inline constexpr std::uint32_t kCsrVersion = 1;

} // namespace tetris

#endif // TETRIS_CSR_IO_HPP
