#include "tetris/csr_io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tetris {

namespace {

void write_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("truncated CSR cache");
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

std::uint64_t read_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("truncated CSR cache");
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

} // namespace

void save_csr(const Graph& g, std::ostream& out) {
    out.write(kCsrMagic, 4);
    write_u32(out, kCsrVersion);
    write_u64(out, g.vertex_count());
    write_u64(out, g.edge_count());
    for (std::uint64_t off : g.offsets()) write_u64(out, off);
    for (VertexId w : g.adjacency()) write_u32(out, w);
    for (std::uint64_t label : g.labels()) write_u64(out, label);
    if (!out) throw std::runtime_error("CSR cache write failed");
}

Graph load_csr(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kCsrMagic, 4) != 0)
        throw std::runtime_error("not a CSR cache (bad magic)");
    const std::uint32_t version = read_u32(in);
    if (version != kCsrVersion)
        throw std::runtime_error("unsupported CSR cache version " +
                                 std::to_string(version));
    const std::uint64_t n = read_u64(in);
    const std::uint64_t m = read_u64(in);

    std::vector<std::uint64_t> offsets(n + 1);
    for (auto& off : offsets) off = read_u64(in);
    std::vector<VertexId> neighbors(2 * m);
    for (auto& w : neighbors) w = read_u32(in);
    std::vector<std::uint64_t> labels(n);
    for (auto& label : labels) label = read_u64(in);
    return Graph::from_csr(std::move(offsets), std::move(neighbors),
                           std::move(labels));
}

void save_csr_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for write");
    save_csr(g, out);
}

Graph load_csr_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_csr(in);
}

} // namespace tetris
