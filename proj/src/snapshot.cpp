#include "bpv/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace bpv {

namespace {

template <class T>
void put_le(std::vector<unsigned char>& out, T value) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  const U bits = std::bit_cast<U>(value);
  for (std::size_t b = 0; b < sizeof(T); ++b) out.push_back(static_cast<unsigned char>(bits >> (8 * b)));
}

template <class T>
T get_le(const std::vector<unsigned char>& in, std::size_t& pos) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  if (pos + sizeof(T) > in.size()) throw ConfigError("truncated BPF1 snapshot");
  U bits = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) bits |= static_cast<U>(in[pos + b]) << (8 * b);
  pos += sizeof(T);
  return std::bit_cast<T>(bits);
}

}  // namespace

std::vector<unsigned char> encode_snapshot(const RealField& field, double time) {
  const Grid& g = field.grid();
  std::vector<unsigned char> out;
  out.reserve(kSnapshotHeaderBytes + 8 * field.size());
  for (char c : {'B', 'P', 'F', '1'}) out.push_back(static_cast<unsigned char>(c));
  put_le(out, static_cast<std::uint32_t>(g.nx()));
  put_le(out, static_cast<std::uint32_t>(g.ny()));
  put_le(out, g.lx());
  put_le(out, g.ly());
  put_le(out, time);
  for (double v : field.values()) put_le(out, v);
  return out;
}

Snapshot decode_snapshot(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < kSnapshotHeaderBytes || std::memcmp(bytes.data(), "BPF1", 4) != 0)
    throw ConfigError("not a BPF1 snapshot");
  std::size_t pos = 4;
  const auto nx = get_le<std::uint32_t>(bytes, pos);
  const auto ny = get_le<std::uint32_t>(bytes, pos);
  const double lx = get_le<double>(bytes, pos);
  const double ly = get_le<double>(bytes, pos);
  const double time = get_le<double>(bytes, pos);
  Grid grid(static_cast<int>(nx), static_cast<int>(ny), lx, ly);
  if (bytes.size() != kSnapshotHeaderBytes + 8 * grid.size())
    throw ConfigError("BPF1 payload size does not match header");
  std::vector<double> values(grid.size());
  for (double& v : values) v = get_le<double>(bytes, pos);
  return Snapshot{RealField(grid, std::move(values)), time};
}

void write_snapshot(const std::string& path, const RealField& field, double time) {
  const auto bytes = encode_snapshot(field, time);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

}  // namespace bpv
