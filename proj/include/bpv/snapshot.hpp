#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bpv/grid.hpp"

namespace bpv {

/// BPF1 binary snapshot: "BPF1", u32 nx, u32 ny, f64 lx, f64 ly, f64 time
/// (36 header bytes, little-endian), then nx*ny f64 values with i fastest.
struct Snapshot {
  RealField field;
  double time = 0.0;
};

inline constexpr std::size_t kSnapshotHeaderBytes = 36;

std::vector<unsigned char> encode_snapshot(const RealField& field, double time);
Snapshot decode_snapshot(const std::vector<unsigned char>& bytes);

void write_snapshot(const std::string& path, const RealField& field, double time);
Snapshot read_snapshot(const std::string& path);

}  // namespace bpv
