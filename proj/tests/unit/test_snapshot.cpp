#include <gtest/gtest.h>

#include <cmath>

#include <cstdio>
#include <filesystem>

#include "bpv/snapshot.hpp"

using namespace bpv;

TEST(Snapshot, RoundTripIsExact) {
  Grid g(6, 4, 2.5, 1.5);
  RealField f = RealField::from_function(g, [](double x, double y) { return std::sin(3 * x) / (1 + y); });
  auto bytes = encode_snapshot(f, 12.25);
  EXPECT_EQ(bytes.size(), kSnapshotHeaderBytes + 8 * g.size());
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "BPF1");
  Snapshot s = decode_snapshot(bytes);
  EXPECT_EQ(s.time, 12.25);
  EXPECT_EQ(s.field.grid(), g);
  for (std::size_t k = 0; k < g.size(); ++k) EXPECT_EQ(s.field[k], f[k]);
}

TEST(Snapshot, HeaderLayoutIsLittleEndian) {
  Grid g(4, 8, 1.0, 1.0);
  auto bytes = encode_snapshot(RealField(g), 0.0);
  EXPECT_EQ(bytes[4], 4);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[8], 8);
}

TEST(Snapshot, RejectsCorruptInput) {
  Grid g(4, 4, 1.0, 1.0);
  auto bytes = encode_snapshot(RealField(g), 0.0);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(decode_snapshot(bad_magic), Error);
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_THROW(decode_snapshot(truncated), Error);
}

TEST(Snapshot, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "bpv_snapshot_test.bpf").string();
  Grid g(4, 4, 1.0, 1.0);
  RealField f(g, 3.5);
  write_snapshot(path, f, 1.0);
  Snapshot s = read_snapshot(path);
  EXPECT_EQ(s.field[5], 3.5);
  std::filesystem::remove(path);
}
