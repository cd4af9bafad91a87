#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gpfield/grid.hpp"

namespace gpf {

// GPF1 snapshot layout (all little-endian):
//   0   magic "GPF1"
//   4   dim            u8
//   5   N per axis     u32 x dim
//   ..  L              f64
//   ..  rho0           f64
//   ..  time           f64
//   ..  payload        (re, im) f64 pairs, row-major, N^dim entries

struct Snapshot {
  Field field;
  double rho0 = 1.0;
  double time = 0.0;
};

std::vector<std::uint8_t> encode_snapshot(const Field& field, double rho0, double time);
/// Throws FormatError naming the byte offset of the first malformed entry.
Snapshot decode_snapshot(const std::vector<std::uint8_t>& bytes);

void write_snapshot(const std::filesystem::path& path, const Field& field, double rho0, double time);
Snapshot read_snapshot(const std::filesystem::path& path);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// CSV (x, re, im, abs2) of the line along the first axis through the grid
/// center (index N/2 on every other axis).
std::string slice_csv(const Field& field);

}  // namespace gpf
