#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdst/wave_distribution.hpp"

namespace wdst::cli {

inline constexpr std::uint16_t wdst_format_version = 1;

/// Binary layout, all little-endian:
///   "WDST"  u16 version  u16 axis_count
///   per axis: u8 kind, u64 n, f64 step, f64 origin
///   samples: (f64 re, f64 im) row-major, last axis fastest
std::vector<unsigned char> encode_wdst(const WaveDistribution& dist);
WaveDistribution decode_wdst(const std::vector<unsigned char>& bytes);

void write_wdst(const std::string& path, const WaveDistribution& dist);
/// Throws std::runtime_error for unreadable or malformed files.
WaveDistribution read_wdst(const std::string& path);

/// Columns of equal length under a header row; values printed with 17 significant digits.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};
CsvTable read_csv(const std::string& path);

}  // namespace wdst::cli
