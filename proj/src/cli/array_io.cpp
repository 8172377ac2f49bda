#include "wdst/cli/array_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wdst::cli {

namespace {

template <typename U>
void put_le(std::vector<unsigned char>& out, U v) {
  for (std::size_t b = 0; b < sizeof(U); ++b) out.push_back(static_cast<unsigned char>((v >> (8 * b)) & 0xffu));
}

void put_f64(std::vector<unsigned char>& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
 public:
  explicit Reader(const std::vector<unsigned char>& bytes) : bytes_(bytes) {}

  template <typename U>
  U get() {
    if (pos_ + sizeof(U) > bytes_.size()) throw std::runtime_error("WDST data truncated");
    U v = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b) v |= static_cast<U>(static_cast<U>(bytes_[pos_ + b]) << (8 * b));
    pos_ += sizeof(U);
    return v;
  }
  double f64() { return std::bit_cast<double>(get<std::uint64_t>()); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  const std::vector<unsigned char>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<unsigned char> encode_wdst(const WaveDistribution& dist) {
  const auto& g = dist.grid();
  std::vector<unsigned char> out{'W', 'D', 'S', 'T'};
  out.reserve(8 + 25 * g.rank() + 16 * dist.size());
  put_le<std::uint16_t>(out, wdst_format_version);
  put_le<std::uint16_t>(out, static_cast<std::uint16_t>(g.rank()));
  for (const auto& ax : g.axes()) {
    out.push_back(static_cast<unsigned char>(ax.kind));
    put_le<std::uint64_t>(out, ax.n);
    put_f64(out, ax.step);
    put_f64(out, ax.origin);
  }
  for (const auto& z : dist.samples()) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  return out;
}

WaveDistribution decode_wdst(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), "WDST", 4) != 0) throw std::runtime_error("not a WDST file");
  Reader r(bytes);
  (void)r.get<std::uint32_t>();
  const auto version = r.get<std::uint16_t>();
  if (version != wdst_format_version) throw std::runtime_error("unsupported WDST version " + std::to_string(version));
  const auto rank = r.get<std::uint16_t>();
  std::vector<AxisSpec> axes;
  for (std::uint16_t a = 0; a < rank; ++a) {
    const auto kind = r.get<std::uint8_t>();
    if (kind > static_cast<std::uint8_t>(AxisKind::angular_frequency)) throw std::runtime_error("unknown WDST axis kind");
    AxisSpec ax;
    ax.kind = static_cast<AxisKind>(kind);
    ax.n = r.get<std::uint64_t>();
    ax.step = r.f64();
    ax.origin = r.f64();
    axes.push_back(ax);
  }
  Grid grid(std::move(axes));
  if (r.remaining() != 16 * grid.size()) throw std::runtime_error("WDST sample block has the wrong length");
  std::vector<cplx> s(grid.size());
  for (auto& z : s) {
    const double re = r.f64();
    const double im = r.f64();
    z = {re, im};
  }
  return WaveDistribution(std::move(grid), std::move(s));
}

void write_wdst(const std::string& path, const WaveDistribution& dist) {
  const auto bytes = encode_wdst(dist);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

WaveDistribution read_wdst(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_wdst(bytes);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) throw std::invalid_argument("csv header and column count differ");
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (const auto& c : columns)
    if (c.size() != rows) throw std::invalid_argument("csv columns differ in length");
  std::ofstream out(path, std::ios::trunc);
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n' << std::setprecision(17);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c][r];
    out << '\n';
  }
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv '" + path + "'");
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
  }
  t.columns.resize(t.header.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream rs(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(rs, cell, ',')) {
      if (c >= t.columns.size()) throw std::runtime_error("csv row wider than header");
      t.columns[c++].push_back(std::stod(cell));
    }
    if (c != t.columns.size()) throw std::runtime_error("csv row narrower than header");
  }
  return t;
}

}  // namespace wdst::cli
