#include "gpfield/snapshot.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gpfield/errors.hpp"

namespace gpf {

namespace {

constexpr char kMagic[4] = {'G', 'P', 'F', '1'};

template <typename U>
void put_le(std::vector<std::uint8_t>& out, U v) {
  for (std::size_t b = 0; b < sizeof(U); ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  template <typename U>
  U get_le(const char* what) {
    if (pos_ + sizeof(U) > bytes_.size())
      throw FormatError(std::string("truncated snapshot while reading ") + what, pos_);
    U v = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b) v |= static_cast<U>(bytes_[pos_ + b]) << (8 * b);
    pos_ += sizeof(U);
    return v;
  }

  double get_f64(const char* what) { return std::bit_cast<double>(get_le<std::uint64_t>(what)); }
  std::size_t pos() const { return pos_; }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_snapshot(const Field& field, double rho0, double time) {
  const Grid& g = field.grid();
  std::vector<std::uint8_t> out;
  out.reserve(64 + 16 * field.size());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(static_cast<std::uint8_t>(g.dim()));
  for (int d = 0; d < g.dim(); ++d) put_le(out, static_cast<std::uint32_t>(g.points_per_axis()));
  put_f64(out, g.half_length());
  put_f64(out, rho0);
  put_f64(out, time);
  for (const auto& v : field.values()) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

Snapshot decode_snapshot(const std::vector<std::uint8_t>& bytes) {
  for (std::size_t i = 0; i < 4; ++i)
    if (i >= bytes.size() || bytes[i] != static_cast<std::uint8_t>(kMagic[i]))
      throw FormatError("bad magic, expected \"GPF1\"", i);
  Reader r(bytes);
  for (int i = 0; i < 4; ++i) r.get_le<std::uint8_t>("magic");

  const std::size_t dim_offset = r.pos();
  const int dim = r.get_le<std::uint8_t>("dim");
  if (dim < 1 || dim > 3) throw FormatError("dimension must be 1, 2 or 3", dim_offset);
  std::uint32_t n = 0;
  for (int d = 0; d < dim; ++d) {
    const std::size_t off = r.pos();
    const auto nd = r.get_le<std::uint32_t>("points per axis");
    if (nd < 2 || nd % 2 != 0) throw FormatError("points per axis must be even and >= 2", off);
    if (d > 0 && nd != n) throw FormatError("non-uniform points per axis are not supported", off);
    n = nd;
  }
  const std::size_t l_offset = r.pos();
  const double half_length = r.get_f64("L");
  if (!(half_length > 0.0) || !std::isfinite(half_length))
    throw FormatError("half length must be positive", l_offset);
  const double rho0 = r.get_f64("rho0");
  const double time = r.get_f64("time");

  Grid grid(dim, n, half_length);
  const std::size_t expected = r.pos() + 16 * grid.size();
  if (bytes.size() < expected) throw FormatError("truncated payload", bytes.size());
  if (bytes.size() > expected) throw FormatError("trailing bytes after payload", expected);
  std::vector<Complex> values(grid.size());
  for (auto& v : values) {
    const double re = r.get_f64("payload");
    const double im = r.get_f64("payload");
    v = Complex(re, im);
  }
  return Snapshot{Field(grid, std::move(values)), rho0, time};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!os) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

void write_snapshot(const std::filesystem::path& path, const Field& field, double rho0, double time) {
  const auto bytes = encode_snapshot(field, rho0, time);
  write_file_atomic(path, std::string(bytes.begin(), bytes.end()));
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open snapshot " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_snapshot(bytes);
}

std::string slice_csv(const Field& field) {
  const Grid& g = field.grid();
  const std::size_t n = g.points_per_axis();
  std::size_t stride = 1;
  std::size_t offset = 0;
  for (int d = g.dim() - 1; d >= 1; --d) {
    offset += (n / 2) * stride;
    stride *= n;
  }
  std::ostringstream os;
  os << "x,re,im,abs2\n" << std::setprecision(17);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex v = field[offset + i * stride];
    os << g.coordinate(i) << ',' << v.real() << ',' << v.imag() << ',' << std::norm(v) << '\n';
  }
  return os.str();
}

}  // namespace gpf
