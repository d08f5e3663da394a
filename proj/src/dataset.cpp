#include "bmmtc/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace bmmtc {

Dataset::Dataset(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {
  if (rows < 1 || cols < 1) throw ValidationError("dataset needs at least one row and column");
}

Dataset Dataset::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw ValidationError("dataset needs at least one row and column");
  Dataset ds(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ds.cols_) throw ValidationError("dataset rows have unequal lengths");
    for (std::size_t j = 0; j < ds.cols_; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) throw ValidationError("dataset entries must be 0 or 1");
      if (v) ds.set(i, j, true);
    }
  }
  return ds;
}

std::uint64_t Dataset::column_sum(std::size_t c) const {
  std::uint64_t s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += get(r, c);
  return s;
}

Dataset Dataset::select_rows(std::span<const std::size_t> idx) const {
  if (idx.empty()) throw ValidationError("row selection is empty");
  Dataset out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto src = row_words(idx[i]);
    auto dst = out.row_words(i);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

std::uint32_t Labeling::max_label() const {
  std::uint32_t m = 0;
  for (auto v : z) m = std::max(m, v);
  return m;
}

void Labeling::validate() const {
  if (z.empty()) throw ValidationError("labeling is empty");
  for (auto v : z)
    if (v < 1) throw ValidationError("cluster indices must be positive");
}

bool Labeling::is_canonical() const {
  std::uint32_t seen = 0;
  for (auto v : z) {
    if (v < 1 || v > seen + 1) return false;
    if (v == seen + 1) ++seen;
  }
  return seen >= 1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

Dataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    std::vector<int> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      if (f == "0")
        row.push_back(0);
      else if (f == "1")
        row.push_back(1);
      else
        throw ValidationError("dataset entry '" + f + "' in " + path.string() +
                              " is not 0 or 1");
    }
    rows.push_back(std::move(row));
  }
  return Dataset::from_rows(rows);
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& ds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  std::string line;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    line.clear();
    for (std::size_t j = 0; j < ds.cols(); ++j) {
      if (j) line += ',';
      line += ds.get(i, j) ? '1' : '0';
    }
    line += '\n';
    out << line;
  }
}

namespace {

constexpr char kMagic[4] = {'B', 'M', 'M', 'X'};
constexpr unsigned char kBinaryVersion = 1;

void put_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

std::uint64_t get_u64_le(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_dataset_binary(const std::filesystem::path& path, const Dataset& ds) {
  std::string buf;
  const std::size_t bytes_per_row = (ds.cols() + 7) / 8;
  buf.reserve(21 + ds.rows() * bytes_per_row);
  buf.append(kMagic, 4);
  buf += static_cast<char>(kBinaryVersion);
  put_u64_le(buf, ds.rows());
  put_u64_le(buf, ds.cols());
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    const auto words = ds.row_words(i);
    for (std::size_t b = 0; b < bytes_per_row; ++b)
      buf += static_cast<char>((words[b >> 3] >> (8 * (b & 7))) & 0xFF);
  }
  write_file(path, buf);
}

Dataset read_dataset_binary(const std::filesystem::path& path) {
  const std::string buf = read_file(path);
  if (buf.size() < 21 || std::memcmp(buf.data(), kMagic, 4) != 0)
    throw ValidationError(path.string() + " is not a BMMX file");
  if (static_cast<unsigned char>(buf[4]) != kBinaryVersion)
    throw ValidationError("unsupported BMMX version in " + path.string());
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
  const std::uint64_t n = get_u64_le(p + 5);
  const std::uint64_t l = get_u64_le(p + 13);
  const std::size_t bytes_per_row = (l + 7) / 8;
  if (buf.size() != 21 + n * bytes_per_row)
    throw ValidationError("truncated BMMX file " + path.string());
  Dataset ds(n, l);
  std::size_t off = 21;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto words = ds.row_words(i);
    for (std::size_t b = 0; b < bytes_per_row; ++b)
      words[b >> 3] |= static_cast<std::uint64_t>(p[off + b]) << (8 * (b & 7));
    // padding bits past column L-1 must be zero
    if (l % 64 != 0) {
      const std::uint64_t mask = (1ULL << (l % 64)) - 1;
      if ((words[ds.words_per_row() - 1] & ~mask) != 0)
        throw ValidationError("nonzero padding bits in " + path.string());
    }
    off += bytes_per_row;
  }
  return ds;
}

namespace {

DatasetFormat sniff_format(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  char head[4] = {0, 0, 0, 0};
  in.read(head, 4);
  if (in.gcount() == 4 && std::memcmp(head, kMagic, 4) == 0) return DatasetFormat::kBinary;
  return DatasetFormat::kCsv;
}

}  // namespace

Dataset read_dataset(const std::filesystem::path& path, DatasetFormat format) {
  if (format == DatasetFormat::kAuto) format = sniff_format(path);
  return format == DatasetFormat::kBinary ? read_dataset_binary(path) : read_dataset_csv(path);
}

void write_dataset(const std::filesystem::path& path, const Dataset& ds, DatasetFormat format) {
  if (format == DatasetFormat::kAuto)
    format = path.extension() == ".bin" ? DatasetFormat::kBinary : DatasetFormat::kCsv;
  if (format == DatasetFormat::kBinary)
    write_dataset_binary(path, ds);
  else
    write_dataset_csv(path, ds);
}

Labeling read_labels_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  Labeling out;
  std::string line;
  while (std::getline(in, line)) {
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 1)
      throw ValidationError("label file " + path.string() + " must have one column");
    unsigned long v = 0;
    const auto& f = fields.front();
    const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
    if (res.ec != std::errc{} || res.ptr != f.data() + f.size() || v < 1)
      throw ValidationError("bad cluster index '" + f + "' in " + path.string());
    out.z.push_back(static_cast<std::uint32_t>(v));
  }
  out.validate();
  return out;
}

void write_labels_csv(const std::filesystem::path& path, const Labeling& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  for (auto v : labels.z) out << v << '\n';
}

std::vector<std::vector<double>> read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(f, &used));
        if (used != f.size()) throw std::invalid_argument(f);
      } catch (const std::exception&) {
        throw ValidationError("bad number '" + f + "' in " + path.string());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ValidationError("ragged rows in " + path.string());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ValidationError("empty matrix file " + path.string());
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace bmmtc
