#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bmmtc/common.hpp"

namespace bmmtc {

// Binary observation matrix, bit-packed row-major: bit l of row i lives at
// word [i*words_per_row + l/64], position l%64. Column 0 is the least
// significant bit of the first word, matching the on-disk LSB-first layout.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::size_t rows, std::size_t cols);

  static Dataset from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1ULL;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = words_[r * wpr_ + (c >> 6)];
    const std::uint64_t m = 1ULL << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }

  std::uint64_t column_sum(std::size_t c) const;

  /// Packs the bits of the selected columns of one row into an integer,
  /// cols[0] as the least significant bit.
  std::uint32_t outcome_index(std::size_t r, std::span<const std::size_t> cols) const {
    std::uint32_t x = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
      x |= static_cast<std::uint32_t>(get(r, cols[j])) << j;
    return x;
  }

  Dataset select_rows(std::span<const std::size_t> idx) const;

  std::size_t words_per_row() const { return wpr_; }
  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {words_.data() + r * wpr_, wpr_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) {
    return {words_.data() + r * wpr_, wpr_};
  }

  bool operator==(const Dataset&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Cluster-index vector; entries are 1-based.
struct Labeling {
  std::vector<std::uint32_t> z;

  std::size_t size() const { return z.size(); }
  std::uint32_t max_label() const;

  /// Entries must be >= 1.
  void validate() const;

  /// True when labels appear in first-use order and cover 1..max contiguously.
  bool is_canonical() const;

  bool operator==(const Labeling&) const = default;
};

enum class DatasetFormat { kAuto, kCsv, kBinary };

Dataset read_dataset_csv(const std::filesystem::path& path);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& ds);

// Compact binary layout: magic "BMMX", one version byte (1), u64 row count and
// u64 column count little-endian, then each row bit-packed LSB-first and
// padded to a byte boundary.
Dataset read_dataset_binary(const std::filesystem::path& path);
void write_dataset_binary(const std::filesystem::path& path, const Dataset& ds);

Dataset read_dataset(const std::filesystem::path& path, DatasetFormat format = DatasetFormat::kAuto);
void write_dataset(const std::filesystem::path& path, const Dataset& ds,
                   DatasetFormat format = DatasetFormat::kAuto);

Labeling read_labels_csv(const std::filesystem::path& path);
void write_labels_csv(const std::filesystem::path& path, const Labeling& labels);

/// Rectangular CSV of reals (frequency matrices).
std::vector<std::vector<double>> read_matrix_csv(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace bmmtc
