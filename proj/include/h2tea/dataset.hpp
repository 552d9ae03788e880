#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "h2tea/types.hpp"

namespace h2tea {

struct DatasetCell {
  std::string table_id;  // "table1" .. "table13"
  std::string row;
  std::string column;
  ValueBand value;
  std::string unit;
};

// Read-only transcription of the published cost tables. Range entries keep
// their printed low/high with mid at the midpoint; single numbers are points.
// Plant-size tables (table10, table11) use the columns "1mw", "10mw", "100mw".
class ReferenceDataset {
 public:
  static const ReferenceDataset& instance();

  const std::vector<DatasetCell>& cells() const noexcept { return cells_; }

  std::optional<ValueBand> find(std::string_view table, std::string_view row,
                                std::string_view column) const;

  // Throws domain_error for an unknown key.
  const ValueBand& get(std::string_view table, std::string_view row,
                       std::string_view column) const;

  // Columns: table_id,row,column,low,mid,high,unit. LF line endings.
  std::string to_csv() const;

  // FNV-1a 64 over to_csv().
  std::uint64_t checksum() const;

  ReferenceDataset(const ReferenceDataset&) = delete;
  ReferenceDataset& operator=(const ReferenceDataset&) = delete;

 private:
  ReferenceDataset();
  std::vector<DatasetCell> cells_;
};

inline constexpr std::array<double, 3> kScaleAnchorsMw = {1.0, 10.0, 100.0};

std::string scale_column(double size_mw);

}  // namespace h2tea
