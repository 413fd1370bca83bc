#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "boxgap/boxdim.hpp"
#include "boxgap/combinatorics.hpp"
#include "boxgap/geometry.hpp"

namespace boxgap {

/// P4 bytes: "P4\n<W> <H>\n", then rows packed MSB-first, set pixel = 1.
std::string encode_pnm(const Raster& raster);
void write_pnm(const Raster& raster, const std::string& path);

/// `k,l,n_hat,ratio` with exact decimal n_hat, LF line endings.
void export_csv(const std::vector<ScaleRecord>& records, std::ostream& out);
void export_csv(const std::vector<ScaleRecord>& records, const std::string& path);
std::vector<ScaleRecord> parse_scale_csv(std::istream& in);

/// `N,value,log_value,rate` for 1 <= N <= table.nmax() (N = 0 has no rate).
void export_count_csv(const CountTable& table, std::ostream& out);

/// Writes `contents` to `path`; errors carry the path.
void write_file(const std::string& path, std::string_view contents);

/// 64-bit FNV-1a; used for golden output hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace boxgap
