#include "boxgap/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "boxgap/error.hpp"
#include "boxgap/format.hpp"

namespace boxgap {

std::string encode_pnm(const Raster& raster) {
  std::string out = "P4\n" + std::to_string(raster.width()) + " " + std::to_string(raster.height()) + "\n";
  const int row_bytes = (raster.width() + 7) / 8;
  for (int py = 0; py < raster.height(); ++py) {
    for (int byte = 0; byte < row_bytes; ++byte) {
      unsigned char packed = 0;
      for (int bit = 0; bit < 8; ++bit) {
        int px = byte * 8 + bit;
        if (px < raster.width() && raster.get(px, py)) packed |= static_cast<unsigned char>(0x80u >> bit);
      }
      out.push_back(static_cast<char>(packed));
    }
  }
  return out;
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void write_pnm(const Raster& raster, const std::string& path) { write_file(path, encode_pnm(raster)); }

void export_csv(const std::vector<ScaleRecord>& records, std::ostream& out) {
  out << "k,l,n_hat,ratio\n";
  for (const auto& r : records) out << r.k << ',' << r.l << ',' << r.n_hat.get_str() << ',' << format_real(r.ratio) << '\n';
}

void export_csv(const std::vector<ScaleRecord>& records, const std::string& path) {
  std::ostringstream buf;
  export_csv(records, buf);
  write_file(path, buf.str());
}

std::vector<ScaleRecord> parse_scale_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "k,l,n_hat,ratio") throw DomainError("scale CSV: missing header row");
  std::vector<ScaleRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 4) throw DomainError("scale CSV: line " + std::to_string(line_no) + " needs 4 fields");
    ScaleRecord r;
    try {
      r.k = std::stoll(fields[0]);
      r.l = std::stoll(fields[1]);
      r.n_hat.set_str(fields[2], 10);
      r.ratio = std::stod(fields[3]);
    } catch (const std::exception&) {
      throw DomainError("scale CSV: malformed value on line " + std::to_string(line_no));
    }
    out.push_back(std::move(r));
  }
  return out;
}

void export_count_csv(const CountTable& table, std::ostream& out) {
  out << "N,value,log_value,rate\n";
  for (std::int64_t n = 1; n <= table.nmax(); ++n) {
    const auto& v = table.at(n);
    out << n << ',' << v.get_str() << ',';
    if (sgn(v) == 0) {
      out << ",\n";
      continue;
    }
    double lv = log_count(v);
    out << format_real(lv) << ',' << format_real(lv / static_cast<double>(n)) << '\n';
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace boxgap
