#include "boxgap/config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "boxgap/error.hpp"
#include "json.hpp"

namespace boxgap {

GridConfig GridConfig::make(int m, int n, int p) {
  if (m < 2) throw ConfigError("GridConfig: m >= 2 violated (m=" + std::to_string(m) + ")");
  if (n <= m)
    throw ConfigError("GridConfig: n > m violated (m=" + std::to_string(m) +
                      ", n=" + std::to_string(n) + ")");
  if (p < 2) throw ConfigError("GridConfig: p >= 2 violated (p=" + std::to_string(p) + ")");
  // n > m >= 2 already gives g = n - 2 >= 1.
  if (n > 255 || m > 255)
    throw ConfigError("GridConfig: bases above 255 are not supported");
  return GridConfig(m, n, p);
}

GridConfig GridConfig::preset(std::string_view name) {
  if (name == "paper") return paper();
  if (name == "tiny") return tiny();
  if (name == "small") return small();
  throw ConfigError("unknown preset '" + std::string(name) + "' (expected paper, tiny or small)");
}

GridConfig GridConfig::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("GridConfig: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("GridConfig: expected a JSON object");
  auto field = [&](const char* key) {
    if (!doc.contains(key)) throw ConfigError(std::string("GridConfig: missing field '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_number_integer())
      throw ConfigError(std::string("GridConfig: field '") + key + "' must be an integer");
    auto value = v.get<std::int64_t>();
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
      throw ConfigError(std::string("GridConfig: field '") + key + "' out of range");
    return static_cast<int>(value);
  };
  return make(field("m"), field("n"), field("p"));
}

GridConfig GridConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("GridConfig: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string GridConfig::to_json() const {
  return nlohmann::json{{"m", m_}, {"n", n_}, {"p", p_}}.dump();
}

std::int64_t tau(std::int64_t x, int p) {
  if (x <= 0) throw DomainError("tau: argument must be positive (got " + std::to_string(x) + ")");
  std::int64_t power = 1;
  while (power < x) power *= p;
  return power;
}

std::int64_t tau(std::int64_t x, const GridConfig& cfg) { return tau(x, cfg.p()); }

bool is_power_of(std::int64_t x, int p) noexcept {
  if (x < 1) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace boxgap
