#include "field_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "config.hpp"

namespace liouville::app {

void write_field_dump(const std::string& path, const torus::FieldSet& u) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path + ": cannot open for writing");
  out << u.n() << ' ' << u.resolution << '\n';
  for (const auto& c : u.components)
    out.write(reinterpret_cast<const char*>(c.data()),
              static_cast<std::streamsize>(c.size() * sizeof(double)));
  if (!out) throw ConfigError(path + ": write failed");
}

torus::FieldSet read_field_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::string header;
  std::getline(in, header);
  std::istringstream fields(header);
  long long n = 0, m = 0;
  if (!(fields >> n >> m) || n <= 0 || m <= 0)
    throw ConfigError(path + ": line 1: expected header \"n M\"");
  torus::FieldSet u = torus::FieldSet::zeros(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (auto& c : u.components) {
    in.read(reinterpret_cast<char*>(c.data()), static_cast<std::streamsize>(c.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(c.size() * sizeof(double)))
      throw ConfigError(path + ": truncated field data");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw ConfigError(path + ": trailing bytes after field data");
  return u;
}

void write_field_csv(const std::string& path, const torus::FieldSet& u) {
  std::ofstream out(path);
  if (!out) throw ConfigError(path + ": cannot open for writing");
  const std::size_t m = u.resolution;
  out << "component,i,j,x,y,u\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t c = 0; c < u.n(); ++c)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        out << c << ',' << i << ',' << j << ',' << static_cast<double>(i) / m << ','
            << static_cast<double>(j) / m << ',' << u.components[c][i * m + j] << '\n';
  if (!out) throw ConfigError(path + ": write failed");
}

} // namespace liouville::app
