#include "plap/field_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace plap {

namespace {

constexpr char kMagic[8] = {'P', 'L', 'A', 'P', 'F', 'L', 'D', '\n'};

nlohmann::json geometry_header(const GridGeometry& g, int margin) {
  nlohmann::json j;
  j["schema"] = 1;
  j["dim"] = g.dim;
  j["shape"] = {g.shape[0], g.shape[1], g.shape[2]};
  j["h"] = g.h;
  j["origin"] = {g.origin[0], g.origin[1], g.origin[2]};
  j["margin"] = margin;
  return j;
}

GridGeometry geometry_from_header(const nlohmann::json& j) {
  GridGeometry g;
  g.dim = j.at("dim").get<int>();
  const auto shape = j.at("shape");
  const auto origin = j.at("origin");
  for (int a = 0; a < 3; ++a) {
    g.shape[a] = shape.at(a).get<int>();
    g.origin[a] = origin.at(a).get<double>();
  }
  g.h = j.at("h").get<double>();
  g.validate();
  return g;
}

void write_blob(const std::string& path, const nlohmann::json& header,
                const std::vector<double>& values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field: cannot open " + path);
  const std::string h = header.dump();
  const std::uint64_t len = h.size();
  out.write(kMagic, sizeof(kMagic));
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(h.data(), static_cast<std::streamsize>(h.size()));
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!out) throw std::runtime_error("write_field: write failed for " + path);
}

nlohmann::json read_blob(const std::string& path, std::vector<double>& values) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_field: cannot open " + path);
  char magic[8];
  std::uint64_t len = 0;
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("read_field: bad magic in " + path);
  in.read(reinterpret_cast<char*>(&len), sizeof(len));
  std::string h(len, '\0');
  in.read(h.data(), static_cast<std::streamsize>(len));
  if (!in) throw std::runtime_error("read_field: truncated header in " + path);
  nlohmann::json header = nlohmann::json::parse(h);

  std::int64_t count = 1;
  for (const auto& s : header.at("shape")) count *= s.get<int>();
  if (header.contains("steps")) count *= header.at("steps").get<int>() + 1;
  values.resize(static_cast<std::size_t>(count));
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!in) throw std::runtime_error("read_field: truncated values in " + path);
  return header;
}

}  // namespace

void write_field(const std::string& path, const ScalarField& f) {
  nlohmann::json header = geometry_header(f.geom(), f.margin());
  header["kind"] = "scalar";
  write_blob(path, header, f.values());
}

void write_field(const std::string& path, const SpaceTimeField& f) {
  nlohmann::json header = geometry_header(f.geom(), f.margin());
  header["kind"] = "spacetime";
  header["dt"] = f.dt();
  header["steps"] = f.steps();
  header["first_valid_layer"] = f.first_valid_layer();
  header["last_valid_layer"] = f.last_valid_layer();
  write_blob(path, header, f.values());
}

ScalarField read_scalar_field(const std::string& path) {
  std::vector<double> values;
  const nlohmann::json header = read_blob(path, values);
  if (header.at("kind") != "scalar")
    throw std::runtime_error("read_scalar_field: not a scalar field: " + path);
  ScalarField f(geometry_from_header(header), header.at("margin").get<int>());
  f.values() = std::move(values);
  return f;
}

SpaceTimeField read_spacetime_field(const std::string& path) {
  std::vector<double> values;
  const nlohmann::json header = read_blob(path, values);
  if (header.at("kind") != "spacetime")
    throw std::runtime_error("read_spacetime_field: not a space-time field: " + path);
  SpaceTimeField f(geometry_from_header(header), header.at("dt").get<double>(),
                   header.at("steps").get<int>(), header.at("margin").get<int>());
  f.set_valid_layers(header.at("first_valid_layer").get<int>(),
                     header.at("last_valid_layer").get<int>());
  f.values() = std::move(values);
  return f;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string field_csv(const ScalarField& f) {
  const GridGeometry& g = f.geom();
  static const char* kAxis[3] = {"x", "y", "z"};
  std::string out;
  for (int a = 0; a < g.dim; ++a) {
    out += kAxis[a];
    out += ',';
  }
  out += "value\r\n";
  for (int i = 0; i < g.shape[0]; ++i)
    for (int j = 0; j < g.shape[1]; ++j)
      for (int k = 0; k < g.shape[2]; ++k) {
        const auto x = g.point(i, j, k);
        for (int a = 0; a < g.dim; ++a) {
          out += format_double(x[a]);
          out += ',';
        }
        out += format_double(f.at(i, j, k));
        out += "\r\n";
      }
  return out;
}

void write_field_csv(const std::string& path, const ScalarField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field_csv: cannot open " + path);
  const std::string csv = field_csv(f);
  out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
}

}  // namespace plap
