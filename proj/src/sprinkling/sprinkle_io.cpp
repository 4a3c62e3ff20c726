#include <array>
#include <bit>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "causet/errors.hpp"
#include "causet/sprinkling.hpp"

namespace causet::sprinkling {

namespace {

constexpr std::array<char, 5> kMagic{'C', 'S', 'E', 'T', '1'};

template <typename T>
void put_le(std::ostream& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits = std::bit_cast<U>(value);
  for (std::size_t k = 0; k < sizeof(U); ++k) out.put(static_cast<char>((bits >> (8 * k)) & 0xFF));
}

template <typename T>
T get_le(std::istream& in) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  U bits = 0;
  for (std::size_t k = 0; k < sizeof(U); ++k) {
    const int c = in.get();
    if (c == EOF) throw DomainError("truncated binary sprinkle");
    bits |= static_cast<U>(static_cast<unsigned char>(c)) << (8 * k);
  }
  return std::bit_cast<T>(bits);
}

void write_json(std::ostream& out, const Sprinkle& s) {
  nlohmann::json j;
  j["dim"] = s.dimension();
  j["tau"] = s.spec.tau;
  j["rho"] = s.spec.density;
  j["seed"] = s.seed;
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    points.push_back(std::vector<double>(s.event(i), s.event(i) + s.dimension()));
  }
  j["points"] = std::move(points);
  j["top_index"] = s.top_index ? nlohmann::json(*s.top_index) : nlohmann::json(nullptr);
  out << j.dump() << '\n';
}

Sprinkle read_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed sprinkle JSON: ") + e.what());
  }
  try {
    Sprinkle s;
    s.spec.dimension = j.at("dim").get<int>();
    if (s.spec.dimension < 2) throw DomainError("dimension must be >= 2");
    s.spec.tau = j.at("tau").get<double>();
    s.spec.density = j.at("rho").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& p : j.at("points")) {
      auto v = p.get<std::vector<double>>();
      if (static_cast<int>(v.size()) != s.spec.dimension) throw DomainError("point has wrong dimension");
      s.coordinates.insert(s.coordinates.end(), v.begin(), v.end());
    }
    if (!j.at("top_index").is_null()) {
      s.top_index = j.at("top_index").get<std::size_t>();
      if (*s.top_index >= s.size()) throw DomainError("top_index out of range");
    }
    s.spec.include_top_element = s.top_index.has_value();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad sprinkle JSON: ") + e.what());
  }
}

void write_binary(std::ostream& out, const Sprinkle& s) {
  out.write(kMagic.data(), kMagic.size());
  put_le(out, static_cast<std::uint32_t>(s.dimension()));
  put_le(out, s.seed);
  put_le(out, s.spec.tau);
  put_le(out, s.spec.density);
  put_le(out, s.top_index ? static_cast<std::int64_t>(*s.top_index) : std::int64_t{-1});
  put_le(out, static_cast<std::uint64_t>(s.size()));
  for (double x : s.coordinates) put_le(out, x);
}

Sprinkle read_binary(std::istream& in) {
  std::array<char, 5> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw DomainError("not a CSET1 sprinkle");
  Sprinkle s;
  s.spec.dimension = static_cast<int>(get_le<std::uint32_t>(in));
  if (s.spec.dimension < 2) throw DomainError("dimension must be >= 2");
  s.seed = get_le<std::uint64_t>(in);
  s.spec.tau = get_le<double>(in);
  s.spec.density = get_le<double>(in);
  const auto top = get_le<std::int64_t>(in);
  const auto count = get_le<std::uint64_t>(in);
  s.coordinates.reserve(count * static_cast<std::uint64_t>(s.spec.dimension));
  for (std::uint64_t k = 0; k < count * static_cast<std::uint64_t>(s.spec.dimension); ++k) {
    s.coordinates.push_back(get_le<double>(in));
  }
  if (top >= 0) {
    if (static_cast<std::uint64_t>(top) >= count) throw DomainError("top_index out of range");
    s.top_index = static_cast<std::size_t>(top);
  }
  s.spec.include_top_element = s.top_index.has_value();
  return s;
}

}  // namespace

void write_sprinkle(std::ostream& out, const Sprinkle& sprinkle, SprinkleFormat format) {
  if (format == SprinkleFormat::binary) {
    write_binary(out, sprinkle);
  } else {
    write_json(out, sprinkle);
  }
}

Sprinkle read_sprinkle(std::istream& in) {
  Sprinkle s = in.peek() == kMagic[0] ? read_binary(in) : read_json(in);
  sort_events(s);
  return s;
}

void save_sprinkle(const std::string& path, const Sprinkle& sprinkle, SprinkleFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  write_sprinkle(out, sprinkle, format);
  if (!out) throw DomainError("write failed: " + path);
}

Sprinkle load_sprinkle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  return read_sprinkle(in);
}

}  // namespace causet::sprinkling
