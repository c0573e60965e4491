#include "noisecube/io.hpp"

#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace noisecube {

using nlohmann::json;

namespace {
json cube_json_object(int n, std::span<const double> values,
                      const char* repr) {
    json j;
    j["n"] = n;
    if (repr) j["repr"] = repr;
    j["values"] = std::vector<double>(values.begin(), values.end());
    return j;
}

std::pair<int, std::vector<double>> parse_cube_json(const std::string& text,
                                                    const char* expect_repr) {
    json j = json::parse(text);
    const int n = j.at("n").get<int>();
    auto values = j.at("values").get<std::vector<double>>();
    const std::string repr = j.value("repr", "function");
    if (expect_repr && repr != expect_repr) {
        throw std::runtime_error("expected repr \"" + std::string(expect_repr) +
                                 "\", found \"" + repr + "\"");
    }
    return {n, std::move(values)};
}
}  // namespace

std::string cube_to_json(const CubeFunction& f) {
    return cube_json_object(f.n(), f.values(), nullptr).dump();
}

CubeFunction cube_from_json(const std::string& text) {
    auto [n, values] = parse_cube_json(text, nullptr);
    return CubeFunction(n, std::move(values));
}

std::string spectrum_to_json(const Spectrum& s) {
    return cube_json_object(s.n, s.coeffs, "spectrum").dump();
}

Spectrum spectrum_from_json(const std::string& text) {
    auto [n, values] = parse_cube_json(text, "spectrum");
    if (values.size() != (std::size_t{1} << n)) {
        throw std::runtime_error("spectrum: expected 2^n coefficients");
    }
    return Spectrum{n, std::move(values)};
}

std::vector<unsigned char> cube_to_binary(const CubeFunction& f) {
    std::vector<unsigned char> out;
    out.reserve(8 + 8 * f.size());
    out.push_back('C');
    out.push_back('U');
    out.push_back('B');
    out.push_back('F');
    const std::uint32_t n = static_cast<std::uint32_t>(f.n());
    for (int b = 0; b < 4; ++b) {
        out.push_back(static_cast<unsigned char>((n >> (8 * b)) & 0xff));
    }
    for (double v : f.values()) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        for (int b = 0; b < 8; ++b) {
            out.push_back(static_cast<unsigned char>((bits >> (8 * b)) & 0xff));
        }
    }
    return out;
}

CubeFunction cube_from_binary(const std::vector<unsigned char>& bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), "CUBF", 4) != 0) {
        throw std::runtime_error("cube_from_binary: missing CUBF magic");
    }
    std::uint32_t n = 0;
    for (int b = 0; b < 4; ++b) {
        n |= static_cast<std::uint32_t>(bytes[4 + b]) << (8 * b);
    }
    if (n < 1 || n > static_cast<std::uint32_t>(kMaxDimension)) {
        throw std::runtime_error("cube_from_binary: bad dimension");
    }
    const std::size_t count = std::size_t{1} << n;
    if (bytes.size() != 8 + 8 * count) {
        throw std::runtime_error("cube_from_binary: truncated payload");
    }
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) {
            bits |= static_cast<std::uint64_t>(bytes[8 + 8 * i + b]) << (8 * b);
        }
        std::memcpy(&values[i], &bits, 8);
    }
    return CubeFunction(static_cast<int>(n), std::move(values));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

CubeFunction load_cube(const std::string& path) {
    const std::string text = read_file(path);
    if (text.size() >= 4 && text.compare(0, 4, "CUBF") == 0) {
        return cube_from_binary(
            std::vector<unsigned char>(text.begin(), text.end()));
    }
    return cube_from_json(text);
}

void save_cube_json(const CubeFunction& f, const std::string& path) {
    write_file(path, cube_to_json(f));
}

void save_cube_binary(const CubeFunction& f, const std::string& path) {
    const auto bytes = cube_to_binary(f);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

std::string boundary_to_json(const BoundaryData& b) {
    json entries = json::array();
    for (mask_t s = 1; s < (mask_t{1} << b.k); ++s) {
        for (int i = 0; i < b.k; ++i) {
            if ((s >> i) & 1u) {
                entries.push_back({{"S", s}, {"i", i}, {"y", b.y(s, i)}});
            }
        }
    }
    return json{{"k", b.k}, {"entries", entries}}.dump();
}

BoundaryData boundary_from_json(const std::string& text) {
    json j = json::parse(text);
    BoundaryData b(j.at("k").get<int>());
    for (const auto& e : j.at("entries")) {
        const mask_t s = e.at("S").get<mask_t>();
        const int i = e.at("i").get<int>();
        if (i < 0 || i >= b.k || !((s >> i) & 1u)) {
            throw std::runtime_error("boundary_from_json: entry with i not in S");
        }
        b.y(s, i) = e.at("y").get<double>();
    }
    return b;
}

std::string t_profile_to_json(const TProfile& t) {
    return json{{"k", t.t.size()},
                {"mode", t.sampled ? "sampled" : "exact-enumeration"},
                {"entries", t.t}}
        .dump();
}

namespace {
json report_json(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["eps"] = r.eps;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["mode"] = r.mode;
    j["pass"] = r.pass;
    j["tol"] = r.tol;
    j["kind"] = r.identity ? "identity" : "inequality";
    if (r.seed) j["seed"] = *r.seed;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}
}  // namespace

std::string reports_to_json(const std::vector<CheckReport>& reports,
                            const std::string& header) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    if (header.empty()) return arr.dump(2);
    json doc;
    doc["header"] = header;
    doc["reports"] = arr;
    return doc.dump(2);
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "name,n,eps,lhs,rhs,margin,mode,pass,seed,runtime_ms\n";
    for (const auto& r : reports) {
        os << r.name << ',' << r.n << ',' << r.eps << ',' << r.lhs << ','
           << r.rhs << ',' << r.margin << ',' << r.mode << ','
           << (r.pass ? "true" : "false") << ',';
        if (r.seed) os << *r.seed;
        os << ',' << r.runtime_ms << '\n';
    }
    return os.str();
}

}  // namespace noisecube
