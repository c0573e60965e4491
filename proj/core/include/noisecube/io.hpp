#pragma once

#include <string>
#include <vector>

#include "noisecube/checks.hpp"
#include "noisecube/cube.hpp"
#include "noisecube/info.hpp"
#include "noisecube/spectral.hpp"

namespace noisecube {

// JSON format: {"n": int, "values": [2^n reals]}, value index bit i encoding
// coordinate i (little-endian). Spectra carry "repr": "spectrum".
std::string cube_to_json(const CubeFunction& f);
CubeFunction cube_from_json(const std::string& text);
std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

// Flat binary format: magic "CUBF", little-endian u32 n, then 2^n
// little-endian IEEE doubles.
std::vector<unsigned char> cube_to_binary(const CubeFunction& f);
CubeFunction cube_from_binary(const std::vector<unsigned char>& bytes);

// Loads either format, sniffing the magic.
CubeFunction load_cube(const std::string& path);
void save_cube_json(const CubeFunction& f, const std::string& path);
void save_cube_binary(const CubeFunction& f, const std::string& path);

// {"k": ..., "entries": [{"S": mask, "i": idx, "y": val}]}
std::string boundary_to_json(const BoundaryData& b);
BoundaryData boundary_from_json(const std::string& text);
std::string t_profile_to_json(const TProfile& t);

std::string reports_to_json(const std::vector<CheckReport>& reports,
                            const std::string& header = "");
// Columns: name,n,eps,lhs,rhs,margin,mode,pass,seed,runtime_ms
std::string reports_to_csv(const std::vector<CheckReport>& reports);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace noisecube
