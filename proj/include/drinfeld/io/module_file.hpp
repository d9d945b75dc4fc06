#pragma once

// Module files are `key = value` lines with `#` comments:
//
//   p = 3
//   k_modulus = x^2 + 1
//   phi = x, 1, 1
//
// Keys: p, fq_modulus (in y; present iff q > p), k_modulus (in x, y),
// gamma (optional, must equal the first phi entry), phi (g_0, ..., g_r).
// Ore files hold a single key `ore` with an expression in tau, x, y.

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld::io {

/// Throws ParseError and every construction error of the tower and module.
DrinfeldModule parse_module(std::string_view text);
OrePoly parse_ore(std::string_view text, std::shared_ptr<const FieldTower> tower);

std::string render_module(const DrinfeldModule& phi);
std::string render_ore_file(const OrePoly& f);

/// Throws invalid_argument when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace drinfeld::io
