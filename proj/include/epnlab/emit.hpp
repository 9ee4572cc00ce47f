#pragma once

#include "epnlab/model.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace epnlab {

// fixed 12-significant-digit rendering so repeated runs are byte identical
std::string format_g12(double v);

std::string csv_line(const std::vector<std::string>& fields);

nlohmann::json json_complex(const Complex& z);                 // [re, im]
nlohmann::json json_matrix(const Matrix& m);                   // {"n":., "entries":[[re,im],..]}
nlohmann::json json_doubles(const std::vector<double>& v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace epnlab
