#include "epnlab/emit.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace epnlab {

std::string format_g12(double v) {
    if (v == 0) v = 0;  // normalize negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

nlohmann::json json_complex(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json json_matrix(const Matrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(json_complex(m(i, j)));
    return {{"n", m.rows()}, {"entries", entries}};
}

nlohmann::json json_doubles(const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(x);
    return a;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace epnlab
