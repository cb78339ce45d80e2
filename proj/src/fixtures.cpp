#include "apolar/fixtures.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#ifndef APOLAR_FIXTURE_DIR
#define APOLAR_FIXTURE_DIR "fixtures"
#endif

namespace apolar {

namespace {

std::mutex dir_mu;
std::string dir_override;

} // namespace

std::string fixture_dir()
{
    {
        std::lock_guard<std::mutex> lock(dir_mu);
        if (!dir_override.empty()) return dir_override;
    }
    if (const char* env = std::getenv("APOLAR_FIXTURES"); env && *env) return env;
    return APOLAR_FIXTURE_DIR;
}

void set_fixture_dir(const std::string& dir)
{
    std::lock_guard<std::mutex> lock(dir_mu);
    dir_override = dir;
}

std::string read_fixture(const std::string& relative_path)
{
    std::string path = fixture_dir() + "/" + relative_path;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture_hash(const std::string& relative_path)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : read_fixture(relative_path)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<Polynomial> load_poly_list(const RingPtr& ring, const std::string& relative_path)
{
    return parse_polynomial_list(ring, read_fixture(relative_path));
}

PolyMatrix parse_poly_matrix(const RingPtr& ring, const std::string& text)
{
    std::vector<std::vector<Polynomial>> rows;
    std::istringstream in(text);
    std::string line, pending;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        pending += line;
        std::string trimmed;
        for (char c : pending)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        if (trimmed.empty()) {
            pending.clear();
            continue;
        }
        char last = trimmed.back();
        if (last == '+' || last == '-' || last == '*' || last == ',') continue;
        std::vector<Polynomial> row;
        std::string item;
        int depth = 0;
        for (char c : pending) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                row.push_back(parse_polynomial(ring, item));
                item.clear();
            } else {
                item.push_back(c);
            }
        }
        row.push_back(parse_polynomial(ring, item));
        rows.push_back(std::move(row));
        pending.clear();
    }
    if (rows.empty()) throw std::invalid_argument("parse_poly_matrix: empty matrix");
    PolyMatrix m(ring, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("parse_poly_matrix: ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

PolyMatrix load_poly_matrix(const RingPtr& ring, const std::string& relative_path)
{
    return parse_poly_matrix(ring, read_fixture(relative_path));
}

} // namespace apolar
