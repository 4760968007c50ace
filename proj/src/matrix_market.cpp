#include "gave/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gave/error.hpp"

namespace gave::mm {

namespace {

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write " + path.string());
    }
    return out;
}

} // namespace

Matrix read_matrix(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("empty Matrix Market stream");
    }
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix") {
        throw ParseError("missing %%MatrixMarket matrix banner");
    }
    if (lower(format) != "coordinate") {
        throw ParseError("only coordinate format is supported");
    }
    field = lower(field);
    symmetry = lower(symmetry);
    if (field != "real" && field != "integer" && field != "double") {
        throw ParseError("unsupported field '" + field + "'");
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        throw ParseError("unsupported symmetry '" + symmetry + "'");
    }

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '%') {
            break;
        }
    }
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(std::istringstream(line) >> rows >> cols >> nnz)) {
        throw ParseError("malformed size line");
    }
    if (rows != cols || rows == 0) {
        throw ParseError("matrix must be square and nonempty");
    }

    std::vector<Triplet> entries;
    entries.reserve(symmetry == "symmetric" ? 2 * nnz : nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t i = 0, j = 0;
        double v = 0.0;
        if (!(in >> i >> j >> v)) {
            throw ParseError("expected " + std::to_string(nnz) + " entries, read " + std::to_string(k));
        }
        if (i == 0 || j == 0 || i > rows || j > cols) {
            throw ParseError("entry index out of range");
        }
        entries.push_back({i - 1, j - 1, v});
        if (symmetry == "symmetric" && i != j) {
            entries.push_back({j - 1, i - 1, v});
        }
    }
    Matrix a = Matrix::from_triplets(rows, std::move(entries));
    a.set_symmetric(symmetry == "symmetric" || is_symmetric(a, 1e-12));
    return a;
}

Matrix read_matrix(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& a)
{
    const bool sym = a.symmetric();
    std::size_t nnz = 0;
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
        if (v != 0.0 && (!sym || j <= i)) {
            ++nnz;
        }
    });
    out << "%%MatrixMarket matrix coordinate real " << (sym ? "symmetric" : "general") << '\n';
    out << a.size() << ' ' << a.size() << ' ' << nnz << '\n';
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
        if (v != 0.0 && (!sym || j <= i)) {
            out << i + 1 << ' ' << j + 1 << ' ' << format_double(v) << '\n';
        }
    });
}

void write_matrix(const std::filesystem::path& path, const Matrix& a)
{
    auto out = open_out(path);
    write_matrix(out, a);
}

Vector read_vector(std::istream& in)
{
    Vector v;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%' || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        double x = 0.0;
        if (!(ls >> x)) {
            throw ParseError("malformed vector entry: " + line);
        }
        v.push_back(x);
    }
    return v;
}

Vector read_vector(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return read_vector(in);
}

void write_vector(std::ostream& out, std::span<const double> v)
{
    for (double x : v) {
        out << format_double(x) << '\n';
    }
}

void write_vector(const std::filesystem::path& path, std::span<const double> v)
{
    auto out = open_out(path);
    write_vector(out, v);
}

} // namespace gave::mm
