#include "specrad/matrix.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

namespace specrad {

namespace {

void check_dim(int n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

}  // namespace

NonnegMatrix::NonnegMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0.0) {
    check_dim(n);
}

NonnegMatrix::NonnegMatrix(int n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
    check_dim(n);
    if (entries_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("entry count does not match dimension");
    for (double v : entries_) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("matrix entries must be finite and nonnegative");
    }
}

NonnegMatrix NonnegMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    int n = static_cast<int>(rows.size());
    check_dim(n);
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix rows must all have length n");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return NonnegMatrix(n, std::move(entries));
}

std::vector<std::vector<double>> NonnegMatrix::to_rows() const {
    std::vector<std::vector<double>> rows(n_);
    for (int i = 0; i < n_; ++i)
        rows[i].assign(entries_.begin() + static_cast<std::size_t>(i) * n_,
                       entries_.begin() + static_cast<std::size_t>(i + 1) * n_);
    return rows;
}

SignPattern NonnegMatrix::pattern() const {
    std::vector<char> mask(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) mask[k] = entries_[k] > 0.0 ? 1 : 0;
    return SignPattern(n_, std::move(mask));
}

SignPattern::SignPattern(int n) : n_(n), mask_(static_cast<std::size_t>(n) * n, 0) {
    check_dim(n);
}

SignPattern::SignPattern(int n, std::vector<char> mask) : n_(n), mask_(std::move(mask)) {
    check_dim(n);
    if (mask_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("mask size does not match dimension");
    for (char& c : mask_) c = c ? 1 : 0;
}

SignPattern SignPattern::from_rows(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    check_dim(n);
    std::vector<char> mask;
    mask.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("pattern rows must all have length n");
        for (int v : row) mask.push_back(v ? 1 : 0);
    }
    return SignPattern(n, std::move(mask));
}

SignPattern SignPattern::from_bits(int n, std::uint64_t bits) {
    check_dim(n);
    if (n * n > 64) throw std::invalid_argument("from_bits supports n*n <= 64");
    std::vector<char> mask(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n * n; ++k) mask[k] = (bits >> k) & 1u;
    return SignPattern(n, std::move(mask));
}

std::uint64_t SignPattern::to_bits() const {
    if (n_ * n_ > 64) throw std::invalid_argument("to_bits supports n*n <= 64");
    std::uint64_t bits = 0;
    for (int k = 0; k < n_ * n_; ++k)
        if (mask_[k]) bits |= std::uint64_t{1} << k;
    return bits;
}

int SignPattern::nnz() const {
    int count = 0;
    for (char c : mask_) count += c;
    return count;
}

SignPattern SignPattern::transposed() const {
    std::vector<char> mask(mask_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            mask[static_cast<std::size_t>(j) * n_ + i] = mask_[static_cast<std::size_t>(i) * n_ + j];
    return SignPattern(n_, std::move(mask));
}

bool SignPattern::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

NonnegMatrix SignPattern::realize() const {
    std::vector<double> entries(mask_.size());
    for (std::size_t k = 0; k < mask_.size(); ++k) entries[k] = mask_[k] ? 1.0 : 0.0;
    return NonnegMatrix(n_, std::move(entries));
}

bool DiagonalParams::is_scalar(double tol) const {
    for (double v : values_)
        if (std::abs(v - values_[0]) > tol) return false;
    return true;
}

SignPattern sign_pattern(const NonnegMatrix& m) { return m.pattern(); }

NonnegMatrix scale_exp(const NonnegMatrix& m, const DiagonalParams& d) {
    if (d.dim() != m.dim()) throw std::invalid_argument("diagonal length does not match matrix dimension");
    int n = m.dim();
    std::vector<double> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        double f = std::exp(d[i]);
        for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = f * m(i, j);
    }
    return NonnegMatrix(n, std::move(entries));
}

DiagonalParams convex_combination(const DiagonalParams& c, const DiagonalParams& d, double t) {
    if (c.dim() != d.dim()) throw std::invalid_argument("diagonal lengths differ");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0,1]");
    std::vector<double> values(c.dim());
    for (int i = 0; i < c.dim(); ++i) values[i] = (1.0 - t) * c[i] + t * d[i];
    return DiagonalParams(std::move(values));
}

namespace {

NonnegMatrix matrix_from_json_content(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
    }
    if (!j.contains("n") || !j.contains("entries"))
        throw ParseError("JSON matrix requires fields \"n\" and \"entries\"", 1, 1);
    int n = j.at("n").get<int>();
    auto rows = j.at("entries").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != n)
        throw ParseError("JSON matrix: entries row count does not match n", 1, 1);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ParseError("JSON matrix: row length does not match n", 1, 1);
        for (double v : row)
            if (v < 0.0) throw ParseError("negative matrix entry", 1, 1);
    }
    return NonnegMatrix::from_rows(rows);
}

}  // namespace

NonnegMatrix read_matrix_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    // first non-empty line carries n
    int n = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        if (ls >> n) {
            std::string extra;
            if (ls >> extra) throw ParseError("expected a single dimension on the first line", line_no, 1);
            break;
        }
        std::string tok;
        std::istringstream probe(line);
        if (probe >> tok) throw ParseError("expected integer dimension", line_no, 1);
    }
    if (n < 1) throw ParseError("dimension must be a positive integer", std::max(line_no, 1), 1);

    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    int rows_read = 0;
    while (rows_read < n) {
        if (!std::getline(in, line))
            throw ParseError("unexpected end of input: expected " + std::to_string(n) + " matrix rows",
                             line_no + rows_read + 1, 1);
        ++line_no;
        std::istringstream probe(line);
        std::string tok;
        if (!(probe >> tok)) continue;  // blank line
        // tokenize with column tracking
        int col = 0;
        std::size_t pos = 0;
        int found = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            std::string token = line.substr(start, pos - start);
            col = static_cast<int>(start) + 1;
            double v;
            try {
                std::size_t used = 0;
                v = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw ParseError("invalid number '" + token + "'", line_no, col);
            }
            if (v < 0.0) throw ParseError("negative matrix entry", line_no, col);
            if (found >= n) throw ParseError("too many entries in row", line_no, col);
            entries.push_back(v);
            ++found;
        }
        if (found != n)
            throw ParseError("expected " + std::to_string(n) + " entries in row, got " + std::to_string(found),
                             line_no, col);
        ++rows_read;
    }
    return NonnegMatrix(n, std::move(entries));
}

NonnegMatrix parse_matrix(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return matrix_from_json_content(content);
        break;
    }
    std::istringstream in(content);
    return read_matrix_text(in);
}

std::string write_matrix_text(const NonnegMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    out << m.dim() << '\n';
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace specrad
